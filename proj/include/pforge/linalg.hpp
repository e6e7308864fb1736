// Copyright 2026 The pieri-forge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PFORGE_LINALG_HPP
#define PFORGE_LINALG_HPP

#include <vector>

#include <gmpxx.h>

#include "pforge/ratfun.hpp"

namespace pforge {

using RatMatrix = std::vector<std::vector<RatFun>>;
using QMatrix = std::vector<std::vector<mpq_class>>;

/// Exact determinant. Each row is first multiplied by the lcm of its
/// denominators, the resulting polynomial matrix is reduced by fraction-free
/// (Bareiss) elimination, and the row multipliers are divided back out.
/// The empty matrix has determinant 1.
RatFun det(const FieldCtx& ctx, const RatMatrix& m);

/// Gauss-Jordan inverse over the field. Throws DomainError when singular.
RatMatrix inverse(const FieldCtx& ctx, const RatMatrix& m);
QMatrix inverse(const QMatrix& m);

} // namespace pforge

#endif
