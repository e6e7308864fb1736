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

#ifndef PFORGE_QSERIES_HPP
#define PFORGE_QSERIES_HPP

#include "pforge/ratfun.hpp"

namespace pforge {

/// q-shifted factorial (x; base)_k = prod_{i=0}^{k-1} (1 - x base^i).
RatFun pochhammer(const RatFun& x, const RatFun& base, int k);

/// Raising factorial (x)_k = x (x+1) ... (x+k-1).
RatFun raising_factorial(const RatFun& x, int k);

} // namespace pforge

#endif
