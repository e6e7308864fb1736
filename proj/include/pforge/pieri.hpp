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

#ifndef PFORGE_PIERI_HPP
#define PFORGE_PIERI_HPP

#include <vector>

#include "pforge/expansion.hpp"
#include "pforge/partition.hpp"
#include "pforge/ratfun.hpp"

namespace pforge {

/// lambda of length n, the added row r and u_k = q^{lambda_k - r} t^{n-k}.
struct PieriContext {
    Partition lambda;
    int r = 0;
    std::vector<RatFun> u;
};

/// Builds the Pieri parameters in `ctx`, which must contain q and t.
PieriContext pieri_u(const Partition& lambda, int r, const FieldCtx& ctx = FieldCtx::qt());

/// d_theta(u_1, ..., u_n). `ctx` must contain q and t, and u lives in it.
/// Throws SpecializationError if a denominator factor vanishes.
RatFun d_coeff(const FieldCtx& ctx, const Composition& theta, const std::vector<RatFun>& u);

struct PieriTerm {
    Composition theta;
    Partition index;
    RatFun coeff;
};

/// Q_lambda * Q_(r) = sum_theta d_theta(u) Q_{(lambda + theta, r - |theta|)}.
struct PieriExpansion {
    Partition lambda;
    int r = 0;
    std::vector<PieriTerm> terms;           // lexicographic in theta
    std::vector<DiscardedTerm> discarded;   // nonzero terms at non-partition indices
};

PieriExpansion pieri_expand(const Partition& lambda, int r);

} // namespace pforge

#endif
