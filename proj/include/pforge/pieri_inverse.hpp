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

#ifndef PFORGE_PIERI_INVERSE_HPP
#define PFORGE_PIERI_INVERSE_HPP

#include <string>
#include <vector>

#include "pforge/partition.hpp"
#include "pforge/ratfun.hpp"

namespace pforge {

/// c^{(a,b)}_theta(u; v) with v_i = u_i a^{theta_i}. Rows with theta_i = 0
/// are replaced by the Vandermonde row (v_i^{n-1}, ..., 1).
/// Throws SpecializationError when a denominator factor vanishes.
RatFun c_ab(const FieldCtx& ctx, const Composition& theta, const std::vector<RatFun>& u, const RatFun& a,
            const RatFun& b);

/// Jack analogue c^{(a)}_theta(u; v) with v_i = u_i + theta_i and the same
/// row rule.
RatFun c_alpha(const FieldCtx& ctx, const Composition& theta, const std::vector<RatFun>& u, const RatFun& a);

/// f_{beta kappa} = c^{(q,t)}_{beta-kappa}(u q^{kappa+|kappa|}; u q^{beta+|kappa|}),
/// zero unless beta - kappa is in N^n. `ctx` must contain q and t.
RatFun f_entry(const FieldCtx& ctx, const std::vector<int>& beta, const std::vector<int>& kappa,
               const std::vector<RatFun>& u);

/// g_{kappa gamma} = d_{kappa-gamma}(u q^{gamma+|gamma|}), zero unless
/// kappa - gamma is in N^n.
RatFun g_entry(const FieldCtx& ctx, const std::vector<int>& kappa, const std::vector<int>& gamma,
               const std::vector<RatFun>& u);

struct OrthoResult {
    std::vector<int> beta;
    std::vector<int> gamma;
    bool pass = false;
    RatFun fg;  // sum_kappa f_{beta kappa} g_{kappa gamma}
    RatFun gf;  // sum_kappa g_{beta kappa} f_{kappa gamma}
};

/// Evaluates both products of the f/g pair at (beta, gamma) with symbolic
/// u_1..u_n in Q(q,t,u_1..u_n); passes iff both equal delta_{beta gamma}.
OrthoResult orthogonality_check(std::size_t n, const std::vector<int>& beta, const std::vector<int>& gamma);

/// Every pair 0 <= gamma <= beta <= (depth, ..., depth) componentwise.
std::vector<OrthoResult> orthogonality_sweep(std::size_t n, int depth);

} // namespace pforge

#endif
