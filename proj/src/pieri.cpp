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

#include "pforge/pieri.hpp"

#include "pforge/errors.hpp"
#include "pforge/qseries.hpp"

namespace pforge {

PieriContext pieri_u(const Partition& lambda, int r, const FieldCtx& ctx) {
    if (r < 0) throw DomainError("pieri_u needs r >= 0");
    const int n = static_cast<int>(lambda.length());
    PieriContext pc{lambda, r, {}};
    Exponents e{};
    const std::size_t iq = ctx.require("q"), it = ctx.require("t");
    for (int k = 1; k <= n; ++k) {
        e[iq] = static_cast<std::int16_t>(lambda.part(k) - r);
        e[it] = static_cast<std::int16_t>(n - k);
        pc.u.push_back(RatFun::monomial(ctx, e));
    }
    return pc;
}

RatFun d_coeff(const FieldCtx& ctx, const Composition& theta, const std::vector<RatFun>& u) {
    const std::size_t n = theta.size();
    if (u.size() != n) throw DomainError("d_coeff: theta and u differ in length");
    const RatFun q = RatFun::var(ctx, "q"), t = RatFun::var(ctx, "t");
    const int abs = theta.weight();
    RatFun num = RatFun::constant(ctx, 1), den = RatFun::constant(ctx, 1);
    for (std::size_t k = 0; k < n; ++k) {
        const int th = theta[k];
        if (th < 0) throw DomainError("d_coeff needs theta in N^n");
        if (th == 0) continue;
        num *= pochhammer(t, q, th) * pochhammer(q.pow(abs + 1) * u[k], q, th);
        den *= pochhammer(q, q, th) * pochhammer(q.pow(abs) * t * u[k], q, th);
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (theta[i] == 0) continue;
        for (std::size_t j = i + 1; j < n; ++j) {
            RatFun ratio = u[i] / u[j];
            num *= pochhammer(t * ratio, q, theta[i]) * pochhammer(q.pow(1 - theta[j]) * ratio / t, q, theta[i]);
            den *= pochhammer(q * ratio, q, theta[i]) * pochhammer(q.pow(-theta[j]) * ratio, q, theta[i]);
        }
    }
    if (den.is_zero()) throw SpecializationError("d_coeff: vanishing denominator at theta " + theta.to_string());
    return num / den;
}

PieriExpansion pieri_expand(const Partition& lambda, int r) {
    const FieldCtx ctx = FieldCtx::qt();
    PieriContext pc = pieri_u(lambda, r, ctx);
    const std::size_t n = lambda.length();
    PieriExpansion out{lambda, r, {}, {}};
    for (const auto& theta : enum_box(n, r)) {
        RatFun d = d_coeff(ctx, theta, pc.u);
        if (d.is_zero()) continue;
        std::vector<int> index(n + 1);
        for (std::size_t k = 0; k < n; ++k) index[k] = lambda.parts()[k] + theta[k];
        index[n] = r - theta.weight();
        if (auto nu = as_partition(index)) {
            out.terms.push_back({theta, *nu, d});
        } else {
            out.discarded.push_back({lambda, index, theta.entries, d});
        }
    }
    return out;
}

} // namespace pforge
