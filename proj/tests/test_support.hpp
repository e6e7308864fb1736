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

// Shared helpers for the unit tests: deterministic random generators.
#ifndef PFORGE_TEST_SUPPORT_HPP
#define PFORGE_TEST_SUPPORT_HPP

#include <random>

#include "pforge/ratfun.hpp"

namespace pforge::testing {

inline Poly random_poly(std::mt19937& rng, std::size_t nvars, int terms, int max_deg, int max_coeff) {
    std::uniform_int_distribution<int> deg(0, max_deg), co(-max_coeff, max_coeff);
    std::vector<Poly::Term> ts;
    for (int i = 0; i < terms; ++i) {
        Poly::Term t;
        for (std::size_t v = 0; v < nvars; ++v) t.exps[v] = static_cast<std::int16_t>(deg(rng));
        t.coeff = co(rng);
        ts.push_back(t);
    }
    return Poly::from_terms(nvars, std::move(ts));
}

inline RatFun random_ratfun(std::mt19937& rng, const FieldCtx& ctx, int terms = 3, int max_deg = 2) {
    Poly num = random_poly(rng, ctx.size(), terms, max_deg, 5);
    Poly den;
    do {
        den = random_poly(rng, ctx.size(), terms, max_deg, 5);
    } while (den.is_zero());
    return RatFun::from_polys(ctx, num, den);
}

} // namespace pforge::testing

#endif
