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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pforge/oracle.hpp"

using namespace pforge;

namespace {

const FieldCtx& QT = oracle_field(ScalarMode::QT);
const FieldCtx& AL = oracle_field(ScalarMode::Alpha);

RatFun q(int k = 1) { return RatFun::var(QT, "q", k); }
RatFun t(int k = 1) { return RatFun::var(QT, "t", k); }
RatFun one() { return RatFun::constant(QT, 1); }

SymFun m(const Partition& p, const FieldCtx& ctx = QT) { return SymFun::element(ctx, Basis::M, p); }

} // namespace

TEST_CASE("small P and Q") {
    CHECK(gram_schmidt_P({1}, ScalarMode::QT) == m({1}));
    for (int r = 1; r <= 4; ++r) {
        Partition col(std::vector<int>(r, 1));
        CHECK(gram_schmidt_P(col, ScalarMode::QT) == m(col));
        CHECK(convert(gram_schmidt_P(col, ScalarMode::QT), Basis::E) == SymFun::element(QT, Basis::E, {r}));
    }
    CHECK(gram_schmidt_P({2}, ScalarMode::QT) ==
          m({2}) + m({1, 1}).scaled((one() + q()) * (one() - t()) / (one() - q() * t())));

    CHECK(oracle_Q({1}, ScalarMode::QT) == m({1}).scaled((one() - t()) / (one() - q())));
    for (int k = 1; k <= 4; ++k) {
        CHECK(oracle_Q({k}, ScalarMode::QT) == convert(SymFun::element(QT, Basis::G, {k}), Basis::M));
        CHECK(oracle_Q({k}, ScalarMode::Alpha) == convert(SymFun::element(AL, Basis::G, {k}), Basis::M));
    }
    CHECK(oracle_norm({1, 1}, ScalarMode::QT).inverse() ==
          (one() - t()) * (one() - t(2)) / ((one() - q()) * (one() - q() * t())));
    CHECK(Q_from_P(gram_schmidt_P({2, 1}, ScalarMode::QT), ScalarMode::QT) == oracle_Q({2, 1}, ScalarMode::QT));
}

TEST_CASE("triangularity up to weight 8") {
    for (int n = 1; n <= 8; ++n)
        for (const auto& lam : partitions_of(n)) {
            const SymFun& P = gram_schmidt_P(lam, ScalarMode::QT);
            REQUIRE(P.coeff(lam).is_one());
            for (const auto& [mu, c] : P.coeffs()) REQUIRE(dominance_leq(mu, lam) == Dominance::Leq);
        }
}

TEST_CASE("orthogonality and duality pairing up to weight 6") {
    for (ScalarMode mode : {ScalarMode::QT, ScalarMode::Alpha})
        for (int n = 1; n <= 6; ++n) {
            auto ps = partitions_of(n);
            for (const auto& a : ps) {
                REQUIRE(scalar(gram_schmidt_P(a, mode), oracle_Q(a, mode), mode).is_one());
                for (const auto& b : ps)
                    if (!(a == b)) REQUIRE(scalar(gram_schmidt_P(a, mode), gram_schmidt_P(b, mode), mode).is_zero());
            }
        }
}

TEST_CASE("degenerations") {
    SymFun p21 = specialize_qt(gram_schmidt_P({2, 1}, ScalarMode::QT), t(), t());
    CHECK(p21 == m({2, 1}) + m({1, 1, 1}).scaled(RatFun::constant(QT, 2)));
    CHECK(schur_jacobi_trudi({2, 1}).coeff({1, 1, 1}).constant_value() == 2);

    // omega(Q_(2)(q,t)) = P_(1,1)(t,q) = e_2
    CHECK(convert(omega_qt(oracle_Q({2}, ScalarMode::QT)), Basis::E) == SymFun::element(QT, Basis::E, {2}));

    for (int n = 1; n <= 6; ++n)
        for (const auto& lam : partitions_of(n)) {
            auto rep = degeneration_checks(lam);
            INFO(lam.to_string(), " ", rep.detail);
            REQUIRE(rep.pass);
        }

    // Hall-Littlewood: Q_(1^r) at q = 0 is prod_{i<=r} (1 - t^i) e_r.
    RatFun zero(QT);
    for (int r = 1; r <= 4; ++r) {
        Partition col(std::vector<int>(r, 1));
        RatFun f = one();
        for (int i = 1; i <= r; ++i) f *= one() - t(i);
        SymFun hl = specialize_qt(oracle_Q(col, ScalarMode::QT), zero, t());
        CHECK(hl == convert(SymFun::element(QT, Basis::E, {r}), Basis::M).scaled(f));
    }
}
