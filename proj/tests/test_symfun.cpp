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

#include <random>

#include "pforge/errors.hpp"
#include "pforge/qseries.hpp"
#include "pforge/symfun.hpp"
#include "test_support.hpp"

using namespace pforge;

namespace {

const FieldCtx QT = FieldCtx::qt();
const FieldCtx AL = FieldCtx::alpha();

RatFun q(int k = 1) { return RatFun::var(QT, "q", k); }
RatFun t(int k = 1) { return RatFun::var(QT, "t", k); }
RatFun c(long v, const FieldCtx& ctx = QT) { return RatFun::constant(ctx, v); }
RatFun cq(long a, long b) { return RatFun::constant(QT, mpq_class(a, b)); }

SymFun el(Basis b, const Partition& p, const FieldCtx& ctx = QT) { return SymFun::element(ctx, b, p); }

SymFun random_symfun(std::mt19937& rng, Basis b, int max_weight) {
    SymFun f(QT, b);
    std::uniform_int_distribution<int> w(0, max_weight);
    for (int i = 0; i < 3; ++i) {
        auto ps = partitions_of(w(rng));
        std::uniform_int_distribution<std::size_t> pick(0, ps.size() - 1);
        f.add_term(ps[pick(rng)], testing::random_ratfun(rng, QT, 2, 1));
    }
    return f;
}

} // namespace

TEST_CASE("mul") {
    CHECK(mul(el(Basis::P, {1}), el(Basis::P, {1})) == el(Basis::P, {1, 1}));
    SymFun one = SymFun::constant(QT, Basis::P, c(1));
    SymFun f = el(Basis::P, {2}) + el(Basis::P, {1, 1}).scaled(q());
    CHECK(mul(one, f) == f);

    SymFun e12 = convert(mul(el(Basis::E, {1}), el(Basis::E, {2})), Basis::M);
    SymFun expected = el(Basis::M, {2, 1}) + el(Basis::M, {1, 1, 1}).scaled(c(3));
    CHECK(e12 == expected);
}

TEST_CASE("convert examples") {
    CHECK(convert(el(Basis::P, {2}), Basis::M) == el(Basis::M, {2}));
    CHECK(convert(el(Basis::P, {1, 1}), Basis::M) == el(Basis::M, {2}) + el(Basis::M, {1, 1}).scaled(c(2)));
    CHECK(convert(el(Basis::M, {1, 1}), Basis::P) ==
          (el(Basis::P, {1, 1}) - el(Basis::P, {2})).scaled(cq(1, 2)));
    CHECK(convert(SymFun(QT, Basis::G), Basis::M).is_zero());
    CHECK(parse_basis("g") == Basis::G);
    CHECK_THROWS_AS(parse_basis("s"), ParseError);
}

TEST_CASE("g_in_p and e_in_p") {
    CHECK(g_in_p(QT, 0) == SymFun::constant(QT, Basis::P, c(1)));
    CHECK(g_in_p(QT, -1).is_zero());
    CHECK(g_in_p(QT, 1) == el(Basis::P, {1}).scaled((c(1) - t()) / (c(1) - q())));
    SymFun g2 = el(Basis::P, {2}).scaled((c(1) - t(2)) / (c(2) * (c(1) - q(2)))) +
                el(Basis::P, {1, 1}).scaled((c(1) - t()).pow(2) / (c(2) * (c(1) - q()).pow(2)));
    CHECK(g_in_p(QT, 2) == g2);

    CHECK(e_in_p(QT, 1) == el(Basis::P, {1}));
    CHECK(e_in_p(QT, 2) == (el(Basis::P, {1, 1}) - el(Basis::P, {2})).scaled(cq(1, 2)));
    CHECK(e_in_p(QT, 3) ==
          (el(Basis::P, {1, 1, 1}) - el(Basis::P, {2, 1}).scaled(c(3)) + el(Basis::P, {3}).scaled(c(2)))
              .scaled(cq(1, 6)));
    CHECK(e_in_p(QT, -2).is_zero());
}

TEST_CASE("g_k against the product series in the monomial basis") {
    // prod_i (t x_i;q)_inf / (x_i;q)_inf = prod_i sum_r (t;q)_r/(q;q)_r x_i^r
    for (int k = 1; k <= 6; ++k) {
        SymFun expected(QT, Basis::M);
        for (const auto& mu : partitions_of(k)) {
            RatFun coef = c(1);
            for (int part : mu.parts()) coef *= pochhammer(t(), q(), part) / pochhammer(q(), q(), part);
            expected.add_term(mu, coef);
        }
        CHECK(convert(el(Basis::G, {k}), Basis::M) == expected);
    }
}

TEST_CASE("Jack g_k") {
    for (int k = 1; k <= 5; ++k) {
        SymFun expected(AL, Basis::P);
        for (const auto& lam : partitions_of(k)) {
            RatFun w = RatFun::var(AL, "alpha", -static_cast<int>(lam.length())).scaled(mpq_class(1) / mpq_class(z_lambda(lam)));
            expected.add_term(lam, w);
        }
        CHECK(g_in_p(AL, k) == expected);
    }
}

TEST_CASE("z_lambda and scalar") {
    CHECK(z_lambda(Partition()) == 1);
    CHECK(z_lambda(Partition{2, 1, 1}) == 4);
    CHECK(z_lambda(Partition{3, 3}) == 18);

    CHECK(scalar(el(Basis::P, {2}), el(Basis::P, {1, 1}), ScalarMode::QT).is_zero());
    CHECK(scalar(el(Basis::P, {1}), el(Basis::P, {1}), ScalarMode::QT) == (c(1) - q()) / (c(1) - t()));
    CHECK(scalar(el(Basis::P, {1, 1}, AL), el(Basis::P, {1, 1}, AL), ScalarMode::Alpha) ==
          RatFun::var(AL, "alpha", 2).scaled(2));
    CHECK_THROWS_AS(scalar(el(Basis::P, {1}, AL), el(Basis::P, {1}, AL), ScalarMode::QT), ContextError);

    std::mt19937 rng(7);
    for (int i = 0; i < 5; ++i) {
        SymFun a = random_symfun(rng, Basis::M, 3), b = random_symfun(rng, Basis::E, 3),
               d = random_symfun(rng, Basis::P, 3);
        RatFun s = testing::random_ratfun(rng, QT, 2, 1);
        CHECK(scalar(a, b, ScalarMode::QT) == scalar(b, a, ScalarMode::QT));
        CHECK(scalar(convert(a, Basis::P).scaled(s) + convert(d, Basis::P), b, ScalarMode::QT) ==
              s * scalar(a, b, ScalarMode::QT) + scalar(d, b, ScalarMode::QT));
    }
}

TEST_CASE("degree additivity") {
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b)
            CHECK(mul(el(Basis::G, Partition::parse(std::to_string(a))), el(Basis::M, Partition::parse(std::to_string(b))))
                      .degree() == a + b);
}

TEST_CASE("basis round trips up to weight 6") {
    const Basis all[] = {Basis::P, Basis::M, Basis::E, Basis::G};
    for (int n = 0; n <= 6; ++n)
        for (const auto& lam : partitions_of(n))
            for (Basis from : all)
                for (Basis to : all) {
                    SymFun f = el(from, lam);
                    REQUIRE(convert(convert(f, to), from) == f);
                }
}

TEST_CASE("omega") {
    for (int n = 1; n <= 5; ++n) CHECK(convert(omega_qt(g_in_p(QT, n)), Basis::P) == e_in_p(QT, n));
    CHECK(omega_qt(el(Basis::G, {1})) == el(Basis::P, {1}));

    std::mt19937 rng(11);
    for (int i = 0; i < 5; ++i) {
        SymFun f = convert(random_symfun(rng, Basis::M, 4), Basis::P);
        CHECK(omega(omega_qt(f), t(), q()) == f);
    }
    // Algebra map.
    SymFun a = el(Basis::G, {2}), b = el(Basis::E, {1, 1});
    CHECK(omega_qt(mul(a, b)) == mul(omega_qt(a), omega_qt(b)));
}
