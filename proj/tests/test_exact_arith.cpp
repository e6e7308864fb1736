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
#include "pforge/linalg.hpp"
#include "pforge/poly_gcd.hpp"
#include "pforge/qseries.hpp"
#include "pforge/ratfun.hpp"
#include "test_support.hpp"

using namespace pforge;
using pforge::testing::random_poly;
using pforge::testing::random_ratfun;

namespace {

const FieldCtx QT = FieldCtx::qt();

RatFun q() { return RatFun::var(QT, "q"); }
RatFun t() { return RatFun::var(QT, "t"); }
RatFun c(long v) { return RatFun::constant(QT, v); }

// Laplace expansion along the first row; the independent reference for det.
RatFun det_cofactor(const FieldCtx& ctx, const RatMatrix& m) {
    const std::size_t n = m.size();
    if (n == 0) return RatFun::constant(ctx, 1);
    RatFun acc(ctx);
    for (std::size_t j = 0; j < n; ++j) {
        RatMatrix minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<RatFun> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(row);
        }
        RatFun term = m[0][j] * det_cofactor(ctx, minor);
        if (j % 2) acc -= term;
        else acc += term;
    }
    return acc;
}

} // namespace

TEST_CASE("gcd recovers planted common factors") {
    std::mt19937 rng(7);
    for (std::size_t nv : {1u, 2u, 3u, 5u}) {
        for (int trial = 0; trial < 25; ++trial) {
            Poly g = random_poly(rng, nv, 3, 3, 4);
            Poly a = random_poly(rng, nv, 3, 3, 4);
            Poly b = random_poly(rng, nv, 3, 3, 4);
            if (g.is_zero() || a.is_zero() || b.is_zero()) continue;
            Poly ga = g * a, gb = g * b;
            Poly h = gcd(ga, gb);
            // g | h, and h | ga, h | gb.
            CHECK(h.divide_exact(gcd(g, g)).has_value());
            CHECK(ga.divide_exact(h).has_value());
            CHECK(gb.divide_exact(h).has_value());
            // Cofactors are coprime.
            Poly ca = *ga.divide_exact(h), cb = *gb.divide_exact(h);
            CHECK(gcd(ca, cb).is_one());
        }
    }
}

TEST_CASE("gcd handles monomial and integer content") {
    Poly x = Poly::variable(2, 0), y = Poly::variable(2, 1);
    Poly one = Poly::constant(2, 1);
    Poly a = (x * x * y).scaled(6) * (one - x);
    Poly b = (x * y * y).scaled(4) * (one - x) * (one + y);
    Poly expect = (x * y).scaled(2) * (x - one);
    if (expect.leading().coeff < 0) expect = -expect;
    CHECK(gcd(a, b) == expect);
    CHECK(gcd(Poly(2), b) == (b.leading().coeff > 0 ? b : -b));
}

TEST_CASE("arith examples") {
    CHECK((c(1) - q() * q()) / (c(1) - q()) == c(1) + q());
    std::mt19937 rng(11);
    RatFun x = random_ratfun(rng, QT);
    CHECK(x + RatFun(QT) == x);
    CHECK(((c(1) - t()) / (c(1) - q())) * ((c(1) - q()) / (c(1) - t())) == c(1));
    CHECK_THROWS_AS(x / RatFun(QT), DomainError);
    CHECK_THROWS_AS(x + RatFun::constant(FieldCtx::alpha(), 1), ContextError);
}

TEST_CASE("field axioms on random triples") {
    std::mt19937 rng(3);
    for (int i = 0; i < 30; ++i) {
        RatFun a = random_ratfun(rng, QT), b = random_ratfun(rng, QT), d = random_ratfun(rng, QT);
        CHECK((a + b) + d == a + (b + d));
        CHECK((a * b) * d == a * (b * d));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a * (b + d) == a * b + a * d);
        CHECK(a - a == RatFun(QT));
        if (!a.is_zero()) CHECK(a / a == c(1));
    }
}

TEST_CASE("canonical form is idempotent and unique") {
    std::mt19937 rng(5);
    for (int i = 0; i < 30; ++i) {
        RatFun a = random_ratfun(rng, QT);
        CHECK(RatFun::from_polys(QT, a.num(), a.den()) == a);
        // Scaling numerator and denominator by a common polynomial changes nothing.
        Poly s = random_poly(rng, 2, 2, 2, 3);
        if (s.is_zero()) continue;
        CHECK(RatFun::from_polys(QT, a.num() * s, a.den() * s) == a);
        if (!a.is_zero()) CHECK(a.den().leading().coeff > 0);
    }
    // Laurent input is shifted into true polynomials.
    RatFun inv_q = RatFun::var(QT, "q", -1);
    CHECK(inv_q.num().is_one());
    CHECK(inv_q * q() == c(1));
}

TEST_CASE("pochhammer") {
    CHECK(pochhammer(t(), q(), 0) == c(1));
    CHECK(pochhammer(t(), q(), 2) == (c(1) - t()) * (c(1) - q() * t()));
    FieldCtx ctx = FieldCtx::qt(1);
    RatFun qq = RatFun::var(ctx, "q"), u = RatFun::var(ctx, "u1");
    RatFun one = RatFun::constant(ctx, 1);
    CHECK(pochhammer(qq * u, qq, 2) == (one - qq * u) * (one - qq * qq * u));
}

TEST_CASE("pochhammer splits at j") {
    std::mt19937 rng(9);
    for (int i = 0; i < 8; ++i) {
        RatFun x = random_ratfun(rng, QT, 2, 1);
        for (int j = 0; j <= 4; j += 2)
            for (int k = 0; k <= 4; k += 3)
                CHECK(pochhammer(x, q(), j + k) == pochhammer(x, q(), j) * pochhammer(x * q().pow(j), q(), k));
    }
}

TEST_CASE("raising factorial") {
    FieldCtx ctx = FieldCtx::generic({"u"});
    RatFun u = RatFun::var(ctx, "u");
    auto k = [&](long v) { return RatFun::constant(ctx, v); };
    CHECK(raising_factorial(u, 0) == k(1));
    CHECK(raising_factorial(u, 3) == u * (u + k(1)) * (u + k(2)));
    long fact = 1;
    for (int n = 0; n <= 7; ++n) {
        if (n > 0) fact *= n;
        CHECK(raising_factorial(k(1), n) == k(fact));
    }
}

TEST_CASE("det examples") {
    FieldCtx ab = FieldCtx::generic({"a", "b"});
    RatFun a = RatFun::var(ab, "a"), b = RatFun::var(ab, "b"), one = RatFun::constant(ab, 1);
    CHECK(det(ab, {{one, one}, {a, b}}) == b - a);
    RatFun zero(ab);
    CHECK(det(ab, {{one, zero, zero}, {zero, one, zero}, {zero, zero, one}}) == one);
    FieldCtx vv = FieldCtx::generic({"v1", "v2"});
    RatFun v1 = RatFun::var(vv, "v1"), v2 = RatFun::var(vv, "v2"), o = RatFun::constant(vv, 1);
    CHECK(det(vv, {{v1, o}, {v2, o}}) == v1 - v2);
    CHECK(det(ab, {}) == one);
}

TEST_CASE("det agrees with cofactor expansion") {
    std::mt19937 rng(21);
    for (std::size_t n = 1; n <= 4; ++n) {
        for (int trial = 0; trial < 3; ++trial) {
            RatMatrix m(n, std::vector<RatFun>(n, RatFun(QT)));
            for (auto& row : m)
                for (auto& x : row) x = random_ratfun(rng, QT, 2, 1);
            CHECK(det(QT, m) == det_cofactor(QT, m));
        }
    }
    // Zero pivot forces a row swap.
    RatMatrix m = {{RatFun(QT), c(1)}, {q(), t()}};
    CHECK(det(QT, m) == -q());
}

TEST_CASE("substitute") {
    CHECK(substitute((c(1) - q() * t()) / (c(1) - q()), {{"q", c(0)}}, QT) == c(1));
    FieldCtx uv = FieldCtx::generic({"u", "v"});
    RatFun u = RatFun::var(uv, "u"), v = RatFun::var(uv, "v"), one = RatFun::constant(uv, 1);
    CHECK(substitute(u - v, {{"v", u}}, uv).is_zero());
    CHECK_THROWS_AS(substitute(one / (one - v), {{"v", one}}, uv), SpecializationError);
    // Swap q and t.
    CHECK(substitute((c(1) - q()) / (c(1) - t() * t()), {{"q", t()}, {"t", q()}}, QT) ==
          (c(1) - t()) / (c(1) - q() * q()));
}

TEST_CASE("substitute is a ring homomorphism") {
    std::mt19937 rng(33);
    std::map<std::string, RatFun> binding_sets[] = {
        {{"q", t()}},
        {{"q", c(0)}},
        {{"t", c(2) + q()}},
    };
    for (const auto& bind : binding_sets) {
        for (int i = 0; i < 10; ++i) {
            RatFun a = random_ratfun(rng, QT, 2, 2), b = random_ratfun(rng, QT, 2, 2);
            try {
                RatFun sa = substitute(a, bind, QT), sb = substitute(b, bind, QT);
                CHECK(substitute(a * b, bind, QT) == sa * sb);
                CHECK(substitute(a + b, bind, QT) == sa + sb);
            } catch (const SpecializationError&) {
            }
        }
    }
}
