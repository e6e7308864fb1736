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
#include <doctest.h>

#include "pforge/errors.hpp"
#include "pforge/expand.hpp"
#include "pforge/oracle.hpp"
#include "pforge/serialize.hpp"

using namespace pforge;

TEST_CASE("latex of the two-row g-expansion") {
    Expansion ex = expand_full(Partition{1, 1}, Mode::MacG, Strategy::Recursive);
    CHECK(expansion_to_latex(ex) == "g_1^2-\\frac{(1+q)(1-t)}{1-qt}\\,g_2");
}

TEST_CASE("text output for simple expansions") {
    CHECK(expansion_to_text(expand_full(Partition{1, 1}, Mode::MacE, Strategy::Recursive)) == "e[2]");
    CHECK(expansion_to_text(expand_full(Partition{2}, Mode::MacG, Strategy::Recursive)) == "g[2]");
    CHECK(expansion_to_latex(expand_full(Partition{2}, Mode::MacG, Strategy::Recursive)) == "g_2");
}

TEST_CASE("latex of the Jack coefficient") {
    Expansion ex = expand_full(Partition{1, 1}, Mode::JackG, Strategy::Recursive);
    CHECK(expansion_to_latex(ex) == "g_1^2-\\frac{2}{1+\\alpha}\\,g_2");
}

TEST_CASE("latex of plain rational functions") {
    const FieldCtx& ctx = FieldCtx::qt();
    RatFun q = RatFun::var(ctx, "q"), t = RatFun::var(ctx, "t"), one = RatFun::constant(ctx, 1);
    CHECK(ratfun_to_latex(RatFun::constant(ctx, 0)) == "0");
    CHECK(ratfun_to_latex(RatFun::constant(ctx, mpq_class(-3, 2))) == "-\\frac{3}{2}");
    CHECK(ratfun_to_latex((one - t) * (one - t)) == "(1-t)^2");
    CHECK(ratfun_to_latex(q.pow(10) * t) == "q^{10}t");
    CHECK(ratfun_to_latex((q - t) / (one - q)) == "\\frac{q-t}{1-q}");
}

TEST_CASE("expansion json round trip for every mode") {
    for (Mode m : {Mode::MacG, Mode::MacE, Mode::JackG, Mode::JackE})
        for (const Partition& lam : {Partition{1, 1, 1}, Partition{3, 1}, Partition{2, 2}}) {
            Expansion ex = expand_full(lam, m, Strategy::Recursive);
            json j = expansion_to_json(ex, "recursive");
            Expansion back = expansion_from_json(json::parse(j.dump()));
            CHECK(expansion_to_json(back, "recursive") == j);
        }
    Expansion step = expand_step(Partition{2, 1}, Mode::MacG);
    json j = expansion_to_json(step, "step");
    CHECK(j["terms"][0].contains("Q"));
    CHECK(expansion_to_json(expansion_from_json(j), "step") == j);
}

TEST_CASE("discarded terms are serialized") {
    Expansion ex = expand_full(Partition{1, 1, 1}, Mode::MacG, Strategy::Recursive);
    json j = expansion_to_json(ex, "recursive");
    REQUIRE(!j["discarded"].empty());
    CHECK(j["discarded"][0]["index"] == json::array({1, 2}));
}

TEST_CASE("coefficient encoding uses decimal strings") {
    const FieldCtx& ctx = FieldCtx::qt();
    RatFun f = (RatFun::constant(ctx, 1) - RatFun::var(ctx, "q")) / RatFun::constant(ctx, 2);
    json j = ratfun_to_json(f);
    CHECK(j["den"] == json::parse(R"([["2",0,0]])"));
    CHECK(ratfun_from_json(j, ctx) == f);
}

TEST_CASE("symfun json round trip") {
    SymFun f = oracle_Q(Partition{2, 1}, ScalarMode::QT);
    json j = symfun_to_json(f);
    CHECK(symfun_from_json(json::parse(j.dump())) == f);
}

TEST_CASE("malformed documents throw ParseError") {
    CHECK_THROWS_AS(expansion_from_json(json::parse("[]")), ParseError);
    CHECK_THROWS_AS(expansion_from_json(json::parse(R"({"kind":"expansion","format_version":1})")), ParseError);
    json good = expansion_to_json(expand_full(Partition{1, 1}, Mode::MacG, Strategy::Recursive), "recursive");
    json bad = good;
    bad["terms"][0]["coeff"]["num"][0][0] = "x1";
    CHECK_THROWS_AS(expansion_from_json(bad), ParseError);
    bad = good;
    bad["variables"] = json::array({"alpha"});
    CHECK_THROWS_AS(expansion_from_json(bad), ParseError);
    bad = good;
    bad["terms"][0]["coeff"]["den"] = json::array();
    CHECK_THROWS_AS(expansion_from_json(bad), ParseError);
    bad = good;
    bad["terms"][0]["g"] = json::array({-1});
    CHECK_THROWS_AS(expansion_from_json(bad), ParseError);
}
