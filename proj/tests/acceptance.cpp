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

// Acceptance suite: one PASS/FAIL line per criterion. Exit status is 0 only
// when every selected criterion passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>

#include "CLI11.hpp"
#include "pforge/expand.hpp"
#include "pforge/oracle.hpp"
#include "pforge/pieri.hpp"
#include "pforge/pieri_inverse.hpp"

using namespace pforge;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
};

const FieldCtx& QT() {
    static const FieldCtx ctx = FieldCtx::qt();
    return ctx;
}
RatFun qv(int k = 1) { return RatFun::var(QT(), "q", k); }
RatFun tv(int k = 1) { return RatFun::var(QT(), "t", k); }
RatFun one() { return RatFun::constant(QT(), 1); }

std::vector<Partition> partitions_upto(int max_weight, std::size_t max_length) {
    std::vector<Partition> out;
    for (int w = 1; w <= max_weight; ++w)
        for (const auto& lam : partitions_of(w))
            if (lam.length() <= max_length) out.push_back(lam);
    return out;
}

std::string lam_str(const Partition& lam) { return "(" + lam.to_string() + ")"; }

// Shared across criteria 2-5 and 10.
std::size_t g_discards = 0;
bool g_core_pass[6] = {true, true, true, true, true, true};

Outcome check_expansions(Mode mode, int max_weight, std::size_t max_length) {
    Outcome o;
    std::size_t cases = 0, discards = 0;
    for (const auto& lam : partitions_upto(max_weight, max_length)) {
        for (bool step : {true, false}) {
            Expansion ex = step ? expand_step(lam, mode) : expand_full(lam, mode, Strategy::Recursive);
            VerificationReport rep = verify_expansion(ex);
            ++cases;
            discards += rep.discarded.size();
            if (!rep.pass) o.fail(std::string(step ? "step" : "full") + " expansion fails at " + lam_str(lam));
        }
    }
    g_discards += discards;
    o.detail = (o.pass ? "" : o.detail + "; ") + std::to_string(cases) + " expansions, " + std::to_string(discards) +
               " discarded terms logged";
    return o;
}

bool same_terms(const Expansion& a, const Expansion& b) {
    if (a.terms.size() != b.terms.size()) return false;
    for (std::size_t i = 0; i < a.terms.size(); ++i) {
        const ExpTerm &x = a.terms[i], &y = b.terms[i];
        if (x.kind != y.kind || x.factors != y.factors || !(x.coeff == y.coeff)) return false;
    }
    return true;
}

Outcome criterion1() {
    Outcome o;
    std::size_t cases = 0;
    for (auto [n, depth] : {std::pair<std::size_t, int>{1, 3}, {2, 2}, {3, 1}}) {
        for (const auto& r : orthogonality_sweep(n, depth)) {
            ++cases;
            if (!r.pass) o.fail("n=" + std::to_string(n) + " beta=" + Composition{r.beta}.to_string() +
                                " gamma=" + Composition{r.gamma}.to_string());
        }
    }
    if (o.pass) o.detail = std::to_string(cases) + " (beta, gamma) pairs, both product orders";
    return o;
}

Outcome criterion4(int max_weight) {
    Outcome o;
    std::size_t cases = 0;
    for (Mode mode : {Mode::MacG, Mode::MacE, Mode::JackG, Mode::JackE})
        for (const auto& lam : partitions_upto(max_weight, 4)) {
            ++cases;
            if (!same_terms(expand_full(lam, mode, Strategy::Recursive), expand_full(lam, mode, Strategy::Direct)))
                o.fail(std::string(mode_name(mode)) + " differs at " + lam_str(lam));
        }
    if (o.pass) o.detail = std::to_string(cases) + " expansions term-identical";
    return o;
}

Outcome criterion5() {
    Outcome a = check_expansions(Mode::JackG, 6, 99);
    Outcome b = check_expansions(Mode::JackE, 6, 99);
    Outcome o;
    if (!a.pass) o.fail("jack-g: " + a.detail);
    if (!b.pass) o.fail("jack-e: " + b.detail);
    if (o.pass) o.detail = "jack-g " + a.detail + "; jack-e " + b.detail;
    return o;
}

Outcome criterion6() {
    Outcome o;
    std::size_t cases = 0;
    for (int w = 0; w <= 6; ++w)
        for (const auto& lam : partitions_of(w))
            for (int r = 0; r <= 3; ++r) {
                PieriExpansion ex = pieri_expand(lam, r);
                SymFun lhs(QT(), Basis::M);
                for (const auto& term : ex.terms) {
                    lhs += oracle_Q(term.index, ScalarMode::QT).scaled(term.coeff);
                    if (!is_horizontal_strip(term.index, lam)) o.fail("term outside the horizontal strips");
                }
                SymFun g_r = r == 0 ? SymFun::constant(QT(), Basis::G, one())
                                    : SymFun::element(QT(), Basis::G, Partition{r});
                SymFun rhs = convert(mul(oracle_Q(lam, ScalarMode::QT), g_r), Basis::M);
                ++cases;
                if (!(lhs == rhs)) o.fail("reassembly differs at " + lam_str(lam) + ", r=" + std::to_string(r));
            }
    if (o.pass) o.detail = std::to_string(cases) + " products Q_lambda g_r";
    return o;
}

Outcome criterion7() {
    Outcome o;
    // Q_(1,1) = g_1^2 - (1+q)(1-t)/(1-qt) g_2, both as an expansion and
    // against the oracle.
    RatFun c = -(one() + qv()) * (one() - tv()) / (one() - qv() * tv());
    Expansion ex = expand_full(Partition{1, 1}, Mode::MacG, Strategy::Recursive);
    bool shape = ex.terms.size() == 2 && ex.terms[0].factors == Partition{1, 1} && ex.terms[0].coeff.is_one() &&
                 ex.terms[1].factors == Partition{2} && ex.terms[1].coeff == c;
    if (!shape) o.fail("Q_(1,1) expansion has the wrong terms");
    SymFun g1 = SymFun::element(QT(), Basis::G, Partition{1});
    SymFun closed = convert(mul(g1, g1), Basis::M) + convert(SymFun::element(QT(), Basis::G, Partition{2}), Basis::M).scaled(c);
    if (!(closed == oracle_Q(Partition{1, 1}, ScalarMode::QT))) o.fail("Q_(1,1) closed form vs oracle");

    // Jack coefficient -2/(alpha+1), from the expansion and from c_alpha.
    const FieldCtx al = FieldCtx::alpha();
    RatFun alpha = RatFun::var(al, "alpha"), aone = RatFun::constant(al, 1);
    RatFun jack = RatFun::constant(al, -2) / (alpha + aone);
    Expansion jx = expand_full(Partition{1, 1}, Mode::JackG, Strategy::Recursive);
    if (jx.terms.size() != 2 || !(jx.terms[1].coeff == jack)) o.fail("Jack (1,1) coefficient");
    if (!(c_alpha(al, Composition{{1}}, {RatFun::constant(al, 0)}, aone / alpha) == jack)) o.fail("c_alpha example");
    if (!(c_ab(QT(), Composition{{1}}, {one()}, qv(), tv()) == c)) o.fail("c_ab example");

    // c_0 = d_0 = 1 for Pieri contexts and for generic u.
    std::size_t checks = 0;
    for (int w = 0; w <= 6; ++w)
        for (const auto& lam : partitions_of(w))
            for (int r = 0; r <= 3; ++r) {
                if (lam.empty()) continue;
                PieriContext pc = pieri_u(lam, r);
                Composition zero{std::vector<int>(lam.length(), 0)};
                checks += 3;
                if (!d_coeff(QT(), zero, pc.u).is_one()) o.fail("d_0 != 1 at " + lam_str(lam));
                if (!c_ab(QT(), zero, pc.u, qv(), tv()).is_one()) o.fail("c_0 (q,t) != 1 at " + lam_str(lam));
                if (!c_ab(QT(), zero, pc.u, tv(), qv()).is_one()) o.fail("c_0 (t,q) != 1 at " + lam_str(lam));
            }
    for (std::size_t n = 1; n <= 4; ++n) {
        FieldCtx gen = FieldCtx::qt(n);
        FieldCtx jgen = FieldCtx::alpha(n);
        std::vector<RatFun> u, ju;
        for (std::size_t i = 1; i <= n; ++i) {
            u.push_back(RatFun::var(gen, "u" + std::to_string(i)));
            ju.push_back(RatFun::var(jgen, "u" + std::to_string(i)));
        }
        Composition zero{std::vector<int>(n, 0)};
        checks += 3;
        if (!d_coeff(gen, zero, u).is_one()) o.fail("generic d_0 != 1");
        if (!c_ab(gen, zero, u, RatFun::var(gen, "q"), RatFun::var(gen, "t")).is_one()) o.fail("generic c_0 != 1");
        if (!c_alpha(jgen, zero, ju, RatFun::var(jgen, "alpha")).is_one()) o.fail("generic Jack c_0 != 1");
    }
    if (o.pass) o.detail = "closed forms match; " + std::to_string(checks) + " theta = 0 evaluations equal 1";
    return o;
}

Outcome criterion8() {
    Outcome o;
    std::size_t cases = 0;
    for (const auto& lam : partitions_upto(6, 99)) {
        SymFun lhs = convert(omega_qt(oracle_Q(lam, ScalarMode::QT)), Basis::M);
        SymFun rhs = specialize_qt(gram_schmidt_P(lam.conjugate(), ScalarMode::QT), tv(), qv());
        ++cases;
        if (!(lhs == rhs)) o.fail("omega(Q) != P' at " + lam_str(lam));
    }
    for (int n = 1; n <= 6; ++n) {
        SymFun lhs = convert(omega_qt(SymFun::element(QT(), Basis::G, Partition{n})), Basis::E);
        ++cases;
        if (!(lhs == SymFun::element(QT(), Basis::E, Partition{n}))) o.fail("omega(g_n) != e_n at n=" + std::to_string(n));
    }
    if (o.pass) o.detail = std::to_string(cases) + " identities";
    return o;
}

Outcome criterion9() {
    Outcome o;
    std::size_t cases = 0;
    for (const auto& lam : partitions_upto(6, 99)) {
        SymFun at_qt = specialize_qt(gram_schmidt_P(lam, ScalarMode::QT), tv(), tv());
        SymFun schur = schur_jacobi_trudi(lam);
        SymFun diff = at_qt;
        for (const auto& [mu, c] : at_qt.coeffs())
            if (!c.is_constant() || c.constant_value().get_den() != 1) o.fail("non-integer coefficient at " + lam_str(lam));
        for (const auto& [mu, c] : schur.coeffs()) diff.add_term(mu, RatFun::constant(QT(), -c.constant_value()));
        ++cases;
        if (!diff.is_zero()) o.fail("P at q=t differs from s at " + lam_str(lam));
    }
    RatFun zero(QT());
    for (int r = 1; r <= 4; ++r) {
        Partition col(std::vector<int>(r, 1));
        RatFun f = one();
        for (int i = 1; i <= r; ++i) f *= one() - tv(i);
        SymFun hl = specialize_qt(oracle_Q(col, ScalarMode::QT), zero, tv());
        ++cases;
        if (!(hl == convert(SymFun::element(QT(), Basis::E, Partition{r}), Basis::M).scaled(f)))
            o.fail("Hall-Littlewood column r=" + std::to_string(r));
    }
    if (o.pass) o.detail = std::to_string(cases) + " specializations";
    return o;
}

Outcome criterion10() {
    Outcome o;
    VerificationReport rep = verify_expansion(Partition{1, 1, 1}, Mode::MacG);
    bool nonzero = false;
    for (const auto& d : rep.discarded) nonzero = nonzero || !d.coeff.is_zero();
    if (!rep.pass) o.fail("(1,1,1) expansion fails with the discard convention");
    if (!nonzero) o.fail("no nonzero discarded term logged at (1,1,1)");
    for (int k = 2; k <= 5; ++k)
        if (!g_core_pass[k]) o.fail("criterion " + std::to_string(k) + " did not pass");
    if (o.pass)
        o.detail = std::to_string(rep.discarded.size()) + " discarded at (1,1,1); " + std::to_string(g_discards) +
                   " logged across criteria 2-5";
    return o;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Acceptance criteria"};
    bool stretch = false;
    std::vector<int> only;
    app.add_flag("--stretch", stretch, "Extend criteria 2 and 3 to weight 8");
    app.add_option("--only", only, "Run only these criteria (10 also needs 2-5)");
    CLI11_PARSE(app, argc, argv);

    const int wmax = stretch ? 8 : 6;
    struct Criterion {
        int id;
        const char* title;
        double budget;  // seconds
        std::function<Outcome()> run;
    };
    std::vector<Criterion> all = {
        {1, "orthogonality certificate", 120, criterion1},
        {2, "mac-g expansions equal oracle Q", 600, [&] { return check_expansions(Mode::MacG, wmax, 4); }},
        {3, "mac-e expansions equal oracle P", 600, [&] { return check_expansions(Mode::MacE, wmax, 4); }},
        {4, "direct equals recursive", 300, [&] { return criterion4(wmax); }},
        {5, "Jack expansions equal Jack oracle", 600, criterion5},
        {6, "Pieri reassembly", 300, criterion6},
        {7, "closed-form spot checks", 600, criterion7},
        {8, "omega duality", 600, criterion8},
        {9, "Schur and Hall-Littlewood degenerations", 600, criterion9},
        {10, "non-partition discard ledger", 600, criterion10},
    };
    auto selected = [&](int id) {
        if (only.empty()) return true;
        for (int k : only)
            if (k == id || (k == 10 && id >= 2 && id <= 5)) return true;
        return false;
    };

    bool all_pass = true;
    for (const auto& c : all) {
        if (!selected(c.id)) continue;
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > c.budget) o.fail("over the " + std::to_string(static_cast<int>(c.budget)) + " s budget");
        if (c.id >= 2 && c.id <= 5) g_core_pass[c.id] = o.pass;
        all_pass = all_pass && o.pass;
        std::printf("criterion %2d: %s  %s (%s, %.1f s)\n", c.id, o.pass ? "PASS" : "FAIL", c.title, o.detail.c_str(),
                    secs);
        std::fflush(stdout);
    }
    return all_pass ? 0 : 1;
}
