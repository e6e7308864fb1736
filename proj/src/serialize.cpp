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

#include "pforge/serialize.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "pforge/errors.hpp"
#include "pforge/expand.hpp"

namespace pforge {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw ParseError("malformed document: " + what); }

json poly_to_json(const Poly& p) {
    json arr = json::array();
    for (const auto& term : p.terms()) {
        json row = json::array({term.coeff.get_str()});
        for (std::size_t i = 0; i < p.nvars(); ++i) row.push_back(term.exps[i]);
        arr.push_back(row);
    }
    return arr;
}

Poly poly_from_json(const json& arr, std::size_t nvars) {
    if (!arr.is_array()) malformed("polynomial must be an array");
    std::vector<Poly::Term> terms;
    for (const auto& row : arr) {
        if (!row.is_array() || row.size() != nvars + 1 || !row[0].is_string()) malformed("bad polynomial term");
        Poly::Term term;
        if (term.coeff.set_str(row[0].get<std::string>(), 10) != 0) malformed("bad coefficient");
        for (std::size_t i = 0; i < nvars; ++i) {
            if (!row[i + 1].is_number_integer()) malformed("bad exponent");
            long e = row[i + 1].get<long>();
            if (e < -32768 || e > 32767) malformed("exponent out of range");
            term.exps[i] = static_cast<std::int16_t>(e);
        }
        terms.push_back(term);
    }
    return Poly::from_terms(nvars, std::move(terms));
}

std::vector<int> int_list(const json& j, const char* what) {
    if (!j.is_array()) malformed(std::string(what) + " must be an array");
    std::vector<int> out;
    for (const auto& x : j) {
        if (!x.is_number_integer()) malformed(std::string(what) + " entries must be integers");
        out.push_back(x.get<int>());
    }
    return out;
}

Partition partition_from(const json& j, const char* what) {
    std::vector<int> parts = int_list(j, what);
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    try {
        return Partition(std::move(parts));
    } catch (const DomainError&) {
        malformed(std::string(what) + " is not a partition");
    }
}

json partition_json(const Partition& p) { return json(p.parts()); }

// ---------------------------------------------------------------------------
// Text

// Sign pulled out for display: the first printed term of the denominator
// and of the remaining numerator are positive.
struct SignedText {
    bool negative = false;
    std::string body;
};

SignedText signed_text(const RatFun& c) {
    Poly num = c.num(), den = c.den();
    if (den.terms().back().coeff < 0) {
        num = -num;
        den = -den;
    }
    SignedText out;
    if (!num.is_zero() && num.terms().back().coeff < 0) {
        out.negative = true;
        num = -num;
    }
    auto wrap = [&](const Poly& p) {
        std::string s = poly_to_string(p, c.ctx());
        return p.size() > 1 ? "(" + s + ")" : s;
    };
    std::string n = poly_to_string(num, c.ctx());
    out.body = den.is_one() ? n : wrap(num) + "/" + wrap(den);
    return out;
}

std::string text_factors(const std::string& name, const Partition& factors) {
    if (factors.empty()) return "";
    std::map<int, int> counts;
    for (int k : factors.parts()) ++counts[k];
    std::string s;
    for (const auto& [k, m] : counts) {
        if (!s.empty()) s += "*";
        s += name + "[" + std::to_string(k) + "]";
        if (m > 1) s += "^" + std::to_string(m);
    }
    return s;
}

std::string join_text(const std::vector<std::pair<RatFun, std::string>>& terms) {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [c, body] : terms) {
        SignedText st = signed_text(c);
        out += first ? (st.negative ? "-" : "") : (st.negative ? " - " : " + ");
        if (body.empty()) out += st.body;
        else if (st.body == "1") out += body;
        else if (st.body.find_first_of("+-/*") == std::string::npos) out += st.body + "*" + body;
        else out += "(" + st.body + ")*" + body;
        first = false;
    }
    return out;
}

// ---------------------------------------------------------------------------
// LaTeX

std::string latex_monomial(const Exponents& e, const FieldCtx& ctx) {
    std::string s;
    for (std::size_t i = 0; i < ctx.size(); ++i) {
        if (e[i] == 0) continue;
        std::string name = ctx.name(i) == "alpha" ? "\\alpha " : ctx.name(i);
        if (name.size() > 1 && name[0] == 'u') name = "u_{" + name.substr(1) + "}";
        s += name;
        if (e[i] != 1) s += e[i] >= 0 && e[i] < 10 ? "^" + std::to_string(e[i]) : "^{" + std::to_string(e[i]) + "}";
    }
    if (!s.empty() && s.back() == ' ') s.pop_back();
    return s;
}

int total_degree(const Exponents& e) {
    int s = 0;
    for (auto x : e) s += x;
    return s;
}

// Display order: ascending total degree, then lex-greater first.
std::vector<Poly::Term> display_terms(const Poly& p) {
    std::vector<Poly::Term> ts = p.terms();
    std::stable_sort(ts.begin(), ts.end(),
                     [](const Poly::Term& a, const Poly::Term& b) { return total_degree(a.exps) < total_degree(b.exps); });
    return ts;
}

std::string latex_poly(const Poly& p, const FieldCtx& ctx) {
    std::string s;
    bool first = true;
    for (const auto& term : display_terms(p)) {
        mpz_class c = term.coeff;
        bool neg = c < 0;
        if (neg) c = -c;
        s += neg ? "-" : (first ? "" : "+");
        std::string mono = latex_monomial(term.exps, ctx);
        if (mono.empty()) s += c.get_str();
        else s += (c == 1 ? "" : c.get_str()) + mono;
        first = false;
    }
    return s;
}

struct Factored {
    mpz_class content = 1;  // signed
    Exponents mono{};
    std::vector<std::pair<Poly, int>> factors;
    Poly rest;
};

std::vector<Poly> candidate_factors(const Poly& p, const FieldCtx& ctx) {
    const std::size_t nv = ctx.size();
    std::vector<Poly> out;
    Exponents hi = p.max_exponents();
    if (nv == 1) {
        // Linear factors b x + a from the rational root test.
        mpz_class lead = abs(p.leading().coeff), tail = abs(p.terms().back().coeff);
        auto divisors = [](mpz_class v) {
            std::vector<long> d;
            if (v > 1000000) v = 1000000;
            for (long i = 1; i <= v.get_si() && i <= 1000; ++i)
                if (mpz_class(v) % i == 0) d.push_back(i);
            return d;
        };
        for (long b : divisors(lead))
            for (long a : divisors(tail))
                for (int sgn : {1, -1}) {
                    std::vector<Poly::Term> ts(2);
                    ts[0].exps[0] = 1;
                    ts[0].coeff = b;
                    ts[1].coeff = sgn * a;
                    out.push_back(Poly::from_terms(nv, ts));
                }
        return out;
    }
    // 1 - m and 1 + m for monomials m within the exponent box, small first.
    std::vector<Exponents> monos{Exponents{}};
    for (std::size_t i = 0; i < nv; ++i) {
        std::vector<Exponents> next;
        for (const auto& m : monos)
            for (int e = 0; e <= hi[i]; ++e) {
                Exponents x = m;
                x[i] = static_cast<std::int16_t>(e);
                next.push_back(x);
                if (next.size() > 4000) break;
            }
        monos.swap(next);
    }
    std::stable_sort(monos.begin(), monos.end(),
                     [](const Exponents& a, const Exponents& b) { return total_degree(a) < total_degree(b); });
    for (const auto& m : monos) {
        if (total_degree(m) == 0) continue;
        for (int sgn : {-1, 1}) {
            std::vector<Poly::Term> ts(2);
            ts[0].exps = m;
            ts[0].coeff = sgn;
            ts[1].coeff = 1;
            out.push_back(Poly::from_terms(nv, ts));
        }
    }
    // x_i^a - x_j^b
    for (std::size_t i = 0; i < nv; ++i)
        for (std::size_t j = i + 1; j < nv; ++j)
            for (int a = 1; a <= hi[i]; ++a)
                for (int b = 1; b <= hi[j]; ++b) {
                    std::vector<Poly::Term> ts(2);
                    ts[0].exps[i] = static_cast<std::int16_t>(a);
                    ts[0].coeff = 1;
                    ts[1].exps[j] = static_cast<std::int16_t>(b);
                    ts[1].coeff = -1;
                    out.push_back(Poly::from_terms(nv, ts));
                }
    return out;
}

// Flip the sign so that the first displayed term is positive.
Poly normalize_display(const Poly& f, mpz_class& sign) {
    if (display_terms(f).front().coeff < 0) {
        sign = -sign;
        return -f;
    }
    return f;
}

Factored factor_best_effort(const Poly& p, const FieldCtx& ctx) {
    Factored out;
    out.mono = p.min_exponents();
    Exponents neg{};
    for (std::size_t i = 0; i < kMaxVars; ++i) neg[i] = static_cast<std::int16_t>(-out.mono[i]);
    Poly rest = p.shifted(neg);
    out.content = rest.content();
    rest = rest.divided_exactly(out.content);
    if (rest.is_constant()) {
        out.content *= rest.leading().coeff;
        out.rest = Poly::constant(p.nvars(), 1);
        return out;
    }
    mpz_class sign = 1;
    for (const auto& cand : candidate_factors(rest, ctx)) {
        if (rest.is_constant()) break;
        int mult = 0;
        while (!rest.is_constant()) {
            auto quo = rest.divide_exact(cand);
            if (!quo) break;
            rest = *quo;
            ++mult;
        }
        if (mult > 0) {
            mpz_class flip = 1;
            Poly shown = normalize_display(cand, flip);
            if (mult % 2 == 1) sign *= flip;
            out.factors.emplace_back(shown, mult);
        }
    }
    if (rest.is_constant()) {
        out.content *= rest.leading().coeff;
        out.rest = Poly::constant(p.nvars(), 1);
    } else {
        out.rest = normalize_display(rest, sign);
    }
    out.content *= sign;
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) { return a.first.leading().exps > b.first.leading().exps; });
    return out;
}

std::string render_pieces(const Factored& f, const FieldCtx& ctx, bool force_wrap, bool& negative) {
    mpz_class c = f.content;
    negative = c < 0;
    if (negative) c = -c;
    std::vector<std::pair<std::string, bool>> pieces;  // text, multi-term
    std::string mono = latex_monomial(f.mono, ctx);
    for (const auto& [fac, mult] : f.factors) {
        std::string s = latex_poly(fac, ctx);
        if (mult > 1) s = "(" + s + ")^" + (mult < 10 ? std::to_string(mult) : "{" + std::to_string(mult) + "}");
        pieces.emplace_back(s, mult == 1 && fac.size() > 1);
    }
    if (!f.rest.is_one()) pieces.emplace_back(latex_poly(f.rest, ctx), f.rest.size() > 1);
    std::size_t count = pieces.size() + (mono.empty() ? 0 : 1) + (c != 1 ? 1 : 0);
    bool wrap = force_wrap || count > 1;
    std::string out = c != 1 ? c.get_str() : "";
    out += mono;
    for (const auto& [s, multi] : pieces) out += multi && wrap ? "(" + s + ")" : s;
    if (out.empty()) out = "1";
    return out;
}

// Coefficient as LaTeX without its sign; `coeff_position` wraps a lone
// multi-term numerator so it can precede a factor.
std::string latex_abs(const RatFun& a, bool coeff_position, bool& negative) {
    const FieldCtx& ctx = a.ctx();
    bool nneg = false, dneg = false;
    Factored num = factor_best_effort(a.num(), ctx);
    std::string n = render_pieces(num, ctx, coeff_position && a.den().is_one(), nneg);
    if (a.den().is_one()) {
        negative = nneg;
        return n;
    }
    Factored den = factor_best_effort(a.den(), ctx);
    std::string d = render_pieces(den, ctx, false, dneg);
    negative = nneg != dneg;
    return "\\frac{" + n + "}{" + d + "}";
}

std::string latex_factors(const std::string& name, const Partition& factors) {
    std::map<int, int> counts;
    for (int k : factors.parts()) ++counts[k];
    std::string s;
    for (const auto& [k, m] : counts) {
        if (!s.empty()) s += " ";
        s += name + (k < 10 ? "_" + std::to_string(k) : "_{" + std::to_string(k) + "}");
        if (m > 1) s += m < 10 ? "^" + std::to_string(m) : "^{" + std::to_string(m) + "}";
    }
    return s;
}

std::string latex_shape(const std::string& name, const Partition& p) {
    return name + "_{(" + p.to_string() + ")}";
}

std::string latex_join(const std::vector<std::pair<RatFun, std::string>>& terms) {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [c, body] : terms) {
        bool neg = false;
        std::string coef;
        if (c.is_one() && !body.empty()) {
            coef = "";
        } else if ((-c).is_one() && !body.empty()) {
            neg = true;
        } else {
            coef = latex_abs(c, !body.empty(), neg);
        }
        out += neg ? "-" : (first ? "" : "+");
        if (body.empty()) out += coef;
        else if (coef.empty()) out += body;
        else out += coef + "\\," + body;
        first = false;
    }
    return out;
}

std::string term_body_text(const ExpTerm& t) {
    switch (t.kind) {
    case TermKind::GProduct: return text_factors("g", t.factors);
    case TermKind::EProduct: return text_factors("e", t.factors);
    case TermKind::QxRow:
    case TermKind::PxE: {
        std::string row = text_factors(t.kind == TermKind::QxRow ? "g" : "e", t.factors);
        std::string shape = t.shape.empty() ? "" : std::string(t.kind == TermKind::QxRow ? "Q" : "P") + "[" + t.shape.to_string() + "]";
        if (row.empty()) return shape;
        if (shape.empty()) return row;
        return row + "*" + shape;
    }
    }
    return "";
}

std::string term_body_latex(const ExpTerm& t) {
    switch (t.kind) {
    case TermKind::GProduct: return latex_factors("g", t.factors);
    case TermKind::EProduct: return latex_factors("e", t.factors);
    case TermKind::QxRow:
    case TermKind::PxE: {
        std::string row = latex_factors(t.kind == TermKind::QxRow ? "g" : "e", t.factors);
        std::string shape = t.shape.empty() ? "" : latex_shape(t.kind == TermKind::QxRow ? "Q" : "P", t.shape);
        if (row.empty()) return shape;
        if (shape.empty()) return row;
        return row + "\\," + shape;
    }
    }
    return "";
}

} // namespace

// ---------------------------------------------------------------------------

json ratfun_to_json(const RatFun& f) { return json{{"num", poly_to_json(f.num())}, {"den", poly_to_json(f.den())}}; }

RatFun ratfun_from_json(const json& j, const FieldCtx& ctx) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den")) malformed("rational function needs num and den");
    Poly num = poly_from_json(j["num"], ctx.size());
    Poly den = poly_from_json(j["den"], ctx.size());
    if (den.is_zero()) malformed("zero denominator");
    return RatFun::from_polys(ctx, num, den);
}

FieldCtx field_from_variables(const json& vars) {
    if (vars == json::array({"q", "t"})) return FieldCtx::qt();
    if (vars == json::array({"alpha"})) return FieldCtx::alpha();
    malformed("variables must be [\"q\",\"t\"] or [\"alpha\"]");
}

json variables_json(const FieldCtx& ctx) { return json(ctx.names()); }

json discarded_to_json(const DiscardedTerm& d) {
    return json{{"source", partition_json(d.source)},
                {"index", d.index},
                {"theta", d.theta},
                {"coeff", ratfun_to_json(d.coeff)}};
}

json expansion_to_json(const Expansion& ex, const std::string& strategy) {
    json terms = json::array();
    for (const auto& t : ex.terms) {
        json jt{{"coeff", ratfun_to_json(t.coeff)}};
        switch (t.kind) {
        case TermKind::GProduct: jt["g"] = partition_json(t.factors); break;
        case TermKind::EProduct: jt["e"] = partition_json(t.factors); break;
        case TermKind::QxRow:
            jt["g"] = partition_json(t.factors);
            jt["Q"] = partition_json(t.shape);
            break;
        case TermKind::PxE:
            jt["e"] = partition_json(t.factors);
            jt["P"] = partition_json(t.shape);
            break;
        }
        terms.push_back(jt);
    }
    json discarded = json::array();
    for (const auto& d : ex.discarded) discarded.push_back(discarded_to_json(d));
    return json{{"format_version", kFormatVersion},
                {"kind", "expansion"},
                {"lambda", partition_json(ex.lambda)},
                {"mode", mode_name(ex.mode)},
                {"strategy", strategy},
                {"variables", variables_json(mode_field(ex.mode))},
                {"terms", terms},
                {"discarded", discarded}};
}

Expansion expansion_from_json(const json& j) {
    if (!j.is_object()) malformed("expected an object");
    if (j.value("kind", "") != "expansion") malformed("kind must be \"expansion\"");
    if (j.value("format_version", 0) != kFormatVersion) malformed("unsupported format_version");
    for (const char* key : {"lambda", "mode", "variables", "terms"})
        if (!j.contains(key)) malformed(std::string("missing ") + key);
    if (!j["mode"].is_string()) malformed("mode must be a string");
    const Mode mode = parse_mode(j["mode"].get<std::string>());
    const FieldCtx ctx = field_from_variables(j["variables"]);
    if (!(ctx == mode_field(mode))) malformed("variables do not match the mode");
    Expansion ex{partition_from(j["lambda"], "lambda"), mode, {}, {}};
    if (!j["terms"].is_array()) malformed("terms must be an array");
    for (const auto& jt : j["terms"]) {
        if (!jt.is_object() || !jt.contains("coeff")) malformed("term needs coeff");
        RatFun c = ratfun_from_json(jt["coeff"], ctx);
        const bool has_g = jt.contains("g"), has_e = jt.contains("e");
        if (has_g == has_e) malformed("term needs exactly one of g, e");
        Partition factors = partition_from(has_g ? jt["g"] : jt["e"], "subscripts");
        if (jt.contains("Q") || jt.contains("P")) {
            if (!(has_g ? jt.contains("Q") : jt.contains("P"))) malformed("Q pairs with g, P with e");
            Partition shape = partition_from(has_g ? jt["Q"] : jt["P"], "shape");
            ex.terms.push_back({c, has_g ? TermKind::QxRow : TermKind::PxE, factors, shape});
        } else {
            ex.terms.push_back({c, has_g ? TermKind::GProduct : TermKind::EProduct, factors, Partition()});
        }
    }
    if (j.contains("discarded")) {
        if (!j["discarded"].is_array()) malformed("discarded must be an array");
        for (const auto& d : j["discarded"]) {
            if (!d.is_object() || !d.contains("source") || !d.contains("index") || !d.contains("coeff"))
                malformed("bad discarded entry");
            ex.discarded.push_back({partition_from(d["source"], "source"), int_list(d["index"], "index"),
                                    d.contains("theta") ? int_list(d["theta"], "theta") : std::vector<int>{},
                                    ratfun_from_json(d["coeff"], ctx)});
        }
    }
    return ex;
}

json symfun_to_json(const SymFun& f) {
    json terms = json::array();
    for (const auto& [lam, c] : f.coeffs()) terms.push_back(json{{"coeff", ratfun_to_json(c)}, {"index", partition_json(lam)}});
    return json{{"format_version", kFormatVersion},
                {"kind", "symfun"},
                {"basis", basis_name(f.basis())},
                {"variables", variables_json(f.ctx())},
                {"terms", terms}};
}

SymFun symfun_from_json(const json& j) {
    if (!j.is_object()) malformed("expected an object");
    if (j.value("kind", "") != "symfun") malformed("kind must be \"symfun\"");
    if (j.value("format_version", 0) != kFormatVersion) malformed("unsupported format_version");
    for (const char* key : {"basis", "variables", "terms"})
        if (!j.contains(key)) malformed(std::string("missing ") + key);
    if (!j["basis"].is_string()) malformed("basis must be a string");
    const FieldCtx ctx = field_from_variables(j["variables"]);
    SymFun f(ctx, parse_basis(j["basis"].get<std::string>()));
    if (!j["terms"].is_array()) malformed("terms must be an array");
    for (const auto& jt : j["terms"]) {
        if (!jt.is_object() || !jt.contains("coeff") || !jt.contains("index")) malformed("term needs coeff and index");
        f.add_term(partition_from(jt["index"], "index"), ratfun_from_json(jt["coeff"], ctx));
    }
    return f;
}

json pieri_to_json(const PieriExpansion& ex) {
    json terms = json::array();
    for (const auto& t : ex.terms)
        terms.push_back(json{{"coeff", ratfun_to_json(t.coeff)}, {"theta", t.theta.entries}, {"Q", partition_json(t.index)}});
    json discarded = json::array();
    for (const auto& d : ex.discarded) discarded.push_back(discarded_to_json(d));
    return json{{"format_version", kFormatVersion},
                {"kind", "pieri"},
                {"lambda", partition_json(ex.lambda)},
                {"row", ex.r},
                {"variables", json::array({"q", "t"})},
                {"terms", terms},
                {"discarded", discarded}};
}

json ortho_to_json(const OrthoResult& r) {
    return json{{"kind", "ortho"},
                {"n", r.beta.size()},
                {"beta", r.beta},
                {"gamma", r.gamma},
                {"status", r.pass ? "pass" : "fail"},
                {"fg", r.fg.to_string()},
                {"gf", r.gf.to_string()}};
}

std::string expansion_to_text(const Expansion& ex) {
    std::vector<std::pair<RatFun, std::string>> terms;
    for (const auto& t : ex.terms) terms.emplace_back(t.coeff, term_body_text(t));
    return join_text(terms);
}

std::string symfun_to_text(const SymFun& f) {
    std::vector<std::pair<RatFun, std::string>> terms;
    for (const auto& [lam, c] : f.coeffs())
        terms.emplace_back(c, lam.empty() ? "" : std::string(basis_name(f.basis())) + "[" + lam.to_string() + "]");
    return join_text(terms);
}

std::string pieri_to_text(const PieriExpansion& ex) {
    std::vector<std::pair<RatFun, std::string>> terms;
    for (const auto& t : ex.terms) terms.emplace_back(t.coeff, t.index.empty() ? "" : "Q[" + t.index.to_string() + "]");
    return join_text(terms);
}

std::string ratfun_to_latex(const RatFun& f) {
    if (f.is_zero()) return "0";
    bool neg = false;
    std::string s = latex_abs(f, false, neg);
    return neg ? "-" + s : s;
}

std::string expansion_to_latex(const Expansion& ex) {
    std::vector<std::pair<RatFun, std::string>> terms;
    for (const auto& t : ex.terms) terms.emplace_back(t.coeff, term_body_latex(t));
    return latex_join(terms);
}

std::string symfun_to_latex(const SymFun& f) {
    std::vector<std::pair<RatFun, std::string>> terms;
    for (const auto& [lam, c] : f.coeffs())
        terms.emplace_back(c, lam.empty() ? "" : latex_shape(basis_name(f.basis()), lam));
    return latex_join(terms);
}

std::string pieri_to_latex(const PieriExpansion& ex) {
    std::vector<std::pair<RatFun, std::string>> terms;
    for (const auto& t : ex.terms) terms.emplace_back(t.coeff, t.index.empty() ? "" : latex_shape("Q", t.index));
    return latex_join(terms);
}

} // namespace pforge
