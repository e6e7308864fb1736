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

#include "pforge/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <memory>
#include <mutex>
#include <unordered_map>

#include "pforge/errors.hpp"

namespace pforge {

namespace {

struct OracleWeight {
    std::map<Partition, SymFun> P_m;
    std::map<Partition, RatFun> norm;
    std::map<Partition, SymFun> Q_m;
};

// <f, g> on p-coordinates with the diagonal weights supplied by `diag`.
RatFun inner_p(const SymFun& f, const SymFun& g, const std::map<Partition, RatFun>& diag) {
    RatFun acc(f.ctx());
    const auto& small = f.coeffs().size() <= g.coeffs().size() ? f.coeffs() : g.coeffs();
    const auto& large = f.coeffs().size() <= g.coeffs().size() ? g.coeffs() : f.coeffs();
    for (const auto& [lam, c] : small) {
        auto it = large.find(lam);
        if (it != large.end()) acc += c * it->second * diag.at(lam);
    }
    return acc;
}

OracleWeight build_weight(int n, ScalarMode mode) {
    const FieldCtx& ctx = oracle_field(mode);
    std::vector<Partition> parts = partitions_of(n);
    std::reverse(parts.begin(), parts.end());  // ascending lex extends dominance

    std::map<Partition, RatFun> diag;
    for (const auto& lam : parts) {
        PowerScalarDiag d = power_scalar_diag(ctx, lam);
        diag.emplace(lam, (mode == ScalarMode::QT ? d.qt_factor : d.alpha_factor).scaled(mpq_class(d.z)));
    }

    OracleWeight w;
    std::map<Partition, SymFun> P_p;
    for (const auto& lam : parts) {
        SymFun pm = SymFun::element(ctx, Basis::M, lam);
        const SymFun& m_p = element_in_p(ctx, Basis::M, lam);
        SymFun pp = m_p;
        for (const auto& [mu, mu_p] : P_p) {
            if (dominance_leq(mu, lam) != Dominance::Leq) continue;
            RatFun coef = inner_p(m_p, mu_p, diag) / w.norm.at(mu);
            if (coef.is_zero()) continue;
            pm -= w.P_m.at(mu).scaled(coef);
            pp -= mu_p.scaled(coef);
        }
        RatFun norm = inner_p(pp, pp, diag);
        if (norm.is_zero()) throw std::logic_error("Gram-Schmidt: isotropic vector at " + lam.to_string());
        w.Q_m.emplace(lam, pm.scaled(norm.inverse()));
        w.P_m.emplace(lam, std::move(pm));
        w.norm.emplace(lam, std::move(norm));
        P_p.emplace(lam, std::move(pp));
    }
    return w;
}

const OracleWeight& oracle_weight(int n, ScalarMode mode) {
    static std::mutex mu;
    static std::unordered_map<int, std::unique_ptr<OracleWeight>> cache[2];
    auto& slot = cache[mode == ScalarMode::QT ? 0 : 1];
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = slot.find(n);
        if (it != slot.end()) return *it->second;
    }
    auto w = std::make_unique<OracleWeight>(build_weight(n, mode));
    std::lock_guard<std::mutex> lock(mu);
    auto [it, inserted] = slot.try_emplace(n, std::move(w));
    return *it->second;
}

} // namespace

const FieldCtx& oracle_field(ScalarMode mode) {
    static const FieldCtx qt = FieldCtx::qt();
    static const FieldCtx al = FieldCtx::alpha();
    return mode == ScalarMode::QT ? qt : al;
}

const SymFun& gram_schmidt_P(const Partition& lambda, ScalarMode mode) {
    return oracle_weight(lambda.weight(), mode).P_m.at(lambda);
}

SymFun Q_from_P(const SymFun& P, ScalarMode mode) {
    return P.scaled(scalar(P, P, mode).inverse());
}

const SymFun& oracle_Q(const Partition& lambda, ScalarMode mode) {
    return oracle_weight(lambda.weight(), mode).Q_m.at(lambda);
}

const RatFun& oracle_norm(const Partition& lambda, ScalarMode mode) {
    return oracle_weight(lambda.weight(), mode).norm.at(lambda);
}

SymFun specialize_qt(const SymFun& f, const RatFun& a, const RatFun& b) {
    const FieldCtx& ctx = f.ctx();
    std::map<std::string, RatFun> bind{{"q", a}, {"t", b}};
    SymFun r(ctx, f.basis());
    for (const auto& [lam, c] : f.coeffs()) r.add_term(lam, substitute(c, bind, ctx));
    return r;
}

SymFun schur_jacobi_trudi(const Partition& lambda) {
    const FieldCtx ctx = FieldCtx::generic({});
    const int top = lambda.weight();
    // k h_k = sum_{i=1}^k p_i h_{k-i}
    std::vector<SymFun> h{SymFun::constant(ctx, Basis::P, RatFun::constant(ctx, 1))};
    for (int k = 1; k <= top; ++k) {
        SymFun acc(ctx, Basis::P);
        for (int i = 1; i <= k; ++i) acc += mul(SymFun::element(ctx, Basis::P, Partition{i}), h[k - i]);
        h.push_back(acc.scaled(RatFun::constant(ctx, mpq_class(1, k))));
    }
    const std::size_t l = lambda.length();
    auto entry = [&](std::size_t i, std::size_t j) {
        int k = lambda.part(i + 1) - static_cast<int>(i) + static_cast<int>(j);
        return k < 0 ? SymFun(ctx, Basis::P) : h[k];
    };
    // Laplace expansion along the first remaining row.
    std::function<SymFun(std::size_t, std::vector<std::size_t>&)> laplace =
        [&](std::size_t row, std::vector<std::size_t>& cols) -> SymFun {
        if (row == l) return SymFun::constant(ctx, Basis::P, RatFun::constant(ctx, 1));
        SymFun acc(ctx, Basis::P);
        for (std::size_t c = 0; c < cols.size(); ++c) {
            SymFun e = entry(row, cols[c]);
            if (e.is_zero()) continue;
            std::size_t col = cols[c];
            cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(c));
            SymFun term = mul(e, laplace(row + 1, cols));
            cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(c), col);
            if (c % 2) acc -= term;
            else acc += term;
        }
        return acc;
    };
    std::vector<std::size_t> cols(l);
    for (std::size_t j = 0; j < l; ++j) cols[j] = j;
    return convert(laplace(0, cols), Basis::M);
}

SymFun reassemble(const Expansion& ex) {
    const ScalarMode sm = is_jack(ex.mode) ? ScalarMode::Alpha : ScalarMode::QT;
    const FieldCtx& ctx = oracle_field(sm);
    SymFun products(ctx, is_e_mode(ex.mode) ? Basis::E : Basis::G);
    SymFun acc(ctx, Basis::M);
    for (const auto& term : ex.terms) {
        switch (term.kind) {
        case TermKind::GProduct:
        case TermKind::EProduct: products.add_term(term.factors, term.coeff); break;
        case TermKind::QxRow:
        case TermKind::PxE: {
            const SymFun& shape = term.kind == TermKind::QxRow ? oracle_Q(term.shape, sm) : gram_schmidt_P(term.shape, sm);
            SymFun row = SymFun::element(ctx, term.kind == TermKind::QxRow ? Basis::G : Basis::E, term.factors);
            acc += convert(mul(row, shape), Basis::M).scaled(term.coeff);
            break;
        }
        }
    }
    acc += convert(products, Basis::M);
    return acc;
}

VerificationReport verify_expansion(const Expansion& ex) {
    auto start = std::chrono::steady_clock::now();
    const ScalarMode sm = is_jack(ex.mode) ? ScalarMode::Alpha : ScalarMode::QT;
    const SymFun& target = is_e_mode(ex.mode) ? gram_schmidt_P(ex.lambda, sm) : oracle_Q(ex.lambda, sm);
    VerificationReport rep{ex.lambda, mode_name(ex.mode), false, ex.discarded, reassemble(ex) - target, 0, ""};
    rep.pass = rep.residual.is_zero();
    if (!rep.pass) rep.detail = "expansion differs from oracle";
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

VerificationReport verify_expansion(const Partition& lambda, Mode mode, Strategy strategy) {
    auto start = std::chrono::steady_clock::now();
    VerificationReport rep = verify_expansion(expand_full(lambda, mode, strategy));
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

VerificationReport degeneration_checks(const Partition& lambda) {
    auto start = std::chrono::steady_clock::now();
    const FieldCtx& ctx = oracle_field(ScalarMode::QT);
    const RatFun q = RatFun::var(ctx, "q"), t = RatFun::var(ctx, "t");
    VerificationReport rep{lambda, "degeneration", true, {}, SymFun(ctx, Basis::M), 0, ""};

    SymFun at_qt = specialize_qt(gram_schmidt_P(lambda, ScalarMode::QT), t, t);
    SymFun schur = schur_jacobi_trudi(lambda);
    for (const auto& [mu, c] : at_qt.coeffs()) {
        if (!c.is_constant() || c.constant_value().get_den() != 1) {
            rep.pass = false;
            rep.detail = "schur: non-integer coefficient at m[" + mu.to_string() + "]";
            break;
        }
    }
    if (rep.pass) {
        SymFun diff = at_qt;
        for (const auto& [mu, c] : schur.coeffs()) diff.add_term(mu, RatFun::constant(ctx, -c.constant_value()));
        if (!diff.is_zero()) {
            rep.pass = false;
            rep.detail = "schur: P at q=t differs from Jacobi-Trudi";
            rep.residual = diff;
        }
    }
    if (rep.pass) {
        SymFun lhs = convert(omega_qt(oracle_Q(lambda, ScalarMode::QT)), Basis::M);
        SymFun rhs = specialize_qt(gram_schmidt_P(lambda.conjugate(), ScalarMode::QT), t, q);
        SymFun diff = lhs - rhs;
        if (!diff.is_zero()) {
            rep.pass = false;
            rep.detail = "omega: omega(Q_lambda(q,t)) != P_lambda'(t,q)";
            rep.residual = diff;
        }
    }
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

} // namespace pforge
