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

#include "pforge/symfun.hpp"

#include <functional>
#include <memory>
#include <mutex>
#include <sstream>
#include <unordered_map>

#include "pforge/errors.hpp"
#include "pforge/linalg.hpp"

namespace pforge {

const char* basis_name(Basis b) {
    switch (b) {
    case Basis::P: return "p";
    case Basis::M: return "m";
    case Basis::E: return "e";
    case Basis::G: return "g";
    }
    return "?";
}

Basis parse_basis(const std::string& s) {
    if (s == "p") return Basis::P;
    if (s == "m") return Basis::M;
    if (s == "e") return Basis::E;
    if (s == "g") return Basis::G;
    throw ParseError("unknown basis '" + s + "'");
}

// ---------------------------------------------------------------------------
// SymFun value type

SymFun SymFun::element(const FieldCtx& ctx, Basis basis, const Partition& index) {
    SymFun f(ctx, basis);
    f.coeffs_.emplace(index, RatFun::constant(ctx, 1));
    return f;
}

SymFun SymFun::constant(const FieldCtx& ctx, Basis basis, const RatFun& c) {
    SymFun f(ctx, basis);
    f.add_term(Partition(), c);
    return f;
}

RatFun SymFun::coeff(const Partition& index) const {
    auto it = coeffs_.find(index);
    return it == coeffs_.end() ? RatFun(ctx_) : it->second;
}

int SymFun::degree() const {
    int d = -1;
    for (const auto& [lam, c] : coeffs_) d = std::max(d, lam.weight());
    return d;
}

void SymFun::add_term(const Partition& index, const RatFun& c) {
    if (!(c.ctx() == ctx_)) throw ContextError("coefficient from a different field");
    if (c.is_zero()) return;
    auto [it, inserted] = coeffs_.try_emplace(index, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

void SymFun::check_compatible(const SymFun& o) const {
    if (!(ctx_ == o.ctx_)) throw ContextError("symmetric functions over different fields");
    if (basis_ != o.basis_) throw DomainError("symmetric functions in different bases");
}

SymFun SymFun::operator-() const {
    SymFun r(ctx_, basis_);
    for (const auto& [lam, c] : coeffs_) r.coeffs_.emplace(lam, -c);
    return r;
}

SymFun& SymFun::operator+=(const SymFun& o) {
    check_compatible(o);
    for (const auto& [lam, c] : o.coeffs_) add_term(lam, c);
    return *this;
}

SymFun& SymFun::operator-=(const SymFun& o) {
    check_compatible(o);
    for (const auto& [lam, c] : o.coeffs_) add_term(lam, -c);
    return *this;
}

SymFun SymFun::scaled(const RatFun& c) const {
    SymFun r(ctx_, basis_);
    if (c.is_zero()) return r;
    for (const auto& [lam, x] : coeffs_) r.coeffs_.emplace(lam, x * c);
    return r;
}

bool operator==(const SymFun& a, const SymFun& b) {
    return a.ctx_ == b.ctx_ && a.basis_ == b.basis_ && a.coeffs_ == b.coeffs_;
}

std::string SymFun::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [lam, c] : coeffs_) {
        os << (first ? "" : " + ") << "(" << c.to_string() << ")*" << basis_name(basis_) << "[" << lam.to_string()
           << "]";
        first = false;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Caches. Values are computed outside the lock; a racing insert keeps the
// first value, and both are identical by construction.

namespace {

std::string ctx_key(const FieldCtx& ctx) {
    std::string k = std::to_string(static_cast<int>(ctx.family()));
    for (const auto& n : ctx.names()) k += "|" + n;
    return k;
}

template <typename T>
class Cache {
public:
    template <typename F>
    const T& get(const std::string& key, F&& make) {
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = map_.find(key);
            if (it != map_.end()) return *it->second;
        }
        auto value = std::make_unique<T>(make());
        std::lock_guard<std::mutex> lock(mu_);
        auto [it, inserted] = map_.try_emplace(key, std::move(value));
        return *it->second;
    }

private:
    std::mutex mu_;
    std::unordered_map<std::string, std::unique_ptr<T>> map_;
};

struct WeightTables {
    std::vector<Partition> parts;
    std::map<Partition, std::size_t> index;
    QMatrix p_to_m;  // p_{parts[i]} = sum_j p_to_m[i][j] m_{parts[j]}
    QMatrix m_to_p;
    QMatrix p_to_e;  // p_{parts[i]} = sum_j p_to_e[i][j] e_{parts[j]}
};

// Number of ways to distribute the parts of lambda over the slots of mu so
// that slot j receives total mu_j: the coefficient of m_mu in p_lambda.
long count_fillings(const Partition& lambda, const Partition& mu) {
    std::vector<int> cap = mu.parts();
    const auto& parts = lambda.parts();
    std::function<long(std::size_t)> rec = [&](std::size_t i) -> long {
        if (i == parts.size()) {
            for (int c : cap)
                if (c != 0) return 0;
            return 1;
        }
        long total = 0;
        for (auto& c : cap) {
            if (c < parts[i]) continue;
            c -= parts[i];
            total += rec(i + 1);
            c += parts[i];
        }
        return total;
    };
    return rec(0);
}

const WeightTables& weight_tables(int n) {
    static Cache<WeightTables> cache;
    return cache.get(std::to_string(n), [n] {
        WeightTables w;
        w.parts = partitions_of(n);
        for (std::size_t i = 0; i < w.parts.size(); ++i) w.index[w.parts[i]] = i;
        const std::size_t k = w.parts.size();
        w.p_to_m.assign(k, std::vector<mpq_class>(k, 0));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) w.p_to_m[i][j] = count_fillings(w.parts[i], w.parts[j]);
        w.m_to_p = inverse(w.p_to_m);
        // Elementary products in p-coordinates, over Q.
        FieldCtx plain = FieldCtx::generic({});
        QMatrix e_to_p(k, std::vector<mpq_class>(k, 0));
        for (std::size_t i = 0; i < k; ++i) {
            SymFun e = SymFun::constant(plain, Basis::P, RatFun::constant(plain, 1));
            for (int part : w.parts[i].parts()) e = mul(e, e_in_p(plain, part));
            for (const auto& [lam, c] : e.coeffs()) e_to_p[i][w.index.at(lam)] = c.constant_value();
        }
        w.p_to_e = inverse(e_to_p);
        return w;
    });
}

struct GTables {
    RatMatrix p_to_g;  // p_{parts[i]} = sum_j p_to_g[i][j] g_{parts[j]}
};

const GTables& g_tables(const FieldCtx& ctx, int n) {
    static Cache<GTables> cache;
    return cache.get(ctx_key(ctx) + "#" + std::to_string(n), [&ctx, n] {
        const WeightTables& w = weight_tables(n);
        const std::size_t k = w.parts.size();
        RatMatrix g_to_p(k, std::vector<RatFun>(k, RatFun(ctx)));
        for (std::size_t i = 0; i < k; ++i)
            for (const auto& [lam, c] : element_in_p(ctx, Basis::G, w.parts[i]).coeffs())
                g_to_p[i][w.index.at(lam)] = c;
        return GTables{inverse(ctx, g_to_p)};
    });
}

Partition merge_parts(const Partition& a, const Partition& b) {
    std::vector<int> parts = a.parts();
    parts.insert(parts.end(), b.parts().begin(), b.parts().end());
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(std::move(parts));
}

RatFun g_weight(const FieldCtx& ctx, int m) {
    switch (ctx.family()) {
    case Family::QT: {
        RatFun one = RatFun::constant(ctx, 1);
        return (one - RatFun::var(ctx, "t", m)) / (one - RatFun::var(ctx, "q", m));
    }
    case Family::Alpha: return RatFun::var(ctx, "alpha", -1);
    case Family::Generic: break;
    }
    throw ContextError("the g-basis needs a Q(q,t) or Q(alpha) field");
}

SymFun to_p(const SymFun& f) {
    if (f.basis() == Basis::P) return f;
    SymFun r(f.ctx(), Basis::P);
    for (const auto& [mu, c] : f.coeffs()) r += element_in_p(f.ctx(), f.basis(), mu).scaled(c);
    return r;
}

} // namespace

// ---------------------------------------------------------------------------

SymFun g_in_p(const FieldCtx& ctx, int k) {
    if (k < 0) return SymFun(ctx, Basis::P);
    if (k == 0) return SymFun::constant(ctx, Basis::P, RatFun::constant(ctx, 1));
    static Cache<SymFun> cache;
    return cache.get(ctx_key(ctx) + "#" + std::to_string(k), [&ctx, k] {
        SymFun acc(ctx, Basis::P);
        for (int m = 1; m <= k; ++m) {
            SymFun term = mul(SymFun::element(ctx, Basis::P, Partition{m}), g_in_p(ctx, k - m));
            acc += term.scaled(g_weight(ctx, m));
        }
        return acc.scaled(RatFun::constant(ctx, mpq_class(1, k)));
    });
}

SymFun e_in_p(const FieldCtx& ctx, int k) {
    if (k < 0) return SymFun(ctx, Basis::P);
    SymFun e = SymFun::constant(ctx, Basis::P, RatFun::constant(ctx, 1));
    if (k == 0) return e;
    std::vector<SymFun> es{e};
    for (int j = 1; j <= k; ++j) {
        SymFun acc(ctx, Basis::P);
        for (int i = 1; i <= j; ++i) {
            SymFun term = mul(SymFun::element(ctx, Basis::P, Partition{i}), es[j - i]);
            acc += (i % 2 == 1) ? term : -term;
        }
        es.push_back(acc.scaled(RatFun::constant(ctx, mpq_class(1, j))));
    }
    return es.back();
}

const SymFun& element_in_p(const FieldCtx& ctx, Basis basis, const Partition& mu) {
    static Cache<SymFun> cache;
    std::string key = ctx_key(ctx) + "#" + basis_name(basis) + "#" + mu.to_string();
    return cache.get(key, [&ctx, basis, &mu] {
        SymFun r(ctx, Basis::P);
        switch (basis) {
        case Basis::P: r = SymFun::element(ctx, Basis::P, mu); break;
        case Basis::M: {
            const WeightTables& w = weight_tables(mu.weight());
            const auto& row = w.m_to_p[w.index.at(mu)];
            for (std::size_t j = 0; j < row.size(); ++j) r.add_term(w.parts[j], RatFun::constant(ctx, row[j]));
            break;
        }
        case Basis::E:
        case Basis::G: {
            r = SymFun::constant(ctx, Basis::P, RatFun::constant(ctx, 1));
            for (int part : mu.parts())
                r = mul(r, basis == Basis::E ? e_in_p(ctx, part) : g_in_p(ctx, part));
            break;
        }
        }
        return r;
    });
}

SymFun mul(const SymFun& f, const SymFun& g) {
    if (!(f.ctx() == g.ctx())) throw ContextError("symmetric functions over different fields");
    SymFun a = to_p(f), b = to_p(g);
    SymFun r(f.ctx(), Basis::P);
    for (const auto& [la, ca] : a.coeffs())
        for (const auto& [lb, cb] : b.coeffs()) r.add_term(merge_parts(la, lb), ca * cb);
    return r;
}

SymFun convert(const SymFun& f, Basis target) {
    if (f.basis() == target) return f;
    SymFun p = to_p(f);
    if (target == Basis::P) return p;

    // Group p-coordinates by weight, then apply the inverse transition matrix.
    std::map<int, std::vector<std::pair<std::size_t, const RatFun*>>> by_weight;
    for (const auto& [lam, c] : p.coeffs()) {
        const WeightTables& w = weight_tables(lam.weight());
        by_weight[lam.weight()].emplace_back(w.index.at(lam), &c);
    }
    SymFun r(f.ctx(), target);
    const FieldCtx& ctx = f.ctx();
    for (const auto& [n, entries] : by_weight) {
        const WeightTables& w = weight_tables(n);
        const std::size_t k = w.parts.size();
        for (std::size_t j = 0; j < k; ++j) {
            RatFun acc(ctx);
            for (const auto& [i, c] : entries) {
                switch (target) {
                case Basis::M:
                    if (w.p_to_m[i][j] != 0) acc += c->scaled(w.p_to_m[i][j]);
                    break;
                case Basis::E:
                    if (w.p_to_e[i][j] != 0) acc += c->scaled(w.p_to_e[i][j]);
                    break;
                case Basis::G: {
                    const RatFun& x = g_tables(ctx, n).p_to_g[i][j];
                    if (!x.is_zero()) acc += *c * x;
                    break;
                }
                case Basis::P: break;
                }
            }
            r.add_term(w.parts[j], acc);
        }
    }
    return r;
}

mpz_class z_lambda(const Partition& lambda) {
    mpz_class z = 1;
    auto m = lambda.multiplicities();
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (int k = 0; k < m[i]; ++k) z *= static_cast<unsigned long>(i + 1);
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(m[i]));
        z *= f;
    }
    return z;
}

PowerScalarDiag power_scalar_diag(const FieldCtx& ctx, const Partition& lambda) {
    PowerScalarDiag d{lambda, z_lambda(lambda), RatFun::constant(ctx, 1), RatFun::constant(ctx, 1)};
    if (ctx.index_of("q") && ctx.index_of("t")) {
        RatFun one = RatFun::constant(ctx, 1);
        for (int part : lambda.parts())
            d.qt_factor *= (one - RatFun::var(ctx, "q", part)) / (one - RatFun::var(ctx, "t", part));
    }
    if (ctx.index_of("alpha")) d.alpha_factor = RatFun::var(ctx, "alpha", static_cast<int>(lambda.length()));
    return d;
}

RatFun scalar(const SymFun& f, const SymFun& g, ScalarMode mode) {
    if (!(f.ctx() == g.ctx())) throw ContextError("symmetric functions over different fields");
    const FieldCtx& ctx = f.ctx();
    if (mode == ScalarMode::QT && !(ctx.index_of("q") && ctx.index_of("t")))
        throw ContextError("qt scalar product needs q and t");
    if (mode == ScalarMode::Alpha && !ctx.index_of("alpha")) throw ContextError("alpha scalar product needs alpha");
    SymFun a = to_p(f), b = to_p(g);
    RatFun acc(ctx);
    for (const auto& [lam, ca] : a.coeffs()) {
        auto it = b.coeffs().find(lam);
        if (it == b.coeffs().end()) continue;
        PowerScalarDiag d = power_scalar_diag(ctx, lam);
        const RatFun& w = mode == ScalarMode::QT ? d.qt_factor : d.alpha_factor;
        acc += (ca * it->second * w).scaled(mpq_class(d.z));
    }
    return acc;
}

SymFun omega(const SymFun& f, const RatFun& a, const RatFun& b) {
    SymFun p = to_p(f);
    const FieldCtx& ctx = f.ctx();
    RatFun one = RatFun::constant(ctx, 1);
    std::map<int, RatFun> factor;
    auto fac = [&](int r) -> const RatFun& {
        auto it = factor.find(r);
        if (it == factor.end()) {
            RatFun v = (one - a.pow(r)) / (one - b.pow(r));
            if (r % 2 == 0) v = -v;
            it = factor.emplace(r, v).first;
        }
        return it->second;
    };
    SymFun r(ctx, Basis::P);
    for (const auto& [lam, c] : p.coeffs()) {
        RatFun x = c;
        for (int part : lam.parts()) x *= fac(part);
        r.add_term(lam, x);
    }
    return r;
}

SymFun omega_qt(const SymFun& f) {
    return omega(f, RatFun::var(f.ctx(), "q"), RatFun::var(f.ctx(), "t"));
}

} // namespace pforge
