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

#include "pforge/poly.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <stdexcept>

namespace pforge {

namespace {

std::int16_t checked_exp(int v) {
    if (v > std::numeric_limits<std::int16_t>::max() || v < std::numeric_limits<std::int16_t>::min())
        throw std::overflow_error("monomial exponent overflow");
    return static_cast<std::int16_t>(v);
}

bool term_greater(const Poly::Term& a, const Poly::Term& b) { return a.exps > b.exps; }

} // namespace

Exponents add_exponents(const Exponents& a, const Exponents& b) {
    Exponents r{};
    for (std::size_t i = 0; i < kMaxVars; ++i) r[i] = checked_exp(int(a[i]) + int(b[i]));
    return r;
}

Exponents sub_exponents(const Exponents& a, const Exponents& b) {
    Exponents r{};
    for (std::size_t i = 0; i < kMaxVars; ++i) r[i] = checked_exp(int(a[i]) - int(b[i]));
    return r;
}

Exponents min_exponents(const Exponents& a, const Exponents& b) {
    Exponents r{};
    for (std::size_t i = 0; i < kMaxVars; ++i) r[i] = std::min(a[i], b[i]);
    return r;
}

bool exponents_le(const Exponents& a, const Exponents& b) {
    for (std::size_t i = 0; i < kMaxVars; ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Poly Poly::constant(std::size_t nvars, const mpz_class& c) {
    Poly p(nvars);
    if (c != 0) p.terms_.push_back({Exponents{}, c});
    return p;
}

Poly Poly::monomial(std::size_t nvars, const Exponents& e, const mpz_class& c) {
    Poly p(nvars);
    if (c != 0) p.terms_.push_back({e, c});
    return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t var, int power) {
    if (var >= nvars) throw std::out_of_range("variable index out of range");
    Exponents e{};
    e[var] = checked_exp(power);
    return monomial(nvars, e);
}

Poly Poly::from_terms(std::size_t nvars, std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), term_greater);
    Poly p(nvars);
    p.terms_.reserve(terms.size());
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().exps == t.exps) {
            p.terms_.back().coeff += t.coeff;
        } else {
            if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
            p.terms_.push_back(std::move(t));
        }
    }
    if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].exps == Exponents{});
}

bool Poly::is_one() const {
    return terms_.size() == 1 && terms_[0].exps == Exponents{} && terms_[0].coeff == 1;
}

bool Poly::is_polynomial() const {
    for (const auto& t : terms_)
        for (auto e : t.exps)
            if (e < 0) return false;
    return true;
}

int Poly::degree(std::size_t var) const {
    int d = std::numeric_limits<int>::min();
    for (const auto& t : terms_) d = std::max(d, int(t.exps[var]));
    return terms_.empty() ? 0 : d;
}

int Poly::min_degree(std::size_t var) const {
    int d = std::numeric_limits<int>::max();
    for (const auto& t : terms_) d = std::min(d, int(t.exps[var]));
    return terms_.empty() ? 0 : d;
}

Exponents Poly::min_exponents() const {
    if (terms_.empty()) return Exponents{};
    Exponents m = terms_[0].exps;
    for (const auto& t : terms_) m = pforge::min_exponents(m, t.exps);
    return m;
}

Exponents Poly::max_exponents() const {
    if (terms_.empty()) return Exponents{};
    Exponents m = terms_[0].exps;
    for (const auto& t : terms_)
        for (std::size_t i = 0; i < kMaxVars; ++i) m[i] = std::max(m[i], t.exps[i]);
    return m;
}

unsigned Poly::support_mask() const {
    unsigned mask = 0;
    for (const auto& t : terms_)
        for (std::size_t i = 0; i < nvars_; ++i)
            if (t.exps[i] != 0) mask |= 1u << i;
    return mask;
}

mpz_class Poly::content() const {
    mpz_class g = 0;
    for (const auto& t : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

Poly Poly::shifted(const Exponents& e) const {
    Poly r(nvars_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({add_exponents(t.exps, e), t.coeff});
    return r;
}

Poly Poly::scaled(const mpz_class& c) const {
    if (c == 0) return Poly(nvars_);
    Poly r(*this);
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
}

Poly Poly::divided_exactly(const mpz_class& c) const {
    Poly r(*this);
    for (auto& t : r.terms_) mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), c.get_mpz_t());
    return r;
}

std::optional<Poly> Poly::divide_exact(const Poly& b) const {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (is_zero()) return Poly(nvars_);
    if (b.is_constant()) {
        const mpz_class& c = b.terms_[0].coeff;
        for (const auto& t : terms_)
            if (!mpz_divisible_p(t.coeff.get_mpz_t(), c.get_mpz_t())) return std::nullopt;
        return divided_exactly(c);
    }
    // Quick degree screen before the division loop.
    Exponents amax = max_exponents(), bmax = b.max_exponents();
    Exponents amin = min_exponents(), bmin = b.min_exponents();
    for (std::size_t i = 0; i < nvars_; ++i) {
        if (bmax[i] - bmin[i] > amax[i] - amin[i]) return std::nullopt;
        if (bmin[i] > amin[i]) return std::nullopt;
    }
    if (b.is_monomial()) {
        const auto& bt = b.terms_[0];
        Poly r(nvars_);
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) {
            if (!mpz_divisible_p(t.coeff.get_mpz_t(), bt.coeff.get_mpz_t())) return std::nullopt;
            mpz_class c;
            mpz_divexact(c.get_mpz_t(), t.coeff.get_mpz_t(), bt.coeff.get_mpz_t());
            r.terms_.push_back({sub_exponents(t.exps, bt.exps), std::move(c)});
        }
        return r;
    }

    std::map<Exponents, mpz_class, std::greater<Exponents>> rem;
    for (const auto& t : terms_) rem.emplace(t.exps, t.coeff);
    const Term& lb = b.terms_.front();
    std::vector<Term> quot;
    mpz_class qc, prod;
    while (!rem.empty()) {
        auto it = rem.begin();
        if (!exponents_le(lb.exps, it->first)) return std::nullopt;
        if (!mpz_divisible_p(it->second.get_mpz_t(), lb.coeff.get_mpz_t())) return std::nullopt;
        mpz_divexact(qc.get_mpz_t(), it->second.get_mpz_t(), lb.coeff.get_mpz_t());
        Exponents qe = sub_exponents(it->first, lb.exps);
        rem.erase(it);
        for (std::size_t j = 1; j < b.terms_.size(); ++j) {
            const Term& bt = b.terms_[j];
            Exponents e = add_exponents(qe, bt.exps);
            prod = qc * bt.coeff;
            auto [pos, inserted] = rem.try_emplace(e);
            pos->second -= prod;
            if (pos->second == 0) rem.erase(pos);
        }
        quot.push_back({qe, qc});
    }
    Poly q(nvars_);
    q.terms_ = std::move(quot);
    return q;
}

std::vector<std::pair<int, Poly>> Poly::coefficients_in(std::size_t var) const {
    std::map<int, std::vector<Term>, std::greater<int>> groups;
    for (const auto& t : terms_) {
        Term c = t;
        int d = c.exps[var];
        c.exps[var] = 0;
        groups[d].push_back(std::move(c));
    }
    std::vector<std::pair<int, Poly>> out;
    out.reserve(groups.size());
    for (auto& [d, ts] : groups) {
        // Zeroing one exponent keeps the lex order within a group.
        Poly p(nvars_);
        p.terms_ = std::move(ts);
        out.emplace_back(d, std::move(p));
    }
    return out;
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

Poly Poly::merge(const Poly& a, const Poly& b, bool subtract) {
    Poly r(std::max(a.nvars_, b.nvars_));
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
        if (j == b.terms_.size() || (i < a.terms_.size() && a.terms_[i].exps > b.terms_[j].exps)) {
            r.terms_.push_back(a.terms_[i++]);
        } else if (i == a.terms_.size() || b.terms_[j].exps > a.terms_[i].exps) {
            r.terms_.push_back(b.terms_[j++]);
            if (subtract) r.terms_.back().coeff = -r.terms_.back().coeff;
        } else {
            mpz_class c = a.terms_[i].coeff;
            if (subtract)
                c -= b.terms_[j].coeff;
            else
                c += b.terms_[j].coeff;
            if (c != 0) r.terms_.push_back({a.terms_[i].exps, std::move(c)});
            ++i;
            ++j;
        }
    }
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.is_zero()) return *this;
    *this = merge(*this, o, false);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.is_zero()) return *this;
    *this = merge(*this, o, true);
    return *this;
}

Poly& Poly::operator*=(const Poly& o) {
    *this = *this * o;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    std::size_t nv = std::max(a.nvars_, b.nvars_);
    if (a.is_zero() || b.is_zero()) return Poly(nv);
    if (a.is_monomial() || b.is_monomial()) {
        const Poly& m = a.is_monomial() ? a : b;
        const Poly& p = a.is_monomial() ? b : a;
        const auto& mt = m.terms_[0];
        Poly r(nv);
        r.terms_.reserve(p.terms_.size());
        for (const auto& t : p.terms_) r.terms_.push_back({add_exponents(t.exps, mt.exps), t.coeff * mt.coeff});
        return r;
    }
    std::vector<Poly::Term> out;
    out.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& x : a.terms_)
        for (const auto& y : b.terms_) out.push_back({add_exponents(x.exps, y.exps), x.coeff * y.coeff});
    return Poly::from_terms(nv, std::move(out));
}

bool operator==(const Poly& a, const Poly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (a.terms_[i].exps != b.terms_[i].exps || a.terms_[i].coeff != b.terms_[i].coeff) return false;
    return true;
}

std::size_t Poly::hash() const {
    std::size_t h = 1469598103934665603ull;
    auto mix = [&h](std::size_t v) { h = (h ^ v) * 1099511628211ull; };
    for (const auto& t : terms_) {
        for (auto e : t.exps) mix(static_cast<std::size_t>(static_cast<std::uint16_t>(e)));
        mix(static_cast<std::size_t>(mpz_get_si(t.coeff.get_mpz_t())));
    }
    return h;
}

} // namespace pforge
