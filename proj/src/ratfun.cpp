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

#include "pforge/ratfun.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "pforge/errors.hpp"
#include "pforge/poly_gcd.hpp"

namespace pforge {

namespace {

Poly exact(const Poly& a, const Poly& b) {
    if (b.is_one()) return a;
    auto q = a.divide_exact(b);
    if (!q) throw std::logic_error("inexact division by a gcd");
    return *std::move(q);
}

Exponents positive_part(const Exponents& e) {
    Exponents r{};
    for (std::size_t i = 0; i < kMaxVars; ++i) r[i] = std::max<std::int16_t>(e[i], 0);
    return r;
}

} // namespace

RatFun::RatFun(FieldCtx ctx)
    : ctx_(std::move(ctx)), num_(ctx_.size()), den_(Poly::constant(ctx_.size(), 1)) {}

RatFun RatFun::constant(const FieldCtx& ctx, const mpq_class& c) {
    mpq_class v = c;
    v.canonicalize();
    return RatFun(ctx, Poly::constant(ctx.size(), v.get_num()), Poly::constant(ctx.size(), v.get_den()));
}

RatFun RatFun::var(const FieldCtx& ctx, const std::string& name, int power) {
    Exponents e{};
    e[ctx.require(name)] = static_cast<std::int16_t>(power);
    return monomial(ctx, e);
}

RatFun RatFun::monomial(const FieldCtx& ctx, const Exponents& e, const mpq_class& c) {
    mpq_class v = c;
    v.canonicalize();
    Exponents neg = positive_part(sub_exponents(Exponents{}, e));
    Exponents pos = positive_part(e);
    return RatFun(ctx, Poly::monomial(ctx.size(), pos, v.get_num()), Poly::monomial(ctx.size(), neg, v.get_den()));
}

RatFun RatFun::from_polys(const FieldCtx& ctx, const Poly& num, const Poly& den) {
    if (den.is_zero()) throw DomainError("rational function with zero denominator");
    if (num.is_zero()) return RatFun(ctx);
    const Exponents sn = num.min_exponents(), sd = den.min_exponents();
    Poly n1 = num.shifted(sub_exponents(Exponents{}, sn));
    Poly d1 = den.shifted(sub_exponents(Exponents{}, sd));
    mpz_class cn = n1.content(), cd = d1.content();
    n1 = n1.divided_exactly(cn);
    d1 = d1.divided_exactly(cd);
    mpq_class scale(cn, cd);
    scale.canonicalize();

    Poly g = gcd(n1, d1);
    if (!g.is_one()) {
        n1 = exact(n1, g);
        d1 = exact(d1, g);
    }
    const Exponents shift = sub_exponents(sn, sd);
    RatFun r(ctx, n1.shifted(positive_part(shift)).scaled(scale.get_num()),
             d1.shifted(positive_part(sub_exponents(Exponents{}, shift))).scaled(scale.get_den()));
    r.fix_sign();
    return r;
}

mpq_class RatFun::constant_value() const {
    if (!is_constant()) throw DomainError("rational function is not a constant");
    if (num_.is_zero()) return 0;
    mpq_class v(num_.leading().coeff, den_.leading().coeff);
    v.canonicalize();
    return v;
}

void RatFun::check_ctx(const RatFun& o) const {
    if (!(ctx_ == o.ctx_)) throw ContextError("rational functions from different fields");
}

void RatFun::fix_sign() {
    if (den_.leading().coeff < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

RatFun RatFun::operator-() const { return RatFun(ctx_, -num_, den_); }

RatFun& RatFun::operator+=(const RatFun& o) {
    check_ctx(o);
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
        Poly n = num_ + o.num_;
        if (n.is_zero()) return *this = RatFun(ctx_);
        if (den_.is_one()) {
            num_ = std::move(n);
            return *this;
        }
        Poly h = gcd(n, den_);
        num_ = exact(n, h);
        den_ = exact(den_, h);
        fix_sign();
        return *this;
    }
    Poly g = gcd(den_, o.den_);
    Poly ad = exact(den_, g), bd = exact(o.den_, g);
    Poly n = num_ * bd + o.num_ * ad;
    if (n.is_zero()) return *this = RatFun(ctx_);
    Poly d = den_ * bd;
    if (!g.is_one()) {
        Poly h = gcd(n, g);
        if (!h.is_one()) {
            n = exact(n, h);
            d = exact(d, h);
        }
    }
    num_ = std::move(n);
    den_ = std::move(d);
    fix_sign();
    return *this;
}

RatFun& RatFun::operator-=(const RatFun& o) { return *this += -o; }

RatFun& RatFun::operator*=(const RatFun& o) {
    check_ctx(o);
    if (is_zero() || o.is_zero()) return *this = RatFun(ctx_);
    if (den_.is_one() && o.den_.is_one()) {
        num_ *= o.num_;
        return *this;
    }
    Poly g1 = gcd(num_, o.den_);
    Poly g2 = gcd(o.num_, den_);
    Poly n = exact(num_, g1) * exact(o.num_, g2);
    Poly d = exact(den_, g2) * exact(o.den_, g1);
    num_ = std::move(n);
    den_ = std::move(d);
    fix_sign();
    return *this;
}

RatFun& RatFun::operator/=(const RatFun& o) {
    check_ctx(o);
    return *this *= o.inverse();
}

bool operator==(const RatFun& a, const RatFun& b) {
    return a.ctx_ == b.ctx_ && a.num_ == b.num_ && a.den_ == b.den_;
}

RatFun RatFun::inverse() const {
    if (is_zero()) throw DomainError("division by zero rational function");
    RatFun r(ctx_, den_, num_);
    r.fix_sign();
    return r;
}

RatFun RatFun::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    Poly n = Poly::constant(ctx_.size(), 1), d = Poly::constant(ctx_.size(), 1);
    Poly bn = num_, bd = den_;
    while (e > 0) {
        if (e & 1) {
            n *= bn;
            d *= bd;
        }
        e >>= 1;
        if (e) {
            bn *= bn;
            bd *= bd;
        }
    }
    return RatFun(ctx_, std::move(n), std::move(d));
}

RatFun RatFun::scaled(const mpq_class& c) const { return *this * constant(ctx_, c); }

std::string poly_to_string(const Poly& p, const FieldCtx& ctx) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        mpz_class c = it->coeff;
        bool neg = c < 0;
        if (neg) c = -c;
        if (neg)
            os << "-";
        else if (!first)
            os << "+";
        first = false;
        bool any_var = false;
        std::ostringstream mono;
        for (std::size_t i = 0; i < ctx.size(); ++i) {
            int e = it->exps[i];
            if (e == 0) continue;
            if (any_var) mono << "*";
            mono << ctx.name(i);
            if (e != 1) mono << "^" << e;
            any_var = true;
        }
        if (!any_var)
            os << c.get_str();
        else if (c == 1)
            os << mono.str();
        else
            os << c.get_str() << "*" << mono.str();
    }
    return os.str();
}

std::string RatFun::to_string() const {
    std::string n = poly_to_string(num_, ctx_);
    if (den_.is_one()) return n;
    auto wrap = [](const Poly& p, const std::string& s) { return p.size() > 1 ? "(" + s + ")" : s; };
    return wrap(num_, n) + "/" + wrap(den_, poly_to_string(den_, ctx_));
}

namespace {

struct Image {
    bool zero = false;
    Exponents exps{};
    mpq_class coeff = 1;
};

// Fast path for bindings that are monomials or zero: each term maps to a
// single Laurent monomial.
std::optional<std::vector<Image>> monomial_images(const RatFun& f, const std::map<std::string, RatFun>& bindings,
                                                   const FieldCtx& target) {
    std::vector<Image> img(f.ctx().size());
    for (std::size_t i = 0; i < f.ctx().size(); ++i) {
        auto it = bindings.find(f.ctx().name(i));
        if (it == bindings.end()) {
            img[i].exps[target.require(f.ctx().name(i))] = 1;
            continue;
        }
        const RatFun& v = it->second;
        if (!(v.ctx() == target)) throw ContextError("binding lives in a different field than the target");
        if (v.is_zero()) {
            img[i].zero = true;
            continue;
        }
        if (!v.num().is_monomial() || !v.den().is_monomial()) return std::nullopt;
        img[i].exps = sub_exponents(v.num().leading().exps, v.den().leading().exps);
        img[i].coeff = mpq_class(v.num().leading().coeff, v.den().leading().coeff);
        img[i].coeff.canonicalize();
    }
    return img;
}

// Returns the image of p as (integer polynomial, positive integer divisor).
std::pair<Poly, mpz_class> map_poly(const Poly& p, const std::vector<Image>& img, std::size_t src_vars,
                                    std::size_t nvars) {
    std::vector<std::pair<Exponents, mpq_class>> terms;
    mpz_class l = 1;
    for (const auto& t : p.terms()) {
        Exponents e{};
        mpq_class c(t.coeff);
        bool vanish = false;
        for (std::size_t i = 0; i < src_vars && !vanish; ++i) {
            int k = t.exps[i];
            if (k == 0) continue;
            if (img[i].zero) {
                vanish = true;
                break;
            }
            for (int j = 0; j < k; ++j) e = add_exponents(e, img[i].exps);
            if (img[i].coeff != 1) {
                mpq_class pw = 1;
                for (int j = 0; j < k; ++j) pw *= img[i].coeff;
                c *= pw;
            }
        }
        if (vanish) continue;
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
        terms.emplace_back(e, c);
    }
    std::vector<Poly::Term> out;
    out.reserve(terms.size());
    for (auto& [e, c] : terms) {
        mpq_class s = c * l;
        out.push_back({e, s.get_num()});
    }
    return {Poly::from_terms(nvars, std::move(out)), l};
}

RatFun eval_poly_general(const Poly& p, const std::vector<RatFun>& values, const FieldCtx& target) {
    std::map<std::pair<std::size_t, int>, RatFun> powers;
    auto power = [&](std::size_t i, int k) -> const RatFun& {
        auto key = std::make_pair(i, k);
        auto it = powers.find(key);
        if (it == powers.end()) it = powers.emplace(key, values[i].pow(k)).first;
        return it->second;
    };
    RatFun acc(target);
    for (const auto& t : p.terms()) {
        RatFun term = RatFun::constant(target, mpq_class(t.coeff));
        for (std::size_t i = 0; i < values.size(); ++i)
            if (t.exps[i] != 0) term *= power(i, t.exps[i]);
        acc += term;
    }
    return acc;
}

} // namespace

RatFun substitute(const RatFun& f, const std::map<std::string, RatFun>& bindings, const FieldCtx& target) {
    for (const auto& [name, v] : bindings)
        if (!f.ctx().index_of(name)) throw ContextError("binding for unknown indeterminate '" + name + "'");
    const std::size_t src = f.ctx().size();
    if (auto img = monomial_images(f, bindings, target)) {
        auto [dn, ld] = map_poly(f.den(), *img, src, target.size());
        if (dn.is_zero()) throw SpecializationError("denominator vanishes under substitution");
        auto [nn, ln] = map_poly(f.num(), *img, src, target.size());
        return RatFun::from_polys(target, nn.scaled(ld), dn.scaled(ln));
    }
    std::vector<RatFun> values;
    values.reserve(src);
    for (std::size_t i = 0; i < src; ++i) {
        auto it = bindings.find(f.ctx().name(i));
        values.push_back(it != bindings.end() ? it->second : RatFun::var(target, f.ctx().name(i)));
        if (!(values.back().ctx() == target)) throw ContextError("binding lives in a different field than the target");
    }
    RatFun d = eval_poly_general(f.den(), values, target);
    if (d.is_zero()) throw SpecializationError("denominator vanishes under substitution");
    return eval_poly_general(f.num(), values, target) / d;
}

} // namespace pforge
