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

#include "pforge/poly_gcd.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>

namespace pforge {

namespace {

using u64 = std::uint64_t;

// Arithmetic in Z/p for p < 2^31, so products fit in 64 bits.
struct Zp {
    u64 p;
    u64 add(u64 a, u64 b) const {
        u64 s = a + b;
        return s >= p ? s - p : s;
    }
    u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p - b; }
    u64 mul(u64 a, u64 b) const { return (a * b) % p; }
    u64 neg(u64 a) const { return a == 0 ? 0 : p - a; }
    u64 inv(u64 a) const {
        long long t = 0, nt = 1, r = static_cast<long long>(p), nr = static_cast<long long>(a);
        while (nr != 0) {
            long long q = r / nr;
            long long tmp = t - q * nt;
            t = nt;
            nt = tmp;
            tmp = r - q * nr;
            r = nr;
            nr = tmp;
        }
        if (r != 1) throw std::logic_error("modular inverse of zero");
        return static_cast<u64>(t < 0 ? t + static_cast<long long>(p) : t);
    }
    u64 reduce(const mpz_class& c) const { return mpz_fdiv_ui(c.get_mpz_t(), p); }
};

// ---------------------------------------------------------------------------
// Dense univariate polynomials over Z/p, index = degree, no trailing zeros.

using UPoly = std::vector<u64>;

void trim(UPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int udeg(const UPoly& a) { return static_cast<int>(a.size()) - 1; }

u64 ueval(const Zp& f, const UPoly& a, u64 x) {
    u64 r = 0;
    for (std::size_t i = a.size(); i-- > 0;) r = f.add(f.mul(r, x), a[i]);
    return r;
}

UPoly umul(const Zp& f, const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % f.p;
    }
    trim(r);
    return r;
}

UPoly uscale(const Zp& f, UPoly a, u64 c) {
    for (auto& x : a) x = f.mul(x, c);
    trim(a);
    return a;
}

UPoly uadd(const Zp& f, UPoly a, const UPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = f.add(a[i], b[i]);
    trim(a);
    return a;
}

// a = q*b + r.
void udivmod(const Zp& f, UPoly a, const UPoly& b, UPoly& q, UPoly& r) {
    if (b.empty()) throw std::domain_error("univariate division by zero");
    if (a.size() < b.size()) {
        q.clear();
        r = std::move(a);
        return;
    }
    u64 linv = f.inv(b.back());
    q.assign(a.size() - b.size() + 1, 0);
    for (std::size_t i = a.size(); i-- >= b.size();) {
        u64 c = f.mul(a[i], linv);
        q[i - b.size() + 1] = c;
        if (c != 0) {
            std::size_t shift = i - b.size() + 1;
            for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = f.sub(a[shift + j], f.mul(c, b[j]));
        }
        if (i == 0) break;
    }
    a.resize(b.size() - 1);
    trim(a);
    trim(q);
    r = std::move(a);
}

UPoly umonic(const Zp& f, UPoly a) {
    if (a.empty()) return a;
    return uscale(f, std::move(a), f.inv(a.back()));
}

UPoly ugcd(const Zp& f, UPoly a, UPoly b) {
    while (!b.empty()) {
        UPoly q, r;
        udivmod(f, std::move(a), b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    return umonic(f, std::move(a));
}

UPoly uexact_div(const Zp& f, const UPoly& a, const UPoly& b) {
    UPoly q, r;
    udivmod(f, a, b, q, r);
    if (!r.empty()) throw std::logic_error("inexact univariate division mod p");
    return q;
}

// ---------------------------------------------------------------------------
// Sparse multivariate polynomials over Z/p in the first k slots of Exponents,
// sorted by decreasing lex order.

struct MTerm {
    Exponents e;
    u64 c;
};
using MPoly = std::vector<MTerm>;

bool is_const(const MPoly& a) { return a.size() == 1 && a[0].e == Exponents{}; }

MPoly mmonic(const Zp& f, MPoly a) {
    if (a.empty()) return a;
    u64 inv = f.inv(a[0].c);
    for (auto& t : a) t.c = f.mul(t.c, inv);
    return a;
}

bool mdivides(const Zp& f, const MPoly& a, const MPoly& b) {
    // Does b divide a?
    if (a.empty()) return true;
    std::map<Exponents, u64, std::greater<Exponents>> rem;
    for (const auto& t : a) rem.emplace(t.e, t.c);
    const MTerm& lb = b[0];
    u64 linv = f.inv(lb.c);
    while (!rem.empty()) {
        auto it = rem.begin();
        if (!exponents_le(lb.e, it->first)) return false;
        u64 qc = f.mul(it->second, linv);
        Exponents qe = sub_exponents(it->first, lb.e);
        rem.erase(it);
        for (std::size_t j = 1; j < b.size(); ++j) {
            Exponents e = add_exponents(qe, b[j].e);
            u64 prod = f.mul(qc, b[j].c);
            auto [pos, inserted] = rem.try_emplace(e, 0);
            pos->second = f.sub(pos->second, prod);
            if (pos->second == 0) rem.erase(pos);
        }
    }
    return true;
}

// Polynomial in the "main" variables x_0..x_{k-2} with coefficients in
// Z/p[x_{k-1}].
using RecPoly = std::vector<std::pair<Exponents, UPoly>>;

RecPoly to_rec(const MPoly& a, std::size_t y) {
    RecPoly r;
    for (const auto& t : a) {
        Exponents main = t.e;
        int d = main[y];
        main[y] = 0;
        if (r.empty() || r.back().first != main) r.emplace_back(main, UPoly{});
        UPoly& u = r.back().second;
        if (u.size() <= static_cast<std::size_t>(d)) u.resize(d + 1, 0);
        u[d] = t.c;
    }
    return r;
}

MPoly from_rec(const RecPoly& r, std::size_t y) {
    MPoly out;
    for (const auto& [main, u] : r) {
        for (std::size_t d = u.size(); d-- > 0;) {
            if (u[d] == 0) continue;
            Exponents e = main;
            e[y] = static_cast<std::int16_t>(d);
            out.push_back({e, u[d]});
        }
    }
    return out;
}

MPoly pgcd(const Zp& f, const MPoly& a, const MPoly& b, std::size_t k);

MPoly pgcd_univariate(const Zp& f, const MPoly& a, const MPoly& b) {
    RecPoly ra = to_rec(a, 0), rb = to_rec(b, 0);
    UPoly g = ugcd(f, ra[0].second, rb[0].second);
    return from_rec(RecPoly{{Exponents{}, g}}, 0);
}

MPoly pgcd(const Zp& f, const MPoly& a, const MPoly& b, std::size_t k) {
    if (is_const(a) || is_const(b)) return MPoly{{Exponents{}, 1}};
    if (k == 1) return pgcd_univariate(f, a, b);
    const std::size_t y = k - 1;

    RecPoly ra = to_rec(a, y), rb = to_rec(b, y);
    UPoly conta, contb;
    for (const auto& [m, u] : ra) conta = conta.empty() ? umonic(f, u) : ugcd(f, conta, u);
    for (const auto& [m, u] : rb) contb = contb.empty() ? umonic(f, u) : ugcd(f, contb, u);
    UPoly cont = ugcd(f, conta, contb);
    if (udeg(conta) > 0)
        for (auto& [m, u] : ra) u = uexact_div(f, u, conta);
    if (udeg(contb) > 0)
        for (auto& [m, u] : rb) u = uexact_div(f, u, contb);

    auto content_only = [&]() {
        return mmonic(f, from_rec(RecPoly{{Exponents{}, cont}}, y));
    };
    // Both are pure Z/p[y] elements after removing contents.
    if (ra.size() == 1 && ra[0].first == Exponents{}) return content_only();
    if (rb.size() == 1 && rb[0].first == Exponents{}) return content_only();

    const MPoly ap = from_rec(ra, y), bp = from_rec(rb, y);
    const UPoly& lca = ra[0].second;
    const UPoly& lcb = rb[0].second;
    UPoly g = ugcd(f, lca, lcb);
    int da = 0, db = 0;
    for (const auto& [m, u] : ra) da = std::max(da, udeg(u));
    for (const auto& [m, u] : rb) db = std::max(db, udeg(u));
    const int bound = udeg(g) + std::min(da, db);

    std::map<Exponents, UPoly, std::greater<Exponents>> interp;
    Exponents lead{};
    UPoly newton{1};
    int npts = 0;

    for (u64 pt = 1; pt < f.p; ++pt) {
        if (ueval(f, lca, pt) == 0 || ueval(f, lcb, pt) == 0) continue;
        MPoly ea, eb;
        for (const auto& [m, u] : ra)
            if (u64 v = ueval(f, u, pt)) ea.push_back({m, v});
        for (const auto& [m, u] : rb)
            if (u64 v = ueval(f, u, pt)) eb.push_back({m, v});
        MPoly cb = pgcd(f, ea, eb, k - 1);
        if (is_const(cb)) return content_only();
        u64 gb = ueval(f, g, pt);
        for (auto& t : cb) t.c = f.mul(t.c, gb);
        const Exponents& lm = cb[0].e;

        if (npts == 0 || lm < lead) {
            interp.clear();
            for (const auto& t : cb) interp[t.e] = UPoly{t.c};
            lead = lm;
            newton = UPoly{f.neg(pt), 1};
            npts = 1;
        } else if (lead < lm) {
            continue;
        } else {
            u64 ninv = f.inv(ueval(f, newton, pt));
            std::map<Exponents, u64, std::greater<Exponents>> vals;
            for (const auto& t : cb) vals[t.e] = t.c;
            for (auto& [e, u] : interp) vals.try_emplace(e, 0);
            for (const auto& [e, v] : vals) {
                UPoly& h = interp[e];
                u64 diff = f.sub(v, ueval(f, h, pt));
                if (diff != 0) h = uadd(f, h, uscale(f, newton, f.mul(diff, ninv)));
            }
            for (auto it = interp.begin(); it != interp.end();) {
                if (it->second.empty())
                    it = interp.erase(it);
                else
                    ++it;
            }
            newton = umul(f, newton, UPoly{f.neg(pt), 1});
            ++npts;
        }

        if (npts > bound) {
            RecPoly h(interp.begin(), interp.end());
            UPoly hc;
            for (const auto& [m, u] : h) hc = hc.empty() ? umonic(f, u) : ugcd(f, hc, u);
            if (udeg(hc) > 0)
                for (auto& [m, u] : h) u = uexact_div(f, u, hc);
            MPoly cand = mmonic(f, from_rec(h, y));
            if (mdivides(f, ap, cand) && mdivides(f, bp, cand)) {
                if (udeg(cont) > 0) {
                    for (auto& [m, u] : h) u = umul(f, u, cont);
                    cand = mmonic(f, from_rec(h, y));
                }
                return cand;
            }
            npts = 0;
        }
    }
    throw std::runtime_error("modular gcd ran out of evaluation points");
}

// ---------------------------------------------------------------------------
// Integer layer.

const std::vector<u64>& primes() {
    static std::vector<u64> list;
    static std::once_flag flag;
    std::call_once(flag, [] {
        mpz_class p = (mpz_class(1) << 31) - (mpz_class(1) << 24);
        for (int i = 0; i < 4096; ++i) {
            mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
            list.push_back(p.get_ui());
        }
    });
    return list;
}

Poly normalize_sign(Poly p) {
    if (!p.is_zero() && p.leading().coeff < 0) return -p;
    return p;
}

Poly primitive(const Poly& p) {
    mpz_class c = p.content();
    if (c == 1 || c == 0) return p;
    return p.divided_exactly(c);
}

// a, b primitive, no monomial content, same variable support, nonconstant.
Poly modular_gcd(const Poly& a, const Poly& b) {
    const std::size_t nv = a.nvars();
    const unsigned mask = a.support_mask();
    std::vector<std::size_t> vars;
    for (std::size_t i = 0; i < nv; ++i)
        if (mask & (1u << i)) vars.push_back(i);
    const std::size_t k = vars.size();

    auto compress = [&](const Exponents& e) {
        Exponents c{};
        for (std::size_t j = 0; j < k; ++j) c[j] = e[vars[j]];
        return c;
    };
    auto expand = [&](const Exponents& c) {
        Exponents e{};
        for (std::size_t j = 0; j < k; ++j) e[vars[j]] = c[j];
        return e;
    };
    std::vector<std::pair<Exponents, const mpz_class*>> ca, cb;
    for (const auto& t : a.terms()) ca.emplace_back(compress(t.exps), &t.coeff);
    for (const auto& t : b.terms()) cb.emplace_back(compress(t.exps), &t.coeff);

    const mpz_class& lca = a.leading().coeff;
    const mpz_class& lcb = b.leading().coeff;
    mpz_class gamma;
    mpz_gcd(gamma.get_mpz_t(), lca.get_mpz_t(), lcb.get_mpz_t());

    std::map<Exponents, mpz_class, std::greater<Exponents>> acc;
    mpz_class modulus = 0;
    Exponents lead{};
    std::optional<Poly> previous;

    for (u64 p : primes()) {
        Zp f{p};
        if (f.reduce(lca) == 0 || f.reduce(lcb) == 0) continue;
        MPoly ma, mb;
        for (const auto& [e, c] : ca)
            if (u64 v = f.reduce(*c)) ma.push_back({e, v});
        for (const auto& [e, c] : cb)
            if (u64 v = f.reduce(*c)) mb.push_back({e, v});
        MPoly g = pgcd(f, ma, mb, k);
        if (is_const(g)) return Poly::constant(nv, 1);
        u64 gm = f.reduce(gamma);
        for (auto& t : g) t.c = f.mul(t.c, gm);

        if (modulus == 0 || g[0].e < lead) {
            acc.clear();
            for (const auto& t : g) acc[t.e] = mpz_class(static_cast<unsigned long>(t.c));
            modulus = static_cast<unsigned long>(p);
            lead = g[0].e;
            previous.reset();
        } else if (lead < g[0].e) {
            continue;
        } else {
            // Chinese remaindering, coefficientwise over the union of supports.
            std::map<Exponents, u64, std::greater<Exponents>> img;
            for (const auto& t : g) img[t.e] = t.c;
            for (const auto& [e, c] : acc) img.try_emplace(e, 0);
            u64 minv = f.inv(f.reduce(modulus));
            for (const auto& [e, v] : img) {
                mpz_class& h = acc[e];
                u64 hv = f.reduce(h);
                u64 s = f.mul(f.sub(v, hv), minv);
                h += modulus * static_cast<unsigned long>(s);
            }
            modulus *= static_cast<unsigned long>(p);
        }

        mpz_class half = modulus / 2;
        std::vector<Poly::Term> sym;
        for (const auto& [e, c] : acc) {
            if (c == 0) continue;
            mpz_class v = c > half ? mpz_class(c - modulus) : c;
            sym.push_back({expand(e), v});
        }
        Poly cand = Poly::from_terms(nv, std::move(sym));
        if (previous && *previous == cand) {
            Poly pp = normalize_sign(primitive(cand));
            if (a.divide_exact(pp) && b.divide_exact(pp)) return pp;
        }
        previous = std::move(cand);
    }
    throw std::runtime_error("modular gcd exhausted its prime list");
}

Poly gcd_core(const Poly& a, const Poly& b);

// Both primitive with no monomial content.
Poly gcd_core(const Poly& a, const Poly& b) {
    const std::size_t nv = a.nvars();
    if (a.is_constant() || b.is_constant()) return Poly::constant(nv, 1);
    if (a == b) return normalize_sign(a);
    if (a == -b) return normalize_sign(a);

    const unsigned ma = a.support_mask(), mb = b.support_mask();
    if (ma != mb) {
        // A variable present in one operand only cannot occur in the gcd, so
        // the gcd divides every coefficient with respect to that variable.
        const unsigned only_a = ma & ~mb;
        const Poly& split = only_a ? a : b;
        const Poly& other = only_a ? b : a;
        unsigned only = only_a ? only_a : (mb & ~ma);
        std::size_t var = 0;
        while (!(only & (1u << var))) ++var;
        auto coeffs = split.coefficients_in(var);
        std::sort(coeffs.begin(), coeffs.end(),
                  [](const auto& x, const auto& y) { return x.second.size() < y.second.size(); });
        Poly g = other;
        for (const auto& [d, c] : coeffs) {
            g = gcd(g, c);
            if (g.is_constant()) return Poly::constant(nv, 1);
        }
        return normalize_sign(primitive(g));
    }

    if (b.size() <= a.size()) {
        if (a.divide_exact(b)) return normalize_sign(b);
    } else if (b.divide_exact(a)) {
        return normalize_sign(a);
    }
    return modular_gcd(a, b);
}

} // namespace

Poly gcd(const Poly& a, const Poly& b) {
    const std::size_t nv = std::max(a.nvars(), b.nvars());
    if (a.is_zero()) return normalize_sign(b);
    if (b.is_zero()) return normalize_sign(a);
    if (!a.is_polynomial() || !b.is_polynomial())
        throw std::invalid_argument("gcd requires polynomials without negative exponents");

    const Exponents sa = a.min_exponents(), sb = b.min_exponents();
    const Exponents common = min_exponents(sa, sb);
    Poly a1 = a.shifted(sub_exponents(Exponents{}, sa));
    Poly b1 = b.shifted(sub_exponents(Exponents{}, sb));
    mpz_class ca = a1.content(), cb = b1.content(), c;
    mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    if (ca != 1) a1 = a1.divided_exactly(ca);
    if (cb != 1) b1 = b1.divided_exactly(cb);

    Poly g = gcd_core(a1, b1);
    Poly r = g.scaled(c).shifted(common);
    (void)nv;
    return normalize_sign(std::move(r));
}

Poly lcm(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly(std::max(a.nvars(), b.nvars()));
    Poly g = gcd(a, b);
    Poly r = a * *b.divide_exact(g);
    return normalize_sign(std::move(r));
}

} // namespace pforge
