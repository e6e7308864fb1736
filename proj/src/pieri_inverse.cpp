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

#include "pforge/pieri_inverse.hpp"

#include <map>

#include "pforge/errors.hpp"
#include "pforge/linalg.hpp"
#include "pforge/pieri.hpp"
#include "pforge/qseries.hpp"

namespace pforge {

namespace {

std::string describe(const Composition& theta, const std::vector<RatFun>& u) {
    std::string s = "theta=(" + theta.to_string() + ") u=(";
    for (std::size_t i = 0; i < u.size(); ++i) s += (i ? "," : "") + u[i].to_string();
    return s + ")";
}

RatFun checked_div(const RatFun& num, const RatFun& den, const Composition& theta, const std::vector<RatFun>& u) {
    if (den.is_zero()) throw SpecializationError("vanishing denominator at " + describe(theta, u));
    return num / den;
}

RatFun vandermonde(const FieldCtx& ctx, const std::vector<RatFun>& v) {
    RatFun d = RatFun::constant(ctx, 1);
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j) d *= v[i] - v[j];
    return d;
}

std::vector<int> diff(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> d(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
    return d;
}

bool nonnegative(const std::vector<int>& v) {
    for (int x : v)
        if (x < 0) return false;
    return true;
}

int total(const std::vector<int>& v) {
    int s = 0;
    for (int x : v) s += x;
    return s;
}

std::vector<RatFun> shifted_u(const FieldCtx& ctx, const std::vector<RatFun>& u, const std::vector<int>& by,
                              int extra) {
    const RatFun q = RatFun::var(ctx, "q");
    std::vector<RatFun> out;
    for (std::size_t i = 0; i < u.size(); ++i) out.push_back(u[i] * q.pow(by[i] + extra));
    return out;
}

} // namespace

RatFun c_ab(const FieldCtx& ctx, const Composition& theta, const std::vector<RatFun>& u, const RatFun& a,
            const RatFun& b) {
    const std::size_t n = theta.size();
    if (u.size() != n) throw DomainError("c_ab: theta and u differ in length");
    const RatFun one = RatFun::constant(ctx, 1);
    if (theta.is_zero()) return one;

    RatFun num = one, den = one;
    for (std::size_t k = 0; k < n; ++k) {
        const int th = theta[k];
        if (th < 0) throw DomainError("c_ab needs theta in N^n");
        if (th == 0) continue;
        num *= b.pow(th) * pochhammer(a / b, a, th) * pochhammer(a * u[k], a, th);
        den *= pochhammer(a, a, th) * pochhammer(a * b * u[k], a, th);
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (theta[i] == 0) continue;
        for (std::size_t j = i + 1; j < n; ++j) {
            RatFun ratio = u[i] / u[j];
            RatFun shift = a.pow(-theta[j]);
            num *= pochhammer(a * ratio / b, a, theta[i]) * pochhammer(shift * b * ratio, a, theta[i]);
            den *= pochhammer(a * ratio, a, theta[i]) * pochhammer(shift * ratio, a, theta[i]);
        }
    }
    if (num.is_zero()) return RatFun(ctx);
    RatFun pre = checked_div(num, den, theta, u);

    std::vector<RatFun> v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(u[i] * a.pow(theta[i]));
    RatMatrix m(n, std::vector<RatFun>(n, RatFun(ctx)));
    for (std::size_t i = 0; i < n; ++i) {
        RatFun tail(ctx);
        if (theta[i] != 0) {
            RatFun prod = checked_div(one - b * v[i], one - v[i], theta, u);
            for (std::size_t k = 0; k < n && !prod.is_zero(); ++k)
                prod *= checked_div(u[k] - v[i], b * u[k] - v[i], theta, u);
            tail = prod;
        }
        for (std::size_t j = 1; j <= n; ++j) {
            RatFun vp = v[i].pow(static_cast<int>(n - j));
            m[i][j - 1] = tail.is_zero() ? vp : vp * (one - b.pow(static_cast<int>(j) - 1) * tail);
        }
    }
    RatFun delta = vandermonde(ctx, v);
    return pre * checked_div(det(ctx, m), delta, theta, u);
}

RatFun c_alpha(const FieldCtx& ctx, const Composition& theta, const std::vector<RatFun>& u, const RatFun& a) {
    const std::size_t n = theta.size();
    if (u.size() != n) throw DomainError("c_alpha: theta and u differ in length");
    const RatFun one = RatFun::constant(ctx, 1);
    if (theta.is_zero()) return one;

    RatFun num = one, den = one;
    for (std::size_t k = 0; k < n; ++k) {
        const int th = theta[k];
        if (th < 0) throw DomainError("c_alpha needs theta in N^n");
        if (th == 0) continue;
        mpz_class fact;
        mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(th));
        num *= raising_factorial(one - a, th) * raising_factorial(u[k] + one, th);
        den *= raising_factorial(u[k] + one + a, th).scaled(mpq_class(fact));
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (theta[i] == 0) continue;
        for (std::size_t j = i + 1; j < n; ++j) {
            RatFun d = u[i] - u[j];
            RatFun s = d - RatFun::constant(ctx, theta[j]);
            num *= raising_factorial(d + one - a, theta[i]) * raising_factorial(s + a, theta[i]);
            den *= raising_factorial(d + one, theta[i]) * raising_factorial(s, theta[i]);
        }
    }
    if (num.is_zero()) return RatFun(ctx);
    RatFun pre = checked_div(num, den, theta, u);

    std::vector<RatFun> v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(u[i] + RatFun::constant(ctx, theta[i]));
    RatMatrix m(n, std::vector<RatFun>(n, RatFun(ctx)));
    for (std::size_t i = 0; i < n; ++i) {
        RatFun tail(ctx);
        if (theta[i] != 0) {
            RatFun prod = checked_div(v[i] + a, v[i], theta, u);
            for (std::size_t k = 0; k < n && !prod.is_zero(); ++k)
                prod *= checked_div(v[i] - u[k], v[i] - u[k] - a, theta, u);
            tail = prod;
        }
        for (std::size_t j = 1; j <= n; ++j) {
            const int e = static_cast<int>(n - j);
            RatFun entry = v[i].pow(e);
            if (!tail.is_zero()) entry -= (v[i] - a).pow(e) * tail;
            m[i][j - 1] = entry;
        }
    }
    RatFun delta = vandermonde(ctx, v);
    return pre * checked_div(det(ctx, m), delta, theta, u);
}

RatFun f_entry(const FieldCtx& ctx, const std::vector<int>& beta, const std::vector<int>& kappa,
               const std::vector<RatFun>& u) {
    std::vector<int> th = diff(beta, kappa);
    if (!nonnegative(th)) return RatFun(ctx);
    return c_ab(ctx, Composition{th}, shifted_u(ctx, u, kappa, total(kappa)), RatFun::var(ctx, "q"),
                RatFun::var(ctx, "t"));
}

RatFun g_entry(const FieldCtx& ctx, const std::vector<int>& kappa, const std::vector<int>& gamma,
               const std::vector<RatFun>& u) {
    std::vector<int> th = diff(kappa, gamma);
    if (!nonnegative(th)) return RatFun(ctx);
    return d_coeff(ctx, Composition{th}, shifted_u(ctx, u, gamma, total(gamma)));
}

OrthoResult orthogonality_check(std::size_t n, const std::vector<int>& beta, const std::vector<int>& gamma) {
    if (beta.size() != n || gamma.size() != n) throw DomainError("orthogonality_check: index length != n");
    const FieldCtx ctx = FieldCtx::qt(n);
    std::vector<RatFun> u;
    for (std::size_t i = 1; i <= n; ++i) u.push_back(RatFun::var(ctx, "u" + std::to_string(i)));

    OrthoResult res{beta, gamma, false, RatFun(ctx), RatFun(ctx)};
    std::vector<int> span = diff(beta, gamma);
    if (nonnegative(span)) {
        // kappa runs over the box gamma <= kappa <= beta.
        std::vector<int> kappa = gamma;
        while (true) {
            res.fg += f_entry(ctx, beta, kappa, u) * g_entry(ctx, kappa, gamma, u);
            res.gf += g_entry(ctx, beta, kappa, u) * f_entry(ctx, kappa, gamma, u);
            std::size_t i = 0;
            while (i < n && kappa[i] == beta[i]) kappa[i] = gamma[i], ++i;
            if (i == n) break;
            ++kappa[i];
        }
    }
    const bool diag = beta == gamma;
    res.pass = diag ? (res.fg.is_one() && res.gf.is_one()) : (res.fg.is_zero() && res.gf.is_zero());
    return res;
}

std::vector<OrthoResult> orthogonality_sweep(std::size_t n, int depth) {
    std::vector<std::vector<int>> points;
    std::vector<int> cur(n, 0);
    while (true) {
        points.push_back(cur);
        std::size_t i = 0;
        while (i < n && cur[i] == depth) cur[i] = 0, ++i;
        if (i == n) break;
        ++cur[i];
    }
    std::vector<OrthoResult> out;
    for (const auto& beta : points)
        for (const auto& gamma : points)
            if (nonnegative(diff(beta, gamma))) out.push_back(orthogonality_check(n, beta, gamma));
    return out;
}

} // namespace pforge
