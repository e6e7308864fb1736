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

#include "pforge/linalg.hpp"

#include <utility>

#include "pforge/errors.hpp"
#include "pforge/poly_gcd.hpp"

namespace pforge {

namespace {

void check_square(std::size_t n, const auto& m) {
    for (const auto& row : m)
        if (row.size() != n) throw DomainError("determinant of a non-square matrix");
}

} // namespace

RatFun det(const FieldCtx& ctx, const RatMatrix& m) {
    const std::size_t n = m.size();
    check_square(n, m);
    if (n == 0) return RatFun::constant(ctx, 1);
    for (const auto& row : m)
        for (const auto& x : row)
            if (!(x.ctx() == ctx)) throw ContextError("matrix entry from a different field");
    if (n == 1) return m[0][0];

    const std::size_t nv = ctx.size();
    std::vector<std::vector<Poly>> a(n, std::vector<Poly>(n, Poly(nv)));
    Poly scale = Poly::constant(nv, 1);
    for (std::size_t i = 0; i < n; ++i) {
        Poly l = Poly::constant(nv, 1);
        for (const auto& x : m[i]) l = lcm(l, x.den());
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j].num() * *l.divide_exact(m[i][j].den());
        scale *= l;
    }

    int sign = 1;
    Poly prev = Poly::constant(nv, 1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t piv = n;
        for (std::size_t r = k; r < n; ++r)
            if (!a[r][k].is_zero() && (piv == n || a[r][k].size() < a[piv][k].size())) piv = r;
        if (piv == n) return RatFun(ctx);
        if (piv != k) {
            std::swap(a[piv], a[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Poly v = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                auto q = v.divide_exact(prev);
                if (!q) throw std::logic_error("Bareiss step is not exact");
                a[i][j] = std::move(*q);
            }
            a[i][k] = Poly(nv);
        }
        prev = a[k][k];
    }
    Poly d = a[n - 1][n - 1];
    if (sign < 0) d = -d;
    return RatFun::from_polys(ctx, d, scale);
}

RatMatrix inverse(const FieldCtx& ctx, const RatMatrix& m) {
    const std::size_t n = m.size();
    check_square(n, m);
    RatMatrix a = m;
    RatMatrix inv(n, std::vector<RatFun>(n, RatFun(ctx)));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = RatFun::constant(ctx, 1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = n;
        for (std::size_t r = k; r < n; ++r)
            if (!a[r][k].is_zero()) {
                piv = r;
                break;
            }
        if (piv == n) throw DomainError("singular matrix");
        std::swap(a[piv], a[k]);
        std::swap(inv[piv], inv[k]);
        RatFun p = a[k][k].inverse();
        for (std::size_t j = 0; j < n; ++j) {
            if (!a[k][j].is_zero()) a[k][j] *= p;
            if (!inv[k][j].is_zero()) inv[k][j] *= p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a[i][k].is_zero()) continue;
            RatFun f = a[i][k];
            for (std::size_t j = 0; j < n; ++j) {
                if (!a[k][j].is_zero()) a[i][j] -= f * a[k][j];
                if (!inv[k][j].is_zero()) inv[i][j] -= f * inv[k][j];
            }
        }
    }
    return inv;
}

QMatrix inverse(const QMatrix& m) {
    const std::size_t n = m.size();
    check_square(n, m);
    QMatrix a = m;
    QMatrix inv(n, std::vector<mpq_class>(n, 0));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = n;
        for (std::size_t r = k; r < n; ++r)
            if (a[r][k] != 0) {
                piv = r;
                break;
            }
        if (piv == n) throw DomainError("singular matrix");
        std::swap(a[piv], a[k]);
        std::swap(inv[piv], inv[k]);
        mpq_class p = 1 / a[k][k];
        for (std::size_t j = 0; j < n; ++j) {
            a[k][j] *= p;
            inv[k][j] *= p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a[i][k] == 0) continue;
            mpq_class f = a[i][k];
            for (std::size_t j = 0; j < n; ++j) {
                a[i][j] -= f * a[k][j];
                inv[i][j] -= f * inv[k][j];
            }
        }
    }
    return inv;
}

} // namespace pforge
