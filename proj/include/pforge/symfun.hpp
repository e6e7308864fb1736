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

#ifndef PFORGE_SYMFUN_HPP
#define PFORGE_SYMFUN_HPP

#include <map>
#include <string>

#include <gmpxx.h>

#include "pforge/partition.hpp"
#include "pforge/ratfun.hpp"

namespace pforge {

/// Bases of the ring of symmetric functions: power sums, monomials,
/// elementary products e_mu = prod e_{mu_i}, and products of the modified
/// complete functions g_mu = prod g_{mu_i}.
enum class Basis { P, M, E, G };

const char* basis_name(Basis b);
Basis parse_basis(const std::string& s);

/// Which deformation of the Hall scalar product to use.
enum class ScalarMode { QT, Alpha };

/// Symmetric function over a rational-function field, stored as a
/// coefficient map in one basis. Zero coefficients are never stored.
///
/// The meaning of the g-basis follows the field family: in Q(q,t) it is the
/// Macdonald g_k(q,t), in Q(alpha) the Jack analogue sum_l z_l^-1 alpha^-l(l) p_l.
class SymFun {
public:
    SymFun(FieldCtx ctx, Basis basis) : ctx_(std::move(ctx)), basis_(basis) {}

    static SymFun element(const FieldCtx& ctx, Basis basis, const Partition& index);
    static SymFun constant(const FieldCtx& ctx, Basis basis, const RatFun& c);

    const FieldCtx& ctx() const { return ctx_; }
    Basis basis() const { return basis_; }
    const std::map<Partition, RatFun>& coeffs() const { return coeffs_; }
    RatFun coeff(const Partition& index) const;
    bool is_zero() const { return coeffs_.empty(); }
    /// Largest weight present; -1 for zero.
    int degree() const;

    void add_term(const Partition& index, const RatFun& c);

    SymFun operator-() const;
    SymFun& operator+=(const SymFun& o);
    SymFun& operator-=(const SymFun& o);
    friend SymFun operator+(SymFun a, const SymFun& b) { return a += b; }
    friend SymFun operator-(SymFun a, const SymFun& b) { return a -= b; }
    SymFun scaled(const RatFun& c) const;
    /// Same basis and coefficients.
    friend bool operator==(const SymFun& a, const SymFun& b);

    std::string to_string() const;

private:
    void check_compatible(const SymFun& o) const;

    FieldCtx ctx_;
    Basis basis_;
    std::map<Partition, RatFun> coeffs_;
};

/// Product, computed in the power-sum basis (p_l p_m = p_{l u m}).
SymFun mul(const SymFun& f, const SymFun& g);

/// Exact change of basis.
SymFun convert(const SymFun& f, Basis target);

/// g_k in the p-basis, built as the exponential of
/// sum_m p_m u^m w_m / m with w_m = (1-t^m)/(1-q^m) (or 1/alpha), i.e. by the
/// recurrence k g_k = sum_m w_m p_m g_{k-m}. g_0 = 1, g_k = 0 for k < 0.
SymFun g_in_p(const FieldCtx& ctx, int k);

/// e_k in the p-basis by Newton's identity k e_k = sum (-1)^{i-1} p_i e_{k-i}.
SymFun e_in_p(const FieldCtx& ctx, int k);

/// Basis element b_mu expanded in the p-basis (cached, thread-safe).
const SymFun& element_in_p(const FieldCtx& ctx, Basis basis, const Partition& mu);

/// z_l = prod_i i^{m_i} m_i!.
mpz_class z_lambda(const Partition& lambda);

/// Diagonal weight of the scalar product on power sums.
struct PowerScalarDiag {
    Partition lambda;
    mpz_class z;
    RatFun qt_factor;     // prod (1 - q^{l_i}) / (1 - t^{l_i})
    RatFun alpha_factor;  // alpha^{l(lambda)}
};
PowerScalarDiag power_scalar_diag(const FieldCtx& ctx, const Partition& lambda);

/// <p_l, p_m> = delta z_l w_l with w_l the qt or alpha factor.
RatFun scalar(const SymFun& f, const SymFun& g, ScalarMode mode);

/// The algebra map p_r -> (-1)^{r-1} (1 - a^r)/(1 - b^r) p_r. omega(f, q, t)
/// is omega_{q,t}; omega(f, t, q) is its inverse omega_{t,q}.
SymFun omega(const SymFun& f, const RatFun& a, const RatFun& b);
SymFun omega_qt(const SymFun& f);

} // namespace pforge

#endif
