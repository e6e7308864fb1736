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

#ifndef PFORGE_RATFUN_HPP
#define PFORGE_RATFUN_HPP

#include <map>
#include <string>

#include <gmpxx.h>

#include "pforge/field.hpp"
#include "pforge/poly.hpp"

namespace pforge {

/// Element of Q(x_1, ..., x_k) in canonical reduced form.
///
/// Invariants: num and den are polynomials with integer coefficients and no
/// negative exponents, gcd(num, den) = 1 (integer content and common monomial
/// factors included), and den has a positive lex-leading coefficient. Zero is
/// 0/1. Equal field elements are therefore structurally equal.
class RatFun {
public:
    explicit RatFun(FieldCtx ctx);

    static RatFun constant(const FieldCtx& ctx, const mpq_class& c);
    static RatFun constant(const FieldCtx& ctx, long c) { return constant(ctx, mpq_class(c)); }
    static RatFun var(const FieldCtx& ctx, const std::string& name, int power = 1);
    /// c * x^e with Laurent exponents allowed.
    static RatFun monomial(const FieldCtx& ctx, const Exponents& e, const mpq_class& c = 1);
    /// Normalizes num/den. Laurent exponents allowed in both. Throws DomainError
    /// for a zero denominator.
    static RatFun from_polys(const FieldCtx& ctx, const Poly& num, const Poly& den);

    const FieldCtx& ctx() const { return ctx_; }
    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    /// Value of a constant element. Precondition: is_constant().
    mpq_class constant_value() const;

    RatFun operator-() const;
    RatFun& operator+=(const RatFun& o);
    RatFun& operator-=(const RatFun& o);
    RatFun& operator*=(const RatFun& o);
    RatFun& operator/=(const RatFun& o);
    friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
    friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
    friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
    friend RatFun operator/(RatFun a, const RatFun& b) { return a /= b; }
    friend bool operator==(const RatFun& a, const RatFun& b);

    RatFun inverse() const;
    /// Integer power; negative exponents invert.
    RatFun pow(int e) const;
    RatFun scaled(const mpq_class& c) const;

    /// Plain-text rendering, e.g. "(1-q*t)/(2-2*q)".
    std::string to_string() const;

private:
    RatFun(FieldCtx ctx, Poly num, Poly den) : ctx_(std::move(ctx)), num_(std::move(num)), den_(std::move(den)) {}
    void check_ctx(const RatFun& o) const;
    /// Restore the sign convention (positive leading coefficient of den).
    void fix_sign();

    FieldCtx ctx_;
    Poly num_;
    Poly den_;
};

/// Evaluates f with each named variable replaced by the bound value.
/// Unbound variables map to the variable of the same name in `target`.
/// Ring homomorphism wherever defined; throws SpecializationError when the
/// denominator of f vanishes under the bindings.
RatFun substitute(const RatFun& f, const std::map<std::string, RatFun>& bindings, const FieldCtx& target);

/// Rendering of a polynomial over the given variable names ("1-q*t").
std::string poly_to_string(const Poly& p, const FieldCtx& ctx);

} // namespace pforge

#endif
