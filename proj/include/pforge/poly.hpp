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

#ifndef PFORGE_POLY_HPP
#define PFORGE_POLY_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "pforge/field.hpp"

namespace pforge {

/// Exponent vector of a Laurent monomial. Unused trailing slots stay zero.
using Exponents = std::array<std::int16_t, kMaxVars>;

/// Componentwise sum; throws std::overflow_error when an entry leaves int16.
Exponents add_exponents(const Exponents& a, const Exponents& b);
Exponents sub_exponents(const Exponents& a, const Exponents& b);
Exponents min_exponents(const Exponents& a, const Exponents& b);
/// True when a <= b componentwise.
bool exponents_le(const Exponents& a, const Exponents& b);

/// Sparse multivariate Laurent polynomial with integer coefficients.
///
/// Terms are kept sorted in strictly decreasing lexicographic order of their
/// exponent vectors (x_1 > x_2 > ...) with no zero coefficients, so equal
/// polynomials have identical representations. Rational coefficients are
/// carried by RatFun, which stores a common integer denominator.
class Poly {
public:
    struct Term {
        Exponents exps{};
        mpz_class coeff;
    };

    Poly() = default;
    explicit Poly(std::size_t nvars) : nvars_(nvars) {}

    static Poly constant(std::size_t nvars, const mpz_class& c);
    static Poly monomial(std::size_t nvars, const Exponents& e, const mpz_class& c = 1);
    static Poly variable(std::size_t nvars, std::size_t var, int power = 1);
    /// Builds a polynomial from arbitrary terms: sorts, merges duplicates and
    /// drops zeros.
    static Poly from_terms(std::size_t nvars, std::vector<Term> terms);

    std::size_t nvars() const { return nvars_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const;
    bool is_monomial() const { return terms_.size() == 1; }
    /// No negative exponents.
    bool is_polynomial() const;

    /// Lex-leading term. Precondition: nonzero.
    const Term& leading() const { return terms_.front(); }
    int degree(std::size_t var) const;
    int min_degree(std::size_t var) const;
    Exponents min_exponents() const;
    Exponents max_exponents() const;
    /// Bitmask of variables occurring with a nonzero exponent.
    unsigned support_mask() const;

    /// Positive gcd of all coefficients; zero for the zero polynomial.
    mpz_class content() const;
    /// Multiply by the monomial x^e.
    Poly shifted(const Exponents& e) const;
    Poly scaled(const mpz_class& c) const;
    /// Coefficientwise division by an integer that divides every coefficient.
    Poly divided_exactly(const mpz_class& c) const;
    /// Exact quotient a / b in Z[x], or nullopt when b does not divide a.
    /// Both operands must be true polynomials.
    std::optional<Poly> divide_exact(const Poly& b) const;

    /// Groups terms by the exponent of `var`; returned coefficients have that
    /// exponent zeroed. Sorted by decreasing degree.
    std::vector<std::pair<int, Poly>> coefficients_in(std::size_t var) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b);

    std::size_t hash() const;

private:
    static Poly merge(const Poly& a, const Poly& b, bool subtract);

    std::size_t nvars_ = 0;
    std::vector<Term> terms_;
};

} // namespace pforge

#endif
