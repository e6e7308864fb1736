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

#ifndef PFORGE_POLY_GCD_HPP
#define PFORGE_POLY_GCD_HPP

#include "pforge/poly.hpp"

namespace pforge {

/// Greatest common divisor in Z[x_1, ..., x_k] of two true polynomials.
///
/// The result includes the integer content and the common monomial factor,
/// and is normalized to a positive lex-leading coefficient. gcd(0, 0) = 0.
/// Multivariate cases run a dense modular algorithm (Brown) with trial
/// division, so the answer is always exact.
Poly gcd(const Poly& a, const Poly& b);

/// a * b / gcd(a, b), with positive leading coefficient.
Poly lcm(const Poly& a, const Poly& b);

} // namespace pforge

#endif
