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

#ifndef PFORGE_ORACLE_HPP
#define PFORGE_ORACLE_HPP

#include <string>
#include <vector>

#include "pforge/expand.hpp"
#include "pforge/expansion.hpp"
#include "pforge/symfun.hpp"

namespace pforge {

/// Coefficient field used by the oracle: Q(q,t) or Q(alpha).
const FieldCtx& oracle_field(ScalarMode mode);

/// P_lambda in the m-basis by Gram-Schmidt against every P_mu with mu
/// strictly below lambda in dominance order. Cached per weight.
const SymFun& gram_schmidt_P(const Partition& lambda, ScalarMode mode);

/// Dual normalization Q = P / <P, P>.
SymFun Q_from_P(const SymFun& P, ScalarMode mode);

/// Cached Q_lambda in the m-basis.
const SymFun& oracle_Q(const Partition& lambda, ScalarMode mode);

/// <P_lambda, P_lambda>, cached.
const RatFun& oracle_norm(const Partition& lambda, ScalarMode mode);

/// Outcome of comparing a formula-driven identity against the oracle.
struct VerificationReport {
    Partition lambda;
    std::string mode;
    bool pass = false;
    std::vector<DiscardedTerm> discarded;
    SymFun residual{FieldCtx::qt(), Basis::M};  // m-basis difference, zero on pass
    double seconds = 0;
    std::string detail;   // which check failed, if any
};

/// Maps every factor of an expansion (g/e products, oracle Q/P for step
/// terms) to the m-basis and sums.
SymFun reassemble(const Expansion& ex);

/// Compares an expansion with the oracle Q_lambda (g modes) or P_lambda
/// (e modes). Discarded terms are carried into the report.
VerificationReport verify_expansion(const Expansion& ex);

/// Full expansion of lambda by `strategy`, then verify_expansion.
VerificationReport verify_expansion(const Partition& lambda, Mode mode, Strategy strategy = Strategy::Recursive);

/// Schur check at q = t against Jacobi-Trudi, and omega_{q,t}(Q_lambda(q,t))
/// = P_{lambda'}(t,q).
VerificationReport degeneration_checks(const Partition& lambda);

/// s_lambda in the m-basis over Q via det(h_{lambda_i - i + j}).
SymFun schur_jacobi_trudi(const Partition& lambda);

/// Maps q -> a, t -> b in every coefficient (a, b are RatFuns of QT).
SymFun specialize_qt(const SymFun& f, const RatFun& a, const RatFun& b);

} // namespace pforge

#endif
