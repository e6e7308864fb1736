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

#ifndef PFORGE_EXPAND_HPP
#define PFORGE_EXPAND_HPP

#include <string>

#include "pforge/expansion.hpp"

namespace pforge {

enum class Strategy { Recursive, Direct };

const char* strategy_name(Strategy s);
Strategy parse_strategy(const std::string& s);

/// Coefficient field of a mode: Q(q,t) or Q(alpha).
const FieldCtx& mode_field(Mode mode);

/// One step of the g-expansion: Q_lambda = sum_theta c_theta g_{row} Q_{shape}.
/// Terms whose shape is not a partition are moved to `discarded`.
Expansion expand_Q_step(const Partition& lambda);

/// One step of the dual e-expansion: P_lambda = sum_theta C_theta e_{row} P_{shape}.
Expansion expand_P_step(const Partition& lambda);

/// Jack analogues of the two steps; mode is JackG or JackE.
Expansion jack_step(const Partition& lambda, Mode mode);

/// Dispatches to the step for `mode`.
Expansion expand_step(const Partition& lambda, Mode mode);

/// Full expansion into pure g-products (g modes) or e-products (e modes),
/// like terms collected, sorted by ascending factor partition.
Expansion expand_full(const Partition& lambda, Mode mode, Strategy strategy);

} // namespace pforge

#endif
