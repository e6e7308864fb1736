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

#ifndef PFORGE_EXPANSION_HPP
#define PFORGE_EXPANSION_HPP

#include <string>
#include <vector>

#include "pforge/partition.hpp"
#include "pforge/ratfun.hpp"

namespace pforge {

/// mac-g: Q_lambda(q,t) in g-products; mac-e: P_lambda(q,t) in e-products;
/// jack-g / jack-e: the Jack analogues over Q(alpha).
enum class Mode { MacG, MacE, JackG, JackE };

const char* mode_name(Mode m);
Mode parse_mode(const std::string& s);
inline bool is_jack(Mode m) { return m == Mode::JackG || m == Mode::JackE; }
inline bool is_e_mode(Mode m) { return m == Mode::MacE || m == Mode::JackE; }

enum class TermKind {
    QxRow,     // g_row * Q_shape
    PxE,       // e_row * P_shape
    GProduct,  // g_factors
    EProduct,  // e_factors
};

/// One term of an expansion. For the step kinds `factors` holds the single
/// row subscript (empty when it is zero) and `shape` the Q/P index; for the
/// product kinds `shape` is empty.
struct ExpTerm {
    RatFun coeff;
    TermKind kind;
    Partition factors;
    Partition shape;
};

/// A term dropped because its Q/P index is not a partition.
struct DiscardedTerm {
    Partition source;          // the partition being expanded at that step
    std::vector<int> index;    // the offending sequence
    std::vector<int> theta;
    RatFun coeff;
};

struct Expansion {
    Partition lambda;
    Mode mode;
    std::vector<ExpTerm> terms;
    std::vector<DiscardedTerm> discarded;
};

} // namespace pforge

#endif
