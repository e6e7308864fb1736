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

#ifndef PFORGE_SERIALIZE_HPP
#define PFORGE_SERIALIZE_HPP

#include <string>

#include "json.hpp"
#include "pforge/expansion.hpp"
#include "pforge/pieri.hpp"
#include "pforge/pieri_inverse.hpp"
#include "pforge/symfun.hpp"

namespace pforge {

using nlohmann::json;

inline constexpr int kFormatVersion = 1;

/// {"num": [[c, e_1, ..., e_k], ...], "den": [...]} with c a decimal string
/// and one exponent per field variable.
json ratfun_to_json(const RatFun& f);
RatFun ratfun_from_json(const json& j, const FieldCtx& ctx);

/// Field from a "variables" list: ["q","t"] or ["alpha"].
FieldCtx field_from_variables(const json& vars);
json variables_json(const FieldCtx& ctx);

json expansion_to_json(const Expansion& ex, const std::string& strategy);
/// Inverse of expansion_to_json. Throws ParseError on malformed input.
Expansion expansion_from_json(const json& j);

json symfun_to_json(const SymFun& f);
SymFun symfun_from_json(const json& j);

json pieri_to_json(const PieriExpansion& ex);
json ortho_to_json(const OrthoResult& r);
json discarded_to_json(const DiscardedTerm& d);

/// Plain text, e.g. "g[1]^2 - ((1+q)*(1-t)/(1-q*t))*g[2]".
std::string expansion_to_text(const Expansion& ex);
std::string symfun_to_text(const SymFun& f);
std::string pieri_to_text(const PieriExpansion& ex);

/// Best-effort LaTeX with binomial factors pulled out of coefficients.
std::string ratfun_to_latex(const RatFun& f);
std::string expansion_to_latex(const Expansion& ex);
std::string symfun_to_latex(const SymFun& f);
std::string pieri_to_latex(const PieriExpansion& ex);

} // namespace pforge

#endif
