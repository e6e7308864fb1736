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

#include "pforge/field.hpp"

#include <algorithm>
#include <set>

#include "pforge/errors.hpp"

namespace pforge {

FieldCtx::FieldCtx(Family f, std::vector<std::string> names) {
    if (names.size() > kMaxVars)
        throw ContextError("too many indeterminates (max " + std::to_string(kMaxVars) + ")");
    std::set<std::string> seen(names.begin(), names.end());
    if (seen.size() != names.size()) throw ContextError("duplicate indeterminate name");
    d_ = std::make_shared<const Data>(Data{f, std::move(names)});
}

FieldCtx FieldCtx::qt(std::size_t n_u) {
    std::vector<std::string> names{"q", "t"};
    for (std::size_t i = 1; i <= n_u; ++i) names.push_back("u" + std::to_string(i));
    return FieldCtx(Family::QT, std::move(names));
}

FieldCtx FieldCtx::alpha(std::size_t n_u) {
    std::vector<std::string> names{"alpha"};
    for (std::size_t i = 1; i <= n_u; ++i) names.push_back("u" + std::to_string(i));
    return FieldCtx(Family::Alpha, std::move(names));
}

FieldCtx FieldCtx::generic(std::vector<std::string> names) {
    return FieldCtx(Family::Generic, std::move(names));
}

std::optional<std::size_t> FieldCtx::index_of(const std::string& name) const {
    auto it = std::find(d_->names.begin(), d_->names.end(), name);
    if (it == d_->names.end()) return std::nullopt;
    return static_cast<std::size_t>(it - d_->names.begin());
}

std::size_t FieldCtx::require(const std::string& name) const {
    auto idx = index_of(name);
    if (!idx) throw ContextError("unknown indeterminate '" + name + "'");
    return *idx;
}

bool operator==(const FieldCtx& a, const FieldCtx& b) {
    if (a.d_ == b.d_) return true;
    return a.d_->family == b.d_->family && a.d_->names == b.d_->names;
}

} // namespace pforge
