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

#ifndef PFORGE_FIELD_HPP
#define PFORGE_FIELD_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace pforge {

/// Upper bound on the number of indeterminates of a coefficient field.
inline constexpr std::size_t kMaxVars = 8;

/// Which parameters the field is built around. Determines the meaning of the
/// g-basis and of the default scalar product.
enum class Family { QT, Alpha, Generic };

/// Ordered list of named indeterminates of a field Q(x_1, ..., x_k).
///
/// Contexts are cheap handles; two contexts compare equal iff they have the
/// same family and the same variable names in the same order.
class FieldCtx {
public:
    /// Q(q, t) or Q(q, t, u_1, ..., u_n).
    static FieldCtx qt(std::size_t n_u = 0);
    /// Q(alpha) or Q(alpha, u_1, ..., u_n).
    static FieldCtx alpha(std::size_t n_u = 0);
    static FieldCtx generic(std::vector<std::string> names);

    std::size_t size() const { return d_->names.size(); }
    Family family() const { return d_->family; }
    const std::string& name(std::size_t i) const { return d_->names.at(i); }
    const std::vector<std::string>& names() const { return d_->names; }
    std::optional<std::size_t> index_of(const std::string& name) const;
    std::size_t require(const std::string& name) const;

    friend bool operator==(const FieldCtx& a, const FieldCtx& b);

private:
    struct Data {
        Family family;
        std::vector<std::string> names;
    };
    FieldCtx(Family f, std::vector<std::string> names);
    std::shared_ptr<const Data> d_;
};

} // namespace pforge

#endif
