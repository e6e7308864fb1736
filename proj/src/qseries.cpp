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

#include "pforge/qseries.hpp"

#include "pforge/errors.hpp"

namespace pforge {

RatFun pochhammer(const RatFun& x, const RatFun& base, int k) {
    if (k < 0) throw DomainError("pochhammer length must be nonnegative");
    const RatFun one = RatFun::constant(x.ctx(), 1);
    RatFun acc = one;
    RatFun factor = x;
    for (int i = 0; i < k; ++i) {
        acc *= one - factor;
        if (acc.is_zero()) break;
        if (i + 1 < k) factor *= base;
    }
    return acc;
}

RatFun raising_factorial(const RatFun& x, int k) {
    if (k < 0) throw DomainError("raising factorial length must be nonnegative");
    RatFun acc = RatFun::constant(x.ctx(), 1);
    for (int i = 0; i < k; ++i) {
        acc *= x + RatFun::constant(x.ctx(), i);
        if (acc.is_zero()) break;
    }
    return acc;
}

} // namespace pforge
