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

#ifndef PFORGE_ERRORS_HPP
#define PFORGE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pforge {

/// Mathematically undefined request: division by zero, unequal weights, ...
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Operands live in different coefficient fields.
class ContextError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A denominator vanished while specializing variables. The message carries
/// the context (partition, theta, entry) in which it happened.
class SpecializationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual or JSON input.
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace pforge

#endif
