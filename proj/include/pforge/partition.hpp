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

#ifndef PFORGE_PARTITION_HPP
#define PFORGE_PARTITION_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pforge {

/// Integer partition: a finite weakly decreasing list of positive parts.
/// The empty partition is valid and indexes the constant 1.
class Partition {
public:
    Partition() = default;
    /// Throws DomainError unless `parts` is weakly decreasing and positive.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// Builds (1^{m_1}, 2^{m_2}, ...) from m[0] = m_1, m[1] = m_2, ...
    static Partition from_multiplicities(const std::vector<int>& m);
    /// Accepts "3,2,1", multiplicity form "1^2,3^1", or a mix; "" and "0" give
    /// the empty partition. Throws ParseError.
    static Partition parse(std::string_view text);

    const std::vector<int>& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    int weight() const;
    bool empty() const { return parts_.empty(); }
    /// 1-based part, zero beyond the length.
    int part(std::size_t k) const { return k >= 1 && k <= parts_.size() ? parts_[k - 1] : 0; }
    int largest() const { return parts_.empty() ? 0 : parts_.front(); }
    int multiplicity(int i) const;
    /// m_1, ..., m_{largest part}.
    std::vector<int> multiplicities() const;
    Partition conjugate() const;
    std::string to_string() const;

    friend auto operator<=>(const Partition&, const Partition&) = default;
    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

/// Strips trailing zeros and returns the partition, or nullopt when the
/// sequence is negative somewhere or not weakly decreasing.
std::optional<Partition> as_partition(const std::vector<int>& seq);

enum class Dominance { Leq, Greater, Incomparable };

/// Compares mu against lambda in dominance order: Leq when every prefix sum
/// of mu is at most that of lambda, Greater when lambda < mu strictly.
/// Throws DomainError for unequal weights.
Dominance dominance_leq(const Partition& mu, const Partition& lambda);

/// True when outer / inner is a horizontal strip: inner is contained in outer
/// and outer_{i+1} <= inner_i for every i.
bool is_horizontal_strip(const Partition& outer, const Partition& inner);

/// All partitions of n, in decreasing lexicographic order ((n) first).
std::vector<Partition> partitions_of(int n);

/// Finite integer sequence; contexts restrict entries to be nonnegative.
struct Composition {
    std::vector<int> entries;

    int weight() const;
    std::size_t size() const { return entries.size(); }
    int operator[](std::size_t i) const { return entries[i]; }
    bool is_zero() const;
    std::string to_string() const;
    friend auto operator<=>(const Composition&, const Composition&) = default;
    friend bool operator==(const Composition&, const Composition&) = default;
};

/// Lower-triangular n x n matrix of nonnegative integers, 1-based access.
class LTMatrix {
public:
    explicit LTMatrix(std::size_t n = 0) : n_(n), data_(n * (n + 1) / 2, 0) {}
    std::size_t dim() const { return n_; }
    /// theta(i, j); zero when j > i.
    int at(std::size_t i, std::size_t j) const { return j > i ? 0 : data_[index(i, j)]; }
    void set(std::size_t i, std::size_t j, int v);
    /// Row i as the composition (theta(i,1), ..., theta(i,i)).
    Composition row(std::size_t i) const;
    int row_sum(std::size_t i) const;
    std::string to_string() const;
    friend auto operator<=>(const LTMatrix&, const LTMatrix&) = default;
    friend bool operator==(const LTMatrix&, const LTMatrix&) = default;

private:
    std::size_t index(std::size_t i, std::size_t j) const { return (i - 1) * i / 2 + (j - 1); }
    std::size_t n_;
    std::vector<int> data_;
};

/// Every theta in N^n with |theta| <= r, in lexicographic order.
/// There are C(n + r, n) of them.
std::vector<Composition> enum_box(std::size_t n, int r);

/// Lower-triangular matrices reachable by peeling rows k = n, ..., 1 where
/// row k satisfies  sum_j theta(k,j) <= bound_{k+1} + sum_{j>k} theta(j,k+1).
/// `bounds` holds (b_1, ..., b_{n+1}); for the g-expansion these are the parts
/// of lambda, for the e-expansion the parts of lambda'.
std::vector<LTMatrix> enum_ltm(std::size_t n, const std::vector<int>& bounds);
/// Convenience overload: bounds are the parts of `lambda`, l(lambda) = n + 1.
std::vector<LTMatrix> enum_ltm(std::size_t n, const Partition& lambda);

} // namespace pforge

#endif
