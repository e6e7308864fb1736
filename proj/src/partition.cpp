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

#include "pforge/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <sstream>

#include "pforge/errors.hpp"

namespace pforge {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw DomainError("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1]) throw DomainError("partition parts must be weakly decreasing");
    }
}

Partition Partition::from_multiplicities(const std::vector<int>& m) {
    std::vector<int> parts;
    for (std::size_t i = m.size(); i-- > 0;) {
        if (m[i] < 0) throw DomainError("negative multiplicity");
        parts.insert(parts.end(), m[i], static_cast<int>(i + 1));
    }
    return Partition(std::move(parts));
}

namespace {

int parse_int(std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
        throw ParseError("not an integer: '" + std::string(s) + "'");
    return v;
}

} // namespace

Partition Partition::parse(std::string_view text) {
    std::vector<int> parts;
    std::size_t start = 0;
    std::string_view all = text;
    while (!all.empty() && all.front() == ' ') all.remove_prefix(1);
    if (all.empty() || all == "0") return Partition();
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        std::string_view item = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
        std::size_t caret = item.find('^');
        if (caret == std::string_view::npos) {
            int v = parse_int(item);
            if (v <= 0) throw ParseError("partition parts must be positive");
            parts.push_back(v);
        } else {
            int v = parse_int(item.substr(0, caret));
            int m = parse_int(item.substr(caret + 1));
            if (v <= 0 || m < 0) throw ParseError("bad multiplicity item '" + std::string(item) + "'");
            parts.insert(parts.end(), m, v);
        }
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(std::move(parts));
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::multiplicity(int i) const { return static_cast<int>(std::count(parts_.begin(), parts_.end(), i)); }

std::vector<int> Partition::multiplicities() const {
    std::vector<int> m(largest(), 0);
    for (int p : parts_) ++m[p - 1];
    return m;
}

Partition Partition::conjugate() const {
    std::vector<int> c(largest(), 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++c[j];
    return Partition(std::move(c));
}

std::string Partition::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
    return os.str();
}

std::optional<Partition> as_partition(const std::vector<int>& seq) {
    std::vector<int> s = seq;
    while (!s.empty() && s.back() == 0) s.pop_back();
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] <= 0) return std::nullopt;
        if (i > 0 && s[i] > s[i - 1]) return std::nullopt;
    }
    return Partition(std::move(s));
}

bool is_horizontal_strip(const Partition& outer, const Partition& inner) {
    for (std::size_t i = 1; i <= outer.length(); ++i) {
        if (outer.part(i) < inner.part(i)) return false;
        if (i > 1 && outer.part(i) > inner.part(i - 1)) return false;
    }
    return inner.length() <= outer.length();
}

Dominance dominance_leq(const Partition& mu, const Partition& lambda) {
    if (mu.weight() != lambda.weight()) throw DomainError("dominance order needs partitions of equal weight");
    bool le = true, ge = true;
    int sm = 0, sl = 0;
    const std::size_t n = std::max(mu.length(), lambda.length());
    for (std::size_t k = 1; k <= n; ++k) {
        sm += mu.part(k);
        sl += lambda.part(k);
        if (sm > sl) le = false;
        if (sm < sl) ge = false;
    }
    if (le) return Dominance::Leq;
    if (ge) return Dominance::Greater;
    return Dominance::Incomparable;
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    if (n < 0) return out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(remaining - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

int Composition::weight() const { return std::accumulate(entries.begin(), entries.end(), 0); }

bool Composition::is_zero() const {
    return std::all_of(entries.begin(), entries.end(), [](int v) { return v == 0; });
}

std::string Composition::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < entries.size(); ++i) os << (i ? "," : "") << entries[i];
    return os.str();
}

void LTMatrix::set(std::size_t i, std::size_t j, int v) {
    if (j > i || i > n_ || j == 0) throw DomainError("LTMatrix entry outside the lower triangle");
    data_[index(i, j)] = v;
}

Composition LTMatrix::row(std::size_t i) const {
    Composition c;
    for (std::size_t j = 1; j <= i; ++j) c.entries.push_back(at(i, j));
    return c;
}

int LTMatrix::row_sum(std::size_t i) const {
    int s = 0;
    for (std::size_t j = 1; j <= i; ++j) s += at(i, j);
    return s;
}

std::string LTMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 1; i <= n_; ++i) {
        os << (i > 1 ? ";" : "");
        for (std::size_t j = 1; j <= i; ++j) os << (j > 1 ? "," : "") << at(i, j);
    }
    os << "]";
    return os.str();
}

std::vector<Composition> enum_box(std::size_t n, int r) {
    std::vector<Composition> out;
    if (r < 0) return out;
    Composition cur;
    cur.entries.assign(n, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
        if (i == n) {
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            cur.entries[i] = v;
            rec(i + 1, left - v);
        }
        cur.entries[i] = 0;
    };
    rec(0, r);
    return out;
}

std::vector<LTMatrix> enum_ltm(std::size_t n, const std::vector<int>& bounds) {
    if (bounds.size() != n + 1) throw DomainError("enum_ltm needs n + 1 bounds");
    std::vector<LTMatrix> out;
    LTMatrix cur(n);
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == 0) {
            out.push_back(cur);
            return;
        }
        int bound = bounds[k];  // b_{k+1}
        for (std::size_t j = k + 1; j <= n; ++j) bound += cur.at(j, k + 1);
        for (const auto& row : enum_box(k, bound)) {
            for (std::size_t j = 1; j <= k; ++j) cur.set(k, j, row[j - 1]);
            rec(k - 1);
        }
        for (std::size_t j = 1; j <= k; ++j) cur.set(k, j, 0);
    };
    rec(n);
    return out;
}

std::vector<LTMatrix> enum_ltm(std::size_t n, const Partition& lambda) {
    if (lambda.length() != n + 1) throw DomainError("enum_ltm needs a partition of length n + 1");
    return enum_ltm(n, lambda.parts());
}

} // namespace pforge
