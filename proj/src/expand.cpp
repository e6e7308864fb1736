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

#include "pforge/expand.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <unordered_map>

#include "pforge/errors.hpp"
#include "pforge/pieri_inverse.hpp"

namespace pforge {

const char* mode_name(Mode m) {
    switch (m) {
    case Mode::MacG: return "mac-g";
    case Mode::MacE: return "mac-e";
    case Mode::JackG: return "jack-g";
    case Mode::JackE: return "jack-e";
    }
    return "?";
}

Mode parse_mode(const std::string& s) {
    if (s == "mac-g") return Mode::MacG;
    if (s == "mac-e") return Mode::MacE;
    if (s == "jack-g") return Mode::JackG;
    if (s == "jack-e") return Mode::JackE;
    throw ParseError("unknown mode '" + s + "'");
}

const char* strategy_name(Strategy s) { return s == Strategy::Recursive ? "recursive" : "direct"; }

Strategy parse_strategy(const std::string& s) {
    if (s == "recursive") return Strategy::Recursive;
    if (s == "direct") return Strategy::Direct;
    throw ParseError("unknown strategy '" + s + "'");
}

const FieldCtx& mode_field(Mode mode) {
    static const FieldCtx qt = FieldCtx::qt();
    static const FieldCtx al = FieldCtx::alpha();
    return is_jack(mode) ? al : qt;
}

namespace {

// Number of u-parameters of a step on mu: l(mu) - 1 in g modes, mu_1 - 1 in e modes.
int step_n(const Partition& mu, Mode mode) {
    return is_e_mode(mode) ? mu.largest() - 1 : static_cast<int>(mu.length()) - 1;
}

// Upper bound for |theta|: the last part (g modes) or the top multiplicity (e modes).
int step_bound(const Partition& mu, Mode mode) {
    return is_e_mode(mode) ? mu.multiplicity(mu.largest()) : mu.part(mu.length());
}

std::vector<RatFun> step_u(const Partition& mu, Mode mode) {
    const FieldCtx& ctx = mode_field(mode);
    const int n = step_n(mu, mode);
    std::vector<RatFun> u;
    auto tail_mult = [&](int k) {  // sum_{j=k}^{n} m_j(mu)
        int s = 0;
        for (int j = k; j <= n; ++j) s += mu.multiplicity(j);
        return s;
    };
    for (int k = 1; k <= n; ++k) {
        switch (mode) {
        case Mode::MacG:
            u.push_back(RatFun::var(ctx, "q", mu.part(k) - mu.part(n + 1)) * RatFun::var(ctx, "t", n - k));
            break;
        case Mode::MacE:
            u.push_back(RatFun::var(ctx, "q", n - k) * RatFun::var(ctx, "t", tail_mult(k)));
            break;
        case Mode::JackG:
            u.push_back(RatFun::constant(ctx, mu.part(k) - mu.part(n + 1)) +
                        RatFun::var(ctx, "alpha", -1).scaled(n - k));
            break;
        case Mode::JackE:
            u.push_back(RatFun::constant(ctx, tail_mult(k)) + RatFun::var(ctx, "alpha").scaled(n - k));
            break;
        }
    }
    return u;
}

RatFun compute_step_coeff(const Partition& mu, const Composition& theta, Mode mode) {
    const FieldCtx& ctx = mode_field(mode);
    std::vector<RatFun> u = step_u(mu, mode);
    try {
        switch (mode) {
        case Mode::MacG: return c_ab(ctx, theta, u, RatFun::var(ctx, "q"), RatFun::var(ctx, "t"));
        case Mode::MacE: return c_ab(ctx, theta, u, RatFun::var(ctx, "t"), RatFun::var(ctx, "q"));
        case Mode::JackG: return c_alpha(ctx, theta, u, RatFun::var(ctx, "alpha", -1));
        case Mode::JackE: return c_alpha(ctx, theta, u, RatFun::var(ctx, "alpha"));
        }
    } catch (const SpecializationError& e) {
        throw SpecializationError(std::string(mode_name(mode)) + " step on lambda=(" + mu.to_string() +
                                  "): " + e.what());
    }
    return RatFun(ctx);
}

// Memoized step coefficient keyed by (mode, mu, theta).
RatFun step_coeff(const Partition& mu, const Composition& theta, Mode mode) {
    static std::mutex m;
    static std::map<std::tuple<int, Partition, Composition>, RatFun> memo;
    auto key = std::make_tuple(static_cast<int>(mode), mu, theta);
    {
        std::lock_guard<std::mutex> lock(m);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }
    RatFun c = compute_step_coeff(mu, theta, mode);
    std::lock_guard<std::mutex> lock(m);
    return memo.try_emplace(key, std::move(c)).first->second;
}

struct StepTarget {
    int row;
    std::vector<int> index;      // shape sequence (g) or multiplicity vector (e)
    std::optional<Partition> shape;
};

StepTarget step_target(const Partition& mu, const Composition& theta, Mode mode) {
    const int n = step_n(mu, mode);
    StepTarget tg{step_bound(mu, mode) - theta.weight(), {}, std::nullopt};
    if (!is_e_mode(mode)) {
        for (int k = 1; k <= n; ++k) tg.index.push_back(mu.part(k) + theta[k - 1]);
        tg.shape = as_partition(tg.index);
        // A vanishing entry would shorten the shape; parts only grow here.
        return tg;
    }
    for (int i = 1; i < n; ++i) tg.index.push_back(mu.multiplicity(i) + theta[i - 1] - theta[i]);
    if (n >= 1) tg.index.push_back(mu.multiplicity(n) + mu.multiplicity(n + 1) + theta[n - 1]);
    if (std::all_of(tg.index.begin(), tg.index.end(), [](int x) { return x >= 0; }))
        tg.shape = Partition::from_multiplicities(tg.index);
    return tg;
}

Partition add_factor(const Partition& f, int row) {
    if (row == 0) return f;
    std::vector<int> parts = f.parts();
    parts.insert(std::upper_bound(parts.begin(), parts.end(), row, std::greater<int>()), row);
    return Partition(std::move(parts));
}

struct DiscardKey {
    bool operator()(const DiscardedTerm& a, const DiscardedTerm& b) const {
        return std::tie(a.source, a.index, a.theta) < std::tie(b.source, b.index, b.theta);
    }
};
using DiscardSet = std::set<DiscardedTerm, DiscardKey>;

struct FullResult {
    std::map<Partition, RatFun> terms;
    DiscardSet discarded;
};

const FullResult& full_recursive(const Partition& mu, Mode mode);

FullResult compute_full_recursive(const Partition& mu, Mode mode) {
    const FieldCtx& ctx = mode_field(mode);
    FullResult res;
    if (mu.empty()) {
        res.terms.emplace(Partition(), RatFun::constant(ctx, 1));
        return res;
    }
    Expansion step = expand_step(mu, mode);
    res.discarded.insert(step.discarded.begin(), step.discarded.end());
    for (const auto& term : step.terms) {
        const int row = term.factors.empty() ? 0 : term.factors.part(1);
        const FullResult& sub = full_recursive(term.shape, mode);
        res.discarded.insert(sub.discarded.begin(), sub.discarded.end());
        for (const auto& [f, c] : sub.terms) {
            auto [it, inserted] = res.terms.try_emplace(add_factor(f, row), term.coeff * c);
            if (!inserted) it->second += term.coeff * c;
        }
    }
    for (auto it = res.terms.begin(); it != res.terms.end();) it = it->second.is_zero() ? res.terms.erase(it) : ++it;
    return res;
}

const FullResult& full_recursive(const Partition& mu, Mode mode) {
    static std::mutex m;
    static std::map<std::pair<int, Partition>, std::unique_ptr<FullResult>> memo;
    auto key = std::make_pair(static_cast<int>(mode), mu);
    {
        std::lock_guard<std::mutex> lock(m);
        auto it = memo.find(key);
        if (it != memo.end()) return *it->second;
    }
    auto r = std::make_unique<FullResult>(compute_full_recursive(mu, mode));
    std::lock_guard<std::mutex> lock(m);
    return *memo.try_emplace(key, std::move(r)).first->second;
}

// mu(theta, k) from the closed formulas. g modes: the parts; e modes: the
// multiplicities m_1..m_{k+1}. `base` is lambda (g) or its multiplicities (e).
std::vector<int> chain_entry(const LTMatrix& th, std::size_t k, const std::vector<int>& base, std::size_t n,
                             bool e_mode) {
    auto b = [&](std::size_t i) { return i >= 1 && i <= base.size() ? base[i - 1] : 0; };
    std::vector<int> out;
    if (!e_mode) {
        for (std::size_t i = 1; i <= k + 1; ++i) {
            int s = b(i);
            for (std::size_t j = k + 1; j <= n; ++j) s += th.at(j, i);
            out.push_back(s);
        }
        return out;
    }
    for (std::size_t i = 1; i <= k; ++i) {
        int s = b(i);
        for (std::size_t j = k + 1; j <= n; ++j) s += th.at(j, i) - th.at(j, i + 1);
        out.push_back(s);
    }
    int s = 0;
    for (std::size_t j = k + 1; j <= n + 1; ++j) s += b(j);
    for (std::size_t j = k + 1; j <= n; ++j) s += th.at(j, k + 1);
    out.push_back(s);
    return out;
}

FullResult full_direct(const Partition& lambda, Mode mode) {
    const FieldCtx& ctx = mode_field(mode);
    FullResult res;
    if (lambda.empty()) {
        res.terms.emplace(Partition(), RatFun::constant(ctx, 1));
        return res;
    }
    const bool e_mode = is_e_mode(mode);
    const std::size_t n = static_cast<std::size_t>(step_n(lambda, mode));
    const std::vector<int> base = e_mode ? lambda.multiplicities() : lambda.parts();
    const std::vector<int> bounds = e_mode ? lambda.conjugate().parts() : lambda.parts();

    auto to_partition = [&](const std::vector<int>& entry) -> std::optional<Partition> {
        if (!e_mode) return as_partition(entry);
        if (std::any_of(entry.begin(), entry.end(), [](int x) { return x < 0; })) return std::nullopt;
        return Partition::from_multiplicities(entry);
    };

    for (const auto& th : enum_ltm(n, bounds)) {
        RatFun coeff = RatFun::constant(ctx, 1);
        bool alive = true;
        Partition mu = lambda;
        for (std::size_t k = n; k >= 1 && alive; --k) {
            Composition row = th.row(k);
            RatFun c = step_coeff(mu, row, mode);
            if (c.is_zero()) {
                alive = false;
                break;
            }
            coeff *= c;
            std::vector<int> next = chain_entry(th, k - 1, base, n, e_mode);
            auto next_mu = to_partition(next);
            if (!next_mu) {
                res.discarded.insert(DiscardedTerm{mu, next, row.entries, c});
                alive = false;
                break;
            }
            mu = *next_mu;
        }
        if (!alive) continue;
        // Subscripts: bound_{k+1} + sum_{j>k} theta(j,k+1) - sum_{j<=k} theta(k,j).
        std::vector<int> subs;
        for (std::size_t k = 0; k <= n; ++k) {
            int s = bounds[k];
            for (std::size_t j = k + 1; j <= n; ++j) s += th.at(j, k + 1);
            if (k >= 1) s -= th.row_sum(k);
            if (s < 0) throw std::logic_error("negative subscript in direct expansion");
            if (s > 0) subs.push_back(s);
        }
        std::sort(subs.begin(), subs.end(), std::greater<int>());
        Partition factors(std::move(subs));
        auto [it, inserted] = res.terms.try_emplace(factors, coeff);
        if (!inserted) it->second += coeff;
    }
    for (auto it = res.terms.begin(); it != res.terms.end();) it = it->second.is_zero() ? res.terms.erase(it) : ++it;
    return res;
}

} // namespace

Expansion expand_step(const Partition& lambda, Mode mode) {
    Expansion ex{lambda, mode, {}, {}};
    const TermKind kind = is_e_mode(mode) ? TermKind::PxE : TermKind::QxRow;
    const FieldCtx& ctx = mode_field(mode);
    if (lambda.empty()) {
        ex.terms.push_back({RatFun::constant(ctx, 1), kind, Partition(), Partition()});
        return ex;
    }
    const int n = step_n(lambda, mode);
    for (const auto& theta : enum_box(static_cast<std::size_t>(n), step_bound(lambda, mode))) {
        RatFun c = step_coeff(lambda, theta, mode);
        if (c.is_zero()) continue;
        StepTarget tg = step_target(lambda, theta, mode);
        if (!tg.shape) {
            ex.discarded.push_back({lambda, tg.index, theta.entries, c});
            continue;
        }
        Partition row = tg.row > 0 ? Partition{tg.row} : Partition();
        ex.terms.push_back({c, kind, row, *tg.shape});
    }
    return ex;
}

Expansion expand_Q_step(const Partition& lambda) { return expand_step(lambda, Mode::MacG); }

Expansion expand_P_step(const Partition& lambda) { return expand_step(lambda, Mode::MacE); }

Expansion jack_step(const Partition& lambda, Mode mode) {
    if (!is_jack(mode)) throw DomainError("jack_step needs a Jack mode");
    return expand_step(lambda, mode);
}

Expansion expand_full(const Partition& lambda, Mode mode, Strategy strategy) {
    FullResult direct;
    const FullResult* r = nullptr;
    if (strategy == Strategy::Recursive) {
        r = &full_recursive(lambda, mode);
    } else {
        direct = full_direct(lambda, mode);
        r = &direct;
    }
    Expansion ex{lambda, mode, {}, {}};
    const TermKind kind = is_e_mode(mode) ? TermKind::EProduct : TermKind::GProduct;
    for (const auto& [f, c] : r->terms) ex.terms.push_back({c, kind, f, Partition()});
    ex.discarded.assign(r->discarded.begin(), r->discarded.end());
    return ex;
}

} // namespace pforge
