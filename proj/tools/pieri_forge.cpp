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

// pieri-forge: command-line front end for expansions, verification,
// orthogonality certificates and basis conversion.

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include <openssl/evp.h>
#include <unistd.h>

#include "CLI11.hpp"
#include "pforge/errors.hpp"
#include "pforge/expand.hpp"
#include "pforge/oracle.hpp"
#include "pforge/pieri.hpp"
#include "pforge/pieri_inverse.hpp"
#include "pforge/serialize.hpp"

namespace fs = std::filesystem;
using namespace pforge;

namespace {

enum Exit { kPass = 0, kFail = 1, kUsage = 2, kSingular = 3 };

std::string sha256_hex(const std::string& data) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("SHA-256 failed");
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
        out += hex[md[i] >> 4];
        out += hex[md[i] & 15];
    }
    return out;
}

// Content-addressed store of expansion documents. Disabled when no
// directory is configured.
class Cache {
public:
    explicit Cache(std::optional<fs::path> dir) : dir_(std::move(dir)) {}

    static std::string key(const Partition& lambda, Mode mode, const std::string& strategy) {
        json k{{"format_version", kFormatVersion},
               {"lambda", lambda.parts()},
               {"mode", mode_name(mode)},
               {"strategy", strategy}};
        return sha256_hex(k.dump());
    }

    std::optional<json> load(const std::string& key) const {
        if (!dir_) return std::nullopt;
        std::ifstream in(*dir_ / (key + ".json"));
        if (!in) return std::nullopt;
        try {
            json j = json::parse(in);
            if (j.value("format_version", 0) != kFormatVersion) return std::nullopt;
            expansion_from_json(j);  // validate
            return j;
        } catch (const std::exception&) {
            return std::nullopt;  // corrupt entry: recompute and overwrite
        }
    }

    void store(const std::string& key, const json& doc) const {
        if (!dir_) return;
        fs::create_directories(*dir_);
        std::ostringstream tmpname;
        tmpname << key << ".json.tmp." << ::getpid() << "." << std::hash<std::thread::id>{}(std::this_thread::get_id());
        fs::path tmp = *dir_ / tmpname.str();
        {
            std::ofstream out(tmp, std::ios::trunc);
            out << doc.dump() << "\n";
            if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
        }
        fs::rename(tmp, *dir_ / (key + ".json"));
    }

private:
    std::optional<fs::path> dir_;
};

std::optional<fs::path> cache_dir(const std::string& flag) {
    if (!flag.empty()) return fs::path(flag);
    if (const char* env = std::getenv("PIERI_FORGE_CACHE"); env && *env) return fs::path(env);
    return std::nullopt;
}

json compute_expansion(const Partition& lambda, Mode mode, const std::string& strategy) {
    Expansion ex = strategy == "step" ? expand_step(lambda, mode) : expand_full(lambda, mode, parse_strategy(strategy));
    return expansion_to_json(ex, strategy);
}

json cached_expansion(const Cache& cache, const Partition& lambda, Mode mode, const std::string& strategy) {
    const std::string key = Cache::key(lambda, mode, strategy);
    if (auto hit = cache.load(key)) return *hit;
    json doc = compute_expansion(lambda, mode, strategy);
    cache.store(key, doc);
    return doc;
}

void check_format(const std::string& f) {
    if (f != "text" && f != "latex" && f != "json") throw ParseError("unknown format '" + f + "'");
}

// Runs `work(i)` for i in [0, n) on `jobs` threads; results stay indexed.
void parallel_for(std::size_t n, unsigned jobs, const std::function<void(std::size_t)>& work) {
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
    if (jobs == 1) {
        for (std::size_t i = 0; i < n; ++i) work(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mu;
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j)
        pool.emplace_back([&] {
            for (std::size_t i; (i = next++) < n;) {
                try {
                    work(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mu);
                    if (!error) error = std::current_exception();
                }
            }
        });
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

json discarded_list(const std::vector<DiscardedTerm>& ds) {
    json arr = json::array();
    for (const auto& d : ds) arr.push_back(discarded_to_json(d));
    return arr;
}

// ---------------------------------------------------------------------------

struct ExpandOpts {
    std::string lambda, mode = "mac-g", strategy = "recursive", format = "text", cache_dir;
};

int cmd_expand(const ExpandOpts& o) {
    check_format(o.format);
    Partition lambda = Partition::parse(o.lambda);
    Mode mode = parse_mode(o.mode);
    if (o.strategy != "step") parse_strategy(o.strategy);
    json doc = cached_expansion(Cache(cache_dir(o.cache_dir)), lambda, mode, o.strategy);
    if (o.format == "json") {
        std::cout << doc.dump() << "\n";
        return kPass;
    }
    Expansion ex = expansion_from_json(doc);
    std::cout << (o.format == "latex" ? expansion_to_latex(ex) : expansion_to_text(ex)) << "\n";
    return kPass;
}

struct PieriOpts {
    std::string lambda, format = "text";
    int row = 0;
};

int cmd_pieri(const PieriOpts& o) {
    check_format(o.format);
    PieriExpansion ex = pieri_expand(Partition::parse(o.lambda), o.row);
    if (o.format == "json") std::cout << pieri_to_json(ex).dump() << "\n";
    else std::cout << (o.format == "latex" ? pieri_to_latex(ex) : pieri_to_text(ex)) << "\n";
    return kPass;
}

int run_ortho(std::size_t n, int depth, unsigned jobs) {
    if (n < 1) throw ParseError("--n must be at least 1");
    if (depth < 0) throw ParseError("--depth must be nonnegative");
    // Enumerate the (beta, gamma) pairs, then evaluate in parallel.
    std::vector<std::pair<std::vector<int>, std::vector<int>>> pairs;
    std::vector<int> beta(n, 0);
    std::function<void(std::size_t)> outer = [&](std::size_t i) {
        if (i == n) {
            std::vector<int> gamma(n, 0);
            std::function<void(std::size_t)> inner = [&](std::size_t k) {
                if (k == n) {
                    pairs.emplace_back(beta, gamma);
                    return;
                }
                for (int g = 0; g <= beta[k]; ++g) {
                    gamma[k] = g;
                    inner(k + 1);
                }
            };
            inner(0);
            return;
        }
        for (int b = 0; b <= depth; ++b) {
            beta[i] = b;
            outer(i + 1);
        }
    };
    outer(0);
    std::vector<std::optional<OrthoResult>> results(pairs.size());
    parallel_for(pairs.size(), jobs,
                 [&](std::size_t i) { results[i] = orthogonality_check(n, pairs[i].first, pairs[i].second); });
    std::size_t passed = 0;
    json first_failure = nullptr;
    for (const auto& r : results) {
        std::cout << ortho_to_json(*r).dump() << "\n";
        if (r->pass) ++passed;
        else if (first_failure.is_null()) first_failure = ortho_to_json(*r);
    }
    json summary{{"kind", "summary"},
                 {"check", "orthogonality"},
                 {"n", n},
                 {"depth", depth},
                 {"cases", results.size()},
                 {"passed", passed},
                 {"failed", results.size() - passed},
                 {"first_failure", first_failure}};
    std::cout << summary.dump() << "\n";
    return passed == results.size() ? kPass : kFail;
}

struct VerifyOpts {
    int max_weight = 6, max_length = 0, n = 1, depth = 1;
    std::string mode = "all", strategy = "recursive";
    unsigned jobs = 1;
    bool ortho = false;
};

int cmd_verify(const VerifyOpts& o) {
    if (o.ortho) return run_ortho(static_cast<std::size_t>(o.n), o.depth, o.jobs);
    if (o.max_weight < 0) throw ParseError("--max-weight must be nonnegative");
    if (o.max_length < 0) throw ParseError("--max-length must be nonnegative");
    std::vector<Mode> modes;
    if (o.mode == "all") modes = {Mode::MacG, Mode::MacE, Mode::JackG, Mode::JackE};
    else modes = {parse_mode(o.mode)};
    const Strategy strategy = parse_strategy(o.strategy);

    struct Case {
        Partition lambda;
        std::optional<Mode> mode;  // empty: degeneration checks
    };
    std::vector<Case> cases;
    bool any_mac = std::any_of(modes.begin(), modes.end(), [](Mode m) { return !is_jack(m); });
    for (int w = 1; w <= o.max_weight; ++w)
        for (const auto& lam : partitions_of(w)) {
            if (o.max_length > 0 && static_cast<int>(lam.length()) > o.max_length) continue;
            for (Mode m : modes) cases.push_back({lam, m});
            if (any_mac) cases.push_back({lam, std::nullopt});
        }

    std::vector<json> lines(cases.size());
    std::vector<char> ok(cases.size(), 0);
    parallel_for(cases.size(), o.jobs, [&](std::size_t i) {
        const Case& c = cases[i];
        VerificationReport rep = c.mode ? verify_expansion(c.lambda, *c.mode, strategy) : degeneration_checks(c.lambda);
        ok[i] = rep.pass;
        json line{{"kind", c.mode ? "expansion" : "degeneration"},
                  {"lambda", c.lambda.parts()},
                  {"mode", c.mode ? std::string(mode_name(*c.mode)) : std::string("mac")},
                  {"status", rep.pass ? "pass" : "fail"},
                  {"discarded", discarded_list(rep.discarded)}};
        if (c.mode) line["strategy"] = strategy_name(strategy);
        if (!rep.pass) {
            line["detail"] = rep.detail;
            line["residual"] = symfun_to_json(rep.residual);
        }
        lines[i] = std::move(line);
    });

    std::size_t passed = 0, discards = 0;
    json first_failure = nullptr;
    for (std::size_t i = 0; i < cases.size(); ++i) {
        std::cout << lines[i].dump() << "\n";
        discards += lines[i]["discarded"].size();
        if (ok[i]) ++passed;
        else if (first_failure.is_null()) first_failure = lines[i];
    }
    json summary{{"kind", "summary"},
                 {"check", "expansion"},
                 {"max_weight", o.max_weight},
                 {"max_length", o.max_length},
                 {"strategy", strategy_name(strategy)},
                 {"cases", cases.size()},
                 {"passed", passed},
                 {"failed", cases.size() - passed},
                 {"discarded_terms", discards},
                 {"first_failure", first_failure}};
    std::cout << summary.dump() << "\n";
    return passed == cases.size() ? kPass : kFail;
}

struct ConvertOpts {
    std::string input, target, format = "json";
};

int cmd_convert(const ConvertOpts& o) {
    check_format(o.format);
    const Basis target = parse_basis(o.target);
    json doc;
    try {
        if (o.input == "-") {
            doc = json::parse(std::cin);
        } else {
            std::ifstream in(o.input);
            if (!in) throw ParseError("cannot open input file '" + o.input + "'");
            doc = json::parse(in);
        }
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("malformed document: expected an object");
    const std::string kind = doc.value("kind", "");
    SymFun f = kind == "expansion" ? reassemble(expansion_from_json(doc))
               : kind == "symfun"  ? symfun_from_json(doc)
                                   : throw ParseError("malformed document: kind must be expansion or symfun");
    SymFun out = convert(f, target);
    if (o.format == "json") std::cout << symfun_to_json(out).dump() << "\n";
    else std::cout << (o.format == "latex" ? symfun_to_latex(out) : symfun_to_text(out)) << "\n";
    return kPass;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Macdonald and Jack expansions in one-row functions"};
    app.require_subcommand(1);

    ExpandOpts eo;
    auto* expand = app.add_subcommand("expand", "Expand Q_lambda (g modes) or P_lambda (e modes)");
    expand->add_option("--lambda", eo.lambda, "Partition, e.g. 2,1,1 or 1^2,2")->required();
    expand->add_option("--mode", eo.mode, "mac-g, mac-e, jack-g or jack-e")->capture_default_str();
    expand->add_option("--strategy", eo.strategy, "recursive, direct or step")->capture_default_str();
    expand->add_option("--format", eo.format, "text, latex or json")->capture_default_str();
    expand->add_option("--cache-dir", eo.cache_dir, "Cache directory (overrides PIERI_FORGE_CACHE)");

    VerifyOpts vo;
    auto* verify = app.add_subcommand("verify", "Check expansions against the Gram-Schmidt oracle");
    verify->add_option("--max-weight", vo.max_weight, "Largest |lambda|")->capture_default_str();
    verify->add_option("--max-length", vo.max_length, "Largest length; 0 for no bound")->capture_default_str();
    verify->add_option("--mode", vo.mode, "A mode or 'all'")->capture_default_str();
    verify->add_option("--strategy", vo.strategy, "recursive or direct")->capture_default_str();
    verify->add_option("--jobs", vo.jobs, "Worker threads")->capture_default_str()->check(CLI::PositiveNumber);
    verify->add_flag("--ortho", vo.ortho, "Run the orthogonality certificate instead");
    verify->add_option("--n", vo.n, "Number of u variables (with --ortho)")->capture_default_str();
    verify->add_option("--depth", vo.depth, "Bound on beta entries (with --ortho)")->capture_default_str();

    ConvertOpts co;
    auto* conv = app.add_subcommand("convert", "Re-express a stored expansion or symmetric function");
    conv->add_option("--input", co.input, "JSON file, or - for stdin")->required();
    conv->add_option("--target", co.target, "p, m, e or g")->required();
    conv->add_option("--format", co.format, "text, latex or json")->capture_default_str();

    PieriOpts po;
    auto* pieri = app.add_subcommand("pieri", "Pieri expansion of Q_lambda * g_row");
    pieri->add_option("--lambda", po.lambda, "Partition")->required();
    pieri->add_option("--row", po.row, "Added row length r")->required()->check(CLI::NonNegativeNumber);
    pieri->add_option("--format", po.format, "text, latex or json")->capture_default_str();

    std::size_t on = 1;
    int odepth = 1;
    unsigned ojobs = 1;
    auto* ortho = app.add_subcommand("ortho", "Orthogonality certificate of the inverse Pieri matrices");
    ortho->add_option("--n", on, "Number of u variables")->capture_default_str();
    ortho->add_option("--depth", odepth, "Bound on beta entries")->capture_default_str();
    ortho->add_option("--jobs", ojobs, "Worker threads")->capture_default_str()->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kPass : kUsage;
    }

    try {
        if (*expand) return cmd_expand(eo);
        if (*verify) return cmd_verify(vo);
        if (*conv) return cmd_convert(co);
        if (*pieri) return cmd_pieri(po);
        if (*ortho) return run_ortho(on, odepth, ojobs);
    } catch (const SpecializationError& e) {
        std::cerr << "specialization error: " << e.what() << "\n";
        return kSingular;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const ContextError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
