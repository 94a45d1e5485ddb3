// Copyright 2026 feaskit developers
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

// Release gate for the whole toolkit.  Ten independent checks, each
// printed as one [PASS]/[FAIL] line; the process exits nonzero if any
// fails.  Unlike the unit suite this runs at sweep sizes (hundreds of
// random instances per check) and cross-examines components against the
// brute-force oracles in oracles.hpp and against each other.  Runs as a
// plain binary so the output reads like a report; pass --cli PATH so the
// last check can re-run the command-line tool and diff its outputs.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "feaskit/chains.hpp"
#include "feaskit/datagen.hpp"
#include "feaskit/embedding.hpp"
#include "feaskit/encoders.hpp"
#include "feaskit/exact.hpp"
#include "feaskit/fjump.hpp"
#include "feaskit/generators.hpp"
#include "feaskit/graph.hpp"
#include "feaskit/model.hpp"
#include "feaskit/rng.hpp"
#include "feaskit/screening.hpp"
#include "feaskit/select.hpp"
#include "feaskit/verify.hpp"
#include "oracles.hpp"

namespace {

using feaskit::Assignment;
using feaskit::Candidate;
using feaskit::Claim;
using feaskit::Embedding;
using feaskit::Graph;
using feaskit::TaskKind;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// One check outcome.  `detail` carries the headline numbers on success and
// the first observed contradiction on failure.
struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

Check passed(std::string name, std::string detail) { return {std::move(name), true, std::move(detail)}; }
Check failed(std::string name, std::string detail) { return {std::move(name), false, std::move(detail)}; }

std::string fmt_secs(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1fs", s);
    return buf;
}

// ---------------------------------------------------------------------
// Random instance pools.  Everything downstream is seeded, so the sweeps
// are reproducible run to run.

Graph gen(const std::string& family, std::map<std::string, double> params, std::uint64_t seed) {
    feaskit::GraphSpec spec;
    spec.family = family;
    spec.params = std::move(params);
    spec.seed = seed;
    return feaskit::generate(spec);
}

// Problem graphs for the screening sweep: a grab bag of families so the
// rejection conditions all get exercised (dense cliques for the budgets,
// hubs for the degree bound, sparse rings that should pass).
Graph sample_problem_graph(feaskit::Rng& rng) {
    int n = static_cast<int>(rng.range_int(2, 8));
    switch (rng.below(4)) {
        case 0:
            return gen("er", {{"n", double(n)}, {"p", rng.range_real(0.25, 0.95)}}, rng.next_u64());
        case 1: {
            int m = static_cast<int>(rng.range_int(1, std::min(3, n - 1)));
            return gen("ba", {{"n", double(n)}, {"m", double(m)}}, rng.next_u64());
        }
        case 2: {
            if (n < 4) n = 4;
            return gen("ws", {{"n", double(n)}, {"k", 2}, {"beta", 0.3}}, rng.next_u64());
        }
        default: {
            if (n < 3) n = 3;
            int d = (n >= 4 && n % 2 == 0 && rng.bernoulli(0.5)) ? 3 : 2;
            return gen("regular", {{"n", double(n)}, {"d", double(d)}}, rng.next_u64());
        }
    }
}

Graph sample_hardware_graph(feaskit::Rng& rng) {
    switch (rng.below(4)) {
        case 0: {
            int n = static_cast<int>(rng.range_int(4, 14));
            return gen("er", {{"n", double(n)}, {"p", rng.range_real(0.15, 0.6)}}, rng.next_u64());
        }
        case 1: {
            int n = static_cast<int>(rng.range_int(4, 14));
            if (n % 2 != 0) ++n;
            return gen("regular", {{"n", double(n)}, {"d", 3}}, rng.next_u64());
        }
        case 2: {
            int n = static_cast<int>(rng.range_int(6, 14));
            return gen("ws", {{"n", double(n)}, {"k", 4}, {"beta", 0.2}}, rng.next_u64());
        }
        default: {
            int cols = static_cast<int>(rng.range_int(1, 2));
            int shore = static_cast<int>(rng.range_int(2, 3));
            return feaskit::chimera_graph(1, cols, shore);
        }
    }
}

// ---------------------------------------------------------------------
// Structured walks over the feasible sets of the two encodings.  The
// assignment equalities force exactly one chain (or color) per problem
// vertex, so every feasible point of the model lives inside the walked
// family; the walk plus Model::is_feasible at the leaves is therefore an
// exhaustive enumeration.  `fn` returns true to stop early.

void walk_embedding_leaves(const feaskit::EmbeddingEncoding& enc,
                           const std::function<bool(const Assignment&)>& fn) {
    int np = static_cast<int>(enc.candidates.size());
    Assignment x(static_cast<std::size_t>(enc.model.num_vars()), 0);
    std::vector<std::vector<int>> vars_by_vertex(static_cast<std::size_t>(np));
    for (int v = 0; v < enc.model.num_vars(); ++v)
        vars_by_vertex[static_cast<std::size_t>(enc.var_info[static_cast<std::size_t>(v)].first)].push_back(v);

    std::vector<char> used(static_cast<std::size_t>(enc.family->hardware().num_vertices()), 0);
    auto overlap = [&](int chain_idx) {
        for (int v : enc.family->chain(chain_idx).vertices)
            if (used[static_cast<std::size_t>(v)]) return true;
        return false;
    };
    auto mark = [&](int chain_idx, char flag) {
        for (int v : enc.family->chain(chain_idx).vertices) used[static_cast<std::size_t>(v)] = flag;
    };

    auto rec = [&](auto&& self, int i) -> bool {
        if (i == np) return enc.model.is_feasible(x) && fn(x);
        for (int var : vars_by_vertex[static_cast<std::size_t>(i)]) {
            int chain_idx = enc.var_info[static_cast<std::size_t>(var)].second;
            if (overlap(chain_idx)) continue;
            x[static_cast<std::size_t>(var)] = 1;
            mark(chain_idx, 1);
            bool stop = self(self, i + 1);
            mark(chain_idx, 0);
            x[static_cast<std::size_t>(var)] = 0;
            if (stop) return true;
        }
        return false;
    };
    rec(rec, 0);
}

void walk_coloring_tuples(const feaskit::ColoringEncoding& enc,
                          const std::function<bool(const std::vector<int>&)>& fn) {
    std::vector<int> colors(static_cast<std::size_t>(enc.num_vertices), 0);
    auto rec = [&](auto&& self, int v) -> bool {
        if (v == enc.num_vertices) return fn(colors);
        for (int c = 0; c < enc.palette; ++c) {
            colors[static_cast<std::size_t>(v)] = c;
            if (self(self, v + 1)) return true;
        }
        return false;
    };
    rec(rec, 0);
}

Assignment one_hot_coloring(const feaskit::ColoringEncoding& enc, const std::vector<int>& colors) {
    Assignment x(static_cast<std::size_t>(enc.model.num_vars()), 0);
    for (int v = 0; v < enc.num_vertices; ++v)
        x[static_cast<std::size_t>(enc.color_var(v, colors[static_cast<std::size_t>(v)]))] = 1;
    return x;
}

// ---------------------------------------------------------------------
// Reference instances shared with the unit suite (a 9-vertex problem on a
// 24-qubit hardware graph, and a 12-vertex coloring graph) plus the two
// rendered answers that must keep parsing forever.

Graph demo_problem() {
    return Graph::from_edges(9, {{0, 4}, {0, 5}, {0, 7}, {0, 8}, {1, 2}, {1, 3},
                                 {1, 6}, {1, 8}, {2, 4}, {2, 7}, {2, 8}, {3, 5},
                                 {3, 6}, {3, 7}, {4, 6}, {4, 8}, {5, 6}, {5, 7}});
}

Embedding demo_embedding() {
    return Embedding{{0, {6, 14}},     {1, {1, 7, 15}},   {2, {4}},
                     {3, {16, 23}},    {4, {3, 5}},       {5, {18, 22}},
                     {6, {8, 13, 21}}, {7, {10, 12, 20}}, {8, {0}}};
}

Graph demo_coloring_graph() {
    return Graph::from_edges(12, {{0, 9}, {0, 10}, {0, 11}, {0, 4}, {1, 11}, {1, 4}, {1, 7},
                                  {2, 6}, {2, 5},  {3, 8},  {3, 9}, {4, 7},  {4, 5}, {4, 10},
                                  {5, 9}, {5, 11}, {7, 10}, {8, 9}, {9, 11}});
}

const char* kFrozenEmbeddingAnswer =
    "yes, embedding: {\"0\": [6,14], \"1\": [1,7,15], \"2\": [4], \"3\": [16,23], "
    "\"4\": [3,5], \"5\": [18,22], \"6\": [8,13,21], \"7\": [10,12,20], \"8\": [0]}, "
    "total nodes used: 19";

const char* kFrozenColoringAnswer = "Yes, coloring: [0, 1, 1, 2, 2, 0, 0, 0, 0, 1, 1, 2]";

// ---------------------------------------------------------------------
// Check 1: every instance the zero-phase screen rejects really is
// infeasible.  The exhaustive search never consults the screen, so a
// Feasible (or even Unknown) outcome here would be a genuine soundness
// hole, not a disagreement about budgets.

Check check_screening_soundness() {
    const std::string name = "screening-soundness";
    auto t0 = Clock::now();
    feaskit::Rng rng(0x5c2ee11);
    int rejects = 0, passes = 0;
    for (int i = 0; i < 500; ++i) {
        Graph p = sample_problem_graph(rng);
        Graph h = sample_hardware_graph(rng);
        int max_chain = static_cast<int>(rng.range_int(1, 3));
        feaskit::ScreenResult sr = feaskit::zero_phase_screen(p, h, max_chain);
        if (sr.pass) {
            ++passes;
            continue;
        }
        ++rejects;
        feaskit::Certificate cert = feaskit::exact_embed(p, h, max_chain);
        if (cert.outcome != feaskit::Outcome::Infeasible) {
            std::ostringstream os;
            os << "instance " << i << " (|P|=" << p.num_vertices() << ", |H|=" << h.num_vertices()
               << ", L=" << max_chain << ") rejected by " << feaskit::to_string(*sr.violated)
               << " but exhaustive search says " << feaskit::to_string(cert.outcome);
            return failed(name, os.str());
        }
    }
    double el = seconds_since(t0);
    if (rejects == 0 || passes == 0) return failed(name, "degenerate sweep: no mix of rejects and passes");
    if (el >= 60.0) return failed(name, "took " + fmt_secs(el) + ", budget is 60s");
    std::ostringstream os;
    os << "500 instances, " << rejects << " rejects all confirmed infeasible by exhaustive search, "
       << fmt_secs(el);
    return passed(name, os.str());
}

// ---------------------------------------------------------------------
// Check 2: the chain enumerator agrees with brute-force subset filtering,
// and every cached quantity (internal edge count, boundary, adjacency
// rows) matches a recomputation straight from the hardware graph.

Check check_chain_enumeration() {
    const std::string name = "chain-enumeration-oracle";
    auto t0 = Clock::now();
    feaskit::Rng rng(0xc4a15);
    for (int t = 0; t < 200; ++t) {
        int n = static_cast<int>(rng.range_int(2, 12));
        Graph g = rng.below(5) == 0
                      ? gen("ws", {{"n", double(std::max(n, 5))}, {"k", 2}, {"beta", 0.25}}, rng.next_u64())
                      : gen("er", {{"n", double(n)}, {"p", rng.range_real(0.15, 0.7)}}, rng.next_u64());
        int max_chain = static_cast<int>(rng.range_int(1, 3));
        feaskit::ChainFamily fam = feaskit::enumerate_chains(g, max_chain);

        const int family_size = static_cast<int>(fam.size());
        std::set<std::vector<int>> got;
        for (int i = 0; i < family_size; ++i) got.insert(fam.chain(i).vertices);
        std::set<std::vector<int>> want;
        for (std::uint32_t mask : oracle::connected_subset_masks(g, max_chain))
            want.insert(oracle::mask_to_vertices(mask));
        if (got != want) {
            std::ostringstream os;
            os << "graph " << t << ": enumerator lists " << got.size() << " chains, subset filter "
               << want.size();
            return failed(name, os.str());
        }

        for (int i = 0; i < family_size; ++i) {
            const feaskit::Chain& ch = fam.chain(i);
            std::set<int> members(ch.vertices.begin(), ch.vertices.end());
            int internal = 0;
            std::set<int> boundary;
            for (int u : ch.vertices)
                for (int w : g.neighbors(u)) {
                    if (members.count(w)) {
                        if (u < w) ++internal;
                    } else {
                        boundary.insert(w);
                    }
                }
            if (internal != ch.internal_edges ||
                std::vector<int>(boundary.begin(), boundary.end()) != ch.boundary)
                return failed(name, "graph " + std::to_string(t) + ": cached edge/boundary data is stale");

            std::vector<int> direct;
            for (int j = 0; j < family_size; ++j) {
                bool touch = false;
                if (j != i)
                    for (int u : ch.vertices) {
                        for (int w : fam.chain(j).vertices)
                            if (u != w && g.has_edge(u, w)) {
                                touch = true;
                                break;
                            }
                        if (touch) break;
                    }
                if (touch) direct.push_back(j);
                if (touch != feaskit::chains_adjacent(fam, i, j))
                    return failed(name, "graph " + std::to_string(t) + ": chains_adjacent disagrees");
            }
            if (fam.gamma(i) != direct)
                return failed(name, "graph " + std::to_string(t) + ": cached adjacency row is wrong");
        }
    }
    double el = seconds_since(t0);
    if (el >= 30.0) return failed(name, "took " + fmt_secs(el) + ", budget is 30s");
    return passed(name, "200 graphs, chain sets and all cached rows match recomputation, " + fmt_secs(el));
}

// ---------------------------------------------------------------------
// Check 3: the binary encodings are sound and complete at sizes where the
// models can be enumerated outright.  Feasibility of the model must match
// the brute-force oracle exactly, and everything decoded from a feasible
// point must survive the verifier.

Check check_encoder_agreement() {
    const std::string name = "encoder-oracle-agreement";
    auto t0 = Clock::now();
    feaskit::Rng rng(0xe2c0de);

    int emb_feasible = 0;
    for (int t = 0; t < 300; ++t) {
        int np = static_cast<int>(rng.range_int(2, 6));
        int nh = static_cast<int>(rng.range_int(3, 8));
        int max_chain = static_cast<int>(rng.range_int(1, 2));
        Graph p = gen("er", {{"n", double(np)}, {"p", rng.range_real(0.3, 0.95)}}, rng.next_u64());
        Graph h = rng.below(5) == 0
                      ? feaskit::chimera_graph(1, 1, static_cast<int>(rng.range_int(2, 4)))
                      : gen("er", {{"n", double(nh)}, {"p", rng.range_real(0.3, 0.8)}}, rng.next_u64());

        bool truth = oracle::embeddable(p, h, max_chain);
        feaskit::ScreenResult sr = feaskit::zero_phase_screen(p, h, max_chain);
        bool model_feasible = false;
        std::string bad_decode;
        if (sr.pass) {
            auto fam = std::make_shared<const feaskit::ChainFamily>(feaskit::enumerate_chains(h, max_chain));
            std::optional<feaskit::EmbeddingEncoding> enc;
            try {
                enc = feaskit::encode_embedding(p, fam, sr.min_sizes);
            } catch (const std::invalid_argument&) {
                // some vertex has no admissible chain, so there is no model
            }
            if (enc) {
                int decoded = 0;
                walk_embedding_leaves(*enc, [&](const Assignment& x) {
                    model_feasible = true;
                    Embedding e = feaskit::decode_embedding(*enc, x);
                    feaskit::EmbeddingReport rep = feaskit::verify_embedding(p, h, max_chain, e);
                    if (!rep.valid) bad_decode = "decoded embedding fails the verifier";
                    return ++decoded >= 25 || !bad_decode.empty();
                });
            }
        } else if (truth) {
            return failed(name, "embedding " + std::to_string(t) + ": screen rejected a feasible instance");
        }
        if (!bad_decode.empty()) return failed(name, "embedding " + std::to_string(t) + ": " + bad_decode);
        if (model_feasible != truth) {
            std::ostringstream os;
            os << "embedding " << t << ": model says " << (model_feasible ? "feasible" : "infeasible")
               << ", oracle says the opposite";
            return failed(name, os.str());
        }
        if (truth) ++emb_feasible;
    }

    int col_feasible = 0;
    for (int t = 0; t < 300; ++t) {
        int n = static_cast<int>(rng.range_int(2, 8));
        int k = static_cast<int>(rng.range_int(1, 3));
        Graph g = gen("er", {{"n", double(n)}, {"p", rng.range_real(0.2, 0.9)}}, rng.next_u64());
        feaskit::ColoringEncoding enc = feaskit::encode_kcoloring(g, k);

        bool truth = oracle::colorable(g, k);
        bool model_feasible = false;
        std::string bad_decode;
        int seen = 0;
        walk_coloring_tuples(enc, [&](const std::vector<int>& colors) {
            if (!enc.model.is_feasible(one_hot_coloring(enc, colors))) return false;
            model_feasible = true;
            if (feaskit::decode_coloring(enc, one_hot_coloring(enc, colors)) != colors ||
                !feaskit::verify_coloring(g, k, colors).valid)
                bad_decode = "feasible tuple fails decode or verification";
            return ++seen >= 25 || !bad_decode.empty();
        });
        if (!bad_decode.empty()) return failed(name, "coloring " + std::to_string(t) + ": " + bad_decode);
        if (model_feasible != truth) {
            std::ostringstream os;
            os << "coloring " << t << " (n=" << n << ", k=" << k << "): model says "
               << (model_feasible ? "feasible" : "infeasible") << ", oracle says the opposite";
            return failed(name, os.str());
        }
        if (truth) ++col_feasible;
    }

    double el = seconds_since(t0);
    std::ostringstream os;
    os << "300+300 instances in exact agreement with brute force (" << emb_feasible << "/" << col_feasible
       << " feasible), every decode verified, " << fmt_secs(el);
    return passed(name, os.str());
}

// ---------------------------------------------------------------------
// Check 4: the jump search never claims feasibility on an instance the
// oracle proves unsatisfiable, and every feasible claim survives a full
// independent re-evaluation (model recheck plus task verifier).

Check check_jump_search_soundness() {
    const std::string name = "jump-search-soundness";
    auto t0 = Clock::now();
    feaskit::Rng rng(0xf12e5);
    int unsat_runs = 0, feasible_claims = 0;
    for (int t = 0; t < 1000; ++t) {
        feaskit::FjConfig cfg;
        cfg.max_iterations = 100'000;
        cfg.seed = feaskit::derive_seed(0xf12e5, static_cast<std::uint64_t>(t));

        if (t % 2 == 0) {
            int n = static_cast<int>(rng.range_int(4, 7));
            int k = static_cast<int>(rng.range_int(2, 3));
            Graph g = gen("er", {{"n", double(n)}, {"p", rng.range_real(0.4, 0.95)}}, rng.next_u64());
            bool truth = oracle::colorable(g, k);
            feaskit::ColoringEncoding enc = feaskit::encode_kcoloring(g, k);
            feaskit::FjResult res = feaskit::fj_search(
                enc.model, Assignment(static_cast<std::size_t>(enc.model.num_vars()), 0), cfg);
            if (!truth) ++unsat_runs;
            if (res.status == feaskit::FjStatus::Feasible) {
                ++feasible_claims;
                if (!truth)
                    return failed(name, "coloring " + std::to_string(t) + ": feasible claim on an unsat instance");
                std::vector<int> colors = feaskit::decode_coloring(enc, res.assignment);
                if (!enc.model.is_feasible(res.assignment) || !feaskit::verify_coloring(g, k, colors).valid)
                    return failed(name, "coloring " + std::to_string(t) + ": claim fails re-evaluation");
            }
        } else {
            int np = static_cast<int>(rng.range_int(2, 5));
            int nh = static_cast<int>(rng.range_int(np, 7));
            int max_chain = static_cast<int>(rng.range_int(1, 2));
            Graph p = gen("er", {{"n", double(np)}, {"p", rng.range_real(0.4, 1.0)}}, rng.next_u64());
            Graph h = gen("er", {{"n", double(nh)}, {"p", rng.range_real(0.25, 0.7)}}, rng.next_u64());
            feaskit::ScreenResult sr = feaskit::zero_phase_screen(p, h, max_chain);
            if (!sr.pass) continue;  // no model to run the search on
            auto fam = std::make_shared<const feaskit::ChainFamily>(feaskit::enumerate_chains(h, max_chain));
            std::optional<feaskit::EmbeddingEncoding> enc;
            try {
                enc = feaskit::encode_embedding(p, fam, sr.min_sizes);
            } catch (const std::invalid_argument&) {
                continue;
            }
            bool truth = oracle::embeddable(p, h, max_chain);
            feaskit::FjResult res = feaskit::fj_search(
                enc->model, Assignment(static_cast<std::size_t>(enc->model.num_vars()), 0), cfg);
            if (!truth) ++unsat_runs;
            if (res.status == feaskit::FjStatus::Feasible) {
                ++feasible_claims;
                if (!truth)
                    return failed(name, "embedding " + std::to_string(t) + ": feasible claim on an unsat instance");
                Embedding e = feaskit::decode_embedding(*enc, res.assignment);
                if (!enc->model.is_feasible(res.assignment) ||
                    !feaskit::verify_embedding(p, h, max_chain, e).valid)
                    return failed(name, "embedding " + std::to_string(t) + ": claim fails re-evaluation");
            }
        }
    }
    double el = seconds_since(t0);
    if (unsat_runs < 100) return failed(name, "only " + std::to_string(unsat_runs) + " unsat runs, sweep too thin");
    std::ostringstream os;
    os << "1000 instances, " << unsat_runs << " unsat searches with zero false claims, " << feasible_claims
       << " feasible claims all re-verified, " << fmt_secs(el);
    return passed(name, os.str());
}

// ---------------------------------------------------------------------
// Checks 5 and 6 share one pool: 3-coloring instances whose feasibility
// the exact search certified, along with a witness coloring.  Check 5
// runs the jump search cold (all-zeros start); check 6 reruns it from the
// witness with a tenth of the variables flipped and compares.

struct WarmStartPool {
    struct Entry {
        Graph g;
        std::vector<int> witness;
        std::uint64_t seed = 0;
        bool zero_ok = false;
        long long zero_iters = 0;
    };
    std::vector<Entry> entries;
};

WarmStartPool collect_warm_start_pool(int count) {
    WarmStartPool pool;
    feaskit::Rng rng(0x3c01a);
    feaskit::SearchBudget cert_budget{2'000'000, std::nullopt};
    while (static_cast<int>(pool.entries.size()) < count) {
        int n = static_cast<int>(rng.range_int(10, 60));
        double degree = rng.range_real(3.0, 5.2);
        std::uint64_t seed = rng.next_u64();
        Graph g = gen("er", {{"n", double(n)}, {"p", degree / (n - 1)}}, seed);
        feaskit::Certificate cert = feaskit::exact_color(g, 3, cert_budget);
        if (cert.outcome != feaskit::Outcome::Feasible) continue;
        pool.entries.push_back({std::move(g), *cert.coloring, seed, false, 0});
    }
    return pool;
}

Check check_jump_search_success_rate(WarmStartPool& pool) {
    const std::string name = "jump-search-success-rate";
    auto t0 = Clock::now();
    pool = collect_warm_start_pool(200);
    int solved = 0;
    for (auto& entry : pool.entries) {
        feaskit::ColoringEncoding enc = feaskit::encode_kcoloring(entry.g, 3);
        feaskit::FjConfig cfg;
        cfg.max_iterations = 1'000'000;
        cfg.time_limit_s = 5.0;
        cfg.seed = feaskit::derive_seed(entry.seed, 21);
        feaskit::FjResult res =
            feaskit::fj_search(enc.model, Assignment(static_cast<std::size_t>(enc.model.num_vars()), 0), cfg);
        entry.zero_ok = res.status == feaskit::FjStatus::Feasible;
        entry.zero_iters = res.iterations;
        if (!entry.zero_ok) continue;
        if (!feaskit::verify_coloring(entry.g, 3, feaskit::decode_coloring(enc, res.assignment)).valid)
            return failed(name, "a feasible claim failed the coloring verifier");
        ++solved;
    }
    double el = seconds_since(t0);
    std::ostringstream os;
    os << solved << "/200 certified-sat instances solved from a cold start (need 180), " << fmt_secs(el);
    if (solved < 180) return failed(name, os.str());
    if (el >= 600.0) return failed(name, "took " + fmt_secs(el) + ", budget is 600s");
    return passed(name, os.str());
}

Check check_warm_start_speedup(WarmStartPool& pool) {
    const std::string name = "warm-start-speedup";
    if (pool.entries.empty()) return failed(name, "no instance pool (previous check aborted)");
    auto t0 = Clock::now();

    int zero_ok = 0, warm_ok = 0;
    std::vector<long long> zero_iters, warm_iters;
    for (auto& entry : pool.entries) {
        feaskit::ColoringEncoding enc = feaskit::encode_kcoloring(entry.g, 3);
        Assignment start = one_hot_coloring(enc, entry.witness);

        feaskit::Rng flip_rng(feaskit::derive_seed(entry.seed, 22));
        int flips = std::max(1, enc.model.num_vars() / 10);
        for (int var : flip_rng.sample_without_replacement(enc.model.num_vars(), flips))
            start[static_cast<std::size_t>(var)] = 1 - start[static_cast<std::size_t>(var)];

        feaskit::FjConfig cfg;
        cfg.max_iterations = 1'000'000;
        cfg.time_limit_s = 5.0;
        cfg.seed = feaskit::derive_seed(entry.seed, 23);
        feaskit::FjResult res = feaskit::fj_search(enc.model, std::move(start), cfg);

        if (entry.zero_ok) {
            ++zero_ok;
            zero_iters.push_back(entry.zero_iters);
        }
        if (res.status == feaskit::FjStatus::Feasible) {
            ++warm_ok;
            warm_iters.push_back(res.iterations);
        }
    }

    auto median = [](std::vector<long long> v) -> double {
        std::sort(v.begin(), v.end());
        std::size_t m = v.size() / 2;
        return v.size() % 2 ? double(v[m]) : (double(v[m - 1]) + double(v[m])) / 2.0;
    };
    if (zero_iters.empty() || warm_iters.empty())
        return failed(name, "one of the arms never reached feasibility");
    double ratio = median(warm_iters) / median(zero_iters);
    double el = seconds_since(t0);
    std::ostringstream os;
    os << "median iterations warm/cold = " << median(warm_iters) << "/" << median(zero_iters) << " = ";
    char rbuf[32];
    std::snprintf(rbuf, sizeof rbuf, "%.3f", ratio);
    os << rbuf << " (need <= 0.6), success " << warm_ok << " warm vs " << zero_ok << " cold, " << fmt_secs(el);
    if (ratio > 0.6 || warm_ok < zero_ok) return failed(name, os.str());
    return passed(name, os.str());
}

// ---------------------------------------------------------------------
// Check 7: the chain-thinning pass only ever accepts verified, strictly
// smaller embeddings, never returns something worse than its input, and
// actually shrinks clearly padded inputs most of the time.

Check check_chain_thinning_invariants() {
    const std::string name = "chain-thinning-invariants";
    auto t0 = Clock::now();
    feaskit::Rng rng(0x7513);

    int done = 0, eligible = 0, improved = 0;
    for (std::uint64_t attempt = 0; done < 100; ++attempt) {
        if (attempt > 3000) return failed(name, "could not collect 100 feasible embeddings");
        int np = static_cast<int>(rng.range_int(4, 7));
        Graph p = gen("er", {{"n", double(np)}, {"p", rng.range_real(0.4, 0.8)}}, rng.next_u64());
        Graph h;
        switch (rng.below(3)) {
            case 0: h = feaskit::chimera_graph(1, 1, 4); break;
            case 1:
                h = gen("er", {{"n", double(rng.range_int(8, 12))}, {"p", rng.range_real(0.35, 0.6)}},
                        rng.next_u64());
                break;
            default: h = gen("ws", {{"n", 12}, {"k", 4}, {"beta", 0.2}}, rng.next_u64()); break;
        }
        const int max_chain = 3;
        if (!feaskit::zero_phase_screen(p, h, max_chain).pass) continue;
        feaskit::Certificate first = feaskit::exact_embed(p, h, max_chain, {10'000'000, std::nullopt});
        if (first.outcome != feaskit::Outcome::Feasible) continue;
        feaskit::Certificate best = feaskit::exact_embed(p, h, max_chain, {30'000'000, std::nullopt}, true);
        std::optional<long long> optimum;
        if (best.outcome == feaskit::Outcome::Feasible) optimum = best.objective;

        // Pad every chain up to the size cap with unused neighboring
        // vertices.  Still a valid embedding (all problem edges were
        // realized before the padding), just a wasteful one.
        Embedding initial = *first.embedding;
        std::vector<char> used(static_cast<std::size_t>(h.num_vertices()), 0);
        for (const auto& [v, chain] : initial)
            for (int w : chain) used[static_cast<std::size_t>(w)] = 1;
        bool grew = true;
        while (grew) {
            grew = false;
            for (auto& [v, chain] : initial) {
                if (static_cast<int>(chain.size()) >= max_chain) continue;
                std::vector<int> cands;
                for (int u : chain)
                    for (int w : h.neighbors(u))
                        if (!used[static_cast<std::size_t>(w)]) cands.push_back(w);
                if (cands.empty()) continue;
                int w = cands[static_cast<std::size_t>(rng.below(cands.size()))];
                chain.push_back(w);
                used[static_cast<std::size_t>(w)] = 1;
                grew = true;
            }
        }
        if (!feaskit::verify_embedding(p, h, max_chain, initial).valid)
            return failed(name, "padded embedding unexpectedly fails the verifier");
        int initial_size = feaskit::embedding_total_vertices(initial);

        int prev = initial_size;
        std::string audit;
        feaskit::Phase2Config cfg;
        cfg.seed = feaskit::derive_seed(0x7513, attempt);
        cfg.on_accept = [&](const Embedding& e, int phi) {
            if (phi != feaskit::embedding_total_vertices(e)) audit = "reported size is off";
            else if (phi >= prev) audit = "accepted move does not shrink the embedding";
            else if (!feaskit::verify_embedding(p, h, max_chain, e).valid)
                audit = "accepted move breaks feasibility";
            prev = phi;
        };
        Embedding thinned = feaskit::fj_phase2(p, h, max_chain, initial, cfg);
        if (!audit.empty()) return failed(name, audit);
        int final_size = feaskit::embedding_total_vertices(thinned);
        if (!feaskit::verify_embedding(p, h, max_chain, thinned).valid)
            return failed(name, "thinned embedding fails the verifier");
        if (final_size > initial_size || final_size != prev)
            return failed(name, "thinning returned a larger embedding than it was given");

        ++done;
        if (optimum && initial_size >= *optimum + 2) {
            ++eligible;
            if (final_size < initial_size) ++improved;
        }
    }
    double el = seconds_since(t0);
    if (eligible < 10)
        return failed(name, "only " + std::to_string(eligible) + " runs started 2+ vertices above optimum");
    std::ostringstream os;
    os << "100 runs, every accepted move verified and strictly shrinking, " << improved << "/" << eligible
       << " padded starts improved (need half), " << fmt_secs(el);
    if (2 * improved < eligible) return failed(name, os.str());
    return passed(name, os.str());
}

// ---------------------------------------------------------------------
// Check 8: the best-of-N selection rule, branch by branch, on pools with
// known right answers.  A verified candidate must always win with the
// smallest objective (ties to the earliest), refusals need a strict
// majority of the whole pool, and malformed answers dilute the vote.

Check check_answer_selection_policy() {
    const std::string name = "answer-selection-policy";

    Graph k2 = Graph::from_edges(2, {{0, 1}});
    Graph p3 = Graph::from_edges(3, {{0, 1}, {1, 2}});
    Graph triangle = Graph::from_edges(3, {{0, 1}, {0, 2}, {1, 2}});

    const std::string yes_big = feaskit::render_embedding_yes(Embedding{{0, {0, 1}}, {1, {2}}});
    const std::string yes_small = feaskit::render_embedding_yes(Embedding{{0, {1}}, {1, {2}}});
    const std::string yes_small2 = feaskit::render_embedding_yes(Embedding{{0, {1}}, {1, {0}}});
    const std::string yes_overlap = "yes, embedding: {\"0\": [0], \"1\": [0]}, total nodes used: 2";
    const std::string yes_lie = "yes, embedding: {\"0\": [1], \"1\": [2]}, total nodes used: 5";
    const std::string junk = "the embedding is probably fine";

    const std::string col_good = feaskit::render_coloring_yes({0, 1, 2});
    const std::string col_bad = feaskit::render_coloring_yes({0, 0, 1});

    const std::string min_honest = feaskit::render_mincoloring(2, {0, 1, 0});
    const std::string min_inflated = feaskit::render_mincoloring(3, {0, 1, 0});
    const std::string min_loose = feaskit::render_mincoloring(2, {0, 2, 0});

    struct PoolCase {
        TaskKind kind;
        std::vector<std::string> texts;
        bool want_yes;
        feaskit::VerdictBasis want_basis;
        int want_chosen;          // -1 when the basis is Majority
        long long want_objective; // -1 when none
    };
    using B = feaskit::VerdictBasis;
    const TaskKind E = TaskKind::Embedding, K = TaskKind::KColoring, M = TaskKind::MinColoring;
    std::vector<PoolCase> cases = {
        {E, {yes_small}, true, B::Certificate, 0, 2},
        {E, {"no"}, false, B::Majority, -1, -1},
        {E, {junk}, true, B::Majority, -1, -1},
        {E, {yes_overlap}, true, B::Majority, -1, -1},
        {E, {yes_big, yes_small}, true, B::Certificate, 1, 2},
        {E, {yes_small, yes_big}, true, B::Certificate, 0, 2},
        {E, {yes_small, yes_small2}, true, B::Certificate, 0, 2},
        {E, {"no", yes_overlap}, true, B::Majority, -1, -1},  // 1 of 2 is not a strict majority
        {E, {"no", "no"}, false, B::Majority, -1, -1},
        {E, {"no", junk}, true, B::Majority, -1, -1},
        {E, {junk, junk, junk}, true, B::Majority, -1, -1},
        {E, {"no", "no", yes_overlap}, false, B::Majority, -1, -1},
        {E, {"no", "no", "no", yes_small}, true, B::Certificate, 3, 2},
        {E, {yes_lie, "no"}, true, B::Majority, -1, -1},
        {E, {yes_lie}, true, B::Majority, -1, -1},
        {E, {"no", "no", yes_small, junk, "no"}, true, B::Certificate, 2, 2},
        {K, {col_good, "No", "No"}, true, B::Certificate, 0, 0},
        {K, {"No", "No", col_bad}, false, B::Majority, -1, -1},
        {K, {col_bad, col_bad}, true, B::Majority, -1, -1},
        {K, {"No"}, false, B::Majority, -1, -1},
        {M, {min_inflated, min_honest}, true, B::Certificate, 1, 2},
        {M, {min_loose, min_honest}, true, B::Certificate, 1, 2},
        {M, {min_inflated}, true, B::Majority, -1, -1},
        {M, {"no"}, true, B::Majority, -1, -1},  // not part of the grammar, counts as malformed
    };

    for (std::size_t i = 0; i < cases.size(); ++i) {
        const PoolCase& pc = cases[i];
        std::vector<Candidate> pool;
        pool.reserve(pc.texts.size());
        for (const std::string& s : pc.texts) pool.push_back(feaskit::parse_candidate(s, pc.kind));
        feaskit::Verdict v;
        switch (pc.kind) {
            case TaskKind::Embedding: v = feaskit::best_of_n_embedding(pool, k2, p3, 2); break;
            case TaskKind::KColoring: v = feaskit::best_of_n_coloring(pool, triangle, 3); break;
            case TaskKind::MinColoring: v = feaskit::best_of_n_mincoloring(pool, p3); break;
        }
        long long objective = v.objective ? *v.objective : -1;
        if (v.yes != pc.want_yes || v.basis != pc.want_basis ||
            (pc.want_basis == feaskit::VerdictBasis::Certificate && v.chosen != pc.want_chosen) ||
            objective != pc.want_objective) {
            std::ostringstream os;
            os << "pool " << i << ": got (yes=" << v.yes << ", basis="
               << (v.basis == feaskit::VerdictBasis::Certificate ? "certificate" : "majority")
               << ", chosen=" << v.chosen << ", objective=" << objective << ")";
            return failed(name, os.str());
        }
    }
    return passed(name, std::to_string(cases.size()) + " pools match the selection rule on every branch");
}

// ---------------------------------------------------------------------
// Check 9: rendered records survive the full round trip.  The JSON line
// reparses field for field, the rendered input reconstructs the instance,
// and the rendered output parses back into exactly the claim, solution,
// and objective the label carried.  Two historical answers are pinned
// verbatim so the grammar cannot drift.

Check check_record_round_trip() {
    const std::string name = "record-round-trip";
    auto t0 = Clock::now();

    // Round-trip fidelity does not care how a label was produced, so cap
    // the labeling wall clock; an exact sweep in optimize mode would
    // otherwise spend its whole node budget on every satisfiable draw.
    feaskit::LabelBudgets quick;
    quick.exact = {400'000, 1.0};
    quick.fj_iterations = 40'000;
    quick.fj_restarts = 2;
    quick.fj_time_s = 0.5;

    std::vector<feaskit::DatasetRecord> records;
    auto generate = [&](TaskKind task, int count, std::uint64_t seed, bool balance) {
        feaskit::DatasetConfig cfg;
        cfg.task = task;
        cfg.count = count;
        cfg.master_seed = seed;
        cfg.balance = balance;
        cfg.jobs = 4;
        cfg.budgets = quick;
        feaskit::GeneratedDataset ds = feaskit::generate_dataset(cfg);
        records.insert(records.end(), ds.records.begin(), ds.records.end());
    };
    generate(TaskKind::KColoring, 400, 101, true);
    generate(TaskKind::MinColoring, 300, 202, false);
    generate(TaskKind::Embedding, 300, 303, false);
    if (records.size() != 1000)
        return failed(name, "expected 1000 records, generated " + std::to_string(records.size()));

    for (std::size_t i = 0; i < records.size(); ++i) {
        const feaskit::DatasetRecord& rec = records[i];
        const std::string tag = "record " + std::to_string(i);

        feaskit::DatasetRecord back = feaskit::record_from_json(feaskit::record_to_json(rec));
        if (back.instruction != rec.instruction || back.input != rec.input || back.output != rec.output ||
            back.task != rec.task || back.provenance != rec.provenance || back.seed != rec.seed ||
            back.n_problem != rec.n_problem || back.n_hardware != rec.n_hardware ||
            back.max_chain_size != rec.max_chain_size || back.k != rec.k || back.objective != rec.objective)
            return failed(name, tag + ": JSON round trip changed a field");

        feaskit::ParsedRecordInput in = feaskit::parse_record_input(rec);
        if (in.task != rec.task || in.problem.num_vertices() != rec.n_problem)
            return failed(name, tag + ": reparsed input does not match the record header");

        Candidate c = feaskit::parse_candidate(rec.output, rec.task);
        switch (rec.task) {
            case TaskKind::Embedding: {
                if (!in.hardware || in.hardware->num_vertices() != rec.n_hardware ||
                    in.max_chain_size != rec.max_chain_size)
                    return failed(name, tag + ": embedding input lost the hardware side");
                if (c.claim == Claim::No) {
                    if (rec.objective != -1) return failed(name, tag + ": refusal with an objective");
                } else if (c.claim == Claim::Yes) {
                    if (!c.claimed_objective || *c.claimed_objective != rec.objective)
                        return failed(name, tag + ": claimed total disagrees with the record");
                    feaskit::EmbeddingReport rep =
                        feaskit::verify_embedding(in.problem, *in.hardware, in.max_chain_size, *c.embedding);
                    if (!rep.valid || rep.total_vertices != rec.objective)
                        return failed(name, tag + ": embedding answer does not verify");
                } else {
                    return failed(name, tag + ": rendered output failed to parse");
                }
                break;
            }
            case TaskKind::KColoring: {
                if (c.claim == Claim::Yes) {
                    if (!feaskit::verify_coloring(in.problem, in.k, *c.coloring).valid)
                        return failed(name, tag + ": coloring answer does not verify");
                } else if (c.claim != Claim::No) {
                    return failed(name, tag + ": rendered output failed to parse");
                }
                break;
            }
            case TaskKind::MinColoring: {
                if (c.claim != Claim::Yes || !c.claimed_objective || *c.claimed_objective != rec.objective)
                    return failed(name, tag + ": claimed color count disagrees with the record");
                if (!feaskit::verify_coloring(in.problem, static_cast<int>(*c.claimed_objective), *c.coloring)
                         .valid)
                    return failed(name, tag + ": coloring answer does not verify");
                break;
            }
        }
    }

    // The two pinned answers.
    Candidate emb = feaskit::parse_candidate(kFrozenEmbeddingAnswer, TaskKind::Embedding);
    if (emb.claim != Claim::Yes || *emb.embedding != demo_embedding() || emb.claimed_objective != 19)
        return failed(name, "pinned embedding answer no longer parses");
    feaskit::EmbeddingReport rep =
        feaskit::verify_embedding(demo_problem(), feaskit::chimera_graph(1, 3, 4), 3, *emb.embedding);
    if (!rep.valid || rep.total_vertices != 19)
        return failed(name, "pinned embedding answer no longer verifies");
    Candidate col = feaskit::parse_candidate(kFrozenColoringAnswer, TaskKind::KColoring);
    if (col.claim != Claim::Yes || col.coloring->size() != 12 ||
        !feaskit::verify_coloring(demo_coloring_graph(), 3, *col.coloring).valid)
        return failed(name, "pinned coloring answer no longer verifies");

    double el = seconds_since(t0);
    return passed(name, "1000 records round-tripped and re-verified, pinned answers intact, " + fmt_secs(el));
}

// ---------------------------------------------------------------------
// Check 10: the command-line tool is deterministic.  Each subcommand runs
// twice with identical arguments; the result file and its manifest must
// come back byte for byte the same.

std::optional<std::string> slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Check check_cli_determinism(const std::string& cli) {
    const std::string name = "cli-determinism";
    if (cli.empty()) return failed(name, "no --cli PATH given");

    char tmpl[] = "/tmp/feaskit-accept-XXXXXX";
    char* dir = mkdtemp(tmpl);
    if (!dir) return failed(name, "mkdtemp failed");
    const std::string d = dir;

    struct Run {
        std::string label;
        std::string args;  // everything after the binary, with OUT as the --out value
        std::string out;
    };
    std::vector<Run> runs = {
        {"gen-graph", "gen-graph --family ws --n 24 --param k=4 --param beta=0.2 --seed 42", d + "/graph.json"},
        {"dataset generate",
         "dataset generate --task kcoloring --count 12 --seed 7 --jobs 2 --exact-time 3600 --fj-time 3600",
         d + "/records.jsonl"},
        {"solve", "solve --problem " + d + "/graph.json --task kcoloring --k 3 --method fj --iters 80000 --seed 3",
         d + "/solve.json"},
        {"bench-warmstart", "bench-warmstart --count 4 --iters 60000 --seed 9 --jobs 2", d + "/bench.json"},
    };

    for (const Run& r : runs) {
        const std::string cmd = "\"" + cli + "\" " + r.args + " --out " + r.out + " >/dev/null 2>&1";
        const std::string manifest = r.out + ".manifest.json";

        std::string first_primary, first_manifest;
        int first_rc = 0;
        for (int round = 0; round < 2; ++round) {
            std::remove(r.out.c_str());
            std::remove(manifest.c_str());
            int rc = std::system(cmd.c_str());
            std::optional<std::string> primary = slurp(r.out);
            std::optional<std::string> mani = slurp(manifest);
            if (!primary || primary->empty() || !mani)
                return failed(name, r.label + ": run " + std::to_string(round + 1) + " wrote no output");
            if (round == 0) {
                first_primary = *primary;
                first_manifest = *mani;
                first_rc = rc;
            } else if (*primary != first_primary) {
                return failed(name, r.label + ": result file differs between identical runs");
            } else if (*mani != first_manifest) {
                return failed(name, r.label + ": manifest differs between identical runs");
            } else if (rc != first_rc) {
                return failed(name, r.label + ": exit status differs between identical runs");
            }
        }
    }
    return passed(name, std::to_string(runs.size()) + " subcommands re-run byte-identically (results and manifests)");
}

}  // namespace

int main(int argc, char** argv) {
    std::string cli;
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--cli") cli = argv[i + 1];

    std::vector<Check> results;
    auto report = [&](Check c) {
        std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << ": " << c.detail << "\n" << std::flush;
        results.push_back(std::move(c));
    };

    report(check_screening_soundness());
    report(check_chain_enumeration());
    report(check_encoder_agreement());
    report(check_jump_search_soundness());
    WarmStartPool pool;
    report(check_jump_search_success_rate(pool));
    report(check_warm_start_speedup(pool));
    report(check_chain_thinning_invariants());
    report(check_answer_selection_policy());
    report(check_record_round_trip());
    report(check_cli_determinism(cli));

    int failures = 0;
    for (const Check& c : results)
        if (!c.pass) ++failures;
    if (failures) {
        std::cout << failures << " of " << results.size() << " checks failed\n";
        return 1;
    }
    std::cout << "all " << results.size() << " checks passed\n";
    return 0;
}
