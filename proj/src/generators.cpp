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

#include "feaskit/generators.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "feaskit/rng.hpp"

namespace feaskit {

namespace {

double require_param(const GraphSpec& spec, const std::string& key) {
    auto it = spec.params.find(key);
    if (it == spec.params.end())
        throw std::invalid_argument("generate: family '" + spec.family + "' needs parameter '" + key + "'");
    return it->second;
}

int require_int(const GraphSpec& spec, const std::string& key) {
    double v = require_param(spec, key);
    double r = std::round(v);
    if (std::abs(v - r) > 1e-9)
        throw std::invalid_argument("generate: parameter '" + key + "' must be an integer");
    return static_cast<int>(r);
}

Graph gen_er(int n, double p, Rng& rng) {
    if (n < 0) throw std::invalid_argument("generate: er needs n >= 0");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("generate: er needs p in [0,1]");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.bernoulli(p)) edges.emplace_back(u, v);
    return Graph::from_edges(n, std::move(edges));
}

// Preferential attachment.  Each new vertex attaches to m distinct targets
// drawn from a pool that holds every past endpoint once per incident edge,
// so selection probability tracks degree.  Seeded with m isolated vertices;
// the first arrival connects to all of them.
Graph gen_ba(int n, int m, Rng& rng) {
    if (m < 1) throw std::invalid_argument("generate: ba needs m >= 1");
    if (n < m + 1) throw std::invalid_argument("generate: ba needs n >= m+1");
    std::vector<std::pair<int, int>> edges;
    std::vector<int> pool;
    std::vector<int> targets;
    for (int i = 0; i < m; ++i) targets.push_back(i);
    for (int v = m; v < n; ++v) {
        for (int t : targets) {
            edges.emplace_back(t, v);
            pool.push_back(t);
            pool.push_back(v);
        }
        // Sample m distinct vertices for the next arrival.  Repeats are
        // rejected, which is the usual fix for multi-edges.
        std::set<int> chosen;
        while (static_cast<int>(chosen.size()) < m) {
            int pick = pool[static_cast<std::size_t>(rng.below(pool.size()))];
            chosen.insert(pick);
        }
        targets.assign(chosen.begin(), chosen.end());
    }
    return Graph::from_edges(n, std::move(edges));
}

// Ring lattice with k/2 neighbors each side, then each lattice edge (u, u+j)
// is rewired with probability beta: u keeps its endpoint, the other moves to
// a uniform vertex that avoids loops and duplicates.
Graph gen_ws(int n, int k, double beta, Rng& rng) {
    if (k < 0 || k % 2 != 0) throw std::invalid_argument("generate: ws needs even k >= 0");
    if (k >= n && n > 0) throw std::invalid_argument("generate: ws needs k < n");
    if (beta < 0.0 || beta > 1.0) throw std::invalid_argument("generate: ws needs beta in [0,1]");
    std::set<std::pair<int, int>> edge_set;
    auto norm = [](int a, int b) { return a < b ? std::make_pair(a, b) : std::make_pair(b, a); };
    for (int j = 1; j <= k / 2; ++j)
        for (int u = 0; u < n; ++u) edge_set.insert(norm(u, (u + j) % n));
    for (int j = 1; j <= k / 2; ++j) {
        for (int u = 0; u < n; ++u) {
            auto e = norm(u, (u + j) % n);
            if (!edge_set.count(e)) continue;  // already rewired away
            if (!rng.bernoulli(beta)) continue;
            // Up to n attempts to find a fresh endpoint; a saturated vertex
            // keeps its lattice edge.
            for (int attempt = 0; attempt < n; ++attempt) {
                int w = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
                if (w == u || edge_set.count(norm(u, w))) continue;
                edge_set.erase(e);
                edge_set.insert(norm(u, w));
                break;
            }
        }
    }
    std::vector<std::pair<int, int>> edges(edge_set.begin(), edge_set.end());
    return Graph::from_edges(n, std::move(edges));
}

// Configuration-model pairing restricted to suitable pairs (no loop, no
// repeat), restarted when it wedges.  This is the standard fix that keeps
// dense degrees practical; plain rejection of whole pairings is hopeless
// already around d = 10.
Graph gen_regular(int n, int d, Rng& rng) {
    if (d < 0 || d >= n) throw std::invalid_argument("generate: regular needs 0 <= d < n");
    if ((static_cast<long long>(n) * d) % 2 != 0)
        throw std::invalid_argument("generate: regular needs n*d even");
    if (d == 0) return Graph::from_edges(n, {});

    const int max_restarts = 1000;
    for (int attempt = 0; attempt < max_restarts; ++attempt) {
        std::vector<int> stubs;
        stubs.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(d));
        for (int v = 0; v < n; ++v)
            for (int i = 0; i < d; ++i) stubs.push_back(v);
        std::set<std::pair<int, int>> edge_set;
        bool ok = true;
        while (!stubs.empty()) {
            // Pick one stub uniformly, then scan a shuffled order for a
            // suitable partner.
            rng.shuffle(stubs);
            int a = stubs.back();
            std::size_t partner = stubs.size();
            for (std::size_t i = stubs.size() - 1; i-- > 0;) {
                int b = stubs[i];
                if (b == a) continue;
                auto e = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
                if (edge_set.count(e)) continue;
                partner = i;
                break;
            }
            if (partner == stubs.size()) {
                ok = false;  // wedged: every remaining pair is unsuitable
                break;
            }
            int b = stubs[partner];
            edge_set.insert(a < b ? std::make_pair(a, b) : std::make_pair(b, a));
            stubs.pop_back();
            stubs.erase(stubs.begin() + static_cast<std::ptrdiff_t>(partner));
        }
        if (ok) {
            std::vector<std::pair<int, int>> edges(edge_set.begin(), edge_set.end());
            return Graph::from_edges(n, std::move(edges));
        }
    }
    throw std::runtime_error("generate: regular graph unconstructible after bounded retries");
}

Graph gen_sbm(const GraphSpec& spec, Rng& rng) {
    int n = require_int(spec, "n");
    int blocks = require_int(spec, "blocks");
    double p_in = require_param(spec, "p_in");
    double p_out = require_param(spec, "p_out");
    if (n < 0 || blocks < 1) throw std::invalid_argument("generate: sbm needs n >= 0, blocks >= 1");
    if (p_in < 0.0 || p_in > 1.0 || p_out < 0.0 || p_out > 1.0)
        throw std::invalid_argument("generate: sbm needs probabilities in [0,1]");

    std::vector<int> sizes;
    if (spec.params.count("block0")) {
        int total = 0;
        for (int b = 0; b < blocks; ++b) {
            int s = require_int(spec, "block" + std::to_string(b));
            if (s < 0) throw std::invalid_argument("generate: sbm block size must be >= 0");
            sizes.push_back(s);
            total += s;
        }
        if (total != n) throw std::invalid_argument("generate: sbm block sizes must sum to n");
    } else {
        for (int b = 0; b < blocks; ++b) sizes.push_back(n / blocks + (b < n % blocks ? 1 : 0));
    }

    std::vector<int> block_of(static_cast<std::size_t>(n));
    int v = 0;
    for (int b = 0; b < blocks; ++b)
        for (int i = 0; i < sizes[static_cast<std::size_t>(b)]; ++i) block_of[static_cast<std::size_t>(v++)] = b;

    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int w = u + 1; w < n; ++w) {
            double p = block_of[static_cast<std::size_t>(u)] == block_of[static_cast<std::size_t>(w)] ? p_in : p_out;
            if (rng.bernoulli(p)) edges.emplace_back(u, w);
        }
    return Graph::from_edges(n, std::move(edges));
}

}  // namespace

Graph chimera_graph(int rows, int cols, int shore) {
    if (rows < 1 || cols < 1 || shore < 1)
        throw std::invalid_argument("chimera_graph: rows, cols, shore must be >= 1");
    int cell = 2 * shore;
    int n = rows * cols * cell;
    std::vector<std::pair<int, int>> edges;
    auto base = [&](int r, int c) { return (r * cols + c) * cell; };
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            int b = base(r, c);
            for (int i = 0; i < shore; ++i)
                for (int j = 0; j < shore; ++j) edges.emplace_back(b + i, b + shore + j);
            if (r + 1 < rows)
                for (int i = 0; i < shore; ++i) edges.emplace_back(b + i, base(r + 1, c) + i);
            if (c + 1 < cols)
                for (int j = 0; j < shore; ++j) edges.emplace_back(b + shore + j, base(r, c + 1) + shore + j);
        }
    }
    return Graph::from_edges(n, std::move(edges));
}

Graph generate(const GraphSpec& spec) {
    Rng rng(spec.seed);
    Graph g;
    if (spec.family == "er") {
        g = gen_er(require_int(spec, "n"), require_param(spec, "p"), rng);
    } else if (spec.family == "ba") {
        g = gen_ba(require_int(spec, "n"), require_int(spec, "m"), rng);
    } else if (spec.family == "ws") {
        g = gen_ws(require_int(spec, "n"), require_int(spec, "k"), require_param(spec, "beta"), rng);
    } else if (spec.family == "regular") {
        g = gen_regular(require_int(spec, "n"), require_int(spec, "d"), rng);
    } else if (spec.family == "sbm") {
        g = gen_sbm(spec, rng);
    } else if (spec.family == "chimera") {
        g = chimera_graph(require_int(spec, "rows"), require_int(spec, "cols"), require_int(spec, "shore"));
    } else {
        throw std::invalid_argument("generate: unknown family '" + spec.family + "'");
    }
    if (spec.drop_isolated) g = g.without_isolated();
    return g;
}

}  // namespace feaskit
