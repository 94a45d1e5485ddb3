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

#include "feaskit/exact.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

namespace feaskit {

const char* to_string(Outcome o) {
    switch (o) {
        case Outcome::Feasible: return "feasible";
        case Outcome::Infeasible: return "infeasible";
        case Outcome::Unknown: return "unknown";
    }
    return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

struct Budget {
    long long max_nodes;
    std::optional<Clock::time_point> deadline;
    long long nodes = 0;
    bool exhausted = false;

    explicit Budget(const SearchBudget& b, long long consumed = 0)
        : max_nodes(b.max_nodes - consumed) {
        if (b.time_limit_s)
            deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                          std::chrono::duration<double>(*b.time_limit_s));
    }

    // One search node.  Returns false once the budget is gone; the time
    // check is amortized over 1024 nodes.
    bool tick() {
        if (exhausted) return false;
        ++nodes;
        if (nodes > max_nodes) {
            exhausted = true;
            return false;
        }
        if (deadline && (nodes & 1023) == 0 && Clock::now() >= *deadline) {
            exhausted = true;
            return false;
        }
        return true;
    }
};

struct EmbedSearch {
    EmbedSearch(const Graph& p, const ChainFamily& f, bool opt, Budget& b)
        : problem(p), fam(f), optimize(opt), budget(b) {}

    const Graph& problem;
    const ChainFamily& fam;
    bool optimize;
    Budget& budget;

    std::vector<std::vector<int>> cand;  // per problem vertex, ascending
    std::vector<int> order;              // assignment order, degree descending
    std::vector<int> min_size;           // size of the smallest candidate chain
    std::vector<char> used;              // hardware vertex taken
    std::vector<int> chosen;             // problem vertex -> chain index or -1

    long long used_vertices = 0;
    long long internal_edges = 0;
    long long remaining_min = 0;   // sum of min_size over unassigned vertices
    int remaining_count = 0;
    long long edge_surplus = 0;
    long long hardware_vertices = 0;

    std::optional<Embedding> best;
    long long best_obj = 0;
    bool stop = false;

    Embedding snapshot() const {
        Embedding emb;
        for (int i = 0; i < problem.num_vertices(); ++i)
            emb[i] = fam.chain(chosen[static_cast<std::size_t>(i)]).vertices;
        return emb;
    }

    void dfs(std::size_t depth) {
        if (stop) return;
        if (depth == order.size()) {
            if (!optimize) {
                best = snapshot();
                best_obj = used_vertices;
                stop = true;
                return;
            }
            if (!best || used_vertices < best_obj) {
                best = snapshot();
                best_obj = used_vertices;
            }
            return;
        }
        int i = order[depth];
        for (int c : cand[static_cast<std::size_t>(i)]) {
            if (!budget.tick()) {
                stop = true;
                return;
            }
            const Chain& ch = fam.chain(c);

            // Remaining unassigned vertices other than i still need their
            // minimum chain sizes worth of hardware vertices and edges.
            long long other_min = remaining_min - min_size[static_cast<std::size_t>(i)];
            long long other_edges = other_min - (remaining_count - 1);
            if (used_vertices + ch.size() + other_min > hardware_vertices) continue;
            if (internal_edges + ch.internal_edges + other_edges > edge_surplus) continue;
            if (optimize && best && used_vertices + ch.size() + other_min >= best_obj) continue;

            bool clash = false;
            for (int v : ch.vertices)
                if (used[static_cast<std::size_t>(v)]) {
                    clash = true;
                    break;
                }
            if (clash) continue;

            bool adjacent_ok = true;
            for (int k : problem.neighbors(i)) {
                int kc = chosen[static_cast<std::size_t>(k)];
                if (kc == -1) continue;
                if (!chains_adjacent(fam, c, kc)) {
                    adjacent_ok = false;
                    break;
                }
            }
            if (!adjacent_ok) continue;

            chosen[static_cast<std::size_t>(i)] = c;
            for (int v : ch.vertices) used[static_cast<std::size_t>(v)] = 1;
            used_vertices += ch.size();
            internal_edges += ch.internal_edges;
            remaining_min -= min_size[static_cast<std::size_t>(i)];
            --remaining_count;

            dfs(depth + 1);

            ++remaining_count;
            remaining_min += min_size[static_cast<std::size_t>(i)];
            internal_edges -= ch.internal_edges;
            used_vertices -= ch.size();
            for (int v : ch.vertices) used[static_cast<std::size_t>(v)] = 0;
            chosen[static_cast<std::size_t>(i)] = -1;
            if (stop) return;
        }
    }
};

}  // namespace

Certificate exact_embed(const Graph& problem, const Graph& hardware, int max_chain_size,
                        const SearchBudget& sbudget, bool optimize, std::size_t chain_cap) {
    Certificate cert;
    if (problem.num_vertices() == 0) {
        cert.outcome = Outcome::Feasible;
        cert.embedding = Embedding{};
        cert.objective = 0;
        return cert;
    }

    ChainFamily fam = enumerate_chains(hardware, max_chain_size, chain_cap);
    Budget budget(sbudget);
    EmbedSearch search(problem, fam, optimize, budget);

    const int np = problem.num_vertices();
    search.cand.resize(static_cast<std::size_t>(np));
    search.min_size.assign(static_cast<std::size_t>(np), 0);
    for (int i = 0; i < np; ++i) {
        // Size filter 1: the boundary filter inside candidate_chains is
        // what actually trims the sets here.
        auto& ci = search.cand[static_cast<std::size_t>(i)] = candidate_chains(fam, problem, i, 1);
        if (ci.empty()) {
            // No chain can host this vertex; certified infeasible with no
            // search at all.
            cert.outcome = Outcome::Infeasible;
            return cert;
        }
        search.min_size[static_cast<std::size_t>(i)] = fam.chain(ci.front()).size();
    }

    search.order.resize(static_cast<std::size_t>(np));
    std::iota(search.order.begin(), search.order.end(), 0);
    std::stable_sort(search.order.begin(), search.order.end(),
                     [&](int a, int b) { return problem.degree(a) > problem.degree(b); });

    search.used.assign(static_cast<std::size_t>(hardware.num_vertices()), 0);
    search.chosen.assign(static_cast<std::size_t>(np), -1);
    search.hardware_vertices = hardware.num_vertices();
    search.edge_surplus = static_cast<long long>(hardware.num_edges()) - problem.num_edges();
    for (int s : search.min_size) search.remaining_min += s;
    search.remaining_count = np;

    search.dfs(0);
    cert.nodes = budget.nodes;

    if (budget.exhausted) {
        cert.outcome = Outcome::Unknown;
        if (search.best) {
            cert.embedding = std::move(search.best);
            cert.objective = search.best_obj;
        }
        return cert;
    }
    if (search.best) {
        cert.outcome = Outcome::Feasible;
        cert.embedding = std::move(search.best);
        cert.objective = search.best_obj;
        return cert;
    }
    cert.outcome = Outcome::Infeasible;
    return cert;
}

namespace {

struct ColorSearch {
    ColorSearch(const Graph& graph, int palette, Budget& b) : g(graph), k(palette), budget(b) {
        auto n = static_cast<std::size_t>(g.num_vertices());
        color.assign(n, -1);
        nbr_count.assign(n, std::vector<int>(static_cast<std::size_t>(k), 0));
        saturation.assign(n, 0);
    }

    const Graph& g;
    int k;
    Budget& budget;

    std::vector<int> color;                   // -1 while unassigned
    std::vector<std::vector<int>> nbr_count;  // [v][c] neighbors wearing c
    std::vector<int> saturation;              // distinct neighbor colors
    int colored = 0;
    bool stop = false;
    std::optional<std::vector<int>> result;

    int pick() const {
        int bestv = -1;
        for (int v = 0; v < g.num_vertices(); ++v) {
            if (color[static_cast<std::size_t>(v)] != -1) continue;
            if (bestv == -1) {
                bestv = v;
                continue;
            }
            int sv = saturation[static_cast<std::size_t>(v)], sb = saturation[static_cast<std::size_t>(bestv)];
            if (sv > sb || (sv == sb && g.degree(v) > g.degree(bestv))) bestv = v;
        }
        return bestv;
    }

    void assign(int v, int c, int delta) {
        color[static_cast<std::size_t>(v)] = delta > 0 ? c : -1;
        colored += delta;
        for (int w : g.neighbors(v)) {
            int& cnt = nbr_count[static_cast<std::size_t>(w)][static_cast<std::size_t>(c)];
            if (delta > 0) {
                if (cnt++ == 0) ++saturation[static_cast<std::size_t>(w)];
            } else {
                if (--cnt == 0) --saturation[static_cast<std::size_t>(w)];
            }
        }
    }

    // max_used is the highest color index opened so far; a fresh color may
    // only be the next index, which prunes color permutations and fixes
    // the first vertex at color 0.
    void dfs(int max_used) {
        if (stop) return;
        if (colored == g.num_vertices()) {
            result = color;
            stop = true;
            return;
        }
        int v = pick();
        int limit = std::min(k - 1, max_used + 1);
        for (int c = 0; c <= limit; ++c) {
            if (nbr_count[static_cast<std::size_t>(v)][static_cast<std::size_t>(c)] > 0) continue;
            if (!budget.tick()) {
                stop = true;
                return;
            }
            assign(v, c, +1);
            dfs(std::max(max_used, c));
            assign(v, c, -1);
            if (stop) return;
        }
    }
};

Certificate exact_color_budgeted(const Graph& g, int k, Budget& budget) {
    Certificate cert;
    if (k < 0) throw std::invalid_argument("exact_color: k must be >= 0");
    if (g.num_vertices() == 0) {
        cert.outcome = Outcome::Feasible;
        cert.coloring = std::vector<int>{};
        return cert;
    }
    if (k == 0) {
        cert.outcome = Outcome::Infeasible;
        return cert;
    }

    ColorSearch search(g, k, budget);
    search.dfs(-1);
    cert.nodes = budget.nodes;
    if (budget.exhausted) {
        cert.outcome = Outcome::Unknown;
        return cert;
    }
    if (search.result) {
        cert.outcome = Outcome::Feasible;
        cert.coloring = std::move(search.result);
        return cert;
    }
    cert.outcome = Outcome::Infeasible;
    return cert;
}

}  // namespace

Certificate exact_color(const Graph& g, int k, const SearchBudget& sbudget) {
    Budget budget(sbudget);
    return exact_color_budgeted(g, k, budget);
}

Certificate min_color(const Graph& g, const SearchBudget& sbudget) {
    Certificate cert;
    if (g.num_vertices() == 0) {
        cert.outcome = Outcome::Feasible;
        cert.coloring = std::vector<int>{};
        cert.objective = 0;
        return cert;
    }

    std::vector<int> greedy = greedy_coloring(g);
    int ub = 1 + *std::max_element(greedy.begin(), greedy.end());
    int lb = greedy_clique_bound(g);

    Budget budget(sbudget);
    for (int k = lb; k < ub; ++k) {
        Certificate sub = exact_color_budgeted(g, k, budget);
        cert.nodes = budget.nodes;
        if (sub.outcome == Outcome::Unknown) {
            // Greedy is still a valid incumbent; optimality is open.
            cert.outcome = Outcome::Unknown;
            cert.coloring = std::move(greedy);
            cert.objective = ub;
            return cert;
        }
        if (sub.outcome == Outcome::Feasible) {
            cert.outcome = Outcome::Feasible;
            cert.coloring = std::move(sub.coloring);
            cert.objective = k;
            return cert;
        }
    }
    cert.outcome = Outcome::Feasible;
    cert.coloring = std::move(greedy);
    cert.objective = ub;
    cert.nodes = budget.nodes;
    return cert;
}

std::vector<int> greedy_coloring(const Graph& g) {
    std::vector<int> order(static_cast<std::size_t>(g.num_vertices()));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
    std::vector<int> color(static_cast<std::size_t>(g.num_vertices()), -1);
    std::vector<char> taken(static_cast<std::size_t>(g.num_vertices()) + 1, 0);
    for (int v : order) {
        for (int w : g.neighbors(v))
            if (color[static_cast<std::size_t>(w)] != -1) taken[static_cast<std::size_t>(color[static_cast<std::size_t>(w)])] = 1;
        int c = 0;
        while (taken[static_cast<std::size_t>(c)]) ++c;
        color[static_cast<std::size_t>(v)] = c;
        for (int w : g.neighbors(v))
            if (color[static_cast<std::size_t>(w)] != -1) taken[static_cast<std::size_t>(color[static_cast<std::size_t>(w)])] = 0;
    }
    return color;
}

int greedy_coloring_bound(const Graph& g) {
    if (g.num_vertices() == 0) return 0;
    std::vector<int> c = greedy_coloring(g);
    return 1 + *std::max_element(c.begin(), c.end());
}

int greedy_clique_bound(const Graph& g) {
    std::vector<int> order(static_cast<std::size_t>(g.num_vertices()));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
    std::vector<int> clique;
    for (int v : order) {
        bool fits = true;
        for (int u : clique)
            if (!g.has_edge(u, v)) {
                fits = false;
                break;
            }
        if (fits) clique.push_back(v);
    }
    return static_cast<int>(clique.size());
}

}  // namespace feaskit
