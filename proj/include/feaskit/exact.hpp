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

#pragma once

#include <optional>
#include <vector>

#include "feaskit/chains.hpp"
#include "feaskit/embedding.hpp"
#include "feaskit/graph.hpp"

namespace feaskit {

// Caps for the exact searches.  A search that exhausts neither cap ends in
// Feasible or Infeasible; hitting a cap yields Unknown (with the best
// incumbent found so far, if any).
struct SearchBudget {
    long long max_nodes = 50'000'000;
    std::optional<double> time_limit_s;
};

enum class Outcome { Feasible, Infeasible, Unknown };

const char* to_string(Outcome o);

struct Certificate {
    Outcome outcome = Outcome::Unknown;
    long long nodes = 0;  // search nodes explored
    std::optional<long long> objective;
    std::optional<Embedding> embedding;
    std::optional<std::vector<int>> coloring;
};

// Backtracking over candidate chains, problem vertices in descending
// degree order, smaller chains tried first.  Prunes on chain overlap,
// missing adjacency to already-placed neighbors, and the vertex and edge
// budgets implied by the remaining per-vertex minimum chain sizes.  With
// `optimize` set it branch-and-bounds on total chain vertices and proves
// the minimum unless a cap hits; without it, the first embedding wins.
// Callers are expected to have screened already; an unscreenable instance
// simply burns search nodes here.
Certificate exact_embed(const Graph& problem, const Graph& hardware, int max_chain_size,
                        const SearchBudget& budget = {}, bool optimize = false,
                        std::size_t chain_cap = kDefaultChainCap);

// Backtracking k-coloring with dynamic most-saturated-first vertex order
// and canonical color order (a vertex may open at most one fresh color,
// the next unused index), which fixes the first vertex's color and prunes
// color permutations wholesale.
Certificate exact_color(const Graph& g, int k, const SearchBudget& budget = {});

// Chromatic number by iterative deepening between a greedy clique lower
// bound and the greedy coloring upper bound.  Unknown if the budget dies
// before the deepening closes.
Certificate min_color(const Graph& g, const SearchBudget& budget = {});

// Largest-degree-first sequential coloring; at most max_degree+1 colors.
std::vector<int> greedy_coloring(const Graph& g);
int greedy_coloring_bound(const Graph& g);

// Size of a greedily grown clique; a lower bound on the chromatic number.
int greedy_clique_bound(const Graph& g);

}  // namespace feaskit
