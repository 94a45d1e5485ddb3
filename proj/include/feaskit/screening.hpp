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
#include <string>
#include <vector>

#include "feaskit/graph.hpp"

namespace feaskit {

// Cheap necessary conditions for minor-embeddability of a problem graph
// into a hardware graph with chains of at most L vertices.  A chain of
// size s in a hardware graph of maximum degree D >= 3 can reach at most
// s*(D-2) + 2 outside neighbors (each interior chain vertex spends two
// incident edges on the chain itself, the two ends spend one), so a
// problem vertex of degree d needs s >= (d-2)/(D-2).  For D <= 2 the
// hardware is a disjoint union of paths and cycles and no chain of any
// size reaches more than two neighbors.

// Smallest admissible chain size for a problem vertex of degree deg_p on
// hardware with maximum degree delta_h, ignoring the cap L.  nullopt means
// no chain size works (only possible when delta_h <= 2 and deg_p >= 3).
std::optional<int> min_chain_size(int deg_p, int delta_h);

enum class ScreenCondition { DegreeBound, VertexBudget, EdgeBudget };

const char* to_string(ScreenCondition c);

struct ScreenResult {
    bool pass = false;
    // Set when pass is false: which condition failed first, checked in the
    // fixed order vertex budget (trivial), edge budget (trivial), degree
    // bound per vertex, aggregated vertex budget, aggregated edge budget.
    std::optional<ScreenCondition> violated;
    std::string detail;               // human-readable witness
    int witness_vertex = -1;          // problem vertex for DegreeBound
    long long required = 0;           // lhs of the failed comparison
    long long available = 0;          // rhs of the failed comparison
    // Per-vertex minimum chain sizes; filled on pass.
    std::vector<int> min_sizes;
};

// Screens (problem, hardware, L).  Returns pass with the per-vertex lower
// bounds, or the first violated condition with a witness.  A reject is a
// certificate: no valid embedding exists.  Requires L >= 1 and nonempty
// graphs.
ScreenResult zero_phase_screen(const Graph& problem, const Graph& hardware, int max_chain_size);

}  // namespace feaskit
