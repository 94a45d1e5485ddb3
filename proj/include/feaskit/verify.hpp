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

#include <string>
#include <vector>

#include "feaskit/embedding.hpp"
#include "feaskit/graph.hpp"

namespace feaskit {

// Domain-level checkers for untrusted solutions.  They assume nothing
// about where a candidate came from and report every violated rule, not
// just the first.

struct Violation {
    std::string rule;    // short machine-friendly tag
    std::string detail;  // human-readable witness
};

struct EmbeddingReport {
    bool valid = false;
    std::vector<Violation> violations;
    int total_vertices = 0;  // chain vertices summed over mapped problem vertices
};

// Rules checked: every problem vertex mapped, no unknown vertices on
// either side, chains nonempty, within the size cap, duplicate-free,
// connected in the hardware graph, pairwise disjoint, and every problem
// edge realized by at least one hardware edge between the two chains.
EmbeddingReport verify_embedding(const Graph& problem, const Graph& hardware, int max_chain_size,
                                 const Embedding& emb);

struct ColoringReport {
    bool valid = false;
    std::vector<Violation> violations;
    int conflicting_edges = 0;
    double error_ratio = 0.0;  // conflicting edges over total edges
};

// Rules checked: one color per vertex (length match), colors in range
// [0, k), no monochromatic edge.
ColoringReport verify_coloring(const Graph& g, int k, const std::vector<int>& colors);

}  // namespace feaskit
