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

#include <cstdint>
#include <map>
#include <string>

#include "feaskit/graph.hpp"

namespace feaskit {

// Fully describes one random-graph draw: the same spec always produces the
// same graph.  `params` keys are family-specific:
//
//   er       n, p
//   ba       n, m            (edges added per new vertex)
//   ws       n, k, beta      (even k; ring lattice plus rewiring)
//   regular  n, d            (n*d even)
//   sbm      n, blocks, p_in, p_out
//            plus optional explicit sizes "block0".."block{B-1}";
//            without them the n vertices are split as evenly as possible
//   chimera  rows, cols, shore
//
// `drop_isolated` removes isolated vertices after the draw and relabels.
struct GraphSpec {
    std::string family;
    std::map<std::string, double> params;
    std::uint64_t seed = 0;
    bool drop_isolated = false;
};

// Deterministic generator dispatch.  Throws std::invalid_argument on an
// unknown family or out-of-range parameters, and std::runtime_error if a
// regular graph cannot be assembled after bounded retries.
Graph generate(const GraphSpec& spec);

// Chimera(m, n, t): an m x n grid of complete-bipartite K_{t,t} cells.
// Cell (r, c) occupies ids [(r*n + c)*2t, (r*n + c)*2t + 2t); the first t
// ids are the left shore, the next t the right shore.  Left-shore qubits
// couple to the cell below (vertical), right-shore qubits to the cell to
// the right (horizontal), matching position within the shore.
Graph chimera_graph(int rows, int cols, int shore);

}  // namespace feaskit
