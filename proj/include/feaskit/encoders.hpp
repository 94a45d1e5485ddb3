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

#include <memory>
#include <stdexcept>
#include <vector>

#include "feaskit/chains.hpp"
#include "feaskit/embedding.hpp"
#include "feaskit/graph.hpp"
#include "feaskit/model.hpp"

namespace feaskit {

class EncodingLimitError : public std::runtime_error {
  public:
    explicit EncodingLimitError(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr std::size_t kDefaultConstraintCap = 2'000'000;
// Nonzero coefficients across all rows.  Dense hardware graphs produce
// adjacency rows with thousands of terms each, so the row cap alone does
// not bound memory.
inline constexpr std::size_t kDefaultTermCap = 8'000'000;

// Binary model for minor-embedding with one variable per (problem vertex,
// candidate chain) pair:
//   - per problem vertex, exactly one candidate chain is chosen
//   - per hardware vertex, at most one chosen chain covers it (rows with a
//     single variable are vacuous and skipped)
//   - per problem arc (u, v) and candidate C of u: choosing C forces some
//     chain of v adjacent to C, one row per (arc, chain)
//   - total internal chain edges fit the hardware edge surplus
// The objective stores chain sizes, so its value is the total number of
// hardware vertices used; nothing in this codebase minimizes it during
// search, it ranks solutions after the fact.
struct EmbeddingEncoding {
    Model model;
    std::shared_ptr<const ChainFamily> family;
    std::vector<std::vector<int>> candidates;    // problem vertex -> chain indices
    std::vector<std::pair<int, int>> var_info;   // var -> (problem vertex, chain index)
    int assignment_rows = 0;
    int disjointness_rows = 0;
    int adjacency_rows = 0;
    int budget_rows = 0;
};

// `min_sizes` is the per-vertex chain-size lower bound from screening.
// Throws std::invalid_argument if any candidate set is empty (the caller
// should have reported infeasibility) and EncodingLimitError if the row
// count would exceed `max_rows` (checked up front) or the nonzero count
// would exceed `max_terms` (checked as rows are built).
EmbeddingEncoding encode_embedding(const Graph& problem, std::shared_ptr<const ChainFamily> family,
                                   const std::vector<int>& min_sizes,
                                   std::size_t max_rows = kDefaultConstraintCap,
                                   std::size_t max_terms = kDefaultTermCap);

// Chain choice per problem vertex from a feasible assignment.  Throws
// std::invalid_argument unless exactly one candidate is set per vertex.
Embedding decode_embedding(const EmbeddingEncoding& enc, const Assignment& x);

// Binary model for coloring with one variable per (vertex, color):
//   - per vertex, exactly one color
//   - per edge and color, endpoints cannot share it
// When `minimize` is set (built by encode_mincoloring), each color c also
// gets a palette-use variable y_c with linking rows x[v][c] <= y_c, the
// symmetry rows y_{c+1} <= y_c, and objective sum(y_c).
struct ColoringEncoding {
    Model model;
    int num_vertices = 0;
    int palette = 0;
    bool minimize = false;
    int assignment_rows = 0;
    int edge_rows = 0;
    int linking_rows = 0;
    int symmetry_rows = 0;

    int color_var(int v, int c) const { return v * palette + c; }
    int use_var(int c) const { return num_vertices * palette + c; }
};

ColoringEncoding encode_kcoloring(const Graph& g, int k, std::size_t max_rows = kDefaultConstraintCap);

// Palette size is the greedy (largest-degree-first) coloring bound rather
// than the trivial |V| palette; the optimum is never above it, and the
// model stays near-linear in the graph size.
ColoringEncoding encode_mincoloring(const Graph& g, std::size_t max_rows = kDefaultConstraintCap);

// Color per vertex.  Throws std::invalid_argument unless exactly one color
// variable is set per vertex.
std::vector<int> decode_coloring(const ColoringEncoding& enc, const Assignment& x);

}  // namespace feaskit
