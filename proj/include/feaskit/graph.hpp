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
#include <utility>
#include <vector>

namespace feaskit {

// Simple undirected graph on vertices 0..n-1.  Edges are stored once as
// (u, v) with u < v, sorted lexicographically; adjacency lists are sorted.
// No self-loops, no parallel edges.  Immutable after construction.
class Graph {
  public:
    Graph() = default;

    // Builds from an arbitrary edge list.  Endpoints are normalized to
    // u < v and the list is sorted.  Throws std::invalid_argument on
    // out-of-range endpoints, self-loops, or duplicate edges.
    static Graph from_edges(int num_vertices, std::vector<std::pair<int, int>> edges);

    int num_vertices() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }

    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_.at(static_cast<std::size_t>(v)); }

    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
    int max_degree() const;

    bool has_edge(int u, int v) const;

    bool is_connected() const;

    // Copy with all isolated vertices removed and the remaining vertices
    // relabeled to 0..n'-1 preserving order.
    Graph without_isolated() const;

    // JSON round-trip: {"n": <int>, "edges": [[u,v], ...]}.
    std::string to_json() const;
    static Graph from_json(const std::string& text);

  private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
};

// Per-vertex summary of the (up to) two highest-degree neighbors, in the
// form "N3:[2,7,#5,#4]" for vertex 3 with neighbors 2 and 7 of degrees 5
// and 4.  Degree ties are broken toward the smaller vertex id.  A vertex
// with one neighbor yields "N3:[2,#5]"; an isolated vertex yields "N3:[]".
// Entries for all vertices are joined with "; ".
std::string top2_info(const Graph& g);

}  // namespace feaskit
