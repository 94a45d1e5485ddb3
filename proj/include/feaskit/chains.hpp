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

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "feaskit/graph.hpp"

namespace feaskit {

// A chain is a connected set of hardware vertices.  Stored sorted, with
// its internal edge count and its boundary (the outside vertices adjacent
// to at least one chain vertex) precomputed.
struct Chain {
    std::vector<int> vertices;  // sorted ascending
    int internal_edges = 0;
    std::vector<int> boundary;  // sorted ascending, disjoint from vertices

    int size() const { return static_cast<int>(vertices.size()); }
};

// Thrown when enumeration would exceed the configured cap; callers treat
// the instance as too large rather than silently truncating the family.
class EnumerationLimitError : public std::runtime_error {
  public:
    explicit EnumerationLimitError(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr std::size_t kDefaultChainCap = 2'000'000;

// All chains of size 1..max_chain_size in a hardware graph, in canonical
// order (by size, then lexicographically by vertex list), plus lookups.
// Chain adjacency (two chains joined by some hardware edge) is exposed
// per chain through gamma(); the full relation is quadratic in the chain
// count on dense graphs, so rows are computed on first use and cached.
// The cache makes gamma() and chains_adjacent() non-thread-safe; build
// one family per worker when labeling in parallel.
class ChainFamily {
  public:
    ChainFamily() = default;
    ChainFamily(Graph hardware, int max_chain_size, std::vector<Chain> chains);

    const Graph& hardware() const { return hardware_; }
    int max_chain_size() const { return max_chain_size_; }

    std::size_t size() const { return chains_.size(); }
    const std::vector<Chain>& chains() const { return chains_; }
    const Chain& chain(int c) const { return chains_.at(static_cast<std::size_t>(c)); }

    // Chain indices whose vertex set contains v.
    const std::vector<int>& by_vertex(int v) const { return by_vertex_.at(static_cast<std::size_t>(v)); }

    // Indices of chains sharing a hardware edge with chain c, ascending.
    // c itself is excluded; chains overlapping c appear when an edge also
    // joins them.
    const std::vector<int>& gamma(int c) const;

  private:
    Graph hardware_;
    int max_chain_size_ = 0;
    std::vector<Chain> chains_;
    std::vector<std::vector<int>> by_vertex_;
    mutable std::vector<std::vector<int>> gamma_;
    mutable std::vector<char> gamma_done_;
};

// Enumerates every connected vertex set of size at most max_chain_size.
// Each set is produced exactly once (extension from its minimum vertex
// with exclusive neighborhoods).  Throws EnumerationLimitError if more
// than `cap` chains arise.
ChainFamily enumerate_chains(const Graph& hardware, int max_chain_size, std::size_t cap = kDefaultChainCap);

// Indices of chains usable for a problem vertex: size at least min_size
// and boundary at least the vertex degree (a chain realizes one problem
// edge per distinct boundary vertex at best).  Ascending, hence sorted by
// chain size first.  An empty result certifies the instance infeasible.
std::vector<int> candidate_chains(const ChainFamily& family, const Graph& problem, int problem_vertex,
                                  int min_size);

// True when some hardware edge joins the two chains.  Direct edge test;
// does not materialize gamma rows.
bool chains_adjacent(const ChainFamily& family, int c, int d);

}  // namespace feaskit
