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

// Reference implementations for the test suite.  Everything here is the
// dumbest correct algorithm we could write: bitmask sweeps and plain
// recursion, no ordering heuristics, no pruning beyond what the problem
// definition forces.  They only need to be right, not fast, and they must
// not share code with the library they are checking.

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "feaskit/embedding.hpp"
#include "feaskit/graph.hpp"

namespace oracle {

// True when the vertices set in `mask` induce a connected subgraph.
inline bool mask_connected(const feaskit::Graph& g, std::uint32_t mask) {
    if (mask == 0) return false;
    std::uint32_t seen = mask & (~mask + 1);  // lowest set bit
    for (;;) {
        std::uint32_t frontier = 0;
        for (int v = 0; v < g.num_vertices(); ++v) {
            if (!(seen >> v & 1)) continue;
            for (int w : g.neighbors(v)) frontier |= std::uint32_t(1) << w;
        }
        std::uint32_t next = seen | (frontier & mask);
        if (next == seen) break;
        seen = next;
    }
    return seen == mask;
}

// Every connected vertex subset of size 1..max_size, as bitmasks, by
// sweeping all 2^n subsets.  Usable for n up to ~20.
inline std::vector<std::uint32_t> connected_subset_masks(const feaskit::Graph& g, int max_size) {
    std::vector<std::uint32_t> out;
    int n = g.num_vertices();
    for (std::uint32_t mask = 1; mask < (std::uint32_t(1) << n); ++mask) {
        if (std::popcount(mask) > max_size) continue;
        if (mask_connected(g, mask)) out.push_back(mask);
    }
    return out;
}

inline std::vector<int> mask_to_vertices(std::uint32_t mask) {
    std::vector<int> v;
    for (int i = 0; i < 32; ++i)
        if (mask >> i & 1) v.push_back(i);
    return v;
}

// Definition-based minor-embedding search: assign each problem vertex a
// connected hardware subset of size <= max_chain_size, subsets pairwise
// disjoint, every problem edge realized by a hardware edge between its two
// subsets.  Returns the minimum total subset size over all embeddings, or
// nullopt when none exists.  Exponential; intended for |V_P| <= 8 and
// |V_H| <= 14.
inline std::optional<int> best_embedding_size(const feaskit::Graph& problem, const feaskit::Graph& hardware,
                                              int max_chain_size) {
    std::vector<std::uint32_t> subs = connected_subset_masks(hardware, max_chain_size);
    // Hardware vertices adjacent to (but outside) each subset, for the
    // edge-realization test: subsets A, B share a hardware edge iff B
    // intersects reach[A].
    std::vector<std::uint32_t> reach(subs.size(), 0);
    for (std::size_t s = 0; s < subs.size(); ++s) {
        for (int v = 0; v < hardware.num_vertices(); ++v) {
            if (!(subs[s] >> v & 1)) continue;
            for (int w : hardware.neighbors(v)) reach[s] |= std::uint32_t(1) << w;
        }
        reach[s] &= ~subs[s];
    }

    int np = problem.num_vertices();
    std::optional<int> best;
    std::vector<int> pick(static_cast<std::size_t>(np), -1);

    auto rec = [&](auto&& self, int i, std::uint32_t used, int total) -> void {
        if (best && total + (np - i) >= *best) return;  // every vertex still needs >= 1
        if (i == np) {
            best = total;
            return;
        }
        for (std::size_t s = 0; s < subs.size(); ++s) {
            if (subs[s] & used) continue;
            bool ok = true;
            for (int j : problem.neighbors(i)) {
                if (j >= i) continue;  // not placed yet
                std::size_t t = static_cast<std::size_t>(pick[static_cast<std::size_t>(j)]);
                if (!(subs[t] & reach[s])) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            pick[static_cast<std::size_t>(i)] = static_cast<int>(s);
            self(self, i + 1, used | subs[s], total + std::popcount(subs[s]));
            pick[static_cast<std::size_t>(i)] = -1;
        }
    };
    rec(rec, 0, 0, 0);
    return best;
}

inline bool embeddable(const feaskit::Graph& problem, const feaskit::Graph& hardware, int max_chain_size) {
    return best_embedding_size(problem, hardware, max_chain_size).has_value();
}

// Plain backtracking k-colorability in input vertex order.
inline bool colorable(const feaskit::Graph& g, int k) {
    std::vector<int> color(static_cast<std::size_t>(g.num_vertices()), -1);
    auto rec = [&](auto&& self, int v) -> bool {
        if (v == g.num_vertices()) return true;
        for (int c = 0; c < k; ++c) {
            bool clash = false;
            for (int w : g.neighbors(v))
                if (color[static_cast<std::size_t>(w)] == c) {
                    clash = true;
                    break;
                }
            if (clash) continue;
            color[static_cast<std::size_t>(v)] = c;
            if (self(self, v + 1)) return true;
            color[static_cast<std::size_t>(v)] = -1;
        }
        return false;
    };
    return rec(rec, 0);
}

inline int chromatic_number(const feaskit::Graph& g) {
    if (g.num_vertices() == 0) return 0;
    for (int k = 1;; ++k)
        if (colorable(g, k)) return k;
}

}  // namespace oracle
