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

#include "feaskit/chains.hpp"

#include <algorithm>

namespace feaskit {

ChainFamily::ChainFamily(Graph hardware, int max_chain_size, std::vector<Chain> chains)
    : hardware_(std::move(hardware)), max_chain_size_(max_chain_size), chains_(std::move(chains)) {
    by_vertex_.assign(static_cast<std::size_t>(hardware_.num_vertices()), {});
    for (std::size_t c = 0; c < chains_.size(); ++c)
        for (int v : chains_[c].vertices) by_vertex_[static_cast<std::size_t>(v)].push_back(static_cast<int>(c));
    gamma_.assign(chains_.size(), {});
    gamma_done_.assign(chains_.size(), 0);
}

const std::vector<int>& ChainFamily::gamma(int c) const {
    auto ci = static_cast<std::size_t>(c);
    if (gamma_done_.at(ci)) return gamma_[ci];
    // Touch set: every vertex reachable from the chain along one hardware
    // edge (boundary vertices, plus chain vertices with an internal edge).
    // Any chain containing a touched vertex is adjacent.
    const Chain& ch = chains_[ci];
    std::vector<int> touched(ch.boundary);
    for (int v : ch.vertices)
        for (int w : hardware_.neighbors(v))
            if (std::binary_search(ch.vertices.begin(), ch.vertices.end(), w)) {
                touched.push_back(v);
                break;
            }
    std::vector<int>& out = gamma_[ci];
    for (int v : touched)
        for (int d : by_vertex_[static_cast<std::size_t>(v)])
            if (d != c) out.push_back(d);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    gamma_done_[ci] = 1;
    return out;
}

namespace {

struct Enumerator {
    const Graph& g;
    int max_size;
    std::size_t cap;
    std::vector<char> visited;
    std::vector<int> sub;
    std::vector<std::vector<int>> out;

    Enumerator(const Graph& graph, int L, std::size_t c)
        : g(graph), max_size(L), cap(c), visited(static_cast<std::size_t>(graph.num_vertices()), 0) {}

    void emit() {
        if (out.size() >= cap)
            throw EnumerationLimitError("enumerate_chains: more than " + std::to_string(cap) + " chains");
        std::vector<int> s(sub);
        std::sort(s.begin(), s.end());
        out.push_back(std::move(s));
    }

    // Classic exclusive-neighborhood extension: every connected set is
    // grown exactly once, from its minimum vertex, and each vertex enters
    // the extension list the first time it becomes reachable.
    void extend(std::vector<int> ext, int root) {
        emit();
        if (static_cast<int>(sub.size()) == max_size) return;
        while (!ext.empty()) {
            int w = ext.back();
            ext.pop_back();
            std::vector<int> added;
            for (int u : g.neighbors(w))
                if (u > root && !visited[static_cast<std::size_t>(u)]) {
                    visited[static_cast<std::size_t>(u)] = 1;
                    added.push_back(u);
                }
            std::vector<int> ext2(ext);
            ext2.insert(ext2.end(), added.begin(), added.end());
            sub.push_back(w);
            extend(std::move(ext2), root);
            sub.pop_back();
            for (int u : added) visited[static_cast<std::size_t>(u)] = 0;
            // w stays visited for the rest of this loop so later branches
            // cannot re-add it; the level that first saw it unmarks it.
        }
    }

    void run() {
        for (int v = 0; v < g.num_vertices(); ++v) {
            visited[static_cast<std::size_t>(v)] = 1;
            std::vector<int> ext;
            for (int u : g.neighbors(v))
                if (u > v) {
                    visited[static_cast<std::size_t>(u)] = 1;
                    ext.push_back(u);
                }
            sub.assign(1, v);
            extend(ext, v);
            visited[static_cast<std::size_t>(v)] = 0;
            for (int u : ext) visited[static_cast<std::size_t>(u)] = 0;
        }
    }
};

}  // namespace

ChainFamily enumerate_chains(const Graph& hardware, int max_chain_size, std::size_t cap) {
    if (max_chain_size < 1) throw std::invalid_argument("enumerate_chains: max chain size must be >= 1");
    Enumerator en(hardware, max_chain_size, cap);
    en.run();

    std::sort(en.out.begin(), en.out.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });

    std::vector<Chain> chains;
    chains.reserve(en.out.size());
    std::vector<char> in_chain(static_cast<std::size_t>(hardware.num_vertices()), 0);
    for (auto& verts : en.out) {
        Chain ch;
        ch.vertices = std::move(verts);
        for (int v : ch.vertices) in_chain[static_cast<std::size_t>(v)] = 1;
        for (int v : ch.vertices)
            for (int w : hardware.neighbors(v)) {
                if (in_chain[static_cast<std::size_t>(w)]) {
                    if (v < w) ++ch.internal_edges;
                } else {
                    ch.boundary.push_back(w);
                }
            }
        std::sort(ch.boundary.begin(), ch.boundary.end());
        ch.boundary.erase(std::unique(ch.boundary.begin(), ch.boundary.end()), ch.boundary.end());
        for (int v : ch.vertices) in_chain[static_cast<std::size_t>(v)] = 0;
        chains.push_back(std::move(ch));
    }
    return ChainFamily(hardware, max_chain_size, std::move(chains));
}

std::vector<int> candidate_chains(const ChainFamily& family, const Graph& problem, int problem_vertex,
                                  int min_size) {
    int need_boundary = problem.degree(problem_vertex);
    std::vector<int> out;
    for (std::size_t c = 0; c < family.size(); ++c) {
        const Chain& ch = family.chain(static_cast<int>(c));
        if (ch.size() >= min_size && static_cast<int>(ch.boundary.size()) >= need_boundary)
            out.push_back(static_cast<int>(c));
    }
    return out;
}

bool chains_adjacent(const ChainFamily& family, int c, int d) {
    if (c == d) return false;
    const Chain& a = family.chain(c);
    const Chain& b = family.chain(d);
    for (int v : a.vertices)
        for (int w : b.vertices)
            if (v != w && family.hardware().has_edge(v, w)) return true;
    return false;
}

}  // namespace feaskit
