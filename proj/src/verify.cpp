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

#include "feaskit/verify.hpp"

#include <algorithm>
#include <set>

namespace feaskit {

namespace {

std::string join_ints(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[static_cast<std::size_t>(i)]);
    return s;
}

bool chain_connected(const Graph& hardware, const std::vector<int>& chain) {
    if (chain.empty()) return false;
    std::set<int> members(chain.begin(), chain.end());
    std::vector<int> stack{chain.front()};
    std::set<int> seen{chain.front()};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : hardware.neighbors(v))
            if (members.count(w) && !seen.count(w)) {
                seen.insert(w);
                stack.push_back(w);
            }
    }
    return seen.size() == members.size();
}

}  // namespace

EmbeddingReport verify_embedding(const Graph& problem, const Graph& hardware, int max_chain_size,
                                 const Embedding& emb) {
    EmbeddingReport rep;
    auto flag = [&](std::string rule, std::string detail) {
        rep.violations.push_back({std::move(rule), std::move(detail)});
    };

    for (int i = 0; i < problem.num_vertices(); ++i)
        if (!emb.count(i)) flag("missing_vertex", "problem vertex " + std::to_string(i) + " is not mapped");

    std::vector<int> owner(static_cast<std::size_t>(hardware.num_vertices()), -1);
    for (const auto& [i, chain] : emb) {
        std::string tag = "chain of problem vertex " + std::to_string(i);
        if (i < 0 || i >= problem.num_vertices()) {
            flag("unknown_vertex", "problem vertex " + std::to_string(i) + " does not exist");
            continue;
        }
        if (chain.empty()) {
            flag("empty_chain", tag + " is empty");
            continue;
        }
        bool in_range = true;
        for (int v : chain)
            if (v < 0 || v >= hardware.num_vertices()) {
                flag("unknown_vertex", tag + " uses hardware vertex " + std::to_string(v) + " which does not exist");
                in_range = false;
            }
        if (!in_range) continue;
        std::vector<int> sorted(chain);
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            flag("duplicate_vertex", tag + " repeats a hardware vertex");
            continue;
        }
        if (static_cast<int>(chain.size()) > max_chain_size)
            flag("chain_too_long", tag + " has " + std::to_string(chain.size()) + " vertices, cap is " +
                                       std::to_string(max_chain_size));
        if (!chain_connected(hardware, chain)) flag("disconnected_chain", tag + " [" + join_ints(chain) + "] is not connected");
        for (int v : chain) {
            int& o = owner[static_cast<std::size_t>(v)];
            if (o != -1 && o != i)
                flag("overlap", "hardware vertex " + std::to_string(v) + " is used by problem vertices " +
                                    std::to_string(o) + " and " + std::to_string(i));
            o = i;
        }
        rep.total_vertices += static_cast<int>(chain.size());
    }

    for (auto [u, v] : problem.edges()) {
        auto iu = emb.find(u);
        auto iv = emb.find(v);
        if (iu == emb.end() || iv == emb.end()) continue;  // already flagged as missing
        bool realized = false;
        for (int a : iu->second) {
            if (a < 0 || a >= hardware.num_vertices()) break;
            for (int b : iv->second)
                if (b >= 0 && b < hardware.num_vertices() && hardware.has_edge(a, b)) {
                    realized = true;
                    break;
                }
            if (realized) break;
        }
        if (!realized)
            flag("unrealized_edge", "problem edge (" + std::to_string(u) + "," + std::to_string(v) +
                                        ") has no hardware edge between its chains");
    }

    rep.valid = rep.violations.empty();
    return rep;
}

ColoringReport verify_coloring(const Graph& g, int k, const std::vector<int>& colors) {
    ColoringReport rep;
    auto flag = [&](std::string rule, std::string detail) {
        rep.violations.push_back({std::move(rule), std::move(detail)});
    };

    if (static_cast<int>(colors.size()) != g.num_vertices()) {
        flag("length_mismatch", "got " + std::to_string(colors.size()) + " colors for " +
                                    std::to_string(g.num_vertices()) + " vertices");
        rep.valid = false;
        rep.error_ratio = 1.0;
        return rep;
    }
    for (int v = 0; v < g.num_vertices(); ++v)
        if (colors[static_cast<std::size_t>(v)] < 0 || colors[static_cast<std::size_t>(v)] >= k)
            flag("color_out_of_range", "vertex " + std::to_string(v) + " has color " +
                                           std::to_string(colors[static_cast<std::size_t>(v)]) +
                                           ", palette is [0," + std::to_string(k) + ")");
    for (auto [u, v] : g.edges())
        if (colors[static_cast<std::size_t>(u)] == colors[static_cast<std::size_t>(v)]) {
            ++rep.conflicting_edges;
            flag("monochromatic_edge", "edge (" + std::to_string(u) + "," + std::to_string(v) +
                                           ") has both endpoints colored " +
                                           std::to_string(colors[static_cast<std::size_t>(u)]));
        }

    rep.error_ratio = g.num_edges() == 0 ? 0.0
                                         : static_cast<double>(rep.conflicting_edges) /
                                               static_cast<double>(g.num_edges());
    rep.valid = rep.violations.empty();
    return rep;
}

}  // namespace feaskit
