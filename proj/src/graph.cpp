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

#include "feaskit/graph.hpp"

#include <algorithm>
#include <json.hpp>
#include <stdexcept>

namespace feaskit {

Graph Graph::from_edges(int num_vertices, std::vector<std::pair<int, int>> edges) {
    if (num_vertices < 0) throw std::invalid_argument("graph: negative vertex count");
    for (auto& [u, v] : edges) {
        if (u < 0 || u >= num_vertices || v < 0 || v >= num_vertices)
            throw std::invalid_argument("graph: edge endpoint out of range: (" + std::to_string(u) +
                                        "," + std::to_string(v) + ")");
        if (u == v)
            throw std::invalid_argument("graph: self-loop rejected at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("graph: duplicate edge rejected");

    Graph g;
    g.n_ = num_vertices;
    g.edges_ = std::move(edges);
    g.adj_.assign(static_cast<std::size_t>(num_vertices), {});
    for (auto [u, v] : g.edges_) {
        g.adj_[static_cast<std::size_t>(u)].push_back(v);
        g.adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());
    return g;
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& nbrs : adj_) d = std::max(d, static_cast<int>(nbrs.size()));
    return d;
}

bool Graph::has_edge(int u, int v) const {
    const auto& nbrs = neighbors(u);
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

bool Graph::is_connected() const {
    if (n_ <= 1) return true;
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : neighbors(v)) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == n_;
}

Graph Graph::without_isolated() const {
    std::vector<int> relabel(static_cast<std::size_t>(n_), -1);
    int next = 0;
    for (int v = 0; v < n_; ++v)
        if (!adj_[static_cast<std::size_t>(v)].empty()) relabel[static_cast<std::size_t>(v)] = next++;
    std::vector<std::pair<int, int>> edges;
    edges.reserve(edges_.size());
    for (auto [u, v] : edges_)
        edges.emplace_back(relabel[static_cast<std::size_t>(u)], relabel[static_cast<std::size_t>(v)]);
    return from_edges(next, std::move(edges));
}

std::string Graph::to_json() const {
    nlohmann::json j;
    j["n"] = n_;
    auto arr = nlohmann::json::array();
    for (auto [u, v] : edges_) arr.push_back({u, v});
    j["edges"] = std::move(arr);
    return j.dump();
}

Graph Graph::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        // e.what() already carries the byte position of the failure.
        throw std::invalid_argument(std::string("graph: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw std::invalid_argument("graph: expected object with fields \"n\" and \"edges\"");
    int n = j.at("n").get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("graph: each edge must be a two-element array");
        edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    }
    return from_edges(n, std::move(edges));
}

std::string top2_info(const Graph& g) {
    std::string out;
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (v > 0) out += "; ";
        out += "N" + std::to_string(v) + ":[";
        const auto& nbrs = g.neighbors(v);
        // Highest degree first; ties go to the smaller id.  Neighbor lists
        // are id-sorted, so a stable selection keeps the tie rule.
        std::vector<int> ranked(nbrs);
        std::stable_sort(ranked.begin(), ranked.end(),
                         [&](int a, int b) { return g.degree(a) > g.degree(b); });
        int take = std::min<int>(2, static_cast<int>(ranked.size()));
        for (int i = 0; i < take; ++i) out += (i ? "," : "") + std::to_string(ranked[static_cast<std::size_t>(i)]);
        for (int i = 0; i < take; ++i)
            out += ",#" + std::to_string(g.degree(ranked[static_cast<std::size_t>(i)]));
        out += "]";
    }
    return out;
}

}  // namespace feaskit
