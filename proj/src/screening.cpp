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

#include "feaskit/screening.hpp"

#include <stdexcept>

namespace feaskit {

const char* to_string(ScreenCondition c) {
    switch (c) {
        case ScreenCondition::DegreeBound: return "DegreeBound";
        case ScreenCondition::VertexBudget: return "VertexBudget";
        case ScreenCondition::EdgeBudget: return "EdgeBudget";
    }
    return "?";
}

std::optional<int> min_chain_size(int deg_p, int delta_h) {
    if (deg_p < 0) throw std::invalid_argument("min_chain_size: negative degree");
    if (delta_h <= 2) {
        // Paths and cycles: a chain is a path, and a path reaches at most
        // two outside neighbors no matter how long it is.
        if (deg_p <= 2) return 1;
        return std::nullopt;
    }
    if (deg_p <= 2) return 1;
    // ceil((deg_p - 2) / (delta_h - 2)), at least 1.
    int num = deg_p - 2;
    int den = delta_h - 2;
    int s = (num + den - 1) / den;
    return s < 1 ? 1 : s;
}

namespace {

ScreenResult reject(ScreenCondition cond, std::string detail, long long required, long long available,
                    int witness = -1) {
    ScreenResult r;
    r.pass = false;
    r.violated = cond;
    r.detail = std::move(detail);
    r.required = required;
    r.available = available;
    r.witness_vertex = witness;
    return r;
}

}  // namespace

ScreenResult zero_phase_screen(const Graph& problem, const Graph& hardware, int max_chain_size) {
    if (max_chain_size < 1) throw std::invalid_argument("zero_phase_screen: max chain size must be >= 1");
    if (problem.num_vertices() == 0 || hardware.num_vertices() == 0)
        throw std::invalid_argument("zero_phase_screen: graphs must be nonempty");

    const long long vp = problem.num_vertices();
    const long long vh = hardware.num_vertices();
    const long long ep = problem.num_edges();
    const long long eh = hardware.num_edges();

    // Trivial budgets first: every problem vertex needs at least one
    // hardware vertex, every problem edge at least one hardware edge.
    if (vh < vp)
        return reject(ScreenCondition::VertexBudget,
                      "hardware has " + std::to_string(vh) + " vertices for " + std::to_string(vp) +
                          " problem vertices",
                      vp, vh);
    if (eh < ep)
        return reject(ScreenCondition::EdgeBudget,
                      "hardware has " + std::to_string(eh) + " edges for " + std::to_string(ep) +
                          " problem edges",
                      ep, eh);

    const int delta_h = hardware.max_degree();
    std::vector<int> sizes(static_cast<std::size_t>(vp), 1);
    for (int i = 0; i < problem.num_vertices(); ++i) {
        auto s = min_chain_size(problem.degree(i), delta_h);
        if (!s)
            return reject(ScreenCondition::DegreeBound,
                          "vertex " + std::to_string(i) + " has degree " + std::to_string(problem.degree(i)) +
                              " but hardware of max degree " + std::to_string(delta_h) +
                              " supports at most 2 chain neighbors",
                          problem.degree(i), 2, i);
        if (*s > max_chain_size)
            return reject(ScreenCondition::DegreeBound,
                          "vertex " + std::to_string(i) + " needs a chain of at least " + std::to_string(*s) +
                              " vertices, cap is " + std::to_string(max_chain_size),
                          *s, max_chain_size, i);
        sizes[static_cast<std::size_t>(i)] = *s;
    }

    long long size_sum = 0;
    for (int s : sizes) size_sum += s;
    if (size_sum > vh)
        return reject(ScreenCondition::VertexBudget,
                      "minimum chain sizes need " + std::to_string(size_sum) + " hardware vertices, " +
                          std::to_string(vh) + " available",
                      size_sum, vh);

    // Each chain of size s consumes s-1 hardware edges internally, on top
    // of one hardware edge per problem edge.
    long long edge_need = ep + (size_sum - vp);
    if (edge_need > eh)
        return reject(ScreenCondition::EdgeBudget,
                      "problem edges plus internal chain edges need " + std::to_string(edge_need) +
                          " hardware edges, " + std::to_string(eh) + " available",
                      edge_need, eh);

    ScreenResult r;
    r.pass = true;
    r.min_sizes = std::move(sizes);
    return r;
}

}  // namespace feaskit
