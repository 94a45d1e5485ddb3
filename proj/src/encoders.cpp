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

#include "feaskit/encoders.hpp"

#include <algorithm>
#include <string>

#include "feaskit/exact.hpp"

namespace feaskit {

EmbeddingEncoding encode_embedding(const Graph& problem, std::shared_ptr<const ChainFamily> family,
                                   const std::vector<int>& min_sizes, std::size_t max_rows,
                                   std::size_t max_terms) {
    if (!family) throw std::invalid_argument("encode_embedding: null chain family");
    if (static_cast<int>(min_sizes.size()) != problem.num_vertices())
        throw std::invalid_argument("encode_embedding: min_sizes length must match problem size");

    EmbeddingEncoding enc;
    enc.family = family;
    const int np = problem.num_vertices();
    enc.candidates.resize(static_cast<std::size_t>(np));
    for (int i = 0; i < np; ++i) {
        enc.candidates[static_cast<std::size_t>(i)] =
            candidate_chains(*family, problem, i, min_sizes[static_cast<std::size_t>(i)]);
        if (enc.candidates[static_cast<std::size_t>(i)].empty())
            throw std::invalid_argument("encode_embedding: vertex " + std::to_string(i) +
                                        " has no candidate chains; instance is infeasible");
    }

    // Row count is known before any row is built; bail out early on
    // instances whose eager adjacency rows would not fit in memory.
    std::size_t rows = static_cast<std::size_t>(np) + 1;
    for (auto [u, v] : problem.edges())
        rows += enc.candidates[static_cast<std::size_t>(u)].size() +
                enc.candidates[static_cast<std::size_t>(v)].size();
    rows += static_cast<std::size_t>(family->hardware().num_vertices());
    if (rows > max_rows)
        throw EncodingLimitError("encode_embedding: " + std::to_string(rows) + " rows exceed cap of " +
                                 std::to_string(max_rows));

    Model& m = enc.model;

    // The adjacency rows below can carry thousands of nonzeros each on
    // dense hardware, so memory is bounded by nonzero count, not rows;
    // charge every row against the term budget and give up cleanly.
    std::size_t terms_used = 0;
    auto charge = [&](std::size_t n) {
        terms_used += n;
        if (terms_used > max_terms)
            throw EncodingLimitError("encode_embedding: nonzero count exceeds cap of " +
                                     std::to_string(max_terms));
    };

    // Variables x[i][C] in vertex-major order, candidates ascending.
    std::vector<std::vector<int>> var_of(static_cast<std::size_t>(np));
    for (int i = 0; i < np; ++i)
        for (int c : enc.candidates[static_cast<std::size_t>(i)]) {
            int var = m.add_var(0, 1, "x[" + std::to_string(i) + "][" + std::to_string(c) + "]");
            var_of[static_cast<std::size_t>(i)].push_back(var);
            enc.var_info.emplace_back(i, c);
        }

    // Exactly one chain per problem vertex.
    for (int i = 0; i < np; ++i) {
        std::vector<std::pair<int, long long>> terms;
        for (int var : var_of[static_cast<std::size_t>(i)]) terms.emplace_back(var, 1);
        charge(terms.size());
        m.add_constraint(std::move(terms), Sense::Eq, 1);
        ++enc.assignment_rows;
    }

    // At most one chosen chain covers each hardware vertex.
    for (int hv = 0; hv < family->hardware().num_vertices(); ++hv) {
        std::vector<std::pair<int, long long>> terms;
        for (int i = 0; i < np; ++i) {
            const auto& cand = enc.candidates[static_cast<std::size_t>(i)];
            // Chains containing hv, restricted to i's candidate list.
            for (int c : family->by_vertex(hv)) {
                auto it = std::lower_bound(cand.begin(), cand.end(), c);
                if (it != cand.end() && *it == c)
                    terms.emplace_back(var_of[static_cast<std::size_t>(i)][static_cast<std::size_t>(
                                           it - cand.begin())],
                                       1);
            }
        }
        if (terms.size() < 2) continue;  // vacuously true
        charge(terms.size());
        m.add_constraint(std::move(terms), Sense::LessEq, 1);
        ++enc.disjointness_rows;
    }

    // Choosing chain C for u forces a C-adjacent chain for each problem
    // neighbor v.  Both arc directions are emitted.
    auto emit_arc = [&](int u, int v) {
        const auto& cu = enc.candidates[static_cast<std::size_t>(u)];
        const auto& cv = enc.candidates[static_cast<std::size_t>(v)];
        for (std::size_t ui = 0; ui < cu.size(); ++ui) {
            const std::vector<int>& adj = family->gamma(cu[ui]);
            std::vector<std::pair<int, long long>> terms;
            terms.emplace_back(var_of[static_cast<std::size_t>(u)][ui], 1);
            // Intersect gamma(C) with v's candidate list (both ascending).
            std::size_t a = 0, b = 0;
            while (a < adj.size() && b < cv.size()) {
                if (adj[a] < cv[b]) {
                    ++a;
                } else if (adj[a] > cv[b]) {
                    ++b;
                } else {
                    terms.emplace_back(var_of[static_cast<std::size_t>(v)][b], -1);
                    ++a;
                    ++b;
                }
            }
            charge(terms.size());
            m.add_constraint(std::move(terms), Sense::LessEq, 0);
            ++enc.adjacency_rows;
        }
    };
    for (auto [u, v] : problem.edges()) {
        emit_arc(u, v);
        emit_arc(v, u);
    }

    // Internal chain edges compete with problem edges for hardware edges.
    {
        long long surplus = static_cast<long long>(family->hardware().num_edges()) - problem.num_edges();
        std::vector<std::pair<int, long long>> terms;
        for (std::size_t var = 0; var < enc.var_info.size(); ++var) {
            int c = enc.var_info[var].second;
            long long internal = family->chain(c).internal_edges;
            if (internal != 0) terms.emplace_back(static_cast<int>(var), internal);
        }
        charge(terms.size());
        m.add_constraint(std::move(terms), Sense::LessEq, surplus);
        ++enc.budget_rows;
    }

    std::vector<long long> obj(enc.var_info.size());
    for (std::size_t var = 0; var < enc.var_info.size(); ++var)
        obj[var] = family->chain(enc.var_info[var].second).size();
    m.set_objective(std::move(obj));
    return enc;
}

Embedding decode_embedding(const EmbeddingEncoding& enc, const Assignment& x) {
    if (static_cast<int>(x.size()) != enc.model.num_vars())
        throw std::invalid_argument("decode_embedding: assignment length mismatch");
    Embedding out;
    std::vector<int> chosen(enc.candidates.size(), -1);
    for (std::size_t var = 0; var < enc.var_info.size(); ++var) {
        if (x[var] == 0) continue;
        auto [i, c] = enc.var_info[var];
        if (chosen[static_cast<std::size_t>(i)] != -1)
            throw std::invalid_argument("decode_embedding: vertex " + std::to_string(i) +
                                        " has multiple chains selected");
        chosen[static_cast<std::size_t>(i)] = c;
    }
    for (std::size_t i = 0; i < chosen.size(); ++i) {
        if (chosen[i] == -1)
            throw std::invalid_argument("decode_embedding: vertex " + std::to_string(i) +
                                        " has no chain selected");
        out[static_cast<int>(i)] = enc.family->chain(chosen[i]).vertices;
    }
    return out;
}

namespace {

ColoringEncoding build_coloring(const Graph& g, int palette, bool minimize, std::size_t max_rows) {
    if (palette < 1) throw std::invalid_argument("coloring encoding: palette must be >= 1");
    std::size_t rows = static_cast<std::size_t>(g.num_vertices()) +
                       static_cast<std::size_t>(g.num_edges()) * static_cast<std::size_t>(palette);
    if (minimize)
        rows += static_cast<std::size_t>(g.num_vertices()) * static_cast<std::size_t>(palette) +
                static_cast<std::size_t>(palette);
    if (rows > max_rows)
        throw EncodingLimitError("coloring encoding: " + std::to_string(rows) + " rows exceed cap of " +
                                 std::to_string(max_rows));

    ColoringEncoding enc;
    enc.num_vertices = g.num_vertices();
    enc.palette = palette;
    enc.minimize = minimize;
    Model& m = enc.model;

    for (int v = 0; v < g.num_vertices(); ++v)
        for (int c = 0; c < palette; ++c) m.add_var(0, 1, "x[" + std::to_string(v) + "][" + std::to_string(c) + "]");
    if (minimize)
        for (int c = 0; c < palette; ++c) m.add_var(0, 1, "y[" + std::to_string(c) + "]");

    for (int v = 0; v < g.num_vertices(); ++v) {
        std::vector<std::pair<int, long long>> terms;
        for (int c = 0; c < palette; ++c) terms.emplace_back(enc.color_var(v, c), 1);
        m.add_constraint(std::move(terms), Sense::Eq, 1);
        ++enc.assignment_rows;
    }
    for (auto [u, v] : g.edges())
        for (int c = 0; c < palette; ++c) {
            m.add_constraint({{enc.color_var(u, c), 1}, {enc.color_var(v, c), 1}}, Sense::LessEq, 1);
            ++enc.edge_rows;
        }
    if (minimize) {
        for (int v = 0; v < g.num_vertices(); ++v)
            for (int c = 0; c < palette; ++c) {
                m.add_constraint({{enc.color_var(v, c), 1}, {enc.use_var(c), -1}}, Sense::LessEq, 0);
                ++enc.linking_rows;
            }
        for (int c = 0; c + 1 < palette; ++c) {
            m.add_constraint({{enc.use_var(c + 1), 1}, {enc.use_var(c), -1}}, Sense::LessEq, 0);
            ++enc.symmetry_rows;
        }
        std::vector<long long> obj(static_cast<std::size_t>(m.num_vars()), 0);
        for (int c = 0; c < palette; ++c) obj[static_cast<std::size_t>(enc.use_var(c))] = 1;
        m.set_objective(std::move(obj));
    }
    return enc;
}

}  // namespace

ColoringEncoding encode_kcoloring(const Graph& g, int k, std::size_t max_rows) {
    return build_coloring(g, k, false, max_rows);
}

ColoringEncoding encode_mincoloring(const Graph& g, std::size_t max_rows) {
    if (g.num_vertices() == 0) throw std::invalid_argument("encode_mincoloring: empty graph");
    return build_coloring(g, greedy_coloring_bound(g), true, max_rows);
}

std::vector<int> decode_coloring(const ColoringEncoding& enc, const Assignment& x) {
    if (static_cast<int>(x.size()) != enc.model.num_vars())
        throw std::invalid_argument("decode_coloring: assignment length mismatch");
    std::vector<int> colors(static_cast<std::size_t>(enc.num_vertices), -1);
    for (int v = 0; v < enc.num_vertices; ++v) {
        for (int c = 0; c < enc.palette; ++c) {
            if (x[static_cast<std::size_t>(enc.color_var(v, c))] == 0) continue;
            if (colors[static_cast<std::size_t>(v)] != -1)
                throw std::invalid_argument("decode_coloring: vertex " + std::to_string(v) +
                                            " has multiple colors selected");
            colors[static_cast<std::size_t>(v)] = c;
        }
        if (colors[static_cast<std::size_t>(v)] == -1)
            throw std::invalid_argument("decode_coloring: vertex " + std::to_string(v) + " has no color");
    }
    return colors;
}

}  // namespace feaskit
