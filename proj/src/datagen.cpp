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

#include "feaskit/datagen.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <json.hpp>
#include <regex>
#include <stdexcept>
#include <thread>

#include "feaskit/encoders.hpp"
#include "feaskit/fjump.hpp"
#include "feaskit/generators.hpp"
#include "feaskit/rng.hpp"
#include "feaskit/screening.hpp"
#include "feaskit/verify.hpp"

namespace feaskit {

const char* to_string(LabelStatus s) {
    switch (s) {
        case LabelStatus::Sat: return "sat";
        case LabelStatus::Unsat: return "unsat";
        case LabelStatus::Dropped: return "dropped";
    }
    return "?";
}

const char* to_string(Provenance p) {
    switch (p) {
        case Provenance::ZeroPhase: return "zero_phase";
        case Provenance::Exact: return "exact";
        case Provenance::Fj: return "fj";
    }
    return "?";
}

namespace {

constexpr int kSamplerRetries = 200;

Graph sample_coloring_graph(Rng& rng, bool paper_scale) {
    for (int attempt = 0; attempt < kSamplerRetries; ++attempt) {
        int n = static_cast<int>(rng.range_int(10, paper_scale ? 300 : 60));
        double d = rng.range_real(3.0, 5.2);
        double p = std::min(1.0, d / (n - 1));
        GraphSpec spec;
        spec.family = "er";
        spec.params = {{"n", static_cast<double>(n)}, {"p", p}};
        spec.seed = rng.next_u64();
        spec.drop_isolated = true;
        Graph g = generate(spec);
        // Isolated-vertex removal can shrink the graph below the documented
        // size range; resample rather than ship an undersized instance.
        if (g.num_vertices() >= 10) return g;
    }
    throw std::runtime_error("sample_instance: coloring sampler kept producing undersized graphs");
}

Graph sample_embedding_hardware(Rng& rng, bool paper_scale, std::string& family) {
    if (rng.bernoulli(0.5)) {
        family = "chimera";
        while (true) {
            int rows = static_cast<int>(rng.range_int(1, 4));
            int cols = static_cast<int>(rng.range_int(1, 4));
            if (!paper_scale && rows * cols > 5) continue;
            return chimera_graph(rows, cols, 4);
        }
    }
    int n = static_cast<int>(rng.range_int(20, paper_scale ? 100 : 40));
    switch (rng.below(3)) {
        case 0: {
            family = "er";
            for (int attempt = 0; attempt < kSamplerRetries; ++attempt) {
                GraphSpec spec;
                spec.family = "er";
                spec.params = {{"n", static_cast<double>(n)}, {"p", rng.range_real(0.4, 0.7)}};
                spec.seed = rng.next_u64();
                Graph g = generate(spec);
                if (g.is_connected()) return g;
            }
            throw std::runtime_error("sample_instance: could not draw a connected hardware graph");
        }
        case 1: {
            family = "regular";
            static constexpr int kDegrees[] = {6, 8, 10, 12};
            GraphSpec spec;
            spec.family = "regular";
            spec.params = {{"n", static_cast<double>(n)},
                           {"d", static_cast<double>(kDegrees[rng.below(4)])}};
            spec.seed = rng.next_u64();
            return generate(spec);
        }
        default: {
            family = "ws";
            static constexpr int kRing[] = {6, 8, 10, 12};
            GraphSpec spec;
            spec.family = "ws";
            spec.params = {{"n", static_cast<double>(n)},
                           {"k", static_cast<double>(kRing[rng.below(4)])},
                           {"beta", rng.range_real(0.05, 0.2)}};
            spec.seed = rng.next_u64();
            return generate(spec);
        }
    }
}

Graph sample_embedding_problem(Rng& rng, int n, std::string& family) {
    switch (rng.below(4)) {
        case 0: {
            family = "er";
            GraphSpec spec;
            spec.family = "er";
            spec.params = {{"n", static_cast<double>(n)}, {"p", rng.range_real(0.1, 0.6)}};
            spec.seed = rng.next_u64();
            return generate(spec);
        }
        case 1: {
            family = "ba";
            int m = static_cast<int>(rng.range_int(3, std::min(8, n - 1)));
            GraphSpec spec;
            spec.family = "ba";
            spec.params = {{"n", static_cast<double>(n)}, {"m", static_cast<double>(m)}};
            spec.seed = rng.next_u64();
            return generate(spec);
        }
        case 2: {
            family = "ws";
            static constexpr int kRing[] = {2, 4, 6, 8, 10};
            int k;
            do {
                k = kRing[rng.below(5)];
            } while (k >= n);
            GraphSpec spec;
            spec.family = "ws";
            spec.params = {{"n", static_cast<double>(n)},
                           {"k", static_cast<double>(k)},
                           {"beta", rng.range_real(0.05, 0.3)}};
            spec.seed = rng.next_u64();
            return generate(spec);
        }
        default: {
            family = "regular";
            static constexpr int kDegrees[] = {4, 6, 8, 10};
            int d;
            do {
                d = kDegrees[rng.below(4)];
            } while (d >= n);
            GraphSpec spec;
            spec.family = "regular";
            spec.params = {{"n", static_cast<double>(n)}, {"d", static_cast<double>(d)}};
            spec.seed = rng.next_u64();
            return generate(spec);
        }
    }
}

}  // namespace

Instance sample_instance(TaskKind task, std::uint64_t seed, bool paper_scale) {
    Rng rng(seed);
    Instance inst;
    inst.task = task;
    inst.seed = seed;

    if (task == TaskKind::KColoring || task == TaskKind::MinColoring) {
        inst.problem = sample_coloring_graph(rng, paper_scale);
        inst.problem_family = "er";
        inst.k = 3;
        return inst;
    }

    // Embedding: hardware first, then a problem graph that fits the
    // trivial vertex/edge budgets (pairs that cannot fit are resampled so
    // the dataset is not swamped with one-look rejections).
    inst.hardware = sample_embedding_hardware(rng, paper_scale, inst.hardware_family);
    int nh = inst.hardware->num_vertices();
    for (int attempt = 0; attempt < kSamplerRetries; ++attempt) {
        int lo = std::max(6, nh / 5);
        int np = static_cast<int>(rng.range_int(lo, nh));
        Graph p = sample_embedding_problem(rng, np, inst.problem_family);
        if (p.num_edges() <= inst.hardware->num_edges()) {
            inst.problem = std::move(p);
            inst.max_chain_size = 3;
            return inst;
        }
    }
    throw std::runtime_error("sample_instance: could not draw a problem graph within trivial budgets");
}

namespace {

// Relabel a coloring so colors appear as 0,1,2,... in first-use order;
// the jump fallback for min-coloring can leave gaps in the palette.
std::vector<int> compact_colors(const std::vector<int>& colors) {
    std::vector<int> map_to(colors.size(), -1);
    std::vector<int> out(colors.size());
    int next = 0;
    for (std::size_t i = 0; i < colors.size(); ++i) {
        int c = colors[i];
        if (map_to.at(static_cast<std::size_t>(c)) == -1) map_to[static_cast<std::size_t>(c)] = next++;
        out[i] = map_to[static_cast<std::size_t>(c)];
    }
    return out;
}

Label label_embedding(const Instance& inst, const LabelBudgets& budgets) {
    Label label;
    const Graph& problem = inst.problem;
    const Graph& hardware = *inst.hardware;

    ScreenResult screen = zero_phase_screen(problem, hardware, inst.max_chain_size);
    if (!screen.pass) {
        label.status = LabelStatus::Unsat;
        label.provenance = Provenance::ZeroPhase;
        return label;
    }

    Certificate cert;
    try {
        cert = exact_embed(problem, hardware, inst.max_chain_size, budgets.exact, true, budgets.chain_cap);
    } catch (const EnumerationLimitError& e) {
        label.note = e.what();
        return label;  // Dropped: too many chains to even set up a search
    }

    if (cert.outcome == Outcome::Infeasible) {
        label.status = LabelStatus::Unsat;
        label.provenance = Provenance::Exact;
        return label;
    }

    Phase2Config p2;
    p2.seed = derive_seed(inst.seed, 7);

    if (cert.embedding) {
        // Feasible (proved optimal) or Unknown with an incumbent; the
        // incumbent may be loose, thin it before recording.
        Embedding emb = *cert.embedding;
        if (cert.outcome == Outcome::Unknown) emb = fj_phase2(problem, hardware, inst.max_chain_size, emb, p2);
        label.status = LabelStatus::Sat;
        label.provenance = Provenance::Exact;
        label.embedding = emb;
        label.objective = embedding_total_vertices(emb);
        return label;
    }

    // Search budget died with no incumbent: fall back to the jump search
    // as a pure feasibility finder.  It can label sat, never unsat.
    EmbeddingEncoding enc;
    try {
        auto family = std::make_shared<ChainFamily>(
            enumerate_chains(hardware, inst.max_chain_size, budgets.chain_cap));
        enc = encode_embedding(problem, family, screen.min_sizes, budgets.row_cap, budgets.term_cap);
    } catch (const EnumerationLimitError& e) {
        label.note = e.what();
        return label;
    } catch (const EncodingLimitError& e) {
        label.note = e.what();
        return label;
    }

    for (int r = 0; r < budgets.fj_restarts; ++r) {
        FjConfig cfg;
        cfg.max_iterations = budgets.fj_iterations;
        cfg.time_limit_s = budgets.fj_time_s;
        cfg.seed = derive_seed(inst.seed, 100 + static_cast<std::uint64_t>(r));
        FjResult res = fj_search(enc.model, Assignment(static_cast<std::size_t>(enc.model.num_vars()), 0), cfg);
        if (res.status != FjStatus::Feasible) continue;
        Embedding emb = decode_embedding(enc, res.assignment);
        emb = fj_phase2(problem, hardware, inst.max_chain_size, emb, p2);
        label.status = LabelStatus::Sat;
        label.provenance = Provenance::Fj;
        label.embedding = emb;
        label.objective = embedding_total_vertices(emb);
        return label;
    }
    label.note = "exact search inconclusive and jump search found nothing";
    return label;
}

Label label_kcoloring(const Instance& inst, const LabelBudgets& budgets) {
    Label label;
    Certificate cert = exact_color(inst.problem, inst.k, budgets.exact);
    if (cert.outcome == Outcome::Feasible) {
        label.status = LabelStatus::Sat;
        label.provenance = Provenance::Exact;
        label.coloring = cert.coloring;
        return label;
    }
    if (cert.outcome == Outcome::Infeasible) {
        label.status = LabelStatus::Unsat;
        label.provenance = Provenance::Exact;
        return label;
    }

    ColoringEncoding enc;
    try {
        enc = encode_kcoloring(inst.problem, inst.k, budgets.row_cap);
    } catch (const EncodingLimitError& e) {
        label.note = e.what();
        return label;
    }
    for (int r = 0; r < budgets.fj_restarts; ++r) {
        FjConfig cfg;
        cfg.max_iterations = budgets.fj_iterations;
        cfg.time_limit_s = budgets.fj_time_s;
        cfg.seed = derive_seed(inst.seed, 100 + static_cast<std::uint64_t>(r));
        FjResult res = fj_search(enc.model, Assignment(static_cast<std::size_t>(enc.model.num_vars()), 0), cfg);
        if (res.status != FjStatus::Feasible) continue;
        label.status = LabelStatus::Sat;
        label.provenance = Provenance::Fj;
        label.coloring = decode_coloring(enc, res.assignment);
        return label;
    }
    label.note = "exact search inconclusive and jump search found nothing";
    return label;
}

Label label_mincoloring(const Instance& inst, const LabelBudgets& budgets) {
    Label label;
    Certificate cert = min_color(inst.problem, budgets.exact);
    if (cert.outcome == Outcome::Feasible) {
        label.status = LabelStatus::Sat;
        label.provenance = Provenance::Exact;
        label.coloring = cert.coloring;
        label.objective = cert.objective;
        return label;
    }

    // The deepening stalled.  Any proper coloring is still a usable
    // incumbent (the label is then best-found, not proved minimal); take
    // the jump search's, or the greedy incumbent the oracle returned.
    std::optional<std::vector<int>> colors;
    ColoringEncoding enc;
    try {
        enc = encode_mincoloring(inst.problem, budgets.row_cap);
        for (int r = 0; r < budgets.fj_restarts && !colors; ++r) {
            FjConfig cfg;
            cfg.max_iterations = budgets.fj_iterations;
            cfg.time_limit_s = budgets.fj_time_s;
            cfg.seed = derive_seed(inst.seed, 100 + static_cast<std::uint64_t>(r));
            FjResult res =
                fj_search(enc.model, Assignment(static_cast<std::size_t>(enc.model.num_vars()), 0), cfg);
            if (res.status == FjStatus::Feasible) colors = decode_coloring(enc, res.assignment);
        }
    } catch (const EncodingLimitError&) {
        // fall through to the oracle incumbent
    }
    auto palette_size = [](const std::vector<int>& c) {
        return c.empty() ? 0 : 1 + *std::max_element(c.begin(), c.end());
    };
    bool from_fj = colors.has_value();
    if (colors) *colors = compact_colors(*colors);
    if (cert.coloring) {
        std::vector<int> incumbent = compact_colors(*cert.coloring);
        if (!colors || palette_size(incumbent) <= palette_size(*colors)) {
            colors = std::move(incumbent);
            from_fj = false;
        }
    }
    if (!colors) {
        label.note = "no proper coloring found within budgets";
        return label;
    }
    label.status = LabelStatus::Sat;
    label.provenance = from_fj ? Provenance::Fj : Provenance::Exact;
    label.coloring = *colors;
    label.objective = palette_size(*colors);
    return label;
}

}  // namespace

Label label_instance(const Instance& inst, const LabelBudgets& budgets) {
    switch (inst.task) {
        case TaskKind::Embedding: return label_embedding(inst, budgets);
        case TaskKind::KColoring: return label_kcoloring(inst, budgets);
        case TaskKind::MinColoring: return label_mincoloring(inst, budgets);
    }
    throw std::invalid_argument("label_instance: unknown task");
}

std::string render_edge_list_brackets(const Graph& g) {
    std::string out = "[";
    const auto& edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (i) out += ",";
        out += "[" + std::to_string(edges[i].first) + "," + std::to_string(edges[i].second) + "]";
    }
    return out + "]";
}

std::string render_edge_list_tuples(const Graph& g) {
    std::string out = "[";
    const auto& edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (i) out += ",";
        out += "(" + std::to_string(edges[i].first) + "," + std::to_string(edges[i].second) + ")";
    }
    return out + "]";
}

Graph parse_edge_list(const std::string& text, int n) {
    std::vector<std::pair<int, int>> edges;
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto expect = [&](char c) {
        skip_ws();
        if (pos >= text.size() || text[pos] != c)
            throw std::invalid_argument("parse_edge_list: expected '" + std::string(1, c) + "' at position " +
                                        std::to_string(pos));
        ++pos;
    };
    auto integer = [&]() -> int {
        skip_ws();
        std::size_t start = pos;
        if (pos < text.size() && text[pos] == '-') ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw std::invalid_argument("parse_edge_list: expected integer at position " + std::to_string(pos));
        return std::stoi(text.substr(start, pos - start));
    };

    expect('[');
    skip_ws();
    if (pos < text.size() && text[pos] == ']') {
        ++pos;
    } else {
        while (true) {
            skip_ws();
            if (pos >= text.size()) throw std::invalid_argument("parse_edge_list: truncated list");
            char open = text[pos];
            if (open != '[' && open != '(')
                throw std::invalid_argument("parse_edge_list: expected '[' or '(' at position " + std::to_string(pos));
            ++pos;
            int u = integer();
            expect(',');
            int v = integer();
            expect(open == '[' ? ']' : ')');
            edges.emplace_back(u, v);
            skip_ws();
            if (pos < text.size() && text[pos] == ',') {
                ++pos;
                continue;
            }
            expect(']');
            break;
        }
    }
    skip_ws();
    if (pos != text.size()) throw std::invalid_argument("parse_edge_list: trailing characters");
    return Graph::from_edges(n, std::move(edges));
}

namespace {

std::string color_set_text(int k) {
    std::string s = "{";
    for (int c = 0; c < k; ++c) s += (c ? "," : "") + std::to_string(c);
    return s + "}";
}

std::string instruction_text(const Instance& inst) {
    int n = inst.problem.num_vertices();
    switch (inst.task) {
        case TaskKind::Embedding:
            return "Given a problem graph P with " + std::to_string(n) + " nodes labeled 0.." +
                   std::to_string(n - 1) + " and a hardware graph G with " +
                   std::to_string(inst.hardware->num_vertices()) +
                   " nodes, both undirected and given by edge lists, determine whether P can be "
                   "minor-embedded into G. A valid embedding maps each problem node to a connected chain "
                   "of hardware nodes, chains for different problem nodes are disjoint, and every problem "
                   "edge (u,v) must be realized by at least one hardware edge between the two "
                   "corresponding chains. Limit the chain size up to " +
                   std::to_string(inst.max_chain_size) +
                   " nodes. Among feasible embeddings, minimize the total number of hardware nodes used. "
                   "The input also provides, for each node, up to 2 neighbors with highest degree in the "
                   "form Ni:[a,b,#c,#d], where a,b are neighbors and #c,#d are their degrees. Output "
                   "exactly one of the following formats: yes, embedding: {problem_node: "
                   "[hardware_nodes], ...}, total nodes used: {n_nodes_used} or no.";
        case TaskKind::KColoring:
            return "Given an undirected graph with " + std::to_string(n) + " nodes labeled 0.." +
                   std::to_string(n - 1) + " and an edge list, decide whether the graph is " +
                   std::to_string(inst.k) + "-colorable. A valid " + std::to_string(inst.k) +
                   "-coloring assigns each node i a color c_i in " + color_set_text(inst.k) +
                   " such that for every edge (u,v), c_u != c_v. The input also provides, for each node, "
                   "up to 2 neighbors with highest degree in the form Ni:[a,b,#c,#d], where a,b are "
                   "neighbors and #c,#d are their degrees. Output exactly one of: No OR Yes, coloring: "
                   "[c0,c1,...,c(n-1)].";
        case TaskKind::MinColoring:
            return "Given an undirected graph with " + std::to_string(n) + " nodes labeled 0.." +
                   std::to_string(n - 1) +
                   " and an edge list, find a coloring that uses the minimum possible number of colors. "
                   "A valid coloring assigns each node i a color c_i (a nonnegative integer) such that "
                   "for every edge (u,v), c_u != c_v. The input also provides, for each node, up to 2 "
                   "neighbors with highest degree in the form Ni:[a,b,#c,#d], where a,b are neighbors "
                   "and #c,#d are their degrees. Output exactly: min_colors: K, coloring: "
                   "[c0,c1,...,c(n-1)].";
    }
    throw std::invalid_argument("instruction_text: unknown task");
}

std::string input_text(const Instance& inst) {
    if (inst.task == TaskKind::Embedding) {
        return "P edges: " + render_edge_list_brackets(inst.problem) + "\n" +
               "P top2 neighbor-degree info: " + top2_info(inst.problem) + "\n" +
               "G edges: " + render_edge_list_brackets(*inst.hardware) + "\n" +
               "G top2 neighbor-degree info: " + top2_info(*inst.hardware);
    }
    return "Edges: " + render_edge_list_tuples(inst.problem) + "\n" + top2_info(inst.problem);
}

std::string output_text(const Instance& inst, const Label& label) {
    switch (inst.task) {
        case TaskKind::Embedding:
            return label.status == LabelStatus::Sat ? render_embedding_yes(*label.embedding)
                                                    : render_embedding_no();
        case TaskKind::KColoring:
            return label.status == LabelStatus::Sat ? render_coloring_yes(*label.coloring)
                                                    : render_coloring_no();
        case TaskKind::MinColoring:
            return render_mincoloring(static_cast<int>(*label.objective), *label.coloring);
    }
    throw std::invalid_argument("output_text: unknown task");
}

}  // namespace

DatasetRecord render_record(const Instance& inst, const Label& label) {
    if (label.status == LabelStatus::Dropped)
        throw std::invalid_argument("render_record: dropped labels have no record");
    DatasetRecord rec;
    rec.instruction = instruction_text(inst);
    rec.input = input_text(inst);
    rec.output = output_text(inst, label);
    rec.task = inst.task;
    rec.provenance = label.provenance ? to_string(*label.provenance) : "";
    rec.seed = inst.seed;
    rec.n_problem = inst.problem.num_vertices();
    rec.n_hardware = inst.hardware ? inst.hardware->num_vertices() : 0;
    rec.max_chain_size = inst.task == TaskKind::Embedding ? inst.max_chain_size : 0;
    rec.k = inst.task == TaskKind::KColoring ? inst.k : 0;
    rec.objective = label.objective.value_or(-1);
    return rec;
}

std::string record_to_json(const DatasetRecord& rec) {
    nlohmann::json meta{{"task", to_string(rec.task)},
                        {"provenance", rec.provenance},
                        {"seed", rec.seed},
                        {"n_problem", rec.n_problem},
                        {"n_hardware", rec.n_hardware},
                        {"max_chain_size", rec.max_chain_size},
                        {"k", rec.k},
                        {"objective", rec.objective}};
    nlohmann::json j{{"instruction", rec.instruction},
                     {"input", rec.input},
                     {"output", rec.output},
                     {"meta", std::move(meta)}};
    return j.dump();
}

DatasetRecord record_from_json(const std::string& line) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("record: ") + e.what());
    }
    DatasetRecord rec;
    rec.instruction = j.at("instruction").get<std::string>();
    rec.input = j.at("input").get<std::string>();
    rec.output = j.at("output").get<std::string>();
    const auto& meta = j.at("meta");
    rec.task = task_kind_from_string(meta.at("task").get<std::string>());
    rec.provenance = meta.at("provenance").get<std::string>();
    rec.seed = meta.at("seed").get<std::uint64_t>();
    rec.n_problem = meta.at("n_problem").get<int>();
    rec.n_hardware = meta.at("n_hardware").get<int>();
    rec.max_chain_size = meta.at("max_chain_size").get<int>();
    rec.k = meta.at("k").get<int>();
    rec.objective = meta.at("objective").get<long long>();
    return rec;
}

namespace {

std::vector<int> instruction_numbers(const std::string& text, const std::regex& re) {
    std::vector<int> out;
    for (auto it = std::sregex_iterator(text.begin(), text.end(), re); it != std::sregex_iterator(); ++it)
        out.push_back(std::stoi((*it)[1].str()));
    return out;
}

std::string input_line_after(const std::string& input, const std::string& prefix) {
    std::size_t at = input.find(prefix);
    if (at == std::string::npos)
        throw std::invalid_argument("parse_record_input: missing \"" + prefix + "\"");
    std::size_t start = at + prefix.size();
    std::size_t end = input.find('\n', start);
    if (end == std::string::npos) end = input.size();
    return input.substr(start, end - start);
}

}  // namespace

ParsedRecordInput parse_record_input(const DatasetRecord& rec) {
    static const std::regex kNodes("with (\\d+) nodes");
    static const std::regex kChain("chain size up to (\\d+) nodes");
    static const std::regex kColorable("(\\d+)-colorable");

    ParsedRecordInput out;
    out.task = rec.task;
    std::vector<int> nodes = instruction_numbers(rec.instruction, kNodes);
    if (rec.task == TaskKind::Embedding) {
        if (nodes.size() != 2) throw std::invalid_argument("parse_record_input: expected two node counts");
        std::vector<int> chain = instruction_numbers(rec.instruction, kChain);
        if (chain.size() != 1) throw std::invalid_argument("parse_record_input: missing chain cap");
        out.max_chain_size = chain[0];
        out.problem = parse_edge_list(input_line_after(rec.input, "P edges: "), nodes[0]);
        out.hardware = parse_edge_list(input_line_after(rec.input, "G edges: "), nodes[1]);
        return out;
    }
    if (nodes.size() != 1) throw std::invalid_argument("parse_record_input: expected one node count");
    out.problem = parse_edge_list(input_line_after(rec.input, "Edges: "), nodes[0]);
    if (rec.task == TaskKind::KColoring) {
        std::vector<int> k = instruction_numbers(rec.instruction, kColorable);
        if (k.empty()) throw std::invalid_argument("parse_record_input: missing palette size");
        out.k = k[0];
    }
    return out;
}

GeneratedDataset generate_dataset(const DatasetConfig& cfg) {
    if (cfg.count < 0) throw std::invalid_argument("generate_dataset: negative count");
    GeneratedDataset out;
    out.records.reserve(static_cast<std::size_t>(cfg.count));

    bool balance = cfg.balance && cfg.task != TaskKind::MinColoring;
    long long max_sat = cfg.count, max_unsat = cfg.count;
    if (balance) {
        // Floor both caps so the final fraction cannot leave the band:
        // sat <= floor(count*(target+tol)) and count-sat <= the mirror cap.
        max_sat = static_cast<long long>(std::floor(cfg.count * (cfg.sat_target + cfg.sat_tolerance) + 1e-9));
        max_unsat =
            static_cast<long long>(std::floor(cfg.count * (1.0 - cfg.sat_target + cfg.sat_tolerance) + 1e-9));
        if (max_sat + max_unsat < cfg.count)
            throw std::invalid_argument("generate_dataset: tolerance band too tight for the record count");
    }
    long long sat_count = 0, unsat_count = 0;
    const long long max_attempts = cfg.count * cfg.attempt_factor + 1;

    int jobs = std::max(1, cfg.jobs);
    const long long batch = std::max<long long>(16, static_cast<long long>(jobs) * 8);
    long long next_index = 0;

    while (static_cast<int>(out.records.size()) < cfg.count) {
        if (next_index >= max_attempts)
            throw std::runtime_error("generate_dataset: attempt budget exhausted at " +
                                     std::to_string(out.records.size()) + " of " + std::to_string(cfg.count) +
                                     " records");
        long long begin = next_index;
        long long end = std::min(max_attempts, begin + batch);
        next_index = end;

        std::vector<std::pair<Instance, Label>> labeled(static_cast<std::size_t>(end - begin));
        auto work = [&](long long idx) {
            Instance inst = sample_instance(cfg.task, derive_seed(cfg.master_seed, static_cast<std::uint64_t>(idx)),
                                            cfg.paper_scale);
            Label label = label_instance(inst, cfg.budgets);
            labeled[static_cast<std::size_t>(idx - begin)] = {std::move(inst), std::move(label)};
        };
        if (jobs == 1) {
            for (long long idx = begin; idx < end; ++idx) work(idx);
        } else {
            std::atomic<long long> cursor{begin};
            std::vector<std::thread> pool;
            pool.reserve(static_cast<std::size_t>(jobs));
            for (int t = 0; t < jobs; ++t)
                pool.emplace_back([&] {
                    while (true) {
                        long long idx = cursor.fetch_add(1);
                        if (idx >= end) return;
                        work(idx);
                    }
                });
            for (auto& th : pool) th.join();
        }

        // Serial acceptance in index order keeps the output independent of
        // thread scheduling.
        for (auto& [inst, label] : labeled) {
            if (static_cast<int>(out.records.size()) >= cfg.count) break;
            ++out.attempts;
            if (label.status == LabelStatus::Dropped) {
                ++out.dropped;
                continue;
            }
            bool is_sat = label.status == LabelStatus::Sat;
            if (is_sat ? sat_count >= max_sat : unsat_count >= max_unsat) {
                ++out.balance_rejected;
                continue;
            }
            (is_sat ? sat_count : unsat_count) += 1;
            out.records.push_back(render_record(inst, label));
        }
    }
    return out;
}

DatasetStats dataset_stats(const std::vector<DatasetRecord>& records) {
    DatasetStats st;
    st.count = static_cast<int>(records.size());
    long long vertex_sum = 0;
    for (const auto& rec : records) {
        st.by_task[static_cast<int>(rec.task)] += 1;
        bool is_no = rec.output == "no" || rec.output == "No";
        (is_no ? st.unsat : st.sat) += 1;
        int n = rec.n_problem;
        vertex_sum += n;
        if (st.count > 0) {
            if (st.min_vertices == 0 || n < st.min_vertices) st.min_vertices = n;
            st.max_vertices = std::max(st.max_vertices, n);
        }
        if (rec.provenance == "exact") ++st.exact_labels;
        else if (rec.provenance == "fj") ++st.fj_labels;
        else if (rec.provenance == "zero_phase") ++st.zero_phase_labels;
    }
    if (st.count > 0) st.mean_vertices = static_cast<double>(vertex_sum) / st.count;
    return st;
}

}  // namespace feaskit
