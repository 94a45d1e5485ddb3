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
//
// feaskit command line front end.  Every subcommand prints exactly one
// JSON document to stdout (dataset record files go to --out); diagnostics
// go to stderr.  Exit codes: 0 success, 1 domain negative (infeasible,
// screen-rejected, solver gave up), 2 usage errors and malformed inputs.

#include <CLI11.hpp>
#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "feaskit/chains.hpp"
#include "feaskit/datagen.hpp"
#include "feaskit/encoders.hpp"
#include "feaskit/exact.hpp"
#include "feaskit/fjump.hpp"
#include "feaskit/generators.hpp"
#include "feaskit/graph.hpp"
#include "feaskit/rng.hpp"
#include "feaskit/screening.hpp"
#include "feaskit/select.hpp"
#include "feaskit/verify.hpp"

namespace {

using feaskit::Assignment;
using feaskit::Graph;
using feaskit::TaskKind;
using ojson = nlohmann::ordered_json;

constexpr const char* kVersion = "feaskit 0.1.0";

// Thrown for caller mistakes (missing files, bad flag combinations); maps
// to exit code 2, like CLI11 parse errors.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw UsageError("cannot write " + path);
    out << content;
}

// Options shared by every subcommand, plus the manifest bookkeeping.
struct Common {
    std::vector<std::string> argv;
    std::string subcommand;
    std::string out;
    std::uint64_t seed = 0;
    int jobs = 1;
    bool paper_scale = false;
    double time_limit = -1.0;  // seconds; negative means none
    std::vector<std::string> inputs;

    std::optional<double> time_limit_opt() const {
        return time_limit >= 0 ? std::optional<double>(time_limit) : std::nullopt;
    }
};

void add_common(CLI::App* sub, Common& c) {
    sub->add_option("--out", c.out, "write the JSON result here (plus a .manifest.json) instead of stdout")
        ->envname("FEASKIT_OUT");
    sub->add_option("--seed", c.seed, "master random seed")->envname("FEASKIT_SEED");
    sub->add_option("--jobs", c.jobs, "worker threads for dataset/bench subcommands")
        ->envname("FEASKIT_JOBS");
    sub->add_flag("--paper-scale", c.paper_scale, "use the full-size instance ranges instead of desk scale")
        ->envname("FEASKIT_PAPER_SCALE");
    sub->add_option("--time-limit", c.time_limit, "wall-clock limit in seconds for searches");
}

void write_manifest(const Common& c, const ojson& config, const std::vector<std::string>& outputs) {
    for (const auto& path : outputs) {
        ojson m;
        m["tool_version"] = kVersion;
        m["subcommand"] = c.subcommand;
        m["argv"] = c.argv;
        m["seed"] = c.seed;
        m["config"] = config;
        m["inputs"] = c.inputs;
        m["outputs"] = outputs;
        write_file(path + ".manifest.json", m.dump() + "\n");
    }
}

// Emits the single result document and, when writing to a file, the
// manifest that makes the run replayable.
void emit(const Common& c, const ojson& doc, const ojson& config) {
    std::string text = doc.dump() + "\n";
    if (c.out.empty()) {
        std::cout << text;
        return;
    }
    write_file(c.out, text);
    write_manifest(c, config, {c.out});
}

// ---------------------------------------------------------------------
// Input files

struct LoadedInstance {
    TaskKind task = TaskKind::KColoring;
    Graph problem;
    std::optional<Graph> hardware;
    int max_chain_size = 3;
    int k = 3;
};

Graph graph_from_value(const nlohmann::json& j) { return Graph::from_json(j.dump()); }

Graph load_graph(Common& c, const std::string& path) {
    c.inputs.push_back(path);
    return Graph::from_json(read_file(path));
}

// Instance files pair the graphs with the task and its parameters:
//   {"task":"embedding","problem":{...},"hardware":{...},"max_chain_size":3}
//   {"task":"kcoloring","problem":{...},"k":3}
LoadedInstance load_instance(Common& c, const std::string& path) {
    c.inputs.push_back(path);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(read_file(path));
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument("instance file: " + std::string(e.what()));
    }
    LoadedInstance inst;
    try {
        inst.task = feaskit::task_kind_from_string(j.at("task").get<std::string>());
        inst.problem = graph_from_value(j.at("problem"));
        if (inst.task == TaskKind::Embedding) {
            inst.hardware = graph_from_value(j.at("hardware"));
            inst.max_chain_size = j.value("max_chain_size", 3);
        } else if (inst.task == TaskKind::KColoring) {
            inst.k = j.value("k", 3);
        }
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("instance file: " + std::string(e.what()));
    }
    return inst;
}

// Either --instance or --problem [--hardware]; flags override file fields.
struct InstanceArgs {
    std::string instance_path;
    std::string problem_path;
    std::string hardware_path;
    std::string task_name;
    int chain_limit = 0;  // 0 means "not set"
    int k = 0;

    void add_to(CLI::App* sub, bool with_task = true) {
        sub->add_option("--instance", instance_path, "instance JSON file (task + graphs + parameters)");
        sub->add_option("--problem", problem_path, "problem graph JSON file");
        sub->add_option("--hardware", hardware_path, "hardware graph JSON file (embedding)");
        if (with_task) sub->add_option("--task", task_name, "embedding | kcoloring | mincoloring");
        sub->add_option("--chain-limit,-L", chain_limit, "max chain size (embedding)");
        sub->add_option("--k", k, "palette size (kcoloring)");
    }

    LoadedInstance resolve(Common& c) const {
        LoadedInstance inst;
        if (!instance_path.empty()) {
            inst = load_instance(c, instance_path);
        } else if (!problem_path.empty()) {
            inst.problem = load_graph(c, problem_path);
            if (!hardware_path.empty()) inst.hardware = load_graph(c, hardware_path);
            if (!task_name.empty())
                inst.task = feaskit::task_kind_from_string(task_name);
            else
                inst.task = inst.hardware ? TaskKind::Embedding : TaskKind::KColoring;
        } else {
            throw UsageError("need --instance or --problem");
        }
        if (chain_limit > 0) inst.max_chain_size = chain_limit;
        if (k > 0) inst.k = k;
        if (inst.task == TaskKind::Embedding && !inst.hardware)
            throw UsageError("embedding tasks need a hardware graph");
        return inst;
    }
};

ojson embedding_to_json(const feaskit::Embedding& emb) {
    ojson out = ojson::object();
    for (const auto& [v, chain] : emb) out[std::to_string(v)] = chain;
    return out;
}

feaskit::Embedding embedding_from_json(const nlohmann::json& j) {
    feaskit::Embedding emb;
    for (auto it = j.begin(); it != j.end(); ++it)
        emb[std::stoi(it.key())] = it.value().get<std::vector<int>>();
    return emb;
}

ojson screen_to_json(const feaskit::ScreenResult& r) {
    ojson doc;
    doc["pass"] = r.pass;
    if (r.pass) {
        doc["min_sizes"] = r.min_sizes;
    } else {
        doc["violated"] = feaskit::to_string(*r.violated);
        doc["detail"] = r.detail;
        if (r.witness_vertex >= 0) doc["witness_vertex"] = r.witness_vertex;
        doc["required"] = r.required;
        doc["available"] = r.available;
    }
    return doc;
}

// ---------------------------------------------------------------------
// Shared solver plumbing

struct SolveArgs {
    std::string method = "exact";
    bool optimize = false;
    bool phase2 = false;
    long long iters = 100'000;
    long long nodes = 50'000'000;
    int restarts = 1;
    std::string warm_start_path;
    std::size_t chain_cap = feaskit::kDefaultChainCap;
    std::size_t row_cap = feaskit::kDefaultConstraintCap;
    std::size_t term_cap = feaskit::kDefaultTermCap;

    void add_to(CLI::App* sub) {
        sub->add_option("--method", method, "exact | fj")->check(CLI::IsMember({"exact", "fj"}));
        sub->add_flag("--optimize", optimize, "exact embedding: search for the fewest hardware vertices");
        sub->add_flag("--phase2", phase2, "thin embedding chains after a feasible point is found");
        sub->add_option("--iters", iters, "jump search iteration cap");
        sub->add_option("--nodes", nodes, "exact search node cap");
        sub->add_option("--restarts", restarts, "jump search restarts");
        sub->add_option("--warm-start", warm_start_path, "JSON assignment array to start the jump search from");
        sub->add_option("--chain-cap", chain_cap, "abort if the hardware has more chains than this");
        sub->add_option("--row-cap", row_cap, "abort if an encoding needs more rows than this");
        sub->add_option("--term-cap", term_cap, "abort if an encoding needs more nonzeros than this");
    }
};

// Column offsets of the vertex-major embedding variables.
std::vector<int> candidate_offsets(const feaskit::EmbeddingEncoding& enc) {
    std::vector<int> offsets(enc.candidates.size() + 1, 0);
    for (std::size_t v = 0; v < enc.candidates.size(); ++v)
        offsets[v + 1] = offsets[v] + static_cast<int>(enc.candidates[v].size());
    return offsets;
}

// Translates a chain-per-vertex solution into model variable values.
Assignment embedding_to_assignment(const feaskit::EmbeddingEncoding& enc, const feaskit::Embedding& emb) {
    Assignment x(static_cast<std::size_t>(enc.model.num_vars()), 0);
    std::vector<int> offsets = candidate_offsets(enc);
    for (std::size_t v = 0; v < enc.candidates.size(); ++v) {
        auto it = emb.find(static_cast<int>(v));
        if (it == emb.end())
            throw std::invalid_argument("warm start: vertex " + std::to_string(v) + " has no chain");
        std::vector<int> want = it->second;
        std::sort(want.begin(), want.end());
        bool found = false;
        for (std::size_t slot = 0; slot < enc.candidates[v].size(); ++slot) {
            if (enc.family->chain(enc.candidates[v][slot]).vertices == want) {
                x[static_cast<std::size_t>(offsets[v]) + slot] = 1;
                found = true;
                break;
            }
        }
        if (!found)
            throw std::invalid_argument("warm start: chain of vertex " + std::to_string(v) +
                                        " is not an admissible candidate");
    }
    return x;
}

Assignment coloring_to_assignment(const feaskit::ColoringEncoding& enc, const std::vector<int>& colors) {
    if (static_cast<int>(colors.size()) != enc.num_vertices)
        throw std::invalid_argument("warm start: coloring length mismatch");
    // Compact colors to first-use order so the palette-use variables can
    // satisfy the symmetry rows.
    std::vector<int> remap(static_cast<std::size_t>(enc.palette), -1);
    int next = 0;
    Assignment x(static_cast<std::size_t>(enc.model.num_vars()), 0);
    for (int v = 0; v < enc.num_vertices; ++v) {
        int c = colors[static_cast<std::size_t>(v)];
        if (c < 0 || c >= enc.palette)
            throw std::invalid_argument("warm start: color outside the encoder palette");
        if (remap[static_cast<std::size_t>(c)] == -1) remap[static_cast<std::size_t>(c)] = next++;
        x[static_cast<std::size_t>(enc.color_var(v, remap[static_cast<std::size_t>(c)]))] = 1;
    }
    if (enc.minimize)
        for (int c = 0; c < next; ++c) x[static_cast<std::size_t>(enc.use_var(c))] = 1;
    return x;
}

// Flips round(rate * num_vars) distinct variables of a start point; binary
// variables invert, wider domains move to a random different value.
Assignment perturb_assignment(const feaskit::Model& m, Assignment x, double rate, feaskit::Rng& rng) {
    int n = m.num_vars();
    int flips = static_cast<int>(std::llround(rate * n));
    if (flips <= 0) return x;
    flips = std::min(flips, n);
    for (int var : rng.sample_without_replacement(n, flips)) {
        auto [lo, hi] = m.bounds(var);
        auto& cell = x[static_cast<std::size_t>(var)];
        if (hi - lo == 1) {
            cell = lo + hi - cell;
        } else {
            long long v;
            do {
                v = rng.range_int(lo, hi);
            } while (v == cell && hi > lo);
            cell = v;
        }
    }
    return x;
}

long long count_violations(const feaskit::Model& m, const Assignment& x) {
    long long bad = 0;
    for (int c = 0; c < m.num_constraints(); ++c)
        if (m.violation(x, c) > 0) ++bad;
    return bad;
}

int distinct_colors(const std::vector<int>& colors) {
    std::vector<int> sorted = colors;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    return static_cast<int>(sorted.size());
}

std::optional<double> median(std::vector<long long> values) {
    if (values.empty()) return std::nullopt;
    std::sort(values.begin(), values.end());
    std::size_t mid = values.size() / 2;
    if (values.size() % 2) return static_cast<double>(values[mid]);
    return (static_cast<double>(values[mid - 1]) + static_cast<double>(values[mid])) / 2.0;
}

// ---------------------------------------------------------------------
// Subcommands

int run_gen_graph(Common& c, const std::string& family, const std::vector<std::string>& params,
                  long long n, bool drop_isolated) {
    feaskit::GraphSpec spec;
    spec.family = family;
    spec.seed = c.seed;
    spec.drop_isolated = drop_isolated;
    if (n > 0) spec.params["n"] = static_cast<double>(n);
    for (const auto& kv : params) {
        auto eq = kv.find('=');
        if (eq == std::string::npos) throw UsageError("--param expects key=value, got " + kv);
        try {
            spec.params[kv.substr(0, eq)] = std::stod(kv.substr(eq + 1));
        } catch (const std::exception&) {
            throw UsageError("--param value is not a number: " + kv);
        }
    }
    Graph g = feaskit::generate(spec);

    ojson doc;
    doc["n"] = g.num_vertices();
    doc["edges"] = g.edges();
    doc["family"] = family;
    doc["seed"] = c.seed;
    doc["num_edges"] = g.num_edges();
    ojson config{{"family", family}, {"params", spec.params}, {"drop_isolated", drop_isolated}};
    emit(c, doc, config);
    return 0;
}

int run_screen(Common& c, const InstanceArgs& args) {
    LoadedInstance inst = args.resolve(c);
    if (inst.task != TaskKind::Embedding) throw UsageError("screen applies to embedding instances");
    feaskit::ScreenResult r = feaskit::zero_phase_screen(inst.problem, *inst.hardware, inst.max_chain_size);
    emit(c, screen_to_json(r), ojson{{"max_chain_size", inst.max_chain_size}});
    return r.pass ? 0 : 1;
}

int run_enumerate_chains(Common& c, const std::string& graph_path, const InstanceArgs& args, int chain_limit,
                         std::size_t cap, bool list) {
    Graph hardware;
    if (!graph_path.empty()) {
        hardware = load_graph(c, graph_path);
    } else {
        LoadedInstance inst = args.resolve(c);
        hardware = inst.hardware ? *inst.hardware : inst.problem;
        if (chain_limit <= 0) chain_limit = inst.max_chain_size;
    }
    if (chain_limit <= 0) chain_limit = 3;

    feaskit::ChainFamily family = feaskit::enumerate_chains(hardware, chain_limit, cap);
    std::vector<int> by_size(static_cast<std::size_t>(chain_limit) + 1, 0);
    for (const auto& chain : family.chains()) ++by_size[chain.vertices.size()];

    ojson doc;
    doc["max_chain_size"] = chain_limit;
    doc["count"] = family.size();
    doc["by_size"] = std::vector<int>(by_size.begin() + 1, by_size.end());
    if (list) {
        ojson chains = ojson::array();
        for (const auto& chain : family.chains()) chains.push_back(chain.vertices);
        doc["chains"] = std::move(chains);
    }
    emit(c, doc, ojson{{"max_chain_size", chain_limit}, {"cap", cap}});
    return 0;
}

int run_encode(Common& c, const InstanceArgs& args, std::size_t row_cap, std::size_t chain_cap,
               std::size_t term_cap, bool dump) {
    LoadedInstance inst = args.resolve(c);
    ojson doc;
    doc["task"] = feaskit::to_string(inst.task);
    const feaskit::Model* model = nullptr;
    feaskit::EmbeddingEncoding emb_enc;
    feaskit::ColoringEncoding col_enc;

    if (inst.task == TaskKind::Embedding) {
        feaskit::ScreenResult screen =
            feaskit::zero_phase_screen(inst.problem, *inst.hardware, inst.max_chain_size);
        if (!screen.pass) {
            emit(c, screen_to_json(screen), ojson{{"row_cap", row_cap}});
            return 1;
        }
        auto family = std::make_shared<feaskit::ChainFamily>(
            feaskit::enumerate_chains(*inst.hardware, inst.max_chain_size, chain_cap));
        emb_enc = feaskit::encode_embedding(inst.problem, family, screen.min_sizes, row_cap, term_cap);
        model = &emb_enc.model;
        doc["chains"] = emb_enc.family->size();
        doc["assignment_rows"] = emb_enc.assignment_rows;
        doc["disjointness_rows"] = emb_enc.disjointness_rows;
        doc["adjacency_rows"] = emb_enc.adjacency_rows;
        doc["budget_rows"] = emb_enc.budget_rows;
    } else {
        col_enc = inst.task == TaskKind::KColoring ? feaskit::encode_kcoloring(inst.problem, inst.k, row_cap)
                                                   : feaskit::encode_mincoloring(inst.problem, row_cap);
        model = &col_enc.model;
        doc["palette"] = col_enc.palette;
        doc["assignment_rows"] = col_enc.assignment_rows;
        doc["edge_rows"] = col_enc.edge_rows;
        if (col_enc.minimize) {
            doc["linking_rows"] = col_enc.linking_rows;
            doc["symmetry_rows"] = col_enc.symmetry_rows;
        }
    }
    doc["num_vars"] = model->num_vars();
    doc["num_constraints"] = model->num_constraints();
    if (dump) doc["model_text"] = model->dump();
    emit(c, doc, ojson{{"row_cap", row_cap}, {"chain_cap", chain_cap}, {"term_cap", term_cap}});
    return 0;
}

int run_solve(Common& c, const InstanceArgs& args, const SolveArgs& s) {
    LoadedInstance inst = args.resolve(c);
    ojson config{{"method", s.method},       {"iters", s.iters},       {"nodes", s.nodes},
                 {"restarts", s.restarts},   {"optimize", s.optimize}, {"phase2", s.phase2},
                 {"chain_cap", s.chain_cap}, {"row_cap", s.row_cap}};
    ojson doc;
    doc["task"] = feaskit::to_string(inst.task);
    doc["method"] = s.method;

    if (s.method == "exact") {
        feaskit::SearchBudget budget{s.nodes, c.time_limit_opt()};
        feaskit::Certificate cert;
        switch (inst.task) {
            case TaskKind::Embedding:
                cert = feaskit::exact_embed(inst.problem, *inst.hardware, inst.max_chain_size, budget,
                                            s.optimize, s.chain_cap);
                break;
            case TaskKind::KColoring: cert = feaskit::exact_color(inst.problem, inst.k, budget); break;
            case TaskKind::MinColoring: cert = feaskit::min_color(inst.problem, budget); break;
        }
        doc["outcome"] = feaskit::to_string(cert.outcome);
        doc["nodes"] = cert.nodes;
        if (cert.objective) doc["objective"] = *cert.objective;
        if (cert.embedding) doc["embedding"] = embedding_to_json(*cert.embedding);
        if (cert.coloring) doc["coloring"] = *cert.coloring;
        emit(c, doc, config);
        return cert.outcome == feaskit::Outcome::Feasible ? 0 : 1;
    }

    // Jump search: encode, run restarts, decode the first feasible point.
    feaskit::EmbeddingEncoding emb_enc;
    feaskit::ColoringEncoding col_enc;
    const feaskit::Model* model = nullptr;
    if (inst.task == TaskKind::Embedding) {
        feaskit::ScreenResult screen =
            feaskit::zero_phase_screen(inst.problem, *inst.hardware, inst.max_chain_size);
        if (!screen.pass) {
            emit(c, screen_to_json(screen), config);
            return 1;
        }
        auto family = std::make_shared<feaskit::ChainFamily>(
            feaskit::enumerate_chains(*inst.hardware, inst.max_chain_size, s.chain_cap));
        emb_enc = feaskit::encode_embedding(inst.problem, family, screen.min_sizes, s.row_cap, s.term_cap);
        model = &emb_enc.model;
    } else {
        col_enc = inst.task == TaskKind::KColoring
                      ? feaskit::encode_kcoloring(inst.problem, inst.k, s.row_cap)
                      : feaskit::encode_mincoloring(inst.problem, s.row_cap);
        model = &col_enc.model;
    }

    Assignment start(static_cast<std::size_t>(model->num_vars()), 0);
    if (!s.warm_start_path.empty()) {
        c.inputs.push_back(s.warm_start_path);
        auto arr = nlohmann::json::parse(read_file(s.warm_start_path));
        start = arr.get<Assignment>();
    }

    feaskit::FjResult best;
    int used = 0;
    for (int r = 0; r < std::max(1, s.restarts); ++r) {
        feaskit::FjConfig cfg;
        cfg.max_iterations = s.iters;
        cfg.time_limit_s = c.time_limit_opt();
        cfg.seed = feaskit::derive_seed(c.seed, static_cast<std::uint64_t>(r));
        best = feaskit::fj_search(*model, start, cfg);
        used = r + 1;
        if (best.status == feaskit::FjStatus::Feasible) break;
    }
    doc["status"] = feaskit::to_string(best.status);
    doc["iterations"] = best.iterations;
    doc["weight_bumps"] = best.weight_bumps;
    doc["restarts_used"] = used;

    bool feasible = best.status == feaskit::FjStatus::Feasible;
    if (feasible) {
        if (inst.task == TaskKind::Embedding) {
            feaskit::Embedding emb = feaskit::decode_embedding(emb_enc, best.assignment);
            if (s.phase2) {
                feaskit::Phase2Config p2;
                p2.seed = feaskit::derive_seed(c.seed, 0x9e37);
                p2.time_limit_s = c.time_limit_opt();
                emb = feaskit::fj_phase2(inst.problem, *inst.hardware, inst.max_chain_size, emb, p2);
            }
            doc["embedding"] = embedding_to_json(emb);
            doc["objective"] = feaskit::embedding_total_vertices(emb);
        } else {
            std::vector<int> colors = feaskit::decode_coloring(col_enc, best.assignment);
            doc["coloring"] = colors;
            if (inst.task == TaskKind::MinColoring) doc["colors_used"] = distinct_colors(colors);
        }
    }
    emit(c, doc, config);
    return feasible ? 0 : 1;
}

int run_repair(Common& c, const InstanceArgs& args, const std::string& solution_path, double perturb,
               long long iters, bool phase2, std::size_t chain_cap, std::size_t row_cap,
               std::size_t term_cap) {
    LoadedInstance inst = args.resolve(c);
    if (solution_path.empty()) throw UsageError("repair needs --warm-start SOLUTION_FILE");
    c.inputs.push_back(solution_path);
    nlohmann::json sol = nlohmann::json::parse(read_file(solution_path));

    feaskit::EmbeddingEncoding emb_enc;
    feaskit::ColoringEncoding col_enc;
    const feaskit::Model* model = nullptr;
    Assignment start;
    if (inst.task == TaskKind::Embedding) {
        feaskit::ScreenResult screen =
            feaskit::zero_phase_screen(inst.problem, *inst.hardware, inst.max_chain_size);
        if (!screen.pass) {
            emit(c, screen_to_json(screen), ojson{{"perturb", perturb}});
            return 1;
        }
        auto family = std::make_shared<feaskit::ChainFamily>(
            feaskit::enumerate_chains(*inst.hardware, inst.max_chain_size, chain_cap));
        emb_enc = feaskit::encode_embedding(inst.problem, family, screen.min_sizes, row_cap, term_cap);
        model = &emb_enc.model;
        start = embedding_to_assignment(emb_enc, embedding_from_json(sol));
    } else {
        col_enc = inst.task == TaskKind::KColoring ? feaskit::encode_kcoloring(inst.problem, inst.k, row_cap)
                                                   : feaskit::encode_mincoloring(inst.problem, row_cap);
        model = &col_enc.model;
        start = coloring_to_assignment(col_enc, sol.get<std::vector<int>>());
    }

    feaskit::Rng rng(feaskit::derive_seed(c.seed, 0x7e57));
    start = perturb_assignment(*model, std::move(start), perturb, rng);
    long long start_violated = count_violations(*model, start);

    feaskit::FjConfig cfg;
    cfg.max_iterations = iters;
    cfg.time_limit_s = c.time_limit_opt();
    cfg.seed = feaskit::derive_seed(c.seed, 1);
    feaskit::FjResult res = feaskit::fj_search(*model, start, cfg);

    ojson doc;
    doc["task"] = feaskit::to_string(inst.task);
    doc["perturbation"] = perturb;
    doc["start_violated_constraints"] = start_violated;
    doc["status"] = feaskit::to_string(res.status);
    doc["iterations"] = res.iterations;
    bool feasible = res.status == feaskit::FjStatus::Feasible;
    if (feasible) {
        if (inst.task == TaskKind::Embedding) {
            feaskit::Embedding emb = feaskit::decode_embedding(emb_enc, res.assignment);
            if (phase2) {
                feaskit::Phase2Config p2;
                p2.seed = feaskit::derive_seed(c.seed, 0x9e37);
                emb = feaskit::fj_phase2(inst.problem, *inst.hardware, inst.max_chain_size, emb, p2);
            }
            doc["embedding"] = embedding_to_json(emb);
            doc["objective"] = feaskit::embedding_total_vertices(emb);
        } else {
            doc["coloring"] = feaskit::decode_coloring(col_enc, res.assignment);
        }
    }
    emit(c, doc, ojson{{"perturb", perturb}, {"iters", iters}, {"phase2", phase2}});
    return feasible ? 0 : 1;
}

int run_verify(Common& c, const InstanceArgs& args, const std::string& solution_path) {
    LoadedInstance inst = args.resolve(c);
    if (solution_path.empty()) throw UsageError("verify needs --solution FILE");
    c.inputs.push_back(solution_path);
    nlohmann::json sol;
    try {
        sol = nlohmann::json::parse(read_file(solution_path));
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument("solution file: " + std::string(e.what()));
    }

    ojson doc;
    bool valid = false;
    if (inst.task == TaskKind::Embedding) {
        feaskit::EmbeddingReport report =
            feaskit::verify_embedding(inst.problem, *inst.hardware, inst.max_chain_size,
                                      embedding_from_json(sol));
        valid = report.valid;
        doc["valid"] = report.valid;
        doc["total_nodes"] = report.total_vertices;
        if (!report.valid) {
            ojson violations = ojson::array();
            for (const auto& v : report.violations)
                violations.push_back(ojson{{"rule", v.rule}, {"detail", v.detail}});
            doc["violations"] = std::move(violations);
        }
    } else {
        std::vector<int> colors = sol.get<std::vector<int>>();
        int k = inst.task == TaskKind::KColoring
                    ? inst.k
                    : (colors.empty() ? 1 : 1 + *std::max_element(colors.begin(), colors.end()));
        feaskit::ColoringReport report = feaskit::verify_coloring(inst.problem, k, colors);
        valid = report.valid;
        doc["valid"] = report.valid;
        doc["conflicting_edges"] = report.conflicting_edges;
        doc["error_ratio"] = report.error_ratio;
        if (!report.valid) {
            ojson violations = ojson::array();
            for (const auto& v : report.violations)
                violations.push_back(ojson{{"rule", v.rule}, {"detail", v.detail}});
            doc["violations"] = std::move(violations);
        }
    }
    emit(c, doc, ojson::object());
    return valid ? 0 : 1;
}

int run_select(Common& c, const InstanceArgs& args, const std::string& candidates_path, int n_candidates) {
    LoadedInstance inst = args.resolve(c);
    if (candidates_path.empty()) throw UsageError("select needs --candidates FILE (one answer per line)");
    c.inputs.push_back(candidates_path);
    std::string text = read_file(candidates_path);

    std::vector<std::string> lines;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string::npos) {
            if (pos < text.size()) lines.push_back(text.substr(pos));
            break;
        }
        lines.push_back(text.substr(pos, nl - pos));
        pos = nl + 1;
    }
    if (n_candidates > 0 && static_cast<int>(lines.size()) > n_candidates)
        lines.resize(static_cast<std::size_t>(n_candidates));
    if (lines.empty()) throw UsageError("candidate file is empty");

    std::vector<feaskit::Candidate> pool;
    pool.reserve(lines.size());
    for (const auto& line : lines) pool.push_back(feaskit::parse_candidate(line, inst.task));

    feaskit::Verdict verdict;
    switch (inst.task) {
        case TaskKind::Embedding:
            verdict = feaskit::best_of_n_embedding(pool, inst.problem, *inst.hardware, inst.max_chain_size);
            break;
        case TaskKind::KColoring: verdict = feaskit::best_of_n_coloring(pool, inst.problem, inst.k); break;
        case TaskKind::MinColoring: verdict = feaskit::best_of_n_mincoloring(pool, inst.problem); break;
    }

    ojson doc;
    doc["yes"] = verdict.yes;
    doc["basis"] = verdict.basis == feaskit::VerdictBasis::Certificate ? "certificate" : "majority";
    doc["n"] = lines.size();
    doc["valid_count"] = verdict.valid_count;
    doc["no_count"] = verdict.no_count;
    doc["malformed_count"] = verdict.malformed_count;
    if (verdict.chosen >= 0) doc["chosen"] = verdict.chosen;
    if (verdict.objective) doc["objective"] = *verdict.objective;
    emit(c, doc, ojson{{"n_candidates", n_candidates}});
    return verdict.yes ? 0 : 1;
}

struct BudgetArgs {
    long long exact_nodes = 2'000'000;
    double exact_time = 2.0;
    long long fj_iters = 200'000;
    int fj_restarts = 3;
    double fj_time = 1.0;

    void add_to(CLI::App* sub) {
        sub->add_option("--exact-nodes", exact_nodes, "exact labeling node cap");
        sub->add_option("--exact-time", exact_time, "exact labeling time cap (s)");
        sub->add_option("--fj-iters", fj_iters, "jump search iterations per labeling restart");
        sub->add_option("--fj-restarts", fj_restarts, "jump search restarts during labeling");
        sub->add_option("--fj-time", fj_time, "jump search time cap per restart (s)");
    }

    feaskit::LabelBudgets resolve() const {
        feaskit::LabelBudgets b;
        b.exact = {exact_nodes, exact_time};
        b.fj_iterations = fj_iters;
        b.fj_restarts = fj_restarts;
        b.fj_time_s = fj_time;
        return b;
    }
};

ojson label_to_json(const feaskit::Label& label) {
    ojson doc;
    doc["status"] = feaskit::to_string(label.status);
    if (label.provenance) doc["provenance"] = feaskit::to_string(*label.provenance);
    if (label.objective) doc["objective"] = *label.objective;
    if (label.embedding) doc["embedding"] = embedding_to_json(*label.embedding);
    if (label.coloring) doc["coloring"] = *label.coloring;
    if (!label.note.empty()) doc["note"] = label.note;
    return doc;
}

feaskit::Instance instance_for_dataset(Common& c, const InstanceArgs& args, const std::string& task_name) {
    if (!args.instance_path.empty() || !args.problem_path.empty()) {
        LoadedInstance loaded = args.resolve(c);
        feaskit::Instance inst;
        inst.task = loaded.task;
        inst.problem = loaded.problem;
        inst.hardware = loaded.hardware;
        inst.max_chain_size = loaded.max_chain_size;
        inst.k = loaded.k;
        inst.seed = c.seed;
        return inst;
    }
    if (task_name.empty()) throw UsageError("need --instance, --problem, or --task to sample one");
    return feaskit::sample_instance(feaskit::task_kind_from_string(task_name), c.seed, c.paper_scale);
}

int run_dataset_label(Common& c, const InstanceArgs& args, const std::string& task_name,
                      const BudgetArgs& budgets) {
    feaskit::Instance inst = instance_for_dataset(c, args, task_name);
    feaskit::Label label = feaskit::label_instance(inst, budgets.resolve());
    emit(c, label_to_json(label), ojson{{"task", feaskit::to_string(inst.task)}});
    return label.status == feaskit::LabelStatus::Sat ? 0 : 1;
}

int run_dataset_render(Common& c, const InstanceArgs& args, const std::string& task_name,
                       const BudgetArgs& budgets) {
    feaskit::Instance inst = instance_for_dataset(c, args, task_name);
    feaskit::Label label = feaskit::label_instance(inst, budgets.resolve());
    if (label.status == feaskit::LabelStatus::Dropped) {
        std::cerr << "instance dropped: " << label.note << "\n";
        return 1;
    }
    feaskit::DatasetRecord rec = feaskit::render_record(inst, label);
    // Records are already a fixed JSON line format; emit verbatim so the
    // file and stdout forms are byte-identical.
    std::string line = feaskit::record_to_json(rec) + "\n";
    if (c.out.empty()) {
        std::cout << line;
    } else {
        write_file(c.out, line);
        write_manifest(c, ojson{{"task", feaskit::to_string(inst.task)}}, {c.out});
    }
    return 0;
}

int run_dataset_generate(Common& c, const std::string& task_name, int count, bool no_balance,
                         double sat_target, double sat_tol, long long attempt_factor,
                         const BudgetArgs& budgets) {
    if (task_name.empty()) throw UsageError("dataset generate needs --task");
    if (c.out.empty()) throw UsageError("dataset generate needs --out FILE for the records");
    feaskit::DatasetConfig cfg;
    cfg.task = feaskit::task_kind_from_string(task_name);
    cfg.count = count;
    cfg.master_seed = c.seed;
    cfg.paper_scale = c.paper_scale;
    cfg.balance = !no_balance;
    cfg.sat_target = sat_target;
    cfg.sat_tolerance = sat_tol;
    cfg.jobs = c.jobs;
    cfg.budgets = budgets.resolve();
    cfg.attempt_factor = attempt_factor;

    feaskit::GeneratedDataset ds = feaskit::generate_dataset(cfg);
    std::string body;
    for (const auto& rec : ds.records) body += feaskit::record_to_json(rec) + "\n";
    write_file(c.out, body);

    feaskit::DatasetStats st = feaskit::dataset_stats(ds.records);
    ojson config{{"task", task_name},
                 {"count", count},
                 {"balance", cfg.balance},
                 {"sat_target", sat_target},
                 {"sat_tolerance", sat_tol},
                 {"attempt_factor", attempt_factor},
                 {"jobs", c.jobs},
                 {"paper_scale", c.paper_scale}};
    write_manifest(c, config, {c.out});

    ojson doc;
    doc["records"] = ds.records.size();
    doc["attempts"] = ds.attempts;
    doc["dropped"] = ds.dropped;
    doc["balance_rejected"] = ds.balance_rejected;
    doc["sat"] = st.sat;
    doc["unsat"] = st.unsat;
    doc["out"] = c.out;
    std::cout << doc.dump() << "\n";
    return 0;
}

int run_dataset_stats(Common& c, const std::string& in_path) {
    if (in_path.empty()) throw UsageError("dataset stats needs --in FILE");
    c.inputs.push_back(in_path);
    std::string text = read_file(in_path);

    std::vector<feaskit::DatasetRecord> records;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string::npos) nl = text.size();
        if (nl > pos) records.push_back(feaskit::record_from_json(text.substr(pos, nl - pos)));
        pos = nl + 1;
    }
    feaskit::DatasetStats st = feaskit::dataset_stats(records);

    ojson doc;
    doc["count"] = st.count;
    doc["sat"] = st.sat;
    doc["unsat"] = st.unsat;
    doc["by_task"] = ojson{{"embedding", st.by_task[0]},
                           {"kcoloring", st.by_task[1]},
                           {"mincoloring", st.by_task[2]}};
    doc["min_vertices"] = st.min_vertices;
    doc["max_vertices"] = st.max_vertices;
    doc["mean_vertices"] = st.mean_vertices;
    doc["provenance"] = ojson{{"exact", st.exact_labels},
                              {"fj", st.fj_labels},
                              {"zero_phase", st.zero_phase_labels}};
    emit(c, doc, ojson::object());
    return 0;
}

int run_bench_warmstart(Common& c, int count, double perturb, long long iters, int k,
                        const std::string& csv_path) {
    // Table-style warm-start experiment: collect exact-certified SAT
    // coloring instances, then run the jump search once from zeros and
    // once from a perturbed known-feasible assignment.
    struct Row {
        int index = 0;
        int n = 0;
        bool zero_ok = false, warm_ok = false;
        long long zero_iters = 0, warm_iters = 0;
    };
    std::vector<std::pair<feaskit::Instance, std::vector<int>>> sat_pool;
    feaskit::SearchBudget cert_budget{2'000'000, 2.0};
    for (long long idx = 0; static_cast<int>(sat_pool.size()) < count; ++idx) {
        if (idx > 200LL * count)
            throw std::runtime_error("bench-warmstart: could not collect enough sat instances");
        feaskit::Instance inst = feaskit::sample_instance(TaskKind::KColoring,
                                                          feaskit::derive_seed(c.seed, static_cast<std::uint64_t>(idx)),
                                                          c.paper_scale);
        inst.k = k;
        feaskit::Certificate cert = feaskit::exact_color(inst.problem, k, cert_budget);
        if (cert.outcome == feaskit::Outcome::Feasible) sat_pool.emplace_back(std::move(inst), *cert.coloring);
    }

    std::vector<Row> rows(sat_pool.size());
    std::atomic<std::size_t> cursor{0};
    auto work = [&] {
        while (true) {
            std::size_t i = cursor.fetch_add(1);
            if (i >= sat_pool.size()) return;
            const auto& [inst, colors] = sat_pool[i];
            feaskit::ColoringEncoding enc = feaskit::encode_kcoloring(inst.problem, k);
            Assignment feasible = coloring_to_assignment(enc, colors);

            feaskit::FjConfig cfg;
            cfg.max_iterations = iters;
            cfg.time_limit_s = c.time_limit_opt();

            Row row;
            row.index = static_cast<int>(i);
            row.n = inst.problem.num_vertices();

            cfg.seed = feaskit::derive_seed(inst.seed, 1);
            feaskit::FjResult zero =
                feaskit::fj_search(enc.model, Assignment(static_cast<std::size_t>(enc.model.num_vars()), 0), cfg);
            row.zero_ok = zero.status == feaskit::FjStatus::Feasible;
            row.zero_iters = zero.iterations;

            feaskit::Rng rng(feaskit::derive_seed(inst.seed, 2));
            Assignment warm_start = perturb_assignment(enc.model, feasible, perturb, rng);
            cfg.seed = feaskit::derive_seed(inst.seed, 3);
            feaskit::FjResult warm = feaskit::fj_search(enc.model, warm_start, cfg);
            row.warm_ok = warm.status == feaskit::FjStatus::Feasible;
            row.warm_iters = warm.iterations;

            rows[i] = row;
        }
    };
    int jobs = std::max(1, c.jobs);
    if (jobs == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(jobs));
        for (int t = 0; t < jobs; ++t) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }

    std::vector<long long> zero_iters, warm_iters;
    int zero_ok = 0, warm_ok = 0;
    for (const Row& row : rows) {
        if (row.zero_ok) {
            ++zero_ok;
            zero_iters.push_back(row.zero_iters);
        }
        if (row.warm_ok) {
            ++warm_ok;
            warm_iters.push_back(row.warm_iters);
        }
    }
    std::optional<double> zero_med = median(std::move(zero_iters));
    std::optional<double> warm_med = median(std::move(warm_iters));

    ojson config{{"count", count}, {"perturb", perturb}, {"iters", iters}, {"k", k}, {"jobs", c.jobs}};
    if (!csv_path.empty()) {
        std::string csv = "instance,n,zero_ok,zero_iters,warm_ok,warm_iters\n";
        for (const Row& row : rows)
            csv += std::to_string(row.index) + "," + std::to_string(row.n) + "," +
                   std::to_string(static_cast<int>(row.zero_ok)) + "," + std::to_string(row.zero_iters) + "," +
                   std::to_string(static_cast<int>(row.warm_ok)) + "," + std::to_string(row.warm_iters) + "\n";
        write_file(csv_path, csv);
        write_manifest(c, config, {csv_path});
    }

    ojson doc;
    doc["task"] = "kcoloring";
    doc["instances"] = rows.size();
    doc["perturbation"] = perturb;
    doc["iters"] = iters;
    doc["zero_success_rate"] = rows.empty() ? 0.0 : static_cast<double>(zero_ok) / static_cast<double>(rows.size());
    doc["warm_success_rate"] = rows.empty() ? 0.0 : static_cast<double>(warm_ok) / static_cast<double>(rows.size());
    if (zero_med) doc["zero_median_iters"] = *zero_med;
    if (warm_med) doc["warm_median_iters"] = *warm_med;
    if (zero_med && warm_med && *zero_med > 0) {
        doc["ratio"] = *warm_med / *zero_med;
        if (*warm_med > 0) doc["speedup"] = *zero_med / *warm_med;
    }
    emit(c, doc, config);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"feasibility toolkit: graphs, screening, encodings, exact and jump searches, datasets"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    Common common;
    for (int i = 0; i < argc; ++i) common.argv.push_back(argv[i]);

    int rc = 0;
    auto wrap = [&](const std::string& name, auto fn) {
        return [&rc, &common, name, fn]() {
            common.subcommand = name;
            rc = fn();
        };
    };

    // gen-graph
    auto* gen = app.add_subcommand("gen-graph", "sample a random graph and print it as JSON");
    Common gen_common = common;
    add_common(gen, gen_common);
    std::string gen_family;
    std::vector<std::string> gen_params;
    long long gen_n = 0;
    bool gen_drop = false;
    gen->add_option("--family", gen_family, "er | ba | ws | regular | sbm | chimera")->required();
    gen->add_option("--param", gen_params, "family parameter as key=value (repeatable)");
    gen->add_option("--n", gen_n, "vertex count (shorthand for --param n=...)");
    gen->add_flag("--drop-isolated", gen_drop, "remove isolated vertices and relabel");
    gen->callback(wrap("gen-graph", [&]() {
        common = gen_common;
        return run_gen_graph(common, gen_family, gen_params, gen_n, gen_drop);
    }));

    // screen
    auto* screen = app.add_subcommand("screen", "run the zero-phase infeasibility checks");
    Common screen_common = common;
    add_common(screen, screen_common);
    InstanceArgs screen_args;
    screen_args.add_to(screen, false);
    screen->callback(wrap("screen", [&]() {
        common = screen_common;
        return run_screen(common, screen_args);
    }));

    // enumerate-chains
    auto* chains = app.add_subcommand("enumerate-chains", "list connected hardware chains up to the size cap");
    Common chains_common = common;
    add_common(chains, chains_common);
    InstanceArgs chains_args;
    std::string chains_graph;
    std::size_t chains_cap = feaskit::kDefaultChainCap;
    int chains_limit = 0;
    bool chains_list = false;
    chains->add_option("--graph", chains_graph, "graph JSON file to enumerate over");
    chains_args.add_to(chains, false);
    chains->add_option("--cap", chains_cap, "abort beyond this many chains");
    chains->add_flag("--list", chains_list, "include the chains themselves, not just counts");
    chains->callback(wrap("enumerate-chains", [&]() {
        common = chains_common;
        int limit = chains_args.chain_limit > 0 ? chains_args.chain_limit : chains_limit;
        return run_enumerate_chains(common, chains_graph, chains_args, limit, chains_cap, chains_list);
    }));

    // encode
    auto* encode = app.add_subcommand("encode", "build the integer model and report its shape");
    Common encode_common = common;
    add_common(encode, encode_common);
    InstanceArgs encode_args;
    encode_args.add_to(encode);
    std::size_t encode_rows = feaskit::kDefaultConstraintCap;
    std::size_t encode_chain_cap = feaskit::kDefaultChainCap;
    std::size_t encode_terms = feaskit::kDefaultTermCap;
    bool encode_dump = false;
    encode->add_option("--row-cap", encode_rows, "abort if the model needs more rows than this");
    encode->add_option("--chain-cap", encode_chain_cap, "abort beyond this many chains");
    encode->add_option("--term-cap", encode_terms, "abort if the model needs more nonzeros than this");
    encode->add_flag("--dump", encode_dump, "include the full model text");
    encode->callback(wrap("encode", [&]() {
        common = encode_common;
        return run_encode(common, encode_args, encode_rows, encode_chain_cap, encode_terms, encode_dump);
    }));

    // solve
    auto* solve = app.add_subcommand("solve", "run the exact search or the feasibility jump search");
    Common solve_common = common;
    add_common(solve, solve_common);
    InstanceArgs solve_args;
    solve_args.add_to(solve);
    SolveArgs solve_opts;
    solve_opts.add_to(solve);
    solve->callback(wrap("solve", [&]() {
        common = solve_common;
        return run_solve(common, solve_args, solve_opts);
    }));

    // repair
    auto* repair = app.add_subcommand("repair", "warm-start the jump search from a (perturbed) solution");
    Common repair_common = common;
    add_common(repair, repair_common);
    InstanceArgs repair_args;
    repair_args.add_to(repair);
    std::string repair_solution;
    double repair_perturb = 0.0;
    long long repair_iters = 100'000;
    bool repair_phase2 = false;
    std::size_t repair_chain_cap = feaskit::kDefaultChainCap;
    std::size_t repair_row_cap = feaskit::kDefaultConstraintCap;
    std::size_t repair_term_cap = feaskit::kDefaultTermCap;
    repair->add_option("--warm-start", repair_solution, "solution JSON (embedding object or coloring array)")
        ->required();
    repair->add_option("--perturb", repair_perturb, "fraction of variables to flip before repairing");
    repair->add_option("--iters", repair_iters, "jump search iteration cap");
    repair->add_flag("--phase2", repair_phase2, "thin embedding chains after repair");
    repair->add_option("--chain-cap", repair_chain_cap, "abort beyond this many chains");
    repair->add_option("--row-cap", repair_row_cap, "abort if the model needs more rows than this");
    repair->add_option("--term-cap", repair_term_cap, "abort if the model needs more nonzeros than this");
    repair->callback(wrap("repair", [&]() {
        common = repair_common;
        return run_repair(common, repair_args, repair_solution, repair_perturb, repair_iters, repair_phase2,
                          repair_chain_cap, repair_row_cap, repair_term_cap);
    }));

    // verify
    auto* verify = app.add_subcommand("verify", "check a solution against the instance");
    Common verify_common = common;
    add_common(verify, verify_common);
    InstanceArgs verify_args;
    verify_args.add_to(verify);
    std::string verify_solution;
    verify->add_option("--solution", verify_solution, "solution JSON (embedding object or coloring array)")
        ->required();
    verify->callback(wrap("verify", [&]() {
        common = verify_common;
        return run_verify(common, verify_args, verify_solution);
    }));

    // select
    auto* select = app.add_subcommand("select", "best-of-N answer selection over candidate lines");
    Common select_common = common;
    add_common(select, select_common);
    InstanceArgs select_args;
    select_args.add_to(select);
    std::string select_candidates;
    int select_n = 0;
    select->add_option("--candidates", select_candidates, "file with one rendered answer per line")->required();
    select->add_option("--n-candidates", select_n, "only consider the first N lines");
    select->callback(wrap("select", [&]() {
        common = select_common;
        return run_select(common, select_args, select_candidates, select_n);
    }));

    // dataset
    auto* dataset = app.add_subcommand("dataset", "instance sampling, labeling, and record files");
    dataset->require_subcommand(1);

    auto* ds_gen = dataset->add_subcommand("generate", "sample, label, and render a balanced record file");
    Common ds_gen_common = common;
    add_common(ds_gen, ds_gen_common);
    std::string ds_gen_task;
    int ds_gen_count = 100;
    bool ds_gen_no_balance = false;
    double ds_gen_target = 0.5, ds_gen_tol = 0.05;
    long long ds_gen_factor = 200;
    BudgetArgs ds_gen_budgets;
    ds_gen->add_option("--task", ds_gen_task, "embedding | kcoloring | mincoloring")->required();
    ds_gen->add_option("--count", ds_gen_count, "records to produce");
    ds_gen->add_flag("--no-balance", ds_gen_no_balance, "keep every labeled instance, skip sat/unsat balancing");
    ds_gen->add_option("--sat-target", ds_gen_target, "target sat fraction");
    ds_gen->add_option("--sat-tol", ds_gen_tol, "allowed deviation from the target");
    ds_gen->add_option("--attempt-factor", ds_gen_factor, "give up after count*factor sampling attempts");
    ds_gen_budgets.add_to(ds_gen);
    ds_gen->callback(wrap("dataset generate", [&]() {
        common = ds_gen_common;
        return run_dataset_generate(common, ds_gen_task, ds_gen_count, ds_gen_no_balance, ds_gen_target,
                                    ds_gen_tol, ds_gen_factor, ds_gen_budgets);
    }));

    auto* ds_label = dataset->add_subcommand("label", "label one instance (screen, exact, jump fallback)");
    Common ds_label_common = common;
    add_common(ds_label, ds_label_common);
    InstanceArgs ds_label_args;
    ds_label_args.add_to(ds_label);
    std::string ds_label_task;
    ds_label->add_option("--sample-task", ds_label_task, "sample an instance of this task instead of reading one");
    BudgetArgs ds_label_budgets;
    ds_label_budgets.add_to(ds_label);
    ds_label->callback(wrap("dataset label", [&]() {
        common = ds_label_common;
        std::string task = !ds_label_task.empty() ? ds_label_task : ds_label_args.task_name;
        return run_dataset_label(common, ds_label_args, task, ds_label_budgets);
    }));

    auto* ds_render = dataset->add_subcommand("render", "produce one instruction/input/output record");
    Common ds_render_common = common;
    add_common(ds_render, ds_render_common);
    InstanceArgs ds_render_args;
    ds_render_args.add_to(ds_render);
    std::string ds_render_task;
    ds_render->add_option("--sample-task", ds_render_task, "sample an instance of this task instead of reading one");
    BudgetArgs ds_render_budgets;
    ds_render_budgets.add_to(ds_render);
    ds_render->callback(wrap("dataset render", [&]() {
        common = ds_render_common;
        std::string task = !ds_render_task.empty() ? ds_render_task : ds_render_args.task_name;
        return run_dataset_render(common, ds_render_args, task, ds_render_budgets);
    }));

    auto* ds_stats = dataset->add_subcommand("stats", "summarize a record file");
    Common ds_stats_common = common;
    add_common(ds_stats, ds_stats_common);
    std::string ds_stats_in;
    ds_stats->add_option("--in", ds_stats_in, "JSONL record file")->required();
    ds_stats->callback(wrap("dataset stats", [&]() {
        common = ds_stats_common;
        return run_dataset_stats(common, ds_stats_in);
    }));

    // bench-warmstart
    auto* bench = app.add_subcommand("bench-warmstart", "zero-init vs warm-start jump search comparison");
    Common bench_common = common;
    add_common(bench, bench_common);
    int bench_count = 50;
    double bench_perturb = 0.1;
    long long bench_iters = 200'000;
    int bench_k = 3;
    std::string bench_csv;
    bench->add_option("--count", bench_count, "sat instances to benchmark");
    bench->add_option("--perturb", bench_perturb, "fraction of the feasible assignment to flip");
    bench->add_option("--iters", bench_iters, "jump search iteration cap per run");
    bench->add_option("--k", bench_k, "palette size");
    bench->add_option("--csv", bench_csv, "write per-instance rows here");
    bench->callback(wrap("bench-warmstart", [&]() {
        common = bench_common;
        return run_bench_warmstart(common, bench_count, bench_perturb, bench_iters, bench_k, bench_csv);
    }));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const feaskit::EnumerationLimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const feaskit::EncodingLimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}
