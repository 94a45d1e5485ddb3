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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "feaskit/chains.hpp"
#include "feaskit/embedding.hpp"
#include "feaskit/exact.hpp"
#include "feaskit/graph.hpp"
#include "feaskit/select.hpp"

namespace feaskit {

// One decision/search instance ready for labeling.  Coloring tasks use
// `problem` alone; embedding tasks add `hardware` and the chain cap.
struct Instance {
    TaskKind task = TaskKind::KColoring;
    Graph problem;
    std::optional<Graph> hardware;
    int max_chain_size = 3;
    int k = 3;
    std::string problem_family;
    std::string hardware_family;
    std::uint64_t seed = 0;
};

// Draws one instance from the task's distribution.  Desk scale keeps
// everything small enough for exact labeling in milliseconds; paper scale
// widens the ranges (coloring up to 300 vertices, hardware up to 100).
// Identical (task, seed, paper_scale) triples give identical instances.
Instance sample_instance(TaskKind task, std::uint64_t seed, bool paper_scale = false);

enum class LabelStatus { Sat, Unsat, Dropped };
enum class Provenance { ZeroPhase, Exact, Fj };

const char* to_string(LabelStatus s);
const char* to_string(Provenance p);

struct LabelBudgets {
    SearchBudget exact{2'000'000, 2.0};
    long long fj_iterations = 200'000;
    int fj_restarts = 3;
    std::optional<double> fj_time_s = 1.0;
    std::size_t chain_cap = kDefaultChainCap;
    std::size_t row_cap = 500'000;
    std::size_t term_cap = 2'000'000;
};

struct Label {
    LabelStatus status = LabelStatus::Dropped;
    std::optional<Provenance> provenance;
    std::optional<Embedding> embedding;
    std::optional<std::vector<int>> coloring;
    std::optional<long long> objective;  // hardware vertices used / colors used
    std::string note;                    // reason when dropped
};

// Screen, then exact search, then jump-search fallback.  Unsat labels come
// only from a screening certificate or an exhausted exact search; the
// fallback can label sat or give up (Dropped), never unsat.  Embedding
// solutions get the chain-thinning pass before they are recorded.
Label label_instance(const Instance& inst, const LabelBudgets& budgets = {});

struct DatasetRecord {
    std::string instruction;
    std::string input;
    std::string output;
    TaskKind task = TaskKind::KColoring;
    std::string provenance;
    std::uint64_t seed = 0;
    int n_problem = 0;
    int n_hardware = 0;  // 0 for coloring tasks
    int max_chain_size = 0;
    int k = 0;
    long long objective = -1;  // -1 when absent
};

// Instruction/input/output text, following the fixed templates.  Edge
// lists render lexicographically sorted: [[u,v],...] for embedding inputs
// and [(u,v),...] for coloring inputs.  Requires a non-dropped label.
DatasetRecord render_record(const Instance& inst, const Label& label);

std::string record_to_json(const DatasetRecord& rec);
DatasetRecord record_from_json(const std::string& line);

// Reconstructs the instance from a record's rendered text (sizes from the
// instruction, edges from the input).  The round trip is exercised by
// tests: render, reparse, re-verify the output.
struct ParsedRecordInput {
    TaskKind task = TaskKind::KColoring;
    Graph problem;
    std::optional<Graph> hardware;
    int max_chain_size = 0;
    int k = 0;
};

ParsedRecordInput parse_record_input(const DatasetRecord& rec);

// Accepts both rendered edge list shapes ("[[0,4],[1,2]]" and
// "[(0,4),(1,2)]"); `n` is the vertex count the edges must fit in.
Graph parse_edge_list(const std::string& text, int n);

std::string render_edge_list_brackets(const Graph& g);
std::string render_edge_list_tuples(const Graph& g);

struct DatasetConfig {
    TaskKind task = TaskKind::KColoring;
    int count = 100;
    std::uint64_t master_seed = 0;
    bool paper_scale = false;
    // Keep the sat fraction inside target +- tolerance by rejecting
    // surplus records; ignored for min-coloring (always sat).
    bool balance = true;
    double sat_target = 0.5;
    double sat_tolerance = 0.05;
    int jobs = 1;
    LabelBudgets budgets;
    // Give up after count * this many sampling attempts.
    long long attempt_factor = 200;
};

struct GeneratedDataset {
    std::vector<DatasetRecord> records;
    long long attempts = 0;
    long long dropped = 0;
    long long balance_rejected = 0;
};

// Samples, labels, and renders until `count` records exist.  Instance i
// uses the seed derived from (master_seed, i); labeling runs on `jobs`
// threads in index batches, and acceptance is a serial pass in index
// order, so results do not depend on scheduling.
GeneratedDataset generate_dataset(const DatasetConfig& cfg);

struct DatasetStats {
    int count = 0;
    int sat = 0;
    int unsat = 0;
    int by_task[3] = {0, 0, 0};  // indexed by TaskKind
    int min_vertices = 0;
    int max_vertices = 0;
    double mean_vertices = 0.0;
    int exact_labels = 0;
    int fj_labels = 0;
    int zero_phase_labels = 0;
};

DatasetStats dataset_stats(const std::vector<DatasetRecord>& records);

}  // namespace feaskit
