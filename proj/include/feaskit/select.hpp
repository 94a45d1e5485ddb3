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

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "feaskit/embedding.hpp"
#include "feaskit/graph.hpp"

namespace feaskit {

enum class TaskKind { Embedding, KColoring, MinColoring };

const char* to_string(TaskKind t);
TaskKind task_kind_from_string(const std::string& s);

// The exact answer grammars, one line each:
//
//   embedding    yes, embedding: {"0": [6,14], "1": [1,7,15]}, total nodes used: 5
//                no
//   k-coloring   Yes, coloring: [0, 1, 2, 0]
//                No
//   min-coloring min_colors: 3, coloring: [0, 1, 2, 0]
//
// Renderers emit exactly these shapes.  The parser is a little looser: the
// yes/no keyword is case-insensitive, whitespace around tokens is free,
// and for embeddings the closing brace may sit either before the total
// clause or after it (answers in the wild drop one of the two).
std::string render_embedding_yes(const Embedding& emb);
std::string render_embedding_no();
std::string render_coloring_yes(const std::vector<int>& colors);
std::string render_coloring_no();
std::string render_mincoloring(int num_colors, const std::vector<int>& colors);

enum class Claim { Yes, No, Malformed };

const char* to_string(Claim c);

// One parsed answer.  Malformed answers keep the reason in `error`; they
// still count toward the pool size in best_of_n but vote on neither side.
struct Candidate {
    Claim claim = Claim::Malformed;
    std::optional<Embedding> embedding;        // embedding tasks, claim Yes
    std::optional<std::vector<int>> coloring;  // coloring tasks, claim Yes
    std::optional<long long> claimed_objective;  // total nodes used / min_colors
    std::string error;
};

// Strict parse of one answer against the task grammar.  Anything that
// deviates (wrong task shape, trailing garbage, truncation, duplicate
// embedding keys) comes back Malformed rather than throwing.
Candidate parse_candidate(const std::string& text, TaskKind kind);

enum class VerdictBasis { Certificate, Majority };

struct Verdict {
    bool yes = false;
    VerdictBasis basis = VerdictBasis::Majority;
    int chosen = -1;  // index of the winning candidate when basis is Certificate
    std::optional<long long> objective;
    int valid_count = 0;
    int no_count = 0;
    int malformed_count = 0;
};

// Pick an answer from a pool of N candidates:
//   - if any candidate verifies, answer yes with the lowest-objective
//     valid one (ties to the earliest index): a certificate beats votes
//   - otherwise answer no only when claims of no form a strict majority
//     of the whole pool; malformed candidates dilute the vote but join
//     neither side
// Throws std::invalid_argument on an empty pool.
Verdict best_of_n(const std::vector<Candidate>& candidates,
                  const std::function<bool(const Candidate&)>& is_valid,
                  const std::function<long long(const Candidate&)>& objective);

// Task-specific wrappers.  A candidate is valid when its entire statement
// holds: the solution verifies and any claimed objective matches the
// recomputed one.  Coloring feasibility has no objective (constant 0);
// min-coloring ranks by the color count.
Verdict best_of_n_embedding(const std::vector<Candidate>& candidates, const Graph& problem,
                            const Graph& hardware, int max_chain_size);
Verdict best_of_n_coloring(const std::vector<Candidate>& candidates, const Graph& g, int k);
Verdict best_of_n_mincoloring(const std::vector<Candidate>& candidates, const Graph& g);

}  // namespace feaskit
