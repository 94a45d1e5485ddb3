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

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>

#include "feaskit/embedding.hpp"
#include "feaskit/graph.hpp"
#include "feaskit/model.hpp"

namespace feaskit {

// Cached activities and violations for one assignment, updated one
// variable at a time.  This is the inner data structure of the jump
// search; it is public so the update path can be property-tested against
// full recomputation.
class IncrementalEvaluator {
  public:
    IncrementalEvaluator(const Model& m, Assignment x);

    const Model& model() const { return *model_; }
    const Assignment& values() const { return x_; }
    long long value(int var) const { return x_.at(static_cast<std::size_t>(var)); }

    long long activity(int c) const { return act_.at(static_cast<std::size_t>(c)); }
    long long violation(int c) const { return viol_.at(static_cast<std::size_t>(c)); }
    const std::vector<long long>& violations() const { return viol_; }

    // Constraints currently violated, in no particular order.
    const std::vector<int>& violated() const { return violated_; }
    int num_violated() const { return static_cast<int>(violated_.size()); }

    void set_value(int var, long long value);

    // Per-constraint effects of the last set_value call, as
    // (constraint, old violation, new violation).
    const std::vector<std::array<long long, 3>>& last_changes() const { return changes_; }

  private:
    const Model* model_;
    Assignment x_;
    std::vector<long long> act_;
    std::vector<long long> viol_;
    std::vector<int> violated_;      // sparse set payload
    std::vector<int> violated_pos_;  // index into violated_, or -1
    std::vector<std::array<long long, 3>> changes_;

    void mark(int c, long long new_viol);
};

// Best single-variable move under weighted violation: the new value and
// its score, the weighted-violation decrease it would buy (positive is
// an improvement).  Binary variables flip; wider integer domains try the
// bounds and every per-constraint tightness point.  Ties prefer staying
// close to the current value, then the smaller value.
struct JumpChoice {
    long long value = 0;
    long long score = 0;
};

JumpChoice jump(const Model& m, const Assignment& x, std::span<const long long> weights, int var);

struct FjConfig {
    long long max_iterations = 100'000;
    std::optional<double> time_limit_s;
    int sample_cap = 25;  // promising variables examined per move
    long long weight_increment = 1;
    std::uint64_t seed = 0;
};

enum class FjStatus { Feasible, LimitReached };

const char* to_string(FjStatus s);

struct FjResult {
    FjStatus status = FjStatus::LimitReached;
    Assignment assignment;  // feasible point, or the best-seen one
    long long iterations = 0;
    long long weight_bumps = 0;
    std::vector<long long> weights;  // final per-constraint weights
};

// Weighted-violation descent: move the best-scoring variable from a
// sampled subset of the promising set; when no move improves, bump the
// weights of all violated constraints and force a move inside one of
// them.  Out-of-bounds start values are clamped.  Never claims Feasible
// unless the final point passes full re-evaluation.
FjResult fj_search(const Model& m, Assignment start, const FjConfig& cfg = {});

struct Phase2Config {
    int patience = 40;        // rounds without an accepted move before stopping
    int max_candidates = 60;  // deletion moves gathered per round
    int probes = 20;          // moves verified per round
    int per_chain = 4;        // sampled vertices per oversized chain
    long long max_rounds = 100'000;
    std::optional<double> time_limit_s;
    std::uint64_t seed = 0;
    // Called after each accepted move with the new embedding and its
    // vertex count; used by tests to audit monotonicity.
    std::function<void(const Embedding&, int)> on_accept;
};

// Local chain-thinning on a feasible embedding: repeatedly try to drop a
// single vertex from a multi-vertex chain, keeping only moves the domain
// verifier accepts (which strictly shrink the vertex count), until
// `patience` consecutive rounds make no progress.  Returns an embedding
// never worse than the start.  Throws std::invalid_argument when the
// start does not verify.
Embedding fj_phase2(const Graph& problem, const Graph& hardware, int max_chain_size, const Embedding& start,
                    const Phase2Config& cfg = {});

}  // namespace feaskit
