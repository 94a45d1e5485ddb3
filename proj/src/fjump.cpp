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

#include "feaskit/fjump.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <stdexcept>

#include "feaskit/rng.hpp"
#include "feaskit/verify.hpp"

namespace feaskit {

const char* to_string(FjStatus s) {
    switch (s) {
        case FjStatus::Feasible: return "feasible";
        case FjStatus::LimitReached: return "limit_reached";
    }
    return "?";
}

IncrementalEvaluator::IncrementalEvaluator(const Model& m, Assignment x) : model_(&m), x_(std::move(x)) {
    if (static_cast<int>(x_.size()) != m.num_vars())
        throw std::invalid_argument("evaluator: assignment length mismatch");
    act_.assign(static_cast<std::size_t>(m.num_constraints()), 0);
    viol_.assign(static_cast<std::size_t>(m.num_constraints()), 0);
    violated_pos_.assign(static_cast<std::size_t>(m.num_constraints()), -1);
    for (int c = 0; c < m.num_constraints(); ++c) {
        act_[static_cast<std::size_t>(c)] = m.activity(x_, c);
        mark(c, m.violation_of(act_[static_cast<std::size_t>(c)], c));
    }
}

void IncrementalEvaluator::mark(int c, long long new_viol) {
    viol_[static_cast<std::size_t>(c)] = new_viol;
    int& pos = violated_pos_[static_cast<std::size_t>(c)];
    if (new_viol > 0 && pos == -1) {
        pos = static_cast<int>(violated_.size());
        violated_.push_back(c);
    } else if (new_viol == 0 && pos != -1) {
        int last = violated_.back();
        violated_[static_cast<std::size_t>(pos)] = last;
        violated_pos_[static_cast<std::size_t>(last)] = pos;
        violated_.pop_back();
        pos = -1;
    }
}

void IncrementalEvaluator::set_value(int var, long long value) {
    changes_.clear();
    long long dx = value - x_.at(static_cast<std::size_t>(var));
    if (dx == 0) return;
    x_[static_cast<std::size_t>(var)] = value;
    for (const auto& [c, coeff] : model_->constraints_of(var)) {
        long long old_viol = viol_[static_cast<std::size_t>(c)];
        act_[static_cast<std::size_t>(c)] += coeff * dx;
        long long new_viol = model_->violation_of(act_[static_cast<std::size_t>(c)], c);
        mark(c, new_viol);
        changes_.push_back({static_cast<long long>(c), old_viol, new_viol});
    }
}

namespace {

long long floor_div(long long a, long long b) {
    long long q = a / b;
    return (a % b != 0 && ((a < 0) != (b < 0))) ? q - 1 : q;
}

// Candidate target values for one variable: the flip for binaries, else
// the bounds plus every value that makes some incident constraint tight
// (rounded both ways).  The current value is excluded.
void collect_candidates(const Model& m, const IncrementalEvaluator& eval, int var,
                        std::vector<long long>& out) {
    out.clear();
    auto [lo, hi] = m.bounds(var);
    long long xj = eval.value(var);
    if (hi - lo == 1) {
        out.push_back(lo + hi - xj);
        return;
    }
    auto push = [&](long long t) {
        if (t < lo) t = lo;
        if (t > hi) t = hi;
        if (t != xj) out.push_back(t);
    };
    push(lo);
    push(hi);
    for (const auto& [c, coeff] : m.constraints_of(var)) {
        // coeff * t + (act - coeff * xj) = rhs  at the tight point
        long long num = m.constraint(c).rhs - eval.activity(c) + coeff * xj;
        long long f = floor_div(num, coeff);
        push(f);
        if (f * coeff != num) push(f + 1);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
}

// Score one variable against the weighted violation: returns the best
// target value and the decrease it would achieve.
JumpChoice score_var(const Model& m, const IncrementalEvaluator& eval, std::span<const long long> weights,
                     int var, std::vector<long long>& scratch) {
    collect_candidates(m, eval, var, scratch);
    long long xj = eval.value(var);
    JumpChoice best{xj, std::numeric_limits<long long>::min()};
    for (long long t : scratch) {
        long long delta = 0;
        for (const auto& [c, coeff] : m.constraints_of(var)) {
            long long new_act = eval.activity(c) + coeff * (t - xj);
            delta += weights[static_cast<std::size_t>(c)] *
                     (m.violation_of(new_act, c) - eval.violation(c));
        }
        long long score = -delta;
        if (score > best.score ||
            (score == best.score &&
             (std::llabs(t - xj) < std::llabs(best.value - xj) ||
              (std::llabs(t - xj) == std::llabs(best.value - xj) && t < best.value)))) {
            best = {t, score};
        }
    }
    return best;
}

using Clock = std::chrono::steady_clock;

struct FjSearch {
    const Model& m;
    const FjConfig& cfg;
    IncrementalEvaluator eval;
    Rng rng;

    std::vector<long long> weights;
    long long fw = 0;  // current weighted infeasibility

    Assignment best_x;
    std::vector<long long> best_viol;
    long long best_fw = 0;

    std::vector<long long> var_value;  // cached jump target per variable
    std::vector<long long> var_score;
    std::vector<char> movable;

    std::vector<int> promising;      // sparse set of vars with score > 0
    std::vector<int> promising_pos;  // index, or -1

    std::vector<int> touch_stamp;  // dedupe helper for rescore sweeps
    int stamp = 0;
    std::vector<long long> scratch;
    std::vector<int> sweep;

    long long bumps = 0;

    FjSearch(const Model& model, Assignment start, const FjConfig& config)
        : m(model), cfg(config), eval(model, std::move(start)), rng(config.seed) {
        weights.assign(static_cast<std::size_t>(m.num_constraints()), 1);
        for (int c = 0; c < m.num_constraints(); ++c) fw += eval.violation(c);
        best_x = eval.values();
        best_viol = eval.violations();
        best_fw = fw;
        var_value.assign(static_cast<std::size_t>(m.num_vars()), 0);
        var_score.assign(static_cast<std::size_t>(m.num_vars()), 0);
        movable.assign(static_cast<std::size_t>(m.num_vars()), 0);
        promising_pos.assign(static_cast<std::size_t>(m.num_vars()), -1);
        touch_stamp.assign(static_cast<std::size_t>(m.num_vars()), 0);
        for (int v = 0; v < m.num_vars(); ++v) {
            auto [lo, hi] = m.bounds(v);
            movable[static_cast<std::size_t>(v)] = lo < hi ? 1 : 0;
            rescore(v);
        }
    }

    void set_promising(int v, bool on) {
        int& pos = promising_pos[static_cast<std::size_t>(v)];
        if (on && pos == -1) {
            pos = static_cast<int>(promising.size());
            promising.push_back(v);
        } else if (!on && pos != -1) {
            int last = promising.back();
            promising[static_cast<std::size_t>(pos)] = last;
            promising_pos[static_cast<std::size_t>(last)] = pos;
            promising.pop_back();
            pos = -1;
        }
    }

    void rescore(int v) {
        if (!movable[static_cast<std::size_t>(v)]) {
            var_score[static_cast<std::size_t>(v)] = std::numeric_limits<long long>::min();
            set_promising(v, false);
            return;
        }
        JumpChoice jc = score_var(m, eval, weights, v, scratch);
        var_value[static_cast<std::size_t>(v)] = jc.value;
        var_score[static_cast<std::size_t>(v)] = jc.score;
        set_promising(v, jc.score > 0);
    }

    // Rescore the moved variable and everything sharing a constraint.
    void rescore_around(int v) {
        ++stamp;
        touch_stamp[static_cast<std::size_t>(v)] = stamp;
        sweep.assign(1, v);
        for (const auto& [c, coeff] : m.constraints_of(v))
            for (const auto& [u, ucoeff] : m.constraint(c).terms)
                if (touch_stamp[static_cast<std::size_t>(u)] != stamp) {
                    touch_stamp[static_cast<std::size_t>(u)] = stamp;
                    sweep.push_back(u);
                }
        for (int u : sweep) rescore(u);
    }

    void move(int v) {
        eval.set_value(v, var_value[static_cast<std::size_t>(v)]);
        for (const auto& ch : eval.last_changes())
            fw += weights[static_cast<std::size_t>(ch[0])] * (ch[2] - ch[1]);
        if (fw < best_fw) {
            best_fw = fw;
            best_x = eval.values();
            best_viol = eval.violations();
        }
        rescore_around(v);
    }

    // Weight bump branch: all violated constraints get heavier, scores of
    // their variables refresh, then one violated constraint is drafted
    // and its best variable moves even on a non-improving score.
    void bump_and_force() {
        const std::vector<int>& violated = eval.violated();
        ++bumps;
        ++stamp;
        sweep.clear();
        for (int c : violated) {
            weights[static_cast<std::size_t>(c)] += cfg.weight_increment;
            fw += cfg.weight_increment * eval.violation(c);
            best_fw += cfg.weight_increment * best_viol[static_cast<std::size_t>(c)];
            for (const auto& [u, coeff] : m.constraint(c).terms)
                if (touch_stamp[static_cast<std::size_t>(u)] != stamp) {
                    touch_stamp[static_cast<std::size_t>(u)] = stamp;
                    sweep.push_back(u);
                }
        }
        for (int u : sweep) rescore(u);

        int c = violated[static_cast<std::size_t>(rng.below(violated.size()))];
        int pick = -1;
        for (const auto& [u, coeff] : m.constraint(c).terms) {
            if (!movable[static_cast<std::size_t>(u)]) continue;
            if (pick == -1 || var_score[static_cast<std::size_t>(u)] > var_score[static_cast<std::size_t>(pick)])
                pick = u;
        }
        if (pick != -1) move(pick);
    }

    int pick_promising() {
        int count = static_cast<int>(promising.size());
        int best = -1;
        if (count <= cfg.sample_cap) {
            for (int v : promising)
                if (best == -1 || var_score[static_cast<std::size_t>(v)] > var_score[static_cast<std::size_t>(best)] ||
                    (var_score[static_cast<std::size_t>(v)] == var_score[static_cast<std::size_t>(best)] && v < best))
                    best = v;
            return best;
        }
        // Partial Fisher-Yates over the promising set; swaps keep the
        // sparse-set positions coherent.
        for (int i = 0; i < cfg.sample_cap; ++i) {
            int j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(count - i)));
            std::swap(promising[static_cast<std::size_t>(i)], promising[static_cast<std::size_t>(j)]);
            promising_pos[static_cast<std::size_t>(promising[static_cast<std::size_t>(i)])] = i;
            promising_pos[static_cast<std::size_t>(promising[static_cast<std::size_t>(j)])] = j;
            int v = promising[static_cast<std::size_t>(i)];
            if (best == -1 || var_score[static_cast<std::size_t>(v)] > var_score[static_cast<std::size_t>(best)] ||
                (var_score[static_cast<std::size_t>(v)] == var_score[static_cast<std::size_t>(best)] && v < best))
                best = v;
        }
        return best;
    }

    FjResult run() {
        FjResult res;
        std::optional<Clock::time_point> deadline;
        if (cfg.time_limit_s)
            deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                          std::chrono::duration<double>(*cfg.time_limit_s));
        long long iter = 0;
        while (true) {
            if (eval.num_violated() == 0) {
                res.status = FjStatus::Feasible;
                res.assignment = eval.values();
                res.iterations = iter;
                res.weight_bumps = bumps;
                res.weights = weights;
                return res;
            }
            if (iter >= cfg.max_iterations) break;
            if (deadline && (iter & 255) == 0 && Clock::now() >= *deadline) break;
            ++iter;
            if (!promising.empty()) {
                move(pick_promising());
            } else {
                bump_and_force();
            }
        }
        res.status = FjStatus::LimitReached;
        res.assignment = best_x;
        res.iterations = iter;
        res.weight_bumps = bumps;
        res.weights = weights;
        return res;
    }
};

}  // namespace

JumpChoice jump(const Model& m, const Assignment& x, std::span<const long long> weights, int var) {
    if (static_cast<int>(weights.size()) != m.num_constraints())
        throw std::invalid_argument("jump: weight vector length mismatch");
    IncrementalEvaluator eval(m, x);
    std::vector<long long> scratch;
    auto [lo, hi] = m.bounds(var);
    if (lo >= hi) return {x.at(static_cast<std::size_t>(var)), 0};  // fixed variable, no move
    return score_var(m, eval, weights, var, scratch);
}

FjResult fj_search(const Model& m, Assignment start, const FjConfig& cfg) {
    if (static_cast<int>(start.size()) != m.num_vars())
        throw std::invalid_argument("fj_search: start length must match variable count");
    for (int v = 0; v < m.num_vars(); ++v) {
        auto [lo, hi] = m.bounds(v);
        auto& val = start[static_cast<std::size_t>(v)];
        val = std::clamp(val, lo, hi);
    }
    FjSearch search(m, std::move(start), cfg);
    FjResult res = search.run();
    // Paranoia before anyone trusts a Feasible claim: full recomputation.
    if (res.status == FjStatus::Feasible && !m.is_feasible(res.assignment))
        throw std::logic_error("fj_search: feasibility claim failed full re-evaluation");
    return res;
}

Embedding fj_phase2(const Graph& problem, const Graph& hardware, int max_chain_size, const Embedding& start,
                    const Phase2Config& cfg) {
    EmbeddingReport rep = verify_embedding(problem, hardware, max_chain_size, start);
    if (!rep.valid) throw std::invalid_argument("fj_phase2: start embedding does not verify");

    Embedding cur = start;
    int cur_phi = rep.total_vertices;
    Rng rng(cfg.seed);
    std::optional<Clock::time_point> deadline;
    if (cfg.time_limit_s)
        deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                      std::chrono::duration<double>(*cfg.time_limit_s));

    int idle_rounds = 0;
    for (long long round = 0; round < cfg.max_rounds && idle_rounds < cfg.patience; ++round) {
        if (deadline && Clock::now() >= *deadline) break;

        // Candidate single-vertex deletions from every oversized chain.
        std::vector<std::pair<int, int>> moves;  // (problem vertex, hardware vertex)
        for (const auto& [i, chain] : cur) {
            if (chain.size() < 2) continue;
            int take = std::min<int>(cfg.per_chain, static_cast<int>(chain.size()));
            for (int idx : rng.sample_without_replacement(static_cast<int>(chain.size()), take))
                moves.emplace_back(i, chain[static_cast<std::size_t>(idx)]);
        }
        if (moves.empty()) break;  // every chain is a singleton
        if (static_cast<int>(moves.size()) > cfg.max_candidates) {
            rng.shuffle(moves);
            moves.resize(static_cast<std::size_t>(cfg.max_candidates));
        }

        int probes = std::min<int>(cfg.probes, static_cast<int>(moves.size()));
        std::vector<int> order = rng.sample_without_replacement(static_cast<int>(moves.size()), probes);
        bool accepted = false;
        for (int mi : order) {
            auto [i, hv] = moves[static_cast<std::size_t>(mi)];
            Embedding trial = cur;
            auto& chain = trial[i];
            chain.erase(std::find(chain.begin(), chain.end(), hv));
            EmbeddingReport trial_rep = verify_embedding(problem, hardware, max_chain_size, trial);
            if (!trial_rep.valid || trial_rep.total_vertices >= cur_phi) continue;
            cur = std::move(trial);
            cur_phi = trial_rep.total_vertices;
            if (cfg.on_accept) cfg.on_accept(cur, cur_phi);
            accepted = true;
            break;
        }
        idle_rounds = accepted ? 0 : idle_rounds + 1;
    }
    return cur;
}

}  // namespace feaskit
