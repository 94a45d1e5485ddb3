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
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace feaskit {

// One value per variable, in variable order.
using Assignment = std::vector<long long>;

enum class Sense {
    LessEq,  // a.x <= b, violation max(0, a.x - b)
    Eq,      // a.x == b, violation |a.x - b|
};

struct LinearConstraint {
    std::vector<std::pair<int, long long>> terms;  // (var, coeff), sorted by var, coeffs nonzero
    Sense sense = Sense::LessEq;
    long long rhs = 0;
};

// Pure-integer linear feasibility model.  Variables carry inclusive bounds;
// encodings in this codebase produce binaries but general bounds are
// supported.  The optional objective is metadata for ranking solutions; no
// search routine here optimizes it.
class Model {
  public:
    int add_var(long long lower, long long upper, std::string name = {});
    // Terms may arrive unsorted; zero coefficients are dropped, duplicate
    // variables are rejected.  Returns the constraint index.
    int add_constraint(std::vector<std::pair<int, long long>> terms, Sense sense, long long rhs);

    void set_objective(std::vector<long long> coeffs);
    bool has_objective() const { return !objective_.empty(); }
    const std::vector<long long>& objective() const { return objective_; }
    long long objective_value(const Assignment& x) const;

    int num_vars() const { return static_cast<int>(bounds_.size()); }
    int num_constraints() const { return static_cast<int>(constraints_.size()); }
    std::pair<long long, long long> bounds(int var) const { return bounds_.at(static_cast<std::size_t>(var)); }
    const std::string& var_name(int var) const { return names_.at(static_cast<std::size_t>(var)); }
    const LinearConstraint& constraint(int c) const { return constraints_.at(static_cast<std::size_t>(c)); }

    // Constraints touching a variable, as (constraint index, coefficient).
    const std::vector<std::pair<int, long long>>& constraints_of(int var) const {
        return var_index_.at(static_cast<std::size_t>(var));
    }

    bool in_bounds(const Assignment& x) const;

    long long activity(const Assignment& x, int c) const;
    long long violation(const Assignment& x, int c) const;
    // Violation implied by an already-computed activity.
    long long violation_of(long long activity, int c) const;

    // Sum of weights[c] * violation(x, c); weights must all be >= 1 so a
    // zero total is exactly feasibility.
    long long weighted_infeasibility(const Assignment& x, std::span<const long long> weights) const;
    bool is_feasible(const Assignment& x) const;

    // One constraint per line, for debugging: "c3: 1*x0 + -2*x4 <= 5".
    std::string dump() const;

  private:
    std::vector<std::pair<long long, long long>> bounds_;
    std::vector<std::string> names_;
    std::vector<LinearConstraint> constraints_;
    std::vector<std::vector<std::pair<int, long long>>> var_index_;
    std::vector<long long> objective_;
};

}  // namespace feaskit
