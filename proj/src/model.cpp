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

#include "feaskit/model.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace feaskit {

int Model::add_var(long long lower, long long upper, std::string name) {
    if (lower > upper) throw std::invalid_argument("model: variable with empty domain");
    bounds_.emplace_back(lower, upper);
    if (name.empty()) name = "x" + std::to_string(bounds_.size() - 1);
    names_.push_back(std::move(name));
    var_index_.emplace_back();
    return static_cast<int>(bounds_.size()) - 1;
}

int Model::add_constraint(std::vector<std::pair<int, long long>> terms, Sense sense, long long rhs) {
    std::erase_if(terms, [](const auto& t) { return t.second == 0; });
    std::sort(terms.begin(), terms.end());
    for (std::size_t i = 0; i + 1 < terms.size(); ++i)
        if (terms[i].first == terms[i + 1].first)
            throw std::invalid_argument("model: duplicate variable in constraint");
    for (const auto& [v, coeff] : terms)
        if (v < 0 || v >= num_vars()) throw std::invalid_argument("model: constraint references unknown variable");

    int idx = static_cast<int>(constraints_.size());
    for (const auto& [v, coeff] : terms) var_index_[static_cast<std::size_t>(v)].emplace_back(idx, coeff);
    constraints_.push_back(LinearConstraint{std::move(terms), sense, rhs});
    return idx;
}

void Model::set_objective(std::vector<long long> coeffs) {
    if (static_cast<int>(coeffs.size()) != num_vars())
        throw std::invalid_argument("model: objective length must match variable count");
    objective_ = std::move(coeffs);
}

long long Model::objective_value(const Assignment& x) const {
    long long total = 0;
    for (std::size_t i = 0; i < objective_.size(); ++i) total += objective_[i] * x.at(i);
    return total;
}

bool Model::in_bounds(const Assignment& x) const {
    if (static_cast<int>(x.size()) != num_vars()) return false;
    for (int v = 0; v < num_vars(); ++v) {
        auto [lo, hi] = bounds_[static_cast<std::size_t>(v)];
        if (x[static_cast<std::size_t>(v)] < lo || x[static_cast<std::size_t>(v)] > hi) return false;
    }
    return true;
}

long long Model::activity(const Assignment& x, int c) const {
    long long act = 0;
    for (const auto& [v, coeff] : constraint(c).terms) act += coeff * x.at(static_cast<std::size_t>(v));
    return act;
}

long long Model::violation_of(long long activity, int c) const {
    const LinearConstraint& con = constraints_.at(static_cast<std::size_t>(c));
    long long over = activity - con.rhs;
    if (con.sense == Sense::LessEq) return over > 0 ? over : 0;
    return std::llabs(over);
}

long long Model::violation(const Assignment& x, int c) const { return violation_of(activity(x, c), c); }

long long Model::weighted_infeasibility(const Assignment& x, std::span<const long long> weights) const {
    if (static_cast<int>(weights.size()) != num_constraints())
        throw std::invalid_argument("model: weight vector length must match constraint count");
    long long total = 0;
    for (int c = 0; c < num_constraints(); ++c) total += weights[static_cast<std::size_t>(c)] * violation(x, c);
    return total;
}

bool Model::is_feasible(const Assignment& x) const {
    if (!in_bounds(x)) return false;
    for (int c = 0; c < num_constraints(); ++c)
        if (violation(x, c) != 0) return false;
    return true;
}

std::string Model::dump() const {
    std::string out;
    for (int v = 0; v < num_vars(); ++v) {
        auto [lo, hi] = bounds_[static_cast<std::size_t>(v)];
        out += "var " + names_[static_cast<std::size_t>(v)] + ": [" + std::to_string(lo) + "," +
               std::to_string(hi) + "]\n";
    }
    for (int c = 0; c < num_constraints(); ++c) {
        const auto& con = constraints_[static_cast<std::size_t>(c)];
        out += "c" + std::to_string(c) + ":";
        bool first = true;
        for (const auto& [v, coeff] : con.terms) {
            out += first ? " " : " + ";
            out += std::to_string(coeff) + "*" + names_[static_cast<std::size_t>(v)];
            first = false;
        }
        if (con.terms.empty()) out += " 0";
        out += con.sense == Sense::LessEq ? " <= " : " == ";
        out += std::to_string(con.rhs) + "\n";
    }
    return out;
}

}  // namespace feaskit
