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

#include "feaskit/select.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

#include "feaskit/verify.hpp"

namespace feaskit {

const char* to_string(TaskKind t) {
    switch (t) {
        case TaskKind::Embedding: return "embedding";
        case TaskKind::KColoring: return "kcoloring";
        case TaskKind::MinColoring: return "mincoloring";
    }
    return "?";
}

TaskKind task_kind_from_string(const std::string& s) {
    if (s == "embedding") return TaskKind::Embedding;
    if (s == "kcoloring") return TaskKind::KColoring;
    if (s == "mincoloring") return TaskKind::MinColoring;
    throw std::invalid_argument("unknown task '" + s + "'");
}

const char* to_string(Claim c) {
    switch (c) {
        case Claim::Yes: return "yes";
        case Claim::No: return "no";
        case Claim::Malformed: return "malformed";
    }
    return "?";
}

std::string render_embedding_yes(const Embedding& emb) {
    std::string out = "yes, embedding: {";
    bool first = true;
    for (const auto& [i, chain] : emb) {
        if (!first) out += ", ";
        first = false;
        out += "\"" + std::to_string(i) + "\": [";
        for (std::size_t j = 0; j < chain.size(); ++j) out += (j ? "," : "") + std::to_string(chain[j]);
        out += "]";
    }
    out += "}, total nodes used: " + std::to_string(embedding_total_vertices(emb));
    return out;
}

std::string render_embedding_no() { return "no"; }

std::string render_coloring_yes(const std::vector<int>& colors) {
    std::string out = "Yes, coloring: [";
    for (std::size_t i = 0; i < colors.size(); ++i) out += (i ? ", " : "") + std::to_string(colors[i]);
    return out + "]";
}

std::string render_coloring_no() { return "No"; }

std::string render_mincoloring(int num_colors, const std::vector<int>& colors) {
    std::string out = "min_colors: " + std::to_string(num_colors) + ", coloring: [";
    for (std::size_t i = 0; i < colors.size(); ++i) out += (i ? ", " : "") + std::to_string(colors[i]);
    return out + "]";
}

namespace {

// Hand-rolled scanner; answers are one-liners, so position bookkeeping
// stays simple.  Failures throw ParseFail which parse_candidate converts
// into a Malformed candidate.
struct ParseFail {
    std::string reason;
};

class Scanner {
  public:
    explicit Scanner(const std::string& text) : s_(text) {}

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool at_end() {
        skip_ws();
        return pos_ == s_.size();
    }

    char peek() {
        skip_ws();
        if (pos_ == s_.size()) throw ParseFail{"unexpected end of answer"};
        return s_[pos_];
    }

    void expect(char c) {
        if (peek() != c) throw ParseFail{std::string("expected '") + c + "' at position " + std::to_string(pos_)};
        ++pos_;
    }

    // Exact literal, after whitespace.
    void expect_word(const std::string& w) {
        skip_ws();
        if (s_.compare(pos_, w.size(), w) != 0)
            throw ParseFail{"expected \"" + w + "\" at position " + std::to_string(pos_)};
        pos_ += w.size();
    }

    bool try_word(const std::string& w) {
        skip_ws();
        if (s_.compare(pos_, w.size(), w) != 0) return false;
        pos_ += w.size();
        return true;
    }

    // Leading claim keyword, case-insensitive.
    std::string claim_word() {
        skip_ws();
        std::string w;
        while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) {
            w += static_cast<char>(std::tolower(static_cast<unsigned char>(s_[pos_])));
            ++pos_;
        }
        return w;
    }

    long long integer() {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
        std::size_t digits = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == digits) throw ParseFail{"expected an integer at position " + std::to_string(start)};
        try {
            return std::stoll(s_.substr(start, pos_ - start));
        } catch (const std::out_of_range&) {
            throw ParseFail{"integer out of range at position " + std::to_string(start)};
        }
    }

    std::vector<int> int_list() {
        expect('[');
        std::vector<int> out;
        if (peek() == ']') {
            ++pos_;
            return out;
        }
        while (true) {
            long long v = integer();
            out.push_back(static_cast<int>(v));
            char c = peek();
            if (c == ',') {
                ++pos_;
                continue;
            }
            if (c == ']') {
                ++pos_;
                return out;
            }
            throw ParseFail{"expected ',' or ']' at position " + std::to_string(pos_)};
        }
    }

    void expect_end() {
        if (!at_end()) throw ParseFail{"trailing characters at position " + std::to_string(pos_)};
    }

  private:
    const std::string& s_;
    std::size_t pos_ = 0;
};

Candidate parse_embedding_answer(Scanner& sc) {
    Candidate cand;
    std::string claim = sc.claim_word();
    if (claim == "no") {
        sc.expect_end();
        cand.claim = Claim::No;
        return cand;
    }
    if (claim != "yes") throw ParseFail{"expected yes or no"};
    sc.expect(',');
    sc.expect_word("embedding");
    sc.expect(':');
    sc.expect('{');

    Embedding emb;
    bool closed = false;  // saw '}' before the total clause
    while (true) {
        char c = sc.peek();
        if (c == '"') {
            sc.expect('"');
            long long key = sc.integer();
            sc.expect('"');
            sc.expect(':');
            std::vector<int> chain = sc.int_list();
            if (!emb.emplace(static_cast<int>(key), std::move(chain)).second)
                throw ParseFail{"duplicate embedding key " + std::to_string(key)};
            c = sc.peek();
            if (c == ',') {
                sc.expect(',');
                continue;
            }
            if (c == '}') {
                sc.expect('}');
                sc.expect(',');
                closed = true;
            }
            break;
        }
        if (c == '}') {  // empty embedding "{}"
            sc.expect('}');
            sc.expect(',');
            closed = true;
            break;
        }
        break;  // "total" directly after a comma: brace omitted before it
    }

    sc.expect_word("total");
    sc.expect_word("nodes");
    sc.expect_word("used");
    sc.expect(':');
    long long total = sc.integer();
    if (!closed && !sc.at_end()) sc.expect('}');  // brace after the total instead
    sc.expect_end();

    cand.claim = Claim::Yes;
    cand.embedding = std::move(emb);
    cand.claimed_objective = total;
    return cand;
}

Candidate parse_coloring_answer(Scanner& sc) {
    Candidate cand;
    std::string claim = sc.claim_word();
    if (claim == "no") {
        sc.expect_end();
        cand.claim = Claim::No;
        return cand;
    }
    if (claim != "yes") throw ParseFail{"expected Yes or No"};
    sc.expect(',');
    sc.expect_word("coloring");
    sc.expect(':');
    cand.coloring = sc.int_list();
    sc.expect_end();
    cand.claim = Claim::Yes;
    return cand;
}

Candidate parse_mincoloring_answer(Scanner& sc) {
    Candidate cand;
    sc.expect_word("min_colors");
    sc.expect(':');
    cand.claimed_objective = sc.integer();
    sc.expect(',');
    sc.expect_word("coloring");
    sc.expect(':');
    cand.coloring = sc.int_list();
    sc.expect_end();
    cand.claim = Claim::Yes;
    return cand;
}

}  // namespace

Candidate parse_candidate(const std::string& text, TaskKind kind) {
    Scanner sc(text);
    try {
        switch (kind) {
            case TaskKind::Embedding: return parse_embedding_answer(sc);
            case TaskKind::KColoring: return parse_coloring_answer(sc);
            case TaskKind::MinColoring: return parse_mincoloring_answer(sc);
        }
        throw ParseFail{"unknown task"};
    } catch (const ParseFail& f) {
        Candidate cand;
        cand.claim = Claim::Malformed;
        cand.error = f.reason;
        return cand;
    }
}

Verdict best_of_n(const std::vector<Candidate>& candidates,
                  const std::function<bool(const Candidate&)>& is_valid,
                  const std::function<long long(const Candidate&)>& objective) {
    if (candidates.empty()) throw std::invalid_argument("best_of_n: empty candidate pool");

    Verdict v;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        const Candidate& c = candidates[i];
        if (c.claim == Claim::No) ++v.no_count;
        if (c.claim == Claim::Malformed) ++v.malformed_count;
        if (c.claim != Claim::Yes || !is_valid(c)) continue;
        ++v.valid_count;
        long long obj = objective(c);
        if (v.chosen == -1 || obj < *v.objective) {
            v.chosen = static_cast<int>(i);
            v.objective = obj;
        }
    }
    if (v.chosen != -1) {
        v.yes = true;
        v.basis = VerdictBasis::Certificate;
        return v;
    }
    v.basis = VerdictBasis::Majority;
    v.yes = !(2 * v.no_count > static_cast<int>(candidates.size()));
    return v;
}

Verdict best_of_n_embedding(const std::vector<Candidate>& candidates, const Graph& problem,
                            const Graph& hardware, int max_chain_size) {
    auto valid = [&](const Candidate& c) {
        if (!c.embedding) return false;
        EmbeddingReport rep = verify_embedding(problem, hardware, max_chain_size, *c.embedding);
        if (!rep.valid) return false;
        return !c.claimed_objective || *c.claimed_objective == rep.total_vertices;
    };
    auto obj = [&](const Candidate& c) {
        return static_cast<long long>(embedding_total_vertices(*c.embedding));
    };
    return best_of_n(candidates, valid, obj);
}

Verdict best_of_n_coloring(const std::vector<Candidate>& candidates, const Graph& g, int k) {
    auto valid = [&](const Candidate& c) {
        return c.coloring && verify_coloring(g, k, *c.coloring).valid;
    };
    auto obj = [](const Candidate&) { return 0LL; };
    return best_of_n(candidates, valid, obj);
}

Verdict best_of_n_mincoloring(const std::vector<Candidate>& candidates, const Graph& g) {
    auto valid = [&](const Candidate& c) {
        if (!c.coloring || !c.claimed_objective) return false;
        std::set<int> distinct(c.coloring->begin(), c.coloring->end());
        if (static_cast<long long>(distinct.size()) != *c.claimed_objective) return false;
        // Range-check against the claimed palette so "min_colors: 3" with
        // colors {0,1,7} cannot pass.
        return verify_coloring(g, static_cast<int>(*c.claimed_objective), *c.coloring).valid;
    };
    auto obj = [](const Candidate& c) { return *c.claimed_objective; };
    return best_of_n(candidates, valid, obj);
}

}  // namespace feaskit
