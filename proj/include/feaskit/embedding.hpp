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

#include <map>
#include <vector>

namespace feaskit {

// Candidate or final embedding: problem vertex -> chain of hardware
// vertices.  Kept as an ordered map so untrusted candidates with missing
// or extra keys survive parsing and reach the verifier intact.
using Embedding = std::map<int, std::vector<int>>;

inline int embedding_total_vertices(const Embedding& e) {
    int total = 0;
    for (const auto& [v, chain] : e) total += static_cast<int>(chain.size());
    return total;
}

}  // namespace feaskit
