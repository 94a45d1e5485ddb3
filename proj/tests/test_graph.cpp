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

#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "feaskit/graph.hpp"
#include "feaskit/rng.hpp"

using feaskit::Graph;

TEST_CASE("from_edges normalizes and validates") {
    Graph g = Graph::from_edges(4, {{2, 0}, {1, 0}, {3, 2}});
    CHECK(g.num_vertices() == 4);
    CHECK(g.num_edges() == 3);
    // Stored with u < v, sorted lexicographically.
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {2, 3}});
    CHECK(g.has_edge(0, 2));
    CHECK(g.has_edge(2, 0));
    CHECK(!g.has_edge(1, 3));
    CHECK(g.degree(0) == 2);
    CHECK(g.neighbors(2) == std::vector<int>{0, 3});

    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(2, {{-1, 0}}), std::invalid_argument);
}

TEST_CASE("json edge list round trip") {
    Graph p3 = Graph::from_json(R"({"n":3,"edges":[[0,1],[1,2]]})");
    CHECK(p3.num_vertices() == 3);
    CHECK(p3.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});

    Graph k3 = Graph::from_edges(3, {{0, 1}, {0, 2}, {1, 2}});
    Graph back = Graph::from_json(k3.to_json());
    CHECK(back.num_vertices() == 3);
    CHECK(back.edges() == k3.edges());

    CHECK_THROWS_AS(Graph::from_json(R"({"n":2,"edges":[[0,0]]})"), std::invalid_argument);
    CHECK_THROWS(Graph::from_json("not json"));
}

TEST_CASE("connectivity and isolated-vertex removal") {
    Graph path = Graph::from_edges(3, {{0, 1}, {1, 2}});
    CHECK(path.is_connected());
    Graph split = Graph::from_edges(4, {{0, 1}, {2, 3}});
    CHECK(!split.is_connected());

    Graph g = Graph::from_edges(5, {{1, 3}, {3, 4}});  // 0 and 2 isolated
    Graph t = g.without_isolated();
    CHECK(t.num_vertices() == 3);
    CHECK(t.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});

    Graph empty = Graph::from_edges(3, {});
    CHECK(empty.without_isolated().num_vertices() == 0);
}

TEST_CASE("top2_info follows the annotation rule") {
    SUBCASE("star with tie broken toward smaller id") {
        Graph star = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
        CHECK(feaskit::top2_info(star) == "N0:[1,2,#1,#1]; N1:[0,#3]; N2:[0,#3]; N3:[0,#3]");
    }
    SUBCASE("isolated vertex renders empty brackets") {
        Graph g = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}});
        std::string info = feaskit::top2_info(g);
        CHECK(info.find("N4:[]") != std::string::npos);
    }
    SUBCASE("degree-1 vertex renders a single entry") {
        // Vertex 6 hangs off vertex 2 of degree 2.
        Graph g = Graph::from_edges(7, {{2, 6}, {2, 5}});
        CHECK(feaskit::top2_info(g).find("N6:[2,#2]") != std::string::npos);
    }
    SUBCASE("12-vertex reference graph reproduces its full annotation") {
        Graph g = Graph::from_edges(12, {{0, 9}, {0, 10}, {0, 11}, {0, 4}, {1, 11}, {1, 4}, {1, 7},
                                         {2, 6}, {2, 5},  {3, 8},  {3, 9}, {4, 7},  {4, 5}, {4, 10},
                                         {5, 9}, {5, 11}, {7, 10}, {8, 9}, {9, 11}});
        CHECK(feaskit::top2_info(g) ==
              "N0:[4,9,#5,#5]; N1:[4,11,#5,#4]; N2:[5,6,#4,#1]; N3:[9,8,#5,#2]; N4:[0,5,#4,#4]; "
              "N5:[4,9,#5,#5]; N6:[2,#2]; N7:[4,1,#5,#3]; N8:[9,3,#5,#2]; N9:[0,5,#4,#4]; "
              "N10:[4,0,#5,#4]; N11:[9,0,#5,#4]");
    }
    SUBCASE("edge input order never changes the string") {
        std::vector<std::pair<int, int>> edges{{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {1, 4}, {0, 5}};
        Graph base = Graph::from_edges(6, edges);
        std::string want = feaskit::top2_info(base);
        feaskit::Rng rng(7);
        for (int trial = 0; trial < 20; ++trial) {
            rng.shuffle(edges);
            auto flipped = edges;
            for (auto& [u, v] : flipped)
                if (rng.bernoulli(0.5)) std::swap(u, v);
            CHECK(feaskit::top2_info(Graph::from_edges(6, flipped)) == want);
        }
    }
}
