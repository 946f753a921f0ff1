#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "obsat/paths.hpp"

using namespace obsat;

TEST_CASE("cycle endpoints have exactly the two arcs") {
    Graph c8 = cycle_graph(8);
    auto ps = simple_paths(c8, 0, 4);
    REQUIRE(ps.size() == 2);
    CHECK(ps[0] == SimplePath{0, 1, 2, 3, 4});
    CHECK(ps[1] == SimplePath{0, 7, 6, 5, 4});

    for (int n = 4; n <= 9; ++n) {
        Graph c = cycle_graph(n);
        CHECK(simple_paths(c, 0, 2).size() == 2);
    }
}

TEST_CASE("K_{2,3} paths between the small class") {
    Graph g = complete_bipartite(2, 3);
    auto ps = simple_paths(g, 0, 1);
    REQUIRE(ps.size() == 3);
    for (const auto& p : ps) CHECK(p.size() == 3);
}

TEST_CASE("adjacent endpoints with max_len 1") {
    Graph g = complete_graph(4);
    auto ps = simple_paths(g, 1, 3, 1);
    REQUIRE(ps.size() == 1);
    CHECK(ps[0] == SimplePath{1, 3});
}

TEST_CASE("paths_avoiding") {
    Graph c8 = cycle_graph(8);
    CHECK(paths_avoiding(c8, 0, 4, {2}).size() == 1);
    CHECK(paths_avoiding(c8, 0, 4, {}) == simple_paths(c8, 0, 4));

    Graph k23 = complete_bipartite(2, 3);
    CHECK(paths_avoiding(k23, 0, 1, {2}).size() == 2);

    CHECK_THROWS_AS(paths_avoiding(c8, 0, 4, {0}), GraphError);
}

TEST_CASE("monotone in max_len and free of repeats") {
    Graph g = gyro_bipyramid(3);
    std::vector<SimplePath> prev;
    for (int cap = 1; cap <= 7; ++cap) {
        auto cur = simple_paths(g, 0, 1, cap);
        std::set<SimplePath> cur_set(cur.begin(), cur.end());
        CHECK(cur_set.size() == cur.size());  // each path exactly once
        for (const auto& p : prev) CHECK(cur_set.count(p) == 1);
        for (const auto& p : cur) {
            std::set<Vertex> verts(p.begin(), p.end());
            CHECK(verts.size() == p.size());  // simple
            for (size_t i = 0; i + 1 < p.size(); ++i) CHECK(g.has_edge(p[i], p[i + 1]));
            CHECK(static_cast<int>(p.size()) - 1 <= cap);
            CHECK(p.front() < p.back());  // canonical direction
        }
        prev = cur;
    }
    CHECK(simple_paths(g, 0, 1, 7) == simple_paths(g, 0, 1));
}

TEST_CASE("deterministic lexicographic order") {
    Graph g = petersen_graph();
    auto ps = simple_paths(g, 0, 7);
    auto again = simple_paths(g, 0, 7);
    CHECK(ps == again);
    for (size_t i = 0; i + 1 < ps.size(); ++i) CHECK(ps[i] < ps[i + 1]);
}

TEST_CASE("nonadjacent endpoints imply nonempty interior") {
    Graph g = gyro_bipyramid(4);
    for (auto [a, b] : g.non_edges())
        for (const auto& p : simple_paths(g, a, b, 4))
            CHECK_FALSE(internal_vertices(p).empty());
}

TEST_CASE("argument validation") {
    Graph g = cycle_graph(5);
    CHECK_THROWS_AS(simple_paths(g, 0, 0), GraphError);
    CHECK_THROWS_AS(simple_paths(g, 0, 9), GraphError);
    CHECK_THROWS_AS(simple_paths(g, 0, 2, 0), GraphError);
}
