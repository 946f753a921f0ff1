#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "obsat/cnf.hpp"

using namespace obsat;

TEST_CASE("add_clause normalization") {
    CnfInstance inst;
    CHECK(inst.add_clause({3, -1, 3, 2}));
    CHECK(inst.clauses.back() == Clause{-1, 2, 3});
    CHECK(inst.num_vars == 3);

    CHECK_FALSE(inst.add_clause({1, -2, -1}));  // tautology dropped
    CHECK(inst.clauses.size() == 1);

    CHECK(inst.add_clause({-5}));
    CHECK(inst.num_vars == 5);

    CHECK_THROWS_AS(inst.add_clause({1, 0}), CnfError);
}

TEST_CASE("eval_model") {
    CnfInstance inst;
    inst.add_clause({1, 2});
    inst.add_clause({-1, 3});
    inst.add_clause({-2, -3});

    Model m;
    m.value = {false, true, false, true};  // x1=T x2=F x3=T
    auto r = eval_model(inst, m);
    CHECK(r.satisfied);
    CHECK_FALSE(r.first_violated);

    m.value = {false, true, true, true};  // violates clause 2
    r = eval_model(inst, m);
    CHECK_FALSE(r.satisfied);
    CHECK(r.first_violated == size_t{2});

    Model partial;
    partial.value = {false, true};
    CHECK_THROWS_AS(eval_model(inst, partial), CnfError);
}

TEST_CASE("DIMACS round trip") {
    CnfInstance inst;
    inst.comments = {"generated for round-trip", ""};
    inst.add_clause({1, -3});
    inst.add_clause({2});
    inst.add_clause({-1, -2, 4});

    std::string text = write_dimacs(inst);
    CHECK(text.find("p cnf 4 3\n") != std::string::npos);
    CHECK(text.rfind("c generated", 0) == 0);

    CnfInstance back = parse_dimacs(text);
    CHECK(back == inst);
    CHECK(back.comments == inst.comments);

    // serialization is a function of the instance: byte-identical on repeat
    CHECK(write_dimacs(back) == text);
}

TEST_CASE("DIMACS round trip, randomized") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        CnfInstance inst;
        int nv = 1 + static_cast<int>(rng() % 12);
        int nc = 1 + static_cast<int>(rng() % 30);
        for (int i = 0; i < nc; ++i) {
            Clause c;
            int len = 1 + static_cast<int>(rng() % 5);
            for (int j = 0; j < len; ++j) {
                int v = 1 + static_cast<int>(rng() % nv);
                c.push_back(rng() % 2 ? v : -v);
            }
            inst.add_clause(std::move(c));
        }
        if (inst.clauses.empty()) continue;
        inst.num_vars = nv;
        CHECK(parse_dimacs(write_dimacs(inst)) == inst);
    }
}

TEST_CASE("DIMACS parser diagnostics") {
    CHECK_THROWS_WITH(parse_dimacs("p cnf 2 1\n1 3 0\n"),
                      Catch::Matchers::ContainsSubstring("out of range"));
    CHECK_THROWS_WITH(parse_dimacs("p cnf 2 2\n1 2 0\n"),
                      Catch::Matchers::ContainsSubstring("declares 2 clauses"));
    CHECK_THROWS_WITH(parse_dimacs("p cnf 2 1\n1 2\n"),
                      Catch::Matchers::ContainsSubstring("missing 0 terminator"));
    CHECK_THROWS_WITH(parse_dimacs("1 2 0\n"),
                      Catch::Matchers::ContainsSubstring("before problem line"));
    CHECK_THROWS_WITH(parse_dimacs("c only comments\n"),
                      Catch::Matchers::ContainsSubstring("missing problem line"));
    CHECK_THROWS_WITH(parse_dimacs("p cnf 2 1\n0\n"), Catch::Matchers::ContainsSubstring("empty"));
    CHECK_THROWS_WITH(parse_dimacs("p dnf 2 1\n1 0\n"),
                      Catch::Matchers::ContainsSubstring("problem line"));

    // clauses split across lines are fine
    CnfInstance split = parse_dimacs("p cnf 3 2\n1 2\n3 0 -1\n-2 0\n");
    REQUIRE(split.clauses.size() == 2);
    CHECK(split.clauses[0] == Clause{1, 2, 3});
}

TEST_CASE("parse_model") {
    Model m = parse_model("s SATISFIABLE\nv 1 -2 3\nv -4 0\n", 4);
    CHECK(m.lit_true(1));
    CHECK(m.lit_true(-2));
    CHECK(m.lit_true(3));
    CHECK(m.lit_true(-4));

    CHECK_THROWS_WITH(parse_model("v 1 -2 0\n", 3),
                      Catch::Matchers::ContainsSubstring("unassigned"));
    CHECK_THROWS_AS(parse_model("v 1 9 0\n", 3), CnfError);
}
