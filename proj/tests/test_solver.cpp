#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "obsat/encode.hpp"
#include "obsat/solver.hpp"

using namespace obsat;

namespace {

CnfInstance pigeonhole(int pigeons, int holes) {
    CnfInstance inst;
    auto var = [&](int i, int j) { return i * holes + j + 1; };
    for (int i = 0; i < pigeons; ++i) {
        Clause c;
        for (int j = 0; j < holes; ++j) c.push_back(var(i, j));
        inst.add_clause(std::move(c));
    }
    for (int j = 0; j < holes; ++j)
        for (int i = 0; i < pigeons; ++i)
            for (int k = i + 1; k < pigeons; ++k)
                inst.add_clause({-var(i, j), -var(k, j)});
    return inst;
}

}  // namespace

TEST_CASE("trivial instances") {
    CnfInstance sat;
    sat.add_clause({1, 2});
    sat.add_clause({-1, 2});
    auto r = solve(sat);
    CHECK(r.outcome == Outcome::Sat);
    REQUIRE(r.model);
    CHECK(r.model->lit_true(2));

    CnfInstance unsat;
    unsat.add_clause({1});
    unsat.add_clause({-1});
    CHECK(solve(unsat).outcome == Outcome::Unsat);

    CnfInstance empty_formula;
    empty_formula.num_vars = 3;
    CHECK(solve(empty_formula).outcome == Outcome::Sat);

    CnfInstance empty_clause;
    empty_clause.num_vars = 1;
    empty_clause.clauses.push_back({});
    CHECK(solve(empty_clause).outcome == Outcome::Unsat);
}

TEST_CASE("unit chains regardless of clause order") {
    // Units first: the long clause is simplified at construction.
    CnfInstance a;
    a.add_clause({1});
    a.add_clause({2});
    a.add_clause({-1, -2, 3});
    auto ra = solve(a);
    REQUIRE(ra.outcome == Outcome::Sat);
    CHECK(ra.model->lit_true(3));

    CnfInstance b;
    b.add_clause({-1, -2, 3});
    b.add_clause({1});
    b.add_clause({2});
    b.add_clause({-3});
    CHECK(solve(b).outcome == Outcome::Unsat);

    CnfInstance c;
    c.add_clause({1});
    c.add_clause({2});
    c.add_clause({-1, -2});
    CHECK(solve(c).outcome == Outcome::Unsat);
}

TEST_CASE("pigeonhole principle") {
    CHECK(solve(pigeonhole(4, 3)).outcome == Outcome::Unsat);
    CHECK(solve(pigeonhole(5, 4)).outcome == Outcome::Unsat);
    CHECK(solve(pigeonhole(4, 4)).outcome == Outcome::Sat);
}

TEST_CASE("budget exhaustion is indeterminate, never unsat") {
    SolverConfig cfg;
    cfg.conflict_budget = 1;
    auto r = solve(pigeonhole(7, 6), cfg);
    CHECK(r.outcome == Outcome::Indeterminate);
    CHECK_FALSE(r.model);

    SolverConfig tcfg;
    tcfg.time_budget_seconds = 0.0;
    CHECK(solve(pigeonhole(8, 7), tcfg).outcome == Outcome::Indeterminate);
}

TEST_CASE("differential against the exhaustive oracle") {
    std::mt19937_64 rng(424242);
    int sat_seen = 0, unsat_seen = 0;
    for (int trial = 0; trial < 1200; ++trial) {
        int nv = 4 + static_cast<int>(rng() % 9);  // 4..12 variables
        int nc = static_cast<int>(rng() % (4 * static_cast<unsigned>(nv))) + nv;
        CnfInstance inst;
        inst.num_vars = nv;
        for (int i = 0; i < nc; ++i) {
            Clause c;
            int len = 1 + static_cast<int>(rng() % 3);
            for (int j = 0; j < len; ++j) {
                int v = 1 + static_cast<int>(rng() % nv);
                c.push_back(rng() % 2 ? v : -v);
            }
            inst.add_clause(std::move(c));
        }
        SolverConfig cfg;
        cfg.seed = rng();
        cfg.random_branch_freq = (trial % 3 == 0) ? 0.05 : 0.0;
        auto fast = solve(inst, cfg);
        auto truth = brute_solve(inst);
        if (fast.outcome != truth.outcome) {
            CAPTURE(trial, write_dimacs(inst));
            REQUIRE(fast.outcome == truth.outcome);
        }
        (truth.outcome == Outcome::Sat ? sat_seen : unsat_seen)++;
    }
    // the generator must exercise both outcomes heavily
    CHECK(sat_seen > 150);
    CHECK(unsat_seen > 150);
}

TEST_CASE("deterministic for a fixed configuration") {
    auto inst = pigeonhole(5, 4);
    SolverConfig cfg;
    cfg.seed = 17;
    auto a = solve(inst, cfg);
    auto b = solve(inst, cfg);
    CHECK(a.outcome == b.outcome);
    CHECK(a.stats.conflicts == b.stats.conflicts);
    CHECK(a.stats.decisions == b.stats.decisions);
}

TEST_CASE("stats are populated") {
    auto r = solve(pigeonhole(5, 4));
    CHECK(r.stats.conflicts > 0);
    CHECK(r.stats.decisions > 0);
    CHECK(r.stats.propagations > 0);
    CHECK(r.stats.wall_seconds >= 0);
}

TEST_CASE("restart and deletion machinery under load") {
    // Large enough to trigger restarts; the model is still re-verified by solve().
    SolverConfig cfg;
    cfg.restart_base = 10;
    cfg.reduce_base = 50;
    auto enc = encode_outside(gyro_bipyramid(3));
    auto r = solve(enc.cnf, cfg);
    CHECK(r.outcome == Outcome::Sat);
    REQUIRE(r.model);
    CHECK(eval_model(enc.cnf, *r.model).satisfied);
}

TEST_CASE("brute_solve guard") {
    CnfInstance big;
    big.num_vars = 26;
    big.add_clause({26});
    CHECK_THROWS_AS(brute_solve(big), CnfError);
}
