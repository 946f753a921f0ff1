#pragma once

// Embedded CDCL solver: two-watched-literal propagation, first-UIP conflict
// analysis with clause minimization, activity-based branching with phase
// saving, Luby restarts, and activity-based learnt-clause deletion.
// Budget exhaustion is a distinct INDETERMINATE outcome, never UNSAT.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "obsat/cnf.hpp"

namespace obsat {

enum class Outcome { Sat, Unsat, Indeterminate };

struct SolverConfig {
    std::optional<uint64_t> conflict_budget;
    std::optional<double> time_budget_seconds;
    uint64_t seed = 0;              // drives occasional random branching
    double random_branch_freq = 0;  // probability of a random decision variable
    double var_decay = 0.95;
    double clause_decay = 0.999;
    int restart_base = 100;         // conflicts, scaled by the Luby sequence
    int reduce_base = 4000;         // learnt clauses before first deletion pass
};

struct SolverStats {
    uint64_t decisions = 0;
    uint64_t propagations = 0;
    uint64_t conflicts = 0;
    uint64_t restarts = 0;
    double wall_seconds = 0;
};

struct SolverResult {
    Outcome outcome = Outcome::Indeterminate;
    std::optional<Model> model;  // present iff SAT
    SolverStats stats;
};

class CdclSolver {
public:
    explicit CdclSolver(const CnfInstance& inst, SolverConfig config = {})
        : cfg_(config), num_vars_(inst.num_vars) {
        rng_state_ = cfg_.seed * 6364136223846793005ull + 1442695040888963407ull;
        activity_.assign(num_vars_, 0.0);
        assign_.assign(num_vars_, kUndef);
        phase_.assign(num_vars_, false);
        level_.assign(num_vars_, 0);
        reason_.assign(num_vars_, kNoReason);
        seen_.assign(num_vars_, 0);
        watches_.assign(2 * static_cast<size_t>(num_vars_), {});
        heap_pos_.assign(num_vars_, -1);
        for (int v = 0; v < num_vars_; ++v) heap_insert(v);

        // Preprocessing: duplicate-clause removal (add_clause already strips
        // in-clause duplicates and tautologies at construction time).
        std::set<Clause> seen_clauses;
        for (const auto& c : inst.clauses) {
            Clause sorted = c;
            std::sort(sorted.begin(), sorted.end());
            if (!seen_clauses.insert(sorted).second) continue;
            if (!add_clause(c)) {
                contradiction_ = true;
                return;
            }
        }
    }

    SolverResult solve() {
        auto start = std::chrono::steady_clock::now();
        SolverResult res;
        res.outcome = run();
        res.stats = stats_;
        res.stats.wall_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (res.outcome == Outcome::Sat) {
            Model m;
            m.value.assign(static_cast<size_t>(num_vars_) + 1, false);
            for (int v = 0; v < num_vars_; ++v) m.value[static_cast<size_t>(v) + 1] = assign_[v] == kTrue;
            res.model = std::move(m);
        }
        return res;
    }

private:
    static constexpr int8_t kUndef = -1, kFalse = 0, kTrue = 1;
    static constexpr int kNoReason = -1, kDecision = -2;

    struct InternalClause {
        std::vector<int> lits;  // internal lit encoding: 2*var + (neg ? 1 : 0)
        bool learnt = false;
        double activity = 0;
    };

    struct Watcher {
        int clause;
        int blocker;
    };

    SolverConfig cfg_;
    int num_vars_;
    bool contradiction_ = false;

    std::vector<InternalClause> clauses_;
    std::vector<std::vector<Watcher>> watches_;  // indexed by internal literal
    std::vector<int8_t> assign_;                 // per var
    std::vector<bool> phase_;
    std::vector<int> level_;
    std::vector<int> reason_;  // clause index, kDecision, or kNoReason
    std::vector<int> trail_;
    std::vector<int> trail_lim_;
    size_t qhead_ = 0;

    std::vector<double> activity_;
    double var_inc_ = 1.0;
    double clause_inc_ = 1.0;
    std::vector<int> heap_;  // max-heap on activity
    std::vector<int> heap_pos_;
    std::vector<int8_t> seen_;

    SolverStats stats_;
    uint64_t rng_state_;
    size_t num_learnt_ = 0;

    static int to_internal(Lit l) { return 2 * (std::abs(l) - 1) + (l < 0 ? 1 : 0); }
    static int var_of(int lit) { return lit >> 1; }
    static int neg(int lit) { return lit ^ 1; }

    int8_t value(int lit) const {
        int8_t a = assign_[var_of(lit)];
        if (a == kUndef) return kUndef;
        return static_cast<int8_t>(a ^ (lit & 1));
    }

    int decision_level() const { return static_cast<int>(trail_lim_.size()); }

    uint64_t next_rand() {
        rng_state_ ^= rng_state_ << 13;
        rng_state_ ^= rng_state_ >> 7;
        rng_state_ ^= rng_state_ << 17;
        return rng_state_;
    }

    // -- activity heap --------------------------------------------------

    bool heap_less(int a, int b) const { return activity_[a] < activity_[b]; }

    void heap_sift_up(size_t i) {
        int v = heap_[i];
        while (i > 0) {
            size_t p = (i - 1) / 2;
            if (!heap_less(heap_[p], v)) break;
            heap_[i] = heap_[p];
            heap_pos_[heap_[i]] = static_cast<int>(i);
            i = p;
        }
        heap_[i] = v;
        heap_pos_[v] = static_cast<int>(i);
    }

    void heap_sift_down(size_t i) {
        int v = heap_[i];
        size_t n = heap_.size();
        while (2 * i + 1 < n) {
            size_t c = 2 * i + 1;
            if (c + 1 < n && heap_less(heap_[c], heap_[c + 1])) ++c;
            if (!heap_less(v, heap_[c])) break;
            heap_[i] = heap_[c];
            heap_pos_[heap_[i]] = static_cast<int>(i);
            i = c;
        }
        heap_[i] = v;
        heap_pos_[v] = static_cast<int>(i);
    }

    void heap_insert(int v) {
        if (heap_pos_[v] >= 0) return;
        heap_.push_back(v);
        heap_pos_[v] = static_cast<int>(heap_.size()) - 1;
        heap_sift_up(heap_.size() - 1);
    }

    int heap_pop() {
        int v = heap_[0];
        heap_pos_[v] = -1;
        heap_[0] = heap_.back();
        heap_.pop_back();
        if (!heap_.empty()) {
            heap_pos_[heap_[0]] = 0;
            heap_sift_down(0);
        }
        return v;
    }

    void bump_var(int v) {
        activity_[v] += var_inc_;
        if (activity_[v] > 1e100) {
            for (int u = 0; u < num_vars_; ++u) activity_[u] *= 1e-100;
            var_inc_ *= 1e-100;
        }
        if (heap_pos_[v] >= 0) heap_sift_up(static_cast<size_t>(heap_pos_[v]));
    }

    void bump_clause(InternalClause& c) {
        c.activity += clause_inc_;
        if (c.activity > 1e20) {
            for (auto& cl : clauses_)
                if (cl.learnt) cl.activity *= 1e-20;
            clause_inc_ *= 1e-20;
        }
    }

    // -- clause management ----------------------------------------------

    void enqueue(int lit, int reason) {
        int v = var_of(lit);
        assign_[v] = static_cast<int8_t>((lit & 1) ^ 1);
        level_[v] = decision_level();
        reason_[v] = reason;
        trail_.push_back(lit);
    }

    void watch_clause(int ci) {
        const auto& lits = clauses_[ci].lits;
        watches_[static_cast<size_t>(neg(lits[0]))].push_back({ci, lits[1]});
        watches_[static_cast<size_t>(neg(lits[1]))].push_back({ci, lits[0]});
    }

    // Returns false on an immediate top-level contradiction. Runs at level 0
    // only, so literals already assigned are permanently true or false:
    // satisfied clauses are dropped and false literals removed.
    bool add_clause(const Clause& external) {
        std::vector<int> lits;
        for (Lit l : external) {
            int il = to_internal(l);
            if (value(il) == kTrue) return true;
            if (value(il) == kFalse) continue;
            lits.push_back(il);
        }
        if (lits.empty()) return false;
        if (lits.size() == 1) {
            if (value(lits[0]) == kFalse) return false;
            if (value(lits[0]) == kUndef) {
                enqueue(lits[0], kNoReason);
                return propagate() == -1;
            }
            return true;
        }
        clauses_.push_back({std::move(lits), false, 0});
        watch_clause(static_cast<int>(clauses_.size()) - 1);
        return true;
    }

    // Two-watched-literal propagation; returns conflicting clause or -1.
    int propagate() {
        while (qhead_ < trail_.size()) {
            int lit = trail_[qhead_++];
            ++stats_.propagations;
            auto& ws = watches_[static_cast<size_t>(lit)];
            size_t keep = 0;
            for (size_t i = 0; i < ws.size(); ++i) {
                Watcher w = ws[i];
                if (value(w.blocker) == kTrue) {
                    ws[keep++] = w;
                    continue;
                }
                auto& c = clauses_[w.clause];
                int false_lit = neg(lit);
                if (c.lits[0] == false_lit) std::swap(c.lits[0], c.lits[1]);
                if (value(c.lits[0]) == kTrue) {
                    ws[keep++] = {w.clause, c.lits[0]};
                    continue;
                }
                bool moved = false;
                for (size_t k = 2; k < c.lits.size(); ++k) {
                    if (value(c.lits[k]) != kFalse) {
                        std::swap(c.lits[1], c.lits[k]);
                        watches_[static_cast<size_t>(neg(c.lits[1]))].push_back(
                            {w.clause, c.lits[0]});
                        moved = true;
                        break;
                    }
                }
                if (moved) continue;
                // Unit or conflicting.
                ws[keep++] = {w.clause, c.lits[0]};
                if (value(c.lits[0]) == kFalse) {
                    for (size_t j = i + 1; j < ws.size(); ++j) ws[keep++] = ws[j];
                    ws.resize(keep);
                    return w.clause;
                }
                enqueue(c.lits[0], w.clause);
            }
            ws.resize(keep);
        }
        return -1;
    }

    void cancel_until(int lvl) {
        if (decision_level() <= lvl) return;
        for (size_t i = trail_.size(); i > static_cast<size_t>(trail_lim_[lvl]);) {
            --i;
            int v = var_of(trail_[i]);
            phase_[v] = assign_[v] == kTrue;
            assign_[v] = kUndef;
            reason_[v] = kNoReason;
            heap_insert(v);
        }
        trail_.resize(static_cast<size_t>(trail_lim_[lvl]));
        trail_lim_.resize(static_cast<size_t>(lvl));
        qhead_ = trail_.size();
    }

    // First-UIP learning; fills learnt (learnt[0] is the asserting literal)
    // and returns the backtrack level.
    int analyze(int conflict, std::vector<int>& learnt) {
        learnt.clear();
        learnt.push_back(-1);  // slot for the asserting literal
        int counter = 0;
        int lit = -1;
        size_t idx = trail_.size();
        int ci = conflict;

        do {
            auto& c = clauses_[ci];
            if (c.learnt) bump_clause(c);
            for (int q : c.lits) {
                if (lit != -1 && q == lit) continue;
                int v = var_of(q);
                if (seen_[v] || level_[v] == 0) continue;
                seen_[v] = 1;
                bump_var(v);
                if (level_[v] == decision_level())
                    ++counter;
                else
                    learnt.push_back(q);
            }
            while (!seen_[var_of(trail_[idx - 1])]) --idx;
            --idx;
            lit = trail_[idx];
            seen_[var_of(lit)] = 0;
            ci = reason_[var_of(lit)];
            --counter;
        } while (counter > 0);
        learnt[0] = neg(lit);

        // Minimize: drop literals whose reason clauses are fully subsumed by
        // the remaining learnt set.
        std::vector<int> to_clear;
        for (size_t i = 1; i < learnt.size(); ++i) to_clear.push_back(var_of(learnt[i]));
        size_t keep = 1;
        for (size_t i = 1; i < learnt.size(); ++i) {
            int v = var_of(learnt[i]);
            int r = reason_[v];
            bool redundant = r >= 0;
            if (redundant) {
                for (int q : clauses_[r].lits) {
                    int u = var_of(q);
                    if (u == v || level_[u] == 0 || seen_[u]) continue;
                    redundant = false;
                    break;
                }
            }
            if (!redundant) learnt[keep++] = learnt[i];
        }
        learnt.resize(keep);

        int bt = 0;
        if (learnt.size() > 1) {
            size_t max_i = 1;
            for (size_t i = 2; i < learnt.size(); ++i)
                if (level_[var_of(learnt[i])] > level_[var_of(learnt[max_i])]) max_i = i;
            std::swap(learnt[1], learnt[max_i]);
            bt = level_[var_of(learnt[1])];
        }
        for (int v : to_clear) seen_[v] = 0;
        seen_[var_of(learnt[0])] = 0;
        return bt;
    }

    void reduce_db() {
        std::vector<int> learnt_idx;
        for (size_t i = 0; i < clauses_.size(); ++i)
            if (clauses_[i].learnt && clauses_[i].lits.size() > 2) learnt_idx.push_back(static_cast<int>(i));
        std::sort(learnt_idx.begin(), learnt_idx.end(), [&](int a, int b) {
            return clauses_[a].activity < clauses_[b].activity;
        });
        std::vector<bool> drop(clauses_.size(), false);
        for (size_t i = 0; i < learnt_idx.size() / 2; ++i) {
            int ci = learnt_idx[i];
            bool locked = false;
            for (int q : clauses_[ci].lits)
                if (value(q) == kTrue && reason_[var_of(q)] == ci) {
                    locked = true;
                    break;
                }
            if (!locked) drop[static_cast<size_t>(ci)] = true;
        }
        // Compact the clause database and rebuild watches and reasons.
        std::vector<int> remap(clauses_.size(), -1);
        std::vector<InternalClause> kept;
        for (size_t i = 0; i < clauses_.size(); ++i) {
            if (drop[i]) continue;
            remap[i] = static_cast<int>(kept.size());
            kept.push_back(std::move(clauses_[i]));
        }
        clauses_ = std::move(kept);
        num_learnt_ = 0;
        for (const auto& c : clauses_)
            if (c.learnt) ++num_learnt_;
        for (auto& r : reason_)
            if (r >= 0) r = remap[static_cast<size_t>(r)];
        for (auto& ws : watches_) ws.clear();
        for (size_t i = 0; i < clauses_.size(); ++i) watch_clause(static_cast<int>(i));
    }

    static uint64_t luby(uint64_t i) {
        // Knuth's formulation of the Luby sequence.
        uint64_t size = 1, seq = 0;
        while (size < i + 1) {
            ++seq;
            size = 2 * size + 1;
        }
        while (size - 1 != i) {
            size = (size - 1) / 2;
            --seq;
            i = i % size;
        }
        return 1ull << seq;
    }

    int pick_branch_var() {
        if (cfg_.random_branch_freq > 0 &&
            (next_rand() % 1000000) < cfg_.random_branch_freq * 1000000) {
            int v = static_cast<int>(next_rand() % static_cast<uint64_t>(num_vars_));
            if (assign_[v] == kUndef) return v;
        }
        while (!heap_.empty()) {
            int v = heap_pop();
            if (assign_[v] == kUndef) return v;
        }
        return -1;
    }

    Outcome run() {
        if (contradiction_) return Outcome::Unsat;
        if (propagate() != -1) return Outcome::Unsat;

        auto start = std::chrono::steady_clock::now();
        auto out_of_budget = [&]() {
            if (cfg_.conflict_budget && stats_.conflicts >= *cfg_.conflict_budget) return true;
            if (cfg_.time_budget_seconds && (stats_.conflicts & 255) == 0) {
                double el = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                                .count();
                if (el >= *cfg_.time_budget_seconds) return true;
            }
            return false;
        };

        uint64_t restart_count = 0;
        uint64_t conflicts_until_restart =
            luby(restart_count) * static_cast<uint64_t>(cfg_.restart_base);
        uint64_t conflicts_this_restart = 0;
        size_t reduce_limit = static_cast<size_t>(cfg_.reduce_base);
        std::vector<int> learnt;

        for (;;) {
            int conflict = propagate();
            if (conflict != -1) {
                ++stats_.conflicts;
                ++conflicts_this_restart;
                if (decision_level() == 0) return Outcome::Unsat;
                int bt = analyze(conflict, learnt);
                cancel_until(bt);
                if (learnt.size() == 1) {
                    enqueue(learnt[0], kNoReason);
                } else {
                    clauses_.push_back({learnt, true, 0});
                    int ci = static_cast<int>(clauses_.size()) - 1;
                    bump_clause(clauses_[ci]);
                    ++num_learnt_;
                    watch_clause(ci);
                    enqueue(learnt[0], ci);
                }
                var_inc_ /= cfg_.var_decay;
                clause_inc_ /= cfg_.clause_decay;
                if (out_of_budget()) return Outcome::Indeterminate;
            } else {
                if (conflicts_this_restart >= conflicts_until_restart) {
                    ++stats_.restarts;
                    ++restart_count;
                    conflicts_until_restart =
                        luby(restart_count) * static_cast<uint64_t>(cfg_.restart_base);
                    conflicts_this_restart = 0;
                    cancel_until(0);
                    continue;
                }
                if (num_learnt_ >= reduce_limit) {
                    reduce_db();
                    reduce_limit += reduce_limit / 2;
                }
                int v = pick_branch_var();
                if (v == -1) return Outcome::Sat;
                ++stats_.decisions;
                trail_lim_.push_back(static_cast<int>(trail_.size()));
                enqueue(2 * v + (phase_[v] ? 0 : 1), kDecision);
            }
        }
    }
};

// Solves and re-verifies any SAT model against the instance before returning.
inline SolverResult solve(const CnfInstance& inst, const SolverConfig& config = {}) {
    CdclSolver solver(inst, config);
    SolverResult res = solver.solve();
    if (res.outcome == Outcome::Sat) {
        if (!res.model || !eval_model(inst, *res.model).satisfied)
            throw CnfError("internal error: solver returned a non-model");
    }
    return res;
}

// Exhaustive oracle: backtracking over variables in index order, no learning.
// Ground truth for differential testing; guarded to small variable counts.
inline SolverResult brute_solve(const CnfInstance& inst) {
    if (inst.num_vars > 25) throw CnfError("brute_solve limited to 25 variables");
    SolverResult res;
    Model m;
    m.value.assign(static_cast<size_t>(inst.num_vars) + 1, false);
    std::vector<int8_t> assigned(static_cast<size_t>(inst.num_vars) + 1, 0);

    auto some_clause_dead = [&]() {
        for (const auto& cl : inst.clauses) {
            bool alive = false;
            for (Lit l : cl) {
                size_t v = static_cast<size_t>(std::abs(l));
                if (!assigned[v] || m.lit_true(l)) {
                    alive = true;
                    break;
                }
            }
            if (!alive) return true;
        }
        return false;
    };

    auto rec = [&](auto&& self, int v) -> bool {
        if (some_clause_dead()) return false;
        if (v > inst.num_vars) return true;
        assigned[static_cast<size_t>(v)] = 1;
        for (bool val : {false, true}) {
            m.value[static_cast<size_t>(v)] = val;
            if (self(self, v + 1)) return true;
        }
        assigned[static_cast<size_t>(v)] = 0;
        return false;
    };

    if (rec(rec, 1)) {
        res.outcome = Outcome::Sat;
        res.model = m;
    } else {
        res.outcome = Outcome::Unsat;
    }
    return res;
}

}  // namespace obsat
