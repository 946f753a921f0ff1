#pragma once

// CNF data model, DIMACS serialization, and model evaluation.

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace obsat {

using Lit = int;  // signed DIMACS literal, never 0
using Clause = std::vector<Lit>;

class CnfError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct CnfInstance {
    int num_vars = 0;
    std::vector<Clause> clauses;
    std::vector<std::string> comments;  // without the leading "c "

    // Drops duplicate literals; returns false (clause not added) for
    // tautologies. Clause order is generation order.
    bool add_clause(Clause c) {
        std::sort(c.begin(), c.end(), [](Lit a, Lit b) {
            return std::abs(a) != std::abs(b) ? std::abs(a) < std::abs(b) : a < b;
        });
        c.erase(std::unique(c.begin(), c.end()), c.end());
        for (size_t i = 0; i + 1 < c.size(); ++i)
            if (c[i] == -c[i + 1]) return false;
        for (Lit l : c) {
            if (l == 0) throw CnfError("zero literal in clause");
            num_vars = std::max(num_vars, std::abs(l));
        }
        clauses.push_back(std::move(c));
        return true;
    }

    bool operator==(const CnfInstance& o) const {
        return num_vars == o.num_vars && clauses == o.clauses;
    }
};

// Total truth assignment over variables 1..num_vars; index 0 unused.
struct Model {
    std::vector<bool> value;  // size num_vars + 1

    bool lit_true(Lit l) const {
        size_t v = static_cast<size_t>(std::abs(l));
        return l > 0 ? value[v] : !value[v];
    }
};

struct EvalResult {
    bool satisfied;
    std::optional<size_t> first_violated;  // clause index in instance order
};

inline EvalResult eval_model(const CnfInstance& inst, const Model& m) {
    if (static_cast<int>(m.value.size()) < inst.num_vars + 1)
        throw CnfError("partial model: expected " + std::to_string(inst.num_vars) +
                       " variables, got " + std::to_string(m.value.size() ? m.value.size() - 1 : 0));
    for (size_t i = 0; i < inst.clauses.size(); ++i) {
        bool sat = false;
        for (Lit l : inst.clauses[i])
            if (m.lit_true(l)) {
                sat = true;
                break;
            }
        if (!sat) return {false, i};
    }
    return {true, std::nullopt};
}

inline std::string write_dimacs(const CnfInstance& inst) {
    std::ostringstream out;
    for (const auto& c : inst.comments) out << "c " << c << "\n";
    out << "p cnf " << inst.num_vars << " " << inst.clauses.size() << "\n";
    for (const auto& cl : inst.clauses) {
        for (Lit l : cl) out << l << " ";
        out << "0\n";
    }
    return out.str();
}

inline CnfInstance parse_dimacs(const std::string& text) {
    CnfInstance inst;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    long declared_vars = -1, declared_clauses = -1;
    Clause current;
    bool terminated = true;

    auto fail = [&](const std::string& msg) {
        throw CnfError("DIMACS line " + std::to_string(line_no) + ": " + msg);
    };

    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        if (line[0] == 'c') {
            inst.comments.push_back(line.size() > 2 ? line.substr(2) : "");
            continue;
        }
        if (line[0] == 'p') {
            std::istringstream hs(line);
            std::string p, cnf;
            if (!(hs >> p >> cnf >> declared_vars >> declared_clauses) || cnf != "cnf")
                fail("malformed problem line '" + line + "'");
            if (declared_vars < 0 || declared_clauses < 0) fail("negative counts in problem line");
            continue;
        }
        if (declared_vars < 0) fail("clause before problem line");
        std::istringstream ls(line);
        long lit;
        while (ls >> lit) {
            if (lit == 0) {
                if (current.empty()) fail("empty clause");
                inst.clauses.push_back(current);
                current.clear();
                terminated = true;
            } else {
                if (std::labs(lit) > declared_vars)
                    fail("literal " + std::to_string(lit) + " out of range (header declares " +
                         std::to_string(declared_vars) + " variables)");
                current.push_back(static_cast<Lit>(lit));
                terminated = false;
            }
        }
        std::string trailing;
        if (ls.clear(), ls >> trailing) fail("unexpected token '" + trailing + "'");
    }
    if (!terminated) throw CnfError("DIMACS: last clause missing 0 terminator");
    if (declared_vars < 0) throw CnfError("DIMACS: missing problem line");
    if (static_cast<long>(inst.clauses.size()) != declared_clauses)
        throw CnfError("DIMACS: header declares " + std::to_string(declared_clauses) +
                       " clauses, file has " + std::to_string(inst.clauses.size()));
    inst.num_vars = static_cast<int>(declared_vars);
    return inst;
}

// Model input: DIMACS "v" lines or one signed literal per line; 0 terminates.
inline Model parse_model(const std::string& text, int num_vars) {
    Model m;
    m.value.assign(static_cast<size_t>(num_vars) + 1, false);
    std::vector<bool> seen(static_cast<size_t>(num_vars) + 1, false);
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        if (tok == "v" || tok == "s" || tok == "SATISFIABLE") continue;
        long lit;
        try {
            lit = std::stol(tok);
        } catch (const std::exception&) {
            continue;  // ignore solver chatter
        }
        if (lit == 0) continue;
        if (std::labs(lit) > num_vars)
            throw CnfError("model literal " + std::to_string(lit) + " out of range");
        m.value[static_cast<size_t>(std::labs(lit))] = lit > 0;
        seen[static_cast<size_t>(std::labs(lit))] = true;
    }
    for (int v = 1; v <= num_vars; ++v)
        if (!seen[static_cast<size_t>(v)])
            throw CnfError("model leaves variable " + std::to_string(v) + " unassigned");
    return m;
}

}  // namespace obsat
