#pragma once

// Chirotope extraction from exact coordinates and axiom checking of
// orientation assignments.

#include <map>
#include <string>
#include <vector>

#include "obsat/geometry.hpp"
#include "obsat/triples.hpp"

namespace obsat {

// Total orientation assignment over all sorted triples of 0..n-1.
struct Chirotope {
    int n = 0;
    std::map<TripleKey, bool> clockwise;  // keyed by sorted triple

    // Orientation of an arbitrary ordered triple, via permutation parity.
    bool is_clockwise(int a, int b, int c) const {
        TripleRef r = triple_ref(a, b, c);
        auto it = clockwise.find(r.key);
        if (it == clockwise.end())
            throw GeometryError("chirotope has no entry for triple {" + std::to_string(r.key[0]) +
                                "," + std::to_string(r.key[1]) + "," + std::to_string(r.key[2]) + "}");
        return r.positive ? it->second : !it->second;
    }

    bool eval(const TripleRef& r) const {
        auto it = clockwise.find(r.key);
        if (it == clockwise.end()) throw GeometryError("partial assignment rejected");
        return r.positive ? it->second : !it->second;
    }
};

// Requires general position; names the offending triple otherwise.
inline Chirotope derive_chirotope(const std::vector<ExactPoint>& points) {
    Chirotope chi;
    chi.n = static_cast<int>(points.size());
    for (int a = 0; a < chi.n; ++a)
        for (int b = a + 1; b < chi.n; ++b)
            for (int c = b + 1; c < chi.n; ++c) {
                Orientation o = orient(points[a], points[b], points[c]);
                if (o == Orientation::COLLINEAR)
                    throw GeometryError("collinear triple {" + std::to_string(a) + "," +
                                        std::to_string(b) + "," + std::to_string(c) + "}");
                chi.clockwise[{a, b, c}] = (o == Orientation::CW);
            }
    return chi;
}

// Checks every canonical instantiation of the orientation axioms against a
// total assignment; returns the violated clauses.
inline std::vector<TripleClause> check_axioms(const Chirotope& chi, int n) {
    std::vector<TripleClause> violated;
    auto scan = [&](const std::vector<TripleClause>& clauses) {
        for (const auto& cl : clauses) {
            bool sat = false;
            for (const auto& lit : cl)
                if (chi.eval(lit)) {
                    sat = true;
                    break;
                }
            if (!sat) violated.push_back(cl);
        }
    };
    scan(four_point_clauses(n));
    scan(five_point_clauses(n));
    return violated;
}

}  // namespace obsat
