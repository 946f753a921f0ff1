#pragma once

// SAT instance construction: the outside-obstacle instance (orientation
// axioms + one special-half-plane variable per non-edge) and the
// single-obstacle instance (axioms + key-path machinery per ordered pair of
// disjoint non-edges).

#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "obsat/cnf.hpp"
#include "obsat/graph.hpp"
#include "obsat/paths.hpp"
#include "obsat/triples.hpp"

namespace obsat {

inline constexpr const char* kEncoderVersion = "1";

enum class EncodeMode { Outside, Single };

inline const char* mode_name(EncodeMode m) {
    return m == EncodeMode::Outside ? "outside" : "single";
}

struct EncodeOptions {
    std::optional<int> max_path_len;  // cap on path length in edges; absent = all
    // Experimental: also emit key-path clauses for non-edge pairs sharing a
    // vertex, with the degenerate endpoint literals dropped. Off by default;
    // the base encoding skips such pairs entirely.
    bool include_shared_vertex_pairs = false;
};

// Dense variable ids: all triple variables first (lexicographic by sorted
// triple), then side variables, then key-path variables in generation order.
struct VariableTable {
    int n = 0;
    std::map<TripleKey, int> triple_vars;
    std::map<VertexPair, int> outside_side_vars;                    // s_{ab}
    std::map<std::pair<VertexPair, VertexPair>, int> pair_side_vars;  // s_{ab,cd}
    std::map<std::pair<SimplePath, VertexPair>, int> keypath_vars;    // k_{P(cd)}
    int next_id = 1;

    static VariableTable for_triples(int n) {
        VariableTable vt;
        vt.n = n;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                for (int c = b + 1; c < n; ++c) vt.triple_vars[{a, b, c}] = vt.next_id++;
        return vt;
    }

    Lit literal(const TripleRef& r) const {
        int id = triple_vars.at(r.key);
        return r.positive ? id : -id;
    }
};

// Signed literal of the canonical triple variable under permutation parity.
inline Lit triple_literal(const VariableTable& vt, int a, int b, int c) {
    return vt.literal(triple_ref(a, b, c));
}

// Per-category clause counts, reported by the CLI summary.
struct EncodeSummary {
    size_t four_point = 0;
    size_t five_point = 0;
    size_t path = 0;          // outside mode: clauses (special side vs internal vertices)
    size_t keypath_def = 0;   // single mode: key-path definition clauses
    size_t keypath_side = 0;  // single mode: key-path/special-side constraint clauses
    size_t triple_vars = 0;
    size_t side_vars = 0;
    size_t keypath_vars = 0;

    size_t total_clauses() const {
        return four_point + five_point + path + keypath_def + keypath_side;
    }
};

struct EncodedInstance {
    CnfInstance cnf;
    VariableTable vars;
    EncodeSummary summary;
};

namespace detail {

inline uint64_t fnv1a(const std::string& s) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline void add_axiom_clauses(EncodedInstance& enc) {
    for (const auto& cl : four_point_clauses(enc.vars.n)) {
        Clause c;
        for (const auto& lit : cl) c.push_back(enc.vars.literal(lit));
        enc.cnf.add_clause(std::move(c));
        ++enc.summary.four_point;
    }
    for (const auto& cl : five_point_clauses(enc.vars.n)) {
        Clause c;
        for (const auto& lit : cl) c.push_back(enc.vars.literal(lit));
        enc.cnf.add_clause(std::move(c));
        ++enc.summary.five_point;
    }
}

inline void add_metadata(EncodedInstance& enc, const Graph& g, EncodeMode mode,
                         const EncodeOptions& opt) {
    auto& com = enc.cnf.comments;
    std::ostringstream meta;
    meta << "mode=" << mode_name(mode) << " n=" << g.num_vertices()
         << " edges=" << g.num_edges() << " graph_hash=" << std::hex
         << fnv1a(serialize_graph(g)) << std::dec << " max_path_len="
         << (opt.max_path_len ? std::to_string(*opt.max_path_len) : "none")
         << " encoder_version=" << kEncoderVersion;
    com.push_back(meta.str());
    for (const auto& [key, id] : enc.vars.triple_vars)
        com.push_back("var " + std::to_string(id) + " = x{" + std::to_string(key[0]) + "," +
                      std::to_string(key[1]) + "," + std::to_string(key[2]) + "}");
    for (const auto& [key, id] : enc.vars.outside_side_vars)
        com.push_back("var " + std::to_string(id) + " = s{" + std::to_string(key.first) + "," +
                      std::to_string(key.second) + "}");
    for (const auto& [key, id] : enc.vars.pair_side_vars)
        com.push_back("var " + std::to_string(id) + " = s{" + std::to_string(key.first.first) +
                      "," + std::to_string(key.first.second) + ";" +
                      std::to_string(key.second.first) + "," +
                      std::to_string(key.second.second) + "}");
    // Key-path variables are named by path; these lines can be numerous and
    // are emitted only for small tables.
    if (enc.vars.keypath_vars.size() <= 5000) {
        for (const auto& [key, id] : enc.vars.keypath_vars) {
            std::string pv;
            for (Vertex v : key.first) pv += (pv.empty() ? "" : "-") + std::to_string(v);
            com.push_back("var " + std::to_string(id) + " = k{" + pv + ";" +
                          std::to_string(key.second.first) + "," +
                          std::to_string(key.second.second) + "}");
        }
    }
}

}  // namespace detail

// Necessary-condition instance for an obstacle representation with no
// interior obstacle: unsatisfiability proves the graph needs an interior
// obstacle. s_{ab} true means the special half-plane of non-edge ab is the
// side whose points p make abp a clockwise triple.
inline EncodedInstance encode_outside(const Graph& g, const EncodeOptions& opt = {}) {
    EncodedInstance enc;
    enc.vars = VariableTable::for_triples(g.num_vertices());
    auto non_edges = g.non_edges();
    for (auto ne : non_edges) enc.vars.outside_side_vars[ne] = enc.vars.next_id++;
    enc.cnf.num_vars = enc.vars.next_id - 1;
    enc.summary.triple_vars = enc.vars.triple_vars.size();
    enc.summary.side_vars = enc.vars.outside_side_vars.size();

    detail::add_metadata(enc, g, EncodeMode::Outside, opt);
    detail::add_axiom_clauses(enc);

    std::vector<bool> none(static_cast<size_t>(g.num_vertices()), false);
    for (auto [a, b] : non_edges) {
        int s = enc.vars.outside_side_vars.at({a, b});
        for_each_simple_path(g, a, b, opt.max_path_len, none, [&](const SimplePath& p) {
            Clause pos{-s}, neg{s};
            for (size_t i = 1; i + 1 < p.size(); ++i) {
                Lit x = triple_literal(enc.vars, a, b, p[i]);
                pos.push_back(x);
                neg.push_back(-x);
            }
            enc.cnf.add_clause(std::move(pos));
            enc.cnf.add_clause(std::move(neg));
            enc.summary.path += 2;
        });
    }
    return enc;
}

// Necessary-condition instance for an obstacle representation with at most
// one obstacle (of any kind). For every ordered pair of disjoint non-edges
// (ab, cd) and every simple a,b-path P:
//   definition clauses force k_{P(cd)} when all vertices of P off the line
//   through c,d (endpoints included) lie on one side of that line;
//   constraint clauses tie key paths to the special side s_{ab,cd}.
inline EncodedInstance encode_single(const Graph& g, const EncodeOptions& opt = {}) {
    EncodedInstance enc;
    enc.vars = VariableTable::for_triples(g.num_vertices());
    auto non_edges = g.non_edges();

    auto disjoint = [](VertexPair ab, VertexPair cd) {
        return ab.first != cd.first && ab.first != cd.second && ab.second != cd.first &&
               ab.second != cd.second;
    };
    auto eligible = [&](VertexPair ab, VertexPair cd) {
        if (ab == cd) return false;
        if (disjoint(ab, cd)) return true;
        return opt.include_shared_vertex_pairs;
    };

    for (auto ab : non_edges)
        for (auto cd : non_edges)
            if (eligible(ab, cd)) enc.vars.pair_side_vars[{ab, cd}] = enc.vars.next_id++;

    // A key path with respect to cd may pass through c or d (they lie on the
    // line, hence in both closed half-planes), so the path set per non-edge
    // is unrestricted; the degenerate orientation literals for c and d are
    // simply absent from the definition clauses.
    std::map<VertexPair, std::vector<SimplePath>> paths_of;
    for (auto ab : non_edges) {
        auto& ps = paths_of[ab];
        std::vector<bool> none(static_cast<size_t>(g.num_vertices()), false);
        for_each_simple_path(g, ab.first, ab.second, opt.max_path_len, none,
                             [&](const SimplePath& p) { ps.push_back(p); });
    }

    // Key-path variable ids follow generation order: ordered pairs
    // lexicographically, paths in DFS order within each pair.
    for (auto ab : non_edges)
        for (auto cd : non_edges) {
            if (!eligible(ab, cd)) continue;
            for (const auto& p : paths_of[ab]) {
                auto key = std::make_pair(p, cd);
                if (!enc.vars.keypath_vars.count(key))
                    enc.vars.keypath_vars[key] = enc.vars.next_id++;
            }
        }
    enc.cnf.num_vars = enc.vars.next_id - 1;
    enc.summary.triple_vars = enc.vars.triple_vars.size();
    enc.summary.side_vars = enc.vars.pair_side_vars.size();
    enc.summary.keypath_vars = enc.vars.keypath_vars.size();

    detail::add_metadata(enc, g, EncodeMode::Single, opt);
    detail::add_axiom_clauses(enc);

    // Definition clauses are emitted once per (path, cd) key.
    std::set<std::pair<SimplePath, VertexPair>> defined;
    for (auto ab : non_edges) {
        auto [a, b] = ab;
        for (auto cd : non_edges) {
            if (!eligible(ab, cd)) continue;
            auto [c, d] = cd;
            int s = enc.vars.pair_side_vars.at({ab, cd});
            for (const auto& p : paths_of[ab]) {
                int k = enc.vars.keypath_vars.at({p, cd});
                if (defined.insert({p, cd}).second) {
                    Clause pos{k}, neg{k};
                    for (Vertex v : p) {
                        if (v == c || v == d) continue;  // degenerate literal: v on line cd
                        Lit x = triple_literal(enc.vars, c, d, v);
                        pos.push_back(x);
                        neg.push_back(-x);
                    }
                    enc.cnf.add_clause(std::move(pos));
                    enc.cnf.add_clause(std::move(neg));
                    enc.summary.keypath_def += 2;
                }
                Clause pos{-k, -s}, neg{-k, s};
                for (size_t i = 1; i + 1 < p.size(); ++i) {
                    Lit x = triple_literal(enc.vars, a, b, p[i]);
                    pos.push_back(x);
                    neg.push_back(-x);
                }
                enc.cnf.add_clause(std::move(pos));
                enc.cnf.add_clause(std::move(neg));
                enc.summary.keypath_side += 2;
            }
        }
    }
    return enc;
}

inline EncodedInstance encode(const Graph& g, EncodeMode mode, const EncodeOptions& opt = {}) {
    return mode == EncodeMode::Outside ? encode_outside(g, opt) : encode_single(g, opt);
}

}  // namespace obsat
