#pragma once

// Small simple undirected graphs: generators for the families under study,
// canonical JSON serialization, and read-only graph6 ingestion.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace obsat {

using Vertex = int;
using VertexPair = std::pair<Vertex, Vertex>;  // always stored u < v

class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class Graph {
public:
    Graph() = default;

    explicit Graph(int n) : n_(n) {
        if (n < 0) throw GraphError("vertex count must be non-negative");
        adj_.resize(static_cast<size_t>(n));
    }

    Graph(int n, const std::vector<VertexPair>& edges) : Graph(n) {
        for (auto [u, v] : edges) add_edge(u, v);
    }

    int num_vertices() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }

    void add_edge(Vertex u, Vertex v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw GraphError("self-loop rejected");
        if (u > v) std::swap(u, v);
        if (edges_.insert({u, v}).second) {
            adj_[static_cast<size_t>(u)].insert(v);
            adj_[static_cast<size_t>(v)].insert(u);
        }
    }

    bool has_edge(Vertex u, Vertex v) const {
        if (u == v) return false;
        check_vertex(u);
        check_vertex(v);
        if (u > v) std::swap(u, v);
        return edges_.count({u, v}) > 0;
    }

    // Neighbors in ascending id order.
    const std::set<Vertex>& neighbors(Vertex v) const {
        check_vertex(v);
        return adj_[static_cast<size_t>(v)];
    }

    int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

    // Edges in lexicographic order, each with u < v.
    std::vector<VertexPair> edges() const {
        return {edges_.begin(), edges_.end()};
    }

    // All C(n,2) - |E| non-edges in lexicographic order.
    std::vector<VertexPair> non_edges() const {
        std::vector<VertexPair> out;
        for (Vertex u = 0; u < n_; ++u)
            for (Vertex v = u + 1; v < n_; ++v)
                if (!edges_.count({u, v})) out.push_back({u, v});
        return out;
    }

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

    void check_vertex(Vertex v) const {
        if (v < 0 || v >= n_)
            throw GraphError("vertex " + std::to_string(v) + " out of range [0," +
                             std::to_string(n_) + ")");
    }

private:
    int n_ = 0;
    std::set<VertexPair> edges_;
    std::vector<std::set<Vertex>> adj_;
};

// ---------------------------------------------------------------------------
// Generators

// Gyroelongated n-bipyramid X_n: an n-antiprism with pyramids on both bases.
// Labeling: vertex 0 and 1 are the two hubs; vertices 2..n+1 form the rim of
// hub 0 (rim A, in cyclic order); vertices n+2..2n+1 form the rim of hub 1
// (rim B). Rim A vertex i is joined to rim B vertices i and i-1 (mod n), so
// the connecting 2n-cycle reads A0,B0,A1,B1,...,A(n-1),B(n-1).
inline Graph gyro_bipyramid(int n) {
    if (n < 3) throw GraphError("gyro_bipyramid requires n >= 3");
    Graph g(2 * n + 2);
    auto rim_a = [n](int i) { return 2 + ((i % n) + n) % n; };
    auto rim_b = [n](int i) { return n + 2 + ((i % n) + n) % n; };
    for (int i = 0; i < n; ++i) {
        g.add_edge(0, rim_a(i));
        g.add_edge(1, rim_b(i));
        g.add_edge(rim_a(i), rim_a(i + 1));
        g.add_edge(rim_b(i), rim_b(i + 1));
        g.add_edge(rim_a(i), rim_b(i));
        g.add_edge(rim_a(i + 1), rim_b(i));
    }
    return g;
}

// K*_{a,b}: complete bipartite K_{a,b} minus the matching {i, a+i}, i < a.
// Class one occupies [0,a), class two [a,a+b).
inline Graph k_star(int a, int b) {
    if (a < 1 || b < a) throw GraphError("k_star requires 1 <= a <= b");
    Graph g(a + b);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j)
            if (j != i) g.add_edge(i, a + j);
    return g;
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw GraphError("cycle requires n >= 3");
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

inline Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

inline Graph complete_bipartite(int a, int b) {
    if (a < 0 || b < 0) throw GraphError("complete_bipartite requires a,b >= 0");
    Graph g(a + b);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
    return g;
}

// Complete tripartite K_{a,b,c}; classes occupy [0,a), [a,a+b), [a+b,a+b+c).
inline Graph complete_tripartite(int a, int b, int c) {
    Graph g(a + b + c);
    auto cls = [&](Vertex v) { return v < a ? 0 : (v < a + b ? 1 : 2); };
    for (Vertex u = 0; u < g.num_vertices(); ++u)
        for (Vertex v = u + 1; v < g.num_vertices(); ++v)
            if (cls(u) != cls(v)) g.add_edge(u, v);
    return g;
}

// Wheel W_n: hub 0 joined to an n-cycle on 1..n.
inline Graph wheel_graph(int n) {
    if (n < 3) throw GraphError("wheel requires n >= 3");
    Graph g(n + 1);
    for (int i = 1; i <= n; ++i) {
        g.add_edge(0, i);
        g.add_edge(i, i % n + 1);
    }
    return g;
}

inline Graph petersen_graph() {
    // Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
        g.add_edge(i, 5 + i);
    }
    return g;
}

inline Graph dodecahedron_graph() {
    // Standard skeleton: outer 5-cycle, two interleaved 10-cycles' worth of
    // middle vertices, inner 5-cycle.
    Graph g(20);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);          // outer face
        g.add_edge(i, 5 + i);                // outer spokes
        g.add_edge(5 + i, 10 + i);
        g.add_edge(5 + i, 10 + (i + 4) % 5);
        g.add_edge(10 + i, 15 + i);          // inner spokes
        g.add_edge(15 + i, 15 + (i + 1) % 5);  // inner face
    }
    return g;
}

// Disjoint union; G2's vertex labels are shifted by G1's order.
inline Graph disjoint_union(const Graph& g1, const Graph& g2) {
    Graph g(g1.num_vertices() + g2.num_vertices());
    for (auto [u, v] : g1.edges()) g.add_edge(u, v);
    int shift = g1.num_vertices();
    for (auto [u, v] : g2.edges()) g.add_edge(u + shift, v + shift);
    return g;
}

// Induced subgraph on S, relabeled 0..|S|-1 in ascending order of old ids.
inline Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& s) {
    std::vector<Vertex> sorted = s;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (Vertex v : sorted) g.check_vertex(v);
    Graph out(static_cast<int>(sorted.size()));
    for (size_t i = 0; i < sorted.size(); ++i)
        for (size_t j = i + 1; j < sorted.size(); ++j)
            if (g.has_edge(sorted[i], sorted[j]))
                out.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
    return out;
}

// Catalog lookup: petersen, icosahedron, dodecahedron, cycle(n), complete(n),
// complete_bipartite(a,b), wheel(n).
inline Graph named_graph(const std::string& name) {
    static const char* catalog =
        "petersen, icosahedron, dodecahedron, cycle(n), complete(n), "
        "complete_bipartite(a,b), wheel(n)";
    auto args_of = [&](const std::string& base) -> std::optional<std::vector<int>> {
        if (name.size() <= base.size() + 1 || name.compare(0, base.size(), base) != 0 ||
            name[base.size()] != '(' || name.back() != ')')
            return std::nullopt;
        std::vector<int> args;
        std::string body = name.substr(base.size() + 1, name.size() - base.size() - 2);
        size_t pos = 0;
        while (pos <= body.size()) {
            size_t comma = body.find(',', pos);
            std::string tok = body.substr(pos, comma == std::string::npos ? comma : comma - pos);
            try {
                args.push_back(std::stoi(tok));
            } catch (const std::exception&) {
                throw GraphError("bad argument '" + tok + "' in graph name '" + name + "'");
            }
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        return args;
    };

    if (name == "petersen") return petersen_graph();
    if (name == "icosahedron") return gyro_bipyramid(5);
    if (name == "dodecahedron") return dodecahedron_graph();
    if (auto a = args_of("cycle"); a && a->size() == 1) return cycle_graph((*a)[0]);
    if (auto a = args_of("complete"); a && a->size() == 1) return complete_graph((*a)[0]);
    if (auto a = args_of("complete_bipartite"); a && a->size() == 2)
        return complete_bipartite((*a)[0], (*a)[1]);
    if (auto a = args_of("complete_tripartite"); a && a->size() == 3)
        return complete_tripartite((*a)[0], (*a)[1], (*a)[2]);
    if (auto a = args_of("wheel"); a && a->size() == 1) return wheel_graph((*a)[0]);
    if (auto a = args_of("gyro"); a && a->size() == 1) return gyro_bipyramid((*a)[0]);
    if (auto a = args_of("kstar"); a && a->size() == 2) return k_star((*a)[0], (*a)[1]);
    throw GraphError("unknown graph name '" + name + "'; catalog: " + catalog +
                     ", gyro(n), kstar(a,b), complete_tripartite(a,b,c)");
}

// ---------------------------------------------------------------------------
// Serialization

// Canonical JSON: {"n": int, "edges": [[u,v],...]} with u < v, sorted.
inline std::string serialize_graph(const Graph& g) {
    nlohmann::json j;
    j["n"] = g.num_vertices();
    j["edges"] = nlohmann::json::array();
    for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
    return j.dump();
}

inline Graph parse_graph_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw GraphError(std::string("graph JSON parse error: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw GraphError("graph JSON must be an object with \"n\" and \"edges\"");
    if (!j["n"].is_number_integer())
        throw GraphError("graph JSON field \"n\" must be an integer");
    Graph g(j["n"].get<int>());
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw GraphError("graph JSON edge must be a pair of integers: " + e.dump());
        g.add_edge(e[0].get<int>(), e[1].get<int>());
    }
    return g;
}

// graph6 (read-only); supports orders up to 62 and the 3-byte extension.
inline Graph parse_graph6(const std::string& line) {
    std::string s = line;
    if (s.rfind(">>graph6<<", 0) == 0) s = s.substr(10);
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    if (s.empty()) throw GraphError("empty graph6 string");

    size_t pos = 0;
    auto next = [&]() -> int {
        if (pos >= s.size()) throw GraphError("truncated graph6 string at offset " +
                                              std::to_string(pos));
        int c = static_cast<unsigned char>(s[pos++]);
        if (c < 63 || c > 126)
            throw GraphError("invalid graph6 byte at offset " + std::to_string(pos - 1));
        return c - 63;
    };

    long n = next();
    if (n == 63) {
        long a = next(), b = next(), c = next();
        n = (a << 12) | (b << 6) | c;
    }
    if (n > 62 * 62) throw GraphError("graph6 order too large for this reader");

    Graph g(static_cast<int>(n));
    int bits = 0, have = 0;
    for (Vertex v = 1; v < n; ++v) {
        for (Vertex u = 0; u < v; ++u) {
            if (have == 0) {
                bits = next();
                have = 6;
            }
            if (bits & (1 << (have - 1))) g.add_edge(u, v);
            --have;
        }
    }
    if (pos != s.size())
        throw GraphError("trailing bytes after graph6 payload at offset " +
                         std::to_string(pos));
    return g;
}

// Parse either canonical JSON or graph6, by sniffing the first byte.
inline Graph parse_graph(const std::string& text) {
    size_t i = text.find_first_not_of(" \t\r\n");
    if (i == std::string::npos) throw GraphError("empty graph input");
    if (text[i] == '{') return parse_graph_json(text);
    return parse_graph6(text.substr(i));
}

}  // namespace obsat
