#pragma once

// Enumeration of simple a,b-paths, the raw material for the half-plane and
// key-path clauses. DFS with on-path marking; neighbor order is ascending
// vertex id, so enumeration order is deterministic.

#include <functional>
#include <optional>
#include <vector>

#include "obsat/graph.hpp"

namespace obsat {

// A simple path as its vertex sequence v0..vk; canonical direction v0 < vk.
using SimplePath = std::vector<Vertex>;

inline SimplePath canonical_path(SimplePath p) {
    if (!p.empty() && p.front() > p.back()) std::reverse(p.begin(), p.end());
    return p;
}

// Internal vertices v1..v(k-1).
inline std::vector<Vertex> internal_vertices(const SimplePath& p) {
    if (p.size() <= 2) return {};
    return {p.begin() + 1, p.end() - 1};
}

// Streams every simple a,b-path with at most max_len edges to the sink,
// in DFS order (which for fixed a is lexicographic by vertex sequence).
// Paths are reported as enumerated, starting at a; callers wanting the
// canonical direction apply canonical_path themselves.
inline void for_each_simple_path(const Graph& g, Vertex a, Vertex b,
                                 std::optional<int> max_len,
                                 const std::vector<bool>& forbidden,
                                 const std::function<void(const SimplePath&)>& sink) {
    g.check_vertex(a);
    g.check_vertex(b);
    if (a == b) throw GraphError("path endpoints must differ");
    if (max_len && *max_len < 1) throw GraphError("max_len must be >= 1");
    if (forbidden[static_cast<size_t>(a)] || forbidden[static_cast<size_t>(b)])
        throw GraphError("path endpoint is forbidden");

    int cap = max_len ? *max_len : g.num_vertices();
    std::vector<bool> on_path(static_cast<size_t>(g.num_vertices()), false);
    SimplePath path{a};
    on_path[static_cast<size_t>(a)] = true;

    std::function<void(Vertex)> dfs = [&](Vertex v) {
        if (static_cast<int>(path.size()) - 1 >= cap) return;
        for (Vertex w : g.neighbors(v)) {
            if (w == b) {
                path.push_back(b);
                sink(path);
                path.pop_back();
                continue;
            }
            if (on_path[static_cast<size_t>(w)] || forbidden[static_cast<size_t>(w)])
                continue;
            on_path[static_cast<size_t>(w)] = true;
            path.push_back(w);
            dfs(w);
            path.pop_back();
            on_path[static_cast<size_t>(w)] = false;
        }
    };
    dfs(a);
}

inline std::vector<bool> make_forbidden(int n, const std::vector<Vertex>& verts) {
    std::vector<bool> f(static_cast<size_t>(n), false);
    for (Vertex v : verts) f[static_cast<size_t>(v)] = true;
    return f;
}

// All simple a,b-paths of length <= max_len, canonical direction, in
// lexicographic order by vertex sequence.
inline std::vector<SimplePath> paths_avoiding(const Graph& g, Vertex a, Vertex b,
                                              const std::vector<Vertex>& forbidden,
                                              std::optional<int> max_len = std::nullopt) {
    Vertex lo = std::min(a, b), hi = std::max(a, b);
    std::vector<SimplePath> out;
    for_each_simple_path(g, lo, hi, max_len, make_forbidden(g.num_vertices(), forbidden),
                         [&](const SimplePath& p) { out.push_back(p); });
    return out;
}

inline std::vector<SimplePath> simple_paths(const Graph& g, Vertex a, Vertex b,
                                            std::optional<int> max_len = std::nullopt) {
    return paths_avoiding(g, a, b, {}, max_len);
}

}  // namespace obsat
