#pragma once

// Exact certification of claimed obstacle representations: straight-line
// drawing + polygon obstacles, checked entirely with rational arithmetic.

#include <optional>
#include <string>
#include <vector>

#include "obsat/chirotope.hpp"
#include "obsat/encode.hpp"
#include "obsat/geometry.hpp"
#include "obsat/graph.hpp"

namespace obsat {

class VerifyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using Polygon = std::vector<ExactPoint>;  // simple, counterclockwise

struct Obstacle {
    Polygon polygon;
    bool outside = false;  // declared to lie in the unbounded face
};

struct ObstacleDrawing {
    Graph graph;
    std::vector<ExactPoint> coords;  // one per vertex
    std::vector<Obstacle> obstacles;
};

// ---------------------------------------------------------------------------
// Primitive predicates

inline bool point_on_closed_segment(const ExactPoint& p, const ExactPoint& a,
                                    const ExactPoint& b) {
    if (orient(a, b, p) != Orientation::COLLINEAR) return false;
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

inline bool point_on_open_segment(const ExactPoint& p, const ExactPoint& a,
                                  const ExactPoint& b) {
    return point_on_closed_segment(p, a, b) && !(p == a) && !(p == b);
}

// Strict sign-based crossing: intersection point interior to both segments.
inline bool segments_properly_cross(const ExactPoint& p, const ExactPoint& q,
                                    const ExactPoint& a, const ExactPoint& b) {
    Orientation o1 = orient(p, q, a), o2 = orient(p, q, b);
    Orientation o3 = orient(a, b, p), o4 = orient(a, b, q);
    if (o1 == Orientation::COLLINEAR || o2 == Orientation::COLLINEAR ||
        o3 == Orientation::COLLINEAR || o4 == Orientation::COLLINEAR)
        return false;
    return o1 != o2 && o3 != o4;
}

// Closed-region membership; polygon boundary counts as inside.
inline bool point_in_polygon_closed(const ExactPoint& p, const Polygon& poly) {
    size_t m = poly.size();
    for (size_t i = 0; i < m; ++i)
        if (point_on_closed_segment(p, poly[i], poly[(i + 1) % m])) return true;
    // Exact crossing number of the upward vertical ray from p.
    int crossings = 0;
    for (size_t i = 0; i < m; ++i) {
        const ExactPoint& a = poly[i];
        const ExactPoint& b = poly[(i + 1) % m];
        if ((a.y > p.y) == (b.y > p.y)) continue;
        // x coordinate of the edge at height p.y; denominators stay exact.
        Rational t = (p.y - a.y) / (b.y - a.y);
        Rational x = a.x + t * (b.x - a.x);
        if (x > p.x) ++crossings;
    }
    return crossings % 2 == 1;
}

inline Rational polygon_signed_area2(const Polygon& poly) {
    Rational s = 0;
    size_t m = poly.size();
    for (size_t i = 0; i < m; ++i) {
        const ExactPoint& a = poly[i];
        const ExactPoint& b = poly[(i + 1) % m];
        s += a.x * b.y - b.x * a.y;
    }
    return s;
}

inline bool polygon_is_simple(const Polygon& poly) {
    size_t m = poly.size();
    if (m < 3) return false;
    for (size_t i = 0; i < m; ++i) {
        const ExactPoint& a = poly[i];
        const ExactPoint& b = poly[(i + 1) % m];
        if (a == b) return false;
        for (size_t j = i + 1; j < m; ++j) {
            const ExactPoint& c = poly[j];
            const ExactPoint& d = poly[(j + 1) % m];
            bool adjacent = (j == i + 1) || (i == 0 && j == m - 1);
            if (adjacent) {
                // Shared endpoint only; no further overlap.
                const ExactPoint& shared = (j == i + 1) ? b : a;
                const ExactPoint& c_far = (j == i + 1) ? d : c;
                const ExactPoint& b_far = (j == i + 1) ? a : b;
                if (point_on_closed_segment(c_far, a, b) && !(c_far == shared)) return false;
                if (point_on_closed_segment(b_far, c, d) && !(b_far == shared)) return false;
                continue;
            }
            if (segments_properly_cross(a, b, c, d)) return false;
            if (point_on_closed_segment(c, a, b) || point_on_closed_segment(d, a, b) ||
                point_on_closed_segment(a, c, d) || point_on_closed_segment(b, c, d))
                return false;
        }
    }
    return true;
}

// True iff the open segment pq meets the closed polygonal region. The open
// segment touches the boundary iff some proper crossing exists or a polygon
// vertex lies on the open segment; otherwise the whole open segment lies on
// one side and the midpoint decides.
inline bool segment_meets_polygon(const ExactPoint& p, const ExactPoint& q,
                                  const Polygon& poly) {
    if (!polygon_is_simple(poly)) throw VerifyError("degenerate polygon");
    size_t m = poly.size();
    for (size_t i = 0; i < m; ++i) {
        const ExactPoint& a = poly[i];
        const ExactPoint& b = poly[(i + 1) % m];
        if (segments_properly_cross(p, q, a, b)) return true;
        if (point_on_open_segment(a, p, q)) return true;
    }
    ExactPoint mid{(p.x + q.x) / 2, (p.y + q.y) / 2};
    return point_in_polygon_closed(mid, poly);
}

// Upper-then-lower monotone chain; returns hull in CCW order.
inline Polygon convex_hull(std::vector<ExactPoint> pts) {
    std::sort(pts.begin(), pts.end(), [](const ExactPoint& a, const ExactPoint& b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) return pts;
    Polygon hull;
    auto build = [&](auto begin, auto end) {
        size_t base = hull.size();
        for (auto it = begin; it != end; ++it) {
            while (hull.size() >= base + 2 &&
                   orient(hull[hull.size() - 2], hull.back(), *it) != Orientation::CCW)
                hull.pop_back();
            hull.push_back(*it);
        }
        hull.pop_back();
    };
    build(pts.begin(), pts.end());
    build(pts.rbegin(), pts.rend());
    return hull;
}

// Strictly outside the convex hull of the given points (not in the closed
// hull). Degenerate hulls (points or segments) are handled directly.
inline bool strictly_outside_hull(const ExactPoint& p, const Polygon& hull) {
    if (hull.empty()) return true;
    if (hull.size() == 1) return !(p == hull[0]);
    if (hull.size() == 2) return !point_on_closed_segment(p, hull[0], hull[1]);
    return !point_in_polygon_closed(p, hull);
}

// ---------------------------------------------------------------------------
// Representation checking

struct OutsideCheck {
    size_t obstacle;
    bool pass;
    std::string detail;
};

struct VerificationReport {
    bool valid = false;
    std::vector<VertexPair> unblocked_non_edges;
    std::vector<std::pair<VertexPair, size_t>> pierced_edges;  // (edge, obstacle index)
    std::vector<std::pair<Vertex, size_t>> vertex_hits;        // vertex inside an obstacle
    std::vector<OutsideCheck> outside_checks;
};

inline void check_drawing_invariants(const ObstacleDrawing& d) {
    int n = d.graph.num_vertices();
    if (static_cast<int>(d.coords.size()) != n)
        throw VerifyError("drawing has " + std::to_string(d.coords.size()) +
                          " coordinates for " + std::to_string(n) + " vertices");
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (d.coords[a] == d.coords[b])
                throw VerifyError("vertices " + std::to_string(a) + " and " +
                                  std::to_string(b) + " coincide");
            for (int c = b + 1; c < n; ++c)
                if (orient(d.coords[a], d.coords[b], d.coords[c]) == Orientation::COLLINEAR)
                    throw VerifyError("collinear vertices {" + std::to_string(a) + "," +
                                      std::to_string(b) + "," + std::to_string(c) + "}");
        }
    for (size_t i = 0; i < d.obstacles.size(); ++i) {
        const Polygon& poly = d.obstacles[i].polygon;
        if (!polygon_is_simple(poly))
            throw VerifyError("obstacle " + std::to_string(i) + " is not a simple polygon");
        if (polygon_signed_area2(poly) <= 0)
            throw VerifyError("obstacle " + std::to_string(i) +
                              " is not counterclockwise oriented");
    }
}

inline VerificationReport check_representation(const ObstacleDrawing& d) {
    check_drawing_invariants(d);
    VerificationReport rep;
    int n = d.graph.num_vertices();

    for (size_t i = 0; i < d.obstacles.size(); ++i)
        for (Vertex v = 0; v < n; ++v)
            if (point_in_polygon_closed(d.coords[v], d.obstacles[i].polygon))
                rep.vertex_hits.push_back({v, i});

    for (auto e : d.graph.edges())
        for (size_t i = 0; i < d.obstacles.size(); ++i)
            if (segment_meets_polygon(d.coords[e.first], d.coords[e.second],
                                      d.obstacles[i].polygon))
                rep.pierced_edges.push_back({e, i});

    for (auto ne : d.graph.non_edges()) {
        bool blocked = false;
        for (const auto& obs : d.obstacles)
            if (segment_meets_polygon(d.coords[ne.first], d.coords[ne.second], obs.polygon)) {
                blocked = true;
                break;
            }
        if (!blocked) rep.unblocked_non_edges.push_back(ne);
    }

    // Declared-outside obstacles must avoid all edges (covered above) and
    // escape the convex hull of the vertex set; a connected polygon that
    // avoids every edge and reaches past the hull lies in the unbounded face.
    Polygon hull = convex_hull(d.coords);
    for (size_t i = 0; i < d.obstacles.size(); ++i) {
        if (!d.obstacles[i].outside) continue;
        bool escapes = false;
        for (const auto& p : d.obstacles[i].polygon)
            if (strictly_outside_hull(p, hull)) {
                escapes = true;
                break;
            }
        bool meets_edge = false;
        for (const auto& [edge, obs] : rep.pierced_edges)
            if (obs == i) meets_edge = true;
        if (escapes && !meets_edge)
            rep.outside_checks.push_back({i, true, "escapes vertex hull, meets no edge"});
        else
            rep.outside_checks.push_back(
                {i, false, escapes ? "meets an edge" : "unclassified: no vertex outside hull"});
    }

    rep.valid = rep.unblocked_non_edges.empty() && rep.pierced_edges.empty() &&
                rep.vertex_hits.empty();
    for (const auto& oc : rep.outside_checks) rep.valid = rep.valid && oc.pass;
    return rep;
}

// ---------------------------------------------------------------------------
// From a certified drawing to a satisfying assignment (the necessity
// direction of the encodings, made executable).

inline Model assignment_of_drawing(const ObstacleDrawing& d, const EncodedInstance& enc,
                                   EncodeMode mode, const EncodeOptions& opt = {}) {
    VerificationReport rep = check_representation(d);
    if (!rep.valid) throw VerifyError("drawing is not a valid obstacle representation");
    if (d.obstacles.size() > 1)
        throw VerifyError("assignment extraction requires at most one obstacle");
    if (mode == EncodeMode::Outside)
        for (const auto& obs : d.obstacles)
            if (!obs.outside)
                throw VerifyError("outside mode requires the obstacle to be an outside obstacle");

    Chirotope chi = derive_chirotope(d.coords);
    Model m;
    m.value.assign(static_cast<size_t>(enc.cnf.num_vars) + 1, false);
    for (const auto& [key, id] : enc.vars.triple_vars)
        m.value[static_cast<size_t>(id)] = chi.clockwise.at(key);

    auto cw = [&](int a, int b, int v) { return chi.is_clockwise(a, b, v); };

    // The special half-plane of ab: the clockwise side iff every relevant
    // path keeps a clockwise internal vertex.
    auto pick_side = [&](VertexPair ab, const std::vector<SimplePath>& paths) -> bool {
        bool can_true = true, can_false = true;
        for (const auto& p : paths) {
            bool has_cw = false, has_ccw = false;
            for (size_t i = 1; i + 1 < p.size(); ++i)
                (cw(ab.first, ab.second, p[i]) ? has_cw : has_ccw) = true;
            can_true = can_true && has_cw;
            can_false = can_false && has_ccw;
        }
        if (can_true) return true;
        if (!can_false)
            throw VerifyError("no consistent special half-plane for non-edge {" +
                              std::to_string(ab.first) + "," + std::to_string(ab.second) +
                              "}: some path crosses both open half-planes");
        return false;
    };

    if (mode == EncodeMode::Outside) {
        for (const auto& [ab, id] : enc.vars.outside_side_vars) {
            std::vector<SimplePath> paths =
                simple_paths(d.graph, ab.first, ab.second, opt.max_path_len);
            m.value[static_cast<size_t>(id)] = pick_side(ab, paths);
        }
    } else {
        // Key-path variables take their geometric truth value.
        for (const auto& [key, id] : enc.vars.keypath_vars) {
            const auto& [path, cd] = key;
            bool all_cw = true, all_ccw = true;
            for (Vertex v : path) {
                if (v == cd.first || v == cd.second) continue;
                (cw(cd.first, cd.second, v) ? all_ccw : all_cw) = false;
            }
            m.value[static_cast<size_t>(id)] = all_cw || all_ccw;
        }
        for (const auto& [key, id] : enc.vars.pair_side_vars) {
            const auto& [ab, cd] = key;
            std::vector<SimplePath> key_paths;
            for (const auto& [kkey, kid] : enc.vars.keypath_vars)
                if (kkey.second == cd && kkey.first.front() == ab.first &&
                    kkey.first.back() == ab.second && m.value[static_cast<size_t>(kid)])
                    key_paths.push_back(kkey.first);
            m.value[static_cast<size_t>(id)] = pick_side(ab, key_paths);
        }
    }
    return m;
}

// ---------------------------------------------------------------------------
// Drawing JSON:
// {"graph": {...}, "coords": [[x,y]|[xn,xd,yn,yd],...],
//  "obstacles": [{"polygon": [...], "outside": bool},...]}

inline ObstacleDrawing parse_drawing(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw VerifyError(std::string("drawing JSON parse error: ") + e.what());
    }
    if (!j.is_object() || !j.contains("graph") || !j.contains("coords"))
        throw VerifyError("drawing JSON must contain \"graph\" and \"coords\"");
    ObstacleDrawing d;
    d.graph = parse_graph_json(j["graph"].dump());
    for (const auto& c : j["coords"]) d.coords.push_back(point_from_json(c));
    for (const auto& o : j.value("obstacles", nlohmann::json::array())) {
        if (!o.is_object() || !o.contains("polygon"))
            throw VerifyError("obstacle entry must contain \"polygon\": " + o.dump());
        Obstacle obs;
        for (const auto& p : o["polygon"]) obs.polygon.push_back(point_from_json(p));
        obs.outside = o.value("outside", false);
        d.obstacles.push_back(std::move(obs));
    }
    return d;
}

inline std::string serialize_drawing(const ObstacleDrawing& d) {
    nlohmann::json j;
    j["graph"] = nlohmann::json::parse(serialize_graph(d.graph));
    j["coords"] = nlohmann::json::array();
    for (const auto& p : d.coords) j["coords"].push_back(point_to_json(p));
    j["obstacles"] = nlohmann::json::array();
    for (const auto& o : d.obstacles) {
        nlohmann::json jo;
        jo["polygon"] = nlohmann::json::array();
        for (const auto& p : o.polygon) jo["polygon"].push_back(point_to_json(p));
        jo["outside"] = o.outside;
        j["obstacles"].push_back(jo);
    }
    return j.dump();
}

}  // namespace obsat
