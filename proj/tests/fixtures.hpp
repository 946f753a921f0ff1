#pragma once

// Shared concrete drawings used by unit and acceptance tests.

#include <algorithm>

#include "obsat/verify.hpp"

namespace obsat::fixtures {

// C_5 drawn as a pentagram (vertex i at pentagon position 2i mod 5), so the
// five non-edges are the convex-hull sides. The obstacle is a horseshoe band
// in the unbounded face touching each hull side exactly at its midpoint; the
// gap of the horseshoe sits radially beyond one vertex, where no non-edge
// passes.
inline ObstacleDrawing pentagram_c5() {
    ExactPoint p0{0, 24}, p1{23, 7}, p2{14, -19}, p3{-14, -19}, p4{-23, 7};
    std::vector<ExactPoint> pos{p0, p1, p2, p3, p4};

    ObstacleDrawing d;
    d.graph = cycle_graph(5);
    d.coords.resize(5);
    for (int i = 0; i < 5; ++i) d.coords[static_cast<size_t>(i)] = pos[(2 * i) % 5];

    auto mid = [](ExactPoint a, ExactPoint b) {
        return ExactPoint{(a.x + b.x) / 2, (a.y + b.y) / 2};
    };
    auto scale = [](ExactPoint a, Rational s) { return ExactPoint{a.x * s, a.y * s}; };
    Rational near(7, 5), far(9, 5);
    Polygon band{
        {-5, 30},        mid(p0, p4), scale(p4, near), mid(p4, p3), scale(p3, near),
        mid(p3, p2),     scale(p2, near), mid(p2, p1), scale(p1, near), mid(p1, p0),
        {5, 30},         {9, 40},     scale(p1, far),  scale(p2, far),  scale(p3, far),
        scale(p4, far),  {-9, 40},
    };
    if (polygon_signed_area2(band) < 0) std::reverse(band.begin(), band.end());
    d.obstacles.push_back({band, true});
    return d;
}

// Convex C_4 with no obstacle: both diagonals stay visible.
inline ObstacleDrawing bare_c4() {
    ObstacleDrawing d;
    d.graph = cycle_graph(4);
    d.coords = {{0, 0}, {10, 1}, {11, 10}, {1, 11}};
    return d;
}

// The same convex C_4 with one interior triangle covering the diagonal
// crossing, so a single (non-outside) obstacle certifies it.
inline ObstacleDrawing blocked_c4() {
    ObstacleDrawing d = bare_c4();
    d.obstacles.push_back({Polygon{{5, 5}, {7, 5}, {6, 7}}, false});
    return d;
}

}  // namespace obsat::fixtures
