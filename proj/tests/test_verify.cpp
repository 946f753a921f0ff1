#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "obsat/encode.hpp"
#include "obsat/verify.hpp"

using namespace obsat;

TEST_CASE("segment predicates") {
    ExactPoint a{0, 0}, b{10, 0};
    CHECK(point_on_closed_segment({5, 0}, a, b));
    CHECK(point_on_closed_segment(a, a, b));
    CHECK_FALSE(point_on_open_segment(a, a, b));
    CHECK(point_on_open_segment({Rational(1, 3), 0}, a, b));
    CHECK_FALSE(point_on_closed_segment({11, 0}, a, b));
    CHECK_FALSE(point_on_closed_segment({5, 1}, a, b));

    CHECK(segments_properly_cross({0, -1}, {0, 1}, {-1, 0}, {1, 0}));
    CHECK_FALSE(segments_properly_cross({0, 0}, {0, 1}, {0, 0}, {1, 0}));  // shared endpoint
    CHECK_FALSE(segments_properly_cross({0, -1}, {0, 1}, {0, 0}, {1, 0}));  // T-touch
    CHECK_FALSE(segments_properly_cross({0, 0}, {1, 1}, {2, 2}, {3, 3}));  // collinear
    CHECK_FALSE(segments_properly_cross({0, 0}, {1, 0}, {2, 1}, {3, 1}));
}

TEST_CASE("point in polygon") {
    Polygon square{{0, 0}, {10, 0}, {10, 10}, {0, 10}};
    CHECK(point_in_polygon_closed({5, 5}, square));
    CHECK(point_in_polygon_closed({0, 5}, square));    // boundary
    CHECK(point_in_polygon_closed({10, 10}, square));  // corner
    CHECK_FALSE(point_in_polygon_closed({-1, 5}, square));
    CHECK_FALSE(point_in_polygon_closed({5, 11}, square));
    // ray through a vertex must not double count
    Polygon diamond{{5, 0}, {10, 5}, {5, 10}, {0, 5}};
    CHECK(point_in_polygon_closed({5, 5}, diamond));
    CHECK_FALSE(point_in_polygon_closed({5, -1}, diamond));
    CHECK_FALSE(point_in_polygon_closed({0, 0}, diamond));
}

TEST_CASE("polygon area and simplicity") {
    Polygon ccw{{0, 0}, {4, 0}, {0, 3}};
    CHECK(polygon_signed_area2(ccw) == 12);
    Polygon cw(ccw.rbegin(), ccw.rend());
    CHECK(polygon_signed_area2(cw) == -12);

    CHECK(polygon_is_simple(ccw));
    CHECK_FALSE(polygon_is_simple({{0, 0}, {10, 10}, {10, 0}, {0, 10}}));  // bowtie
    CHECK_FALSE(polygon_is_simple({{0, 0}, {10, 0}}));
    CHECK(polygon_is_simple({{0, 0}, {5, 0}, {10, 0}, {10, 10}}));  // straight corner is fine
    CHECK_FALSE(polygon_is_simple({{0, 0}, {10, 0}, {5, 0}, {5, 5}}));   // folded-back edge
    CHECK_FALSE(polygon_is_simple({{0, 0}, {10, 0}, {10, 10}, {5, 0}}));  // vertex on edge
}

TEST_CASE("segment meets polygon") {
    Polygon square{{0, 0}, {10, 0}, {10, 10}, {0, 10}};
    CHECK(segment_meets_polygon({-5, 5}, {15, 5}, square));   // crosses through
    CHECK(segment_meets_polygon({2, 2}, {8, 8}, square));     // fully inside
    CHECK(segment_meets_polygon({-5, 0}, {15, 0}, square));   // rides an edge
    CHECK(segment_meets_polygon({-5, -5}, {5, 5}, square));   // ends inside
    CHECK_FALSE(segment_meets_polygon({-5, 15}, {15, 15}, square));
    CHECK_FALSE(segment_meets_polygon({-5, -1}, {15, -1}, square));
    CHECK_THROWS_AS(segment_meets_polygon({0, 0}, {1, 1}, Polygon{{0, 0}, {1, 0}}), VerifyError);
}

TEST_CASE("convex hull") {
    Polygon hull = convex_hull({{0, 0}, {10, 0}, {10, 10}, {0, 10}, {5, 5}, {5, 0}});
    REQUIRE(hull.size() == 4);
    CHECK(polygon_signed_area2(hull) == 200);
    CHECK(hull[0] == ExactPoint{0, 0});  // starts at the lexicographic minimum

    CHECK(strictly_outside_hull({11, 5}, hull));
    CHECK_FALSE(strictly_outside_hull({10, 5}, hull));
    CHECK_FALSE(strictly_outside_hull({5, 5}, hull));

    Polygon degenerate = convex_hull({{0, 0}, {2, 2}, {1, 1}});
    CHECK(degenerate.size() == 2);
    CHECK_FALSE(strictly_outside_hull({1, 1}, degenerate));
    CHECK(strictly_outside_hull({1, 2}, degenerate));
}

TEST_CASE("drawing invariants") {
    ObstacleDrawing d = fixtures::bare_c4();
    CHECK_NOTHROW(check_drawing_invariants(d));

    ObstacleDrawing short_coords = d;
    short_coords.coords.pop_back();
    CHECK_THROWS_AS(check_drawing_invariants(short_coords), VerifyError);

    ObstacleDrawing coincide = d;
    coincide.coords[1] = coincide.coords[0];
    CHECK_THROWS_WITH(check_drawing_invariants(coincide),
                      Catch::Matchers::ContainsSubstring("coincide"));

    ObstacleDrawing collinear = d;
    collinear.coords = {{0, 0}, {1, 1}, {2, 2}, {0, 5}};
    CHECK_THROWS_WITH(check_drawing_invariants(collinear),
                      Catch::Matchers::ContainsSubstring("collinear"));

    ObstacleDrawing cw_obstacle = fixtures::blocked_c4();
    std::reverse(cw_obstacle.obstacles[0].polygon.begin(),
                 cw_obstacle.obstacles[0].polygon.end());
    CHECK_THROWS_WITH(check_drawing_invariants(cw_obstacle),
                      Catch::Matchers::ContainsSubstring("counterclockwise"));

    ObstacleDrawing bowtie = d;
    bowtie.obstacles.push_back({Polygon{{4, 4}, {6, 6}, {6, 4}, {4, 6}}, false});
    CHECK_THROWS_WITH(check_drawing_invariants(bowtie),
                      Catch::Matchers::ContainsSubstring("simple"));
}

TEST_CASE("bare convex C_4 leaves both diagonals visible") {
    auto rep = check_representation(fixtures::bare_c4());
    CHECK_FALSE(rep.valid);
    REQUIRE(rep.unblocked_non_edges.size() == 2);
    CHECK(rep.unblocked_non_edges[0] == VertexPair{0, 2});
    CHECK(rep.unblocked_non_edges[1] == VertexPair{1, 3});
    CHECK(rep.pierced_edges.empty());
    CHECK(rep.vertex_hits.empty());
}

TEST_CASE("interior obstacle certifies C_4") {
    ObstacleDrawing d = fixtures::blocked_c4();
    auto rep = check_representation(d);
    CHECK(rep.valid);
    CHECK(rep.outside_checks.empty());  // obstacle not declared outside

    auto enc = encode_single(d.graph);
    Model m = assignment_of_drawing(d, enc, EncodeMode::Single);
    CHECK(eval_model(enc.cnf, m).satisfied);

    // the interior obstacle cannot play the outside role
    auto outside_enc = encode_outside(d.graph);
    CHECK_THROWS_AS(assignment_of_drawing(d, outside_enc, EncodeMode::Outside), VerifyError);
}

TEST_CASE("pentagram C_5 certificate") {
    ObstacleDrawing d = fixtures::pentagram_c5();
    auto rep = check_representation(d);
    CHECK(rep.valid);
    REQUIRE(rep.outside_checks.size() == 1);
    CHECK(rep.outside_checks[0].pass);

    auto enc = encode_outside(d.graph);
    Model m = assignment_of_drawing(d, enc, EncodeMode::Outside);
    CHECK(eval_model(enc.cnf, m).satisfied);

    // the same drawing also witnesses the weaker single-obstacle instance
    auto senc = encode_single(d.graph);
    Model sm = assignment_of_drawing(d, senc, EncodeMode::Single);
    CHECK(eval_model(senc.cnf, sm).satisfied);
}

TEST_CASE("tampered pentagram fails") {
    // move the band far away so it no longer touches the hull sides
    ObstacleDrawing d = fixtures::pentagram_c5();
    for (auto& p : d.obstacles[0].polygon) p.x += 500;
    auto rep = check_representation(d);
    CHECK_FALSE(rep.valid);
    CHECK(rep.unblocked_non_edges.size() == 5);
    CHECK_THROWS_AS(
        assignment_of_drawing(d, encode_outside(d.graph), EncodeMode::Outside), VerifyError);
}

TEST_CASE("at most one obstacle for assignment extraction") {
    ObstacleDrawing d = fixtures::blocked_c4();
    d.obstacles.push_back({Polygon{{100, 100}, {101, 100}, {100, 101}}, false});
    CHECK_THROWS_AS(assignment_of_drawing(d, encode_single(d.graph), EncodeMode::Single),
                    VerifyError);
}

TEST_CASE("drawing JSON round trip") {
    for (const ObstacleDrawing& d :
         {fixtures::pentagram_c5(), fixtures::blocked_c4(), fixtures::bare_c4()}) {
        ObstacleDrawing back = parse_drawing(serialize_drawing(d));
        CHECK(back.graph == d.graph);
        CHECK(back.coords == d.coords);
        REQUIRE(back.obstacles.size() == d.obstacles.size());
        for (size_t i = 0; i < d.obstacles.size(); ++i) {
            CHECK(back.obstacles[i].polygon == d.obstacles[i].polygon);
            CHECK(back.obstacles[i].outside == d.obstacles[i].outside);
        }
        CHECK(check_representation(back).valid == check_representation(d).valid);
    }
    CHECK_THROWS_AS(parse_drawing("{\"coords\": []}"), VerifyError);
    CHECK_THROWS_AS(parse_drawing("not json"), VerifyError);
    CHECK_THROWS_AS(
        parse_drawing("{\"graph\":{\"n\":1,\"edges\":[]},\"coords\":[[0,0]],"
                      "\"obstacles\":[{\"outside\":true}]}"),
        VerifyError);
}
