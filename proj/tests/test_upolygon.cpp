#include "cyclotomo/upolygon.hpp"

#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyclotomo/json_io.hpp"
#include "helpers.hpp"

using namespace cyclotomo;
using testutil::dir_inf;
using testutil::dir_slope;
using testutil::gauss;
using testutil::same_point_set;

namespace {

std::vector<CycNum> unit_square() {
    return {CycNum(0), CycNum(1), CycNum(1) + CycNum::zeta(4), CycNum::zeta(4)};
}

/// Counterclockwise hexagon with opposite edges paired by slopes 0, 1, inf.
std::vector<CycNum> hexagon() {
    return {gauss(0, 0), gauss(1, 0), gauss(2, 1), gauss(2, 2), gauss(1, 2), gauss(0, 1)};
}

std::vector<Direction> slopes_01inf() {
    return {dir_slope(0, 4), dir_slope(1, 4), dir_inf(4)};
}

}  // namespace

TEST_CASE("the unit square pairs vertices horizontally and vertically") {
    std::vector<Direction> U{dir_slope(0, 4), dir_inf(4)};
    CHECK(verify_upolygon(unit_square(), U));

    VerifyFailure why;
    CHECK(!verify_upolygon(unit_square(), {dir_slope(1, 4)}, &why));
    CHECK(why.reason == "unpaired-vertex");

    CHECK(!verify_upolygon({CycNum(0), CycNum(1), CycNum(2)}, U, &why));
    CHECK(why.reason == "not-strictly-convex");

    CHECK_THROWS_AS(verify_upolygon({CycNum(0), CycNum(1)}, U), std::domain_error);
}

TEST_CASE("the hexagon satisfies all eighteen pairing obligations") {
    CHECK(verify_upolygon(hexagon(), slopes_01inf()));

    // Clockwise order flips every orientation triple.
    std::vector<CycNum> cw = hexagon();
    std::reverse(cw.begin(), cw.end());
    VerifyFailure why;
    CHECK(!verify_upolygon(cw, slopes_01inf(), &why));
    CHECK(why.reason == "not-strictly-convex");
}

TEST_CASE("search finds a hexagon for slopes 0, 1, infinity") {
    ModelSetPatch p = generate_patch(make_scheme_lattice(4), Rational(2));
    SearchResult r = search_upolygon(p, slopes_01inf(), 8);
    REQUIRE(r.status == SearchStatus::found);
    REQUIRE(r.polygon.has_value());
    CHECK(r.polygon->vertices.size() == 6);
    CHECK(verify_upolygon(r.polygon->vertices, r.polygon->U));
    for (const CycNum& v : r.polygon->vertices)
        CHECK(std::binary_search(p.points.begin(), p.points.end(), v, CycLess{}));
    CHECK(r.nodes > 0);
}

TEST_CASE("search reports exhaustion when the patch admits no polygon") {
    ModelSetPatch p = generate_patch(make_scheme_lattice(4), Rational(2));
    std::vector<Direction> U{dir_slope(0, 4), dir_slope(1, 4), dir_slope(5, 4), dir_inf(4)};
    SearchResult r = search_upolygon(p, U, 10);
    CHECK(r.status == SearchStatus::exhausted);
    CHECK(!r.polygon.has_value());
}

TEST_CASE("search respects its node budget") {
    ModelSetPatch p = generate_patch(make_scheme_lattice(4), Rational(2));
    SearchResult r = search_upolygon(p, slopes_01inf(), 8, 2);
    CHECK(r.status == SearchStatus::budget_exceeded);
    CHECK(!r.polygon.has_value());
}

TEST_CASE("search validates directions and vertex cap") {
    ModelSetPatch p = generate_patch(make_scheme_lattice(4), Rational(2));
    CHECK_THROWS_AS(search_upolygon(p, {dir_slope(0, 4)}, 8), std::domain_error);
    CHECK_THROWS_AS(search_upolygon(p, slopes_01inf(), 3), std::domain_error);
    CHECK_THROWS_AS(
        search_upolygon(p, {dir_slope(0, 4), Direction::from_vector(CycNum(-2))}, 8),
        std::domain_error);
}

TEST_CASE("the square splits into its two diagonals") {
    ModelSetPatch p = generate_patch(make_scheme_lattice(4), Rational(9, 4));
    std::vector<Direction> U{dir_slope(0, 4), dir_inf(4)};
    UPolygon square{unit_square(), U};
    CounterexamplePair ce = derive_counterexample(square, p);
    CHECK(same_point_set(ce.F1, {CycNum(0), gauss(1, 1)}));
    CHECK(same_point_set(ce.F2, {CycNum(1), CycNum::zeta(4)}));
    CHECK(xrays_equal(ce.F1, ce.F2, U));
}

TEST_CASE("the hexagon splits into alternating triangles plus the center") {
    ModelSetPatch p = generate_patch(make_scheme_lattice(4), Rational(8));
    UPolygon hex{hexagon(), slopes_01inf()};
    CounterexamplePair ce = derive_counterexample(hex, p);
    CHECK(same_point_set(ce.F1, {gauss(0, 0), gauss(2, 1), gauss(1, 2), gauss(1, 1)}));
    CHECK(same_point_set(ce.F2, {gauss(1, 0), gauss(2, 2), gauss(0, 1), gauss(1, 1)}));
    CHECK(ce.F1.size() == ce.F2.size());
    CHECK(is_convex_subset(ce.F1, p));
    CHECK(is_convex_subset(ce.F2, p));
    CHECK(xrays_equal(ce.F1, ce.F2, slopes_01inf()));
}

TEST_CASE("derivation rejects polygons that fail verification or leave the patch") {
    ModelSetPatch p = generate_patch(make_scheme_lattice(4), Rational(2));
    UPolygon bad{unit_square(), {dir_slope(1, 4)}};
    CHECK_THROWS(derive_counterexample(bad, p));

    ModelSetPatch tiny = generate_patch(make_scheme_lattice(4), Rational(1));
    UPolygon square{unit_square(), {dir_slope(0, 4), dir_inf(4)}};
    CHECK_THROWS(derive_counterexample(square, tiny));  // 1+i is outside
}

TEST_CASE("the bundled dodecagonal fixture replays from scratch") {
    UPolygonFixture fx = fixture_from_json(
        read_json_file(std::string(CYCLOTOMO_SOURCE_DIR) + "/fixtures/upolygon_n12.json"));
    CHECK(fx.scheme.n == 12);
    REQUIRE(fx.directions.size() == 12);
    REQUIRE(fx.vertices.size() == 24);
    CHECK(verify_upolygon(fx.vertices, fx.directions));

    ModelSetPatch patch = generate_patch(fx.scheme, fx.radius_squared);
    for (const CycNum& v : fx.vertices)
        CHECK(std::binary_search(patch.points.begin(), patch.points.end(), v, CycLess{}));

    UPolygon poly{fx.vertices, fx.directions};
    CounterexamplePair ce = derive_counterexample(poly, patch);
    CHECK(!same_point_set(ce.F1, ce.F2));
    CHECK(xrays_equal(ce.F1, ce.F2, fx.directions));
}
