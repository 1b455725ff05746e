#include "cyclotomo/modelset.hpp"

#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "helpers.hpp"

using namespace cyclotomo;
using testutil::gauss;

namespace {

/// Value-level membership: z may use a different representation order than
/// the patch's canonical one.
bool patch_has(const ModelSetPatch& p, const CycNum& z) {
    return std::any_of(p.points.begin(), p.points.end(),
                       [&](const CycNum& q) { return q == z; });
}

}  // namespace

TEST_CASE("lattice schemes and window presets") {
    CutProjectScheme g3 = make_scheme_lattice(3);
    CHECK(g3.is_lattice);
    CHECK(g3.star(CycNum::zeta(3)) == CycNum::zeta(3));
    CHECK(g3.min_dist2 == Rational(1));
    CHECK_THROWS_AS(make_scheme_lattice(5), std::domain_error);

    long star_exp[] = {2, 3, 5};
    const char* names[] = {"decagon", "octagon", "dodecagon"};
    long sides[] = {10, 8, 12};
    size_t i = 0;
    for (long n : {5L, 8L, 12L}) {
        CutProjectScheme s = make_scheme_preset(n);
        CHECK(!s.is_lattice);
        CHECK(s.star_exponent == star_exp[i]);
        CHECK(s.window.preset == names[i]);
        CHECK(s.window.vertices.size() == static_cast<size_t>(sides[i]));
        CHECK(s.window.scale == Rational(1));
        CHECK(s.min_dist2.sgn() > 0);
        CHECK(s.star(CycNum::zeta(n)) == CycNum::zeta(n, star_exp[i]));
        // counterclockwise and conjugation-symmetric vertex ring
        const auto& v = s.window.vertices;
        for (size_t k = 0; k < v.size(); ++k)
            CHECK(orientation(v[k], v[(k + 1) % v.size()], v[(k + 2) % v.size()]) ==
                  Sign::positive);
        for (const CycNum& w : v)
            CHECK(std::count_if(v.begin(), v.end(),
                                [&](const CycNum& u) { return u == cyc_conj(w); }) == 1);
        ++i;
    }
    CHECK_THROWS_AS(make_scheme_preset(7), std::domain_error);
    CHECK_THROWS_AS(make_scheme_polygon(8, Rational(0), CycNum(0)), std::domain_error);
    CHECK_THROWS_AS(make_scheme_disk(8, Rational(-1), CycNum(0)), std::domain_error);
}

TEST_CASE("window membership is exact and closed") {
    CutProjectScheme s = make_scheme_preset(8);
    CHECK(s.window.contains(CycNum(0)));
    CHECK(s.window.contains(CycNum(1)));  // vertex, boundary included
    CHECK(!s.window.contains(CycNum(Rational(101, 100))));
    Rational bound = s.window.enclosing_radius_bound();
    CHECK(bound >= Rational(1));
    CHECK(bound <= Rational(2));

    CutProjectScheme d = make_scheme_disk(8, Rational(2), CycNum(1));
    CHECK(d.window.contains(CycNum(2)));
    CHECK(d.window.contains(CycNum(0)));
    CHECK(!d.window.contains(CycNum(-1)));
}

TEST_CASE("gaussian patch in a small disk") {
    ModelSetPatch p = generate_patch(make_scheme_lattice(4), Rational(9, 4));
    REQUIRE(p.points.size() == 9);
    for (long a = -1; a <= 1; ++a)
        for (long b = -1; b <= 1; ++b) CHECK(patch_has(p, gauss(a, b)));
    CHECK(std::is_sorted(p.points.begin(), p.points.end(), CycLess{}));
    CHECK_THROWS_AS(generate_patch(make_scheme_lattice(4), Rational(0)), std::domain_error);
}

TEST_CASE("triangular patch of radius one is the origin plus six units") {
    ModelSetPatch p = generate_patch(make_scheme_lattice(3), Rational(1));
    REQUIRE(p.points.size() == 7);
    CHECK(patch_has(p, CycNum(0)));
    for (long k = 0; k < 6; ++k) CHECK(patch_has(p, pow(CycNum::zeta(6), k)));
}

TEST_CASE("lattice counts match a direct integer scan") {
    for (long r2 : {1L, 2L, 4L, 8L}) {
        ModelSetPatch p = generate_patch(make_scheme_lattice(4), Rational(r2));
        long expect = 0;
        for (long a = -3; a <= 3; ++a)
            for (long b = -3; b <= 3; ++b)
                if (a * a + b * b <= r2) ++expect;
        CHECK(static_cast<long>(p.points.size()) == expect);
    }
}

TEST_CASE("patch points satisfy the defining predicates exactly") {
    CutProjectScheme s = make_scheme_preset(8);
    ModelSetPatch p = generate_patch(s, Rational(8));
    CHECK(!p.points.empty());
    for (const CycNum& z : p.points) {
        CHECK(sign_of_real(CycNum(p.radius_squared) - norm_squared(z)) != Sign::negative);
        CHECK(s.window.contains(s.star(z)));
    }
}

TEST_CASE("patch growth is monotone in the radius") {
    CutProjectScheme s = make_scheme_preset(12);
    ModelSetPatch small = generate_patch(s, Rational(2));
    ModelSetPatch large = generate_patch(s, Rational(4));
    CHECK(small.points.size() <= large.points.size());
    for (const CycNum& z : small.points) CHECK(patch_has(large, z));
}

TEST_CASE("origin-centered preset patches are conjugation-symmetric") {
    for (long n : {4L, 8L, 12L}) {
        ModelSetPatch p = generate_patch(make_scheme_preset(n), Rational(4));
        for (const CycNum& z : p.points) CHECK(patch_has(p, cyc_conj(z)));
    }
}

TEST_CASE("pairwise squared distances respect the scheme bound") {
    CutProjectScheme s = make_scheme_preset(8);
    ModelSetPatch p = generate_patch(s, Rational(4));
    REQUIRE(p.points.size() >= 2);
    for (size_t i = 0; i < p.points.size(); ++i)
        for (size_t j = i + 1; j < p.points.size(); ++j) {
            CycNum d2 = norm_squared(p.points[i] - p.points[j]);
            CHECK(sign_of_real(d2 - CycNum(s.min_dist2)) != Sign::negative);
        }
}

TEST_CASE("octagonal patch point count is reproducible") {
    ModelSetPatch p = generate_patch(make_scheme_preset(8), Rational(25));
    CHECK(p.points.size() == 65);  // frozen computed artifact
}

TEST_CASE("patch directions are nonparallel and angle-sorted") {
    ModelSetPatch p = generate_patch(make_scheme_lattice(4), Rational(9, 4));
    std::vector<Direction> dirs = directions_from_patch(p, 100);
    for (size_t i = 0; i < dirs.size(); ++i)
        for (size_t j = i + 1; j < dirs.size(); ++j) CHECK(dirs[i].slope != dirs[j].slope);
    for (size_t i = 0; i + 1 < dirs.size(); ++i)
        CHECK(angle_less(dirs[i].slope, dirs[i + 1].slope));
    for (long k : {0L, 1L, -1L, 2L}) {
        const auto target = Slope(CycNum(k));
        CHECK(std::count_if(dirs.begin(), dirs.end(),
                            [&](const Direction& d) { return d.slope == target; }) == 1);
    }
    CHECK(std::count_if(dirs.begin(), dirs.end(), [](const Direction& d) {
              return d.slope.is_infinite();
          }) == 1);

    CHECK(directions_from_patch(p, 3).size() == 3);
    ModelSetPatch tiny;
    tiny.scheme = p.scheme;
    tiny.radius_squared = Rational(0);
    tiny.points = {CycNum(0)};
    CHECK_THROWS_AS(directions_from_patch(tiny, 10), std::domain_error);
}

TEST_CASE("dodecagonal patch realizes the twelve symmetry directions") {
    ModelSetPatch p = generate_patch(make_scheme_preset(12), Rational(4));
    CHECK(p.points.size() == 25);  // frozen computed artifact
    std::vector<Direction> dirs = directions_from_patch(p, 1000);
    for (long k = 0; k < 12; ++k) {
        CycNum v = (k % 2 == 0) ? CycNum::zeta(12, k / 2) : CycNum(1) + CycNum::zeta(12, k);
        Slope target = slope_of(v);
        CHECK(std::count_if(dirs.begin(), dirs.end(),
                            [&](const Direction& d) { return d.slope == target; }) == 1);
    }
}
