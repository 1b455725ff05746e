#include "cyclotomo/xray.hpp"

#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "helpers.hpp"

using namespace cyclotomo;
using testutil::dir_inf;
using testutil::dir_slope;
using testutil::gauss;

TEST_CASE("line keys separate parallel lines and nothing else") {
    Direction d = dir_slope(0, 4);
    CHECK(line_key(CycNum(0), d) == CycNum(0));
    CHECK(line_key(CycNum(5), d) == CycNum(0));
    CHECK(line_key(CycNum::zeta(4), d) == CycNum(2) * CycNum::zeta(4));
    CHECK(line_key(CycNum::zeta(4), d) != line_key(CycNum(0), d));

    // Moving along the direction keeps the key.
    CycNum p = gauss(2, 3);
    CycNum step = d.slope_witness() * CycNum(Rational(7, 3));
    CHECK(line_key(p + step, d) == line_key(p, d));

    // Parallel witness vectors produce identical keys.
    Direction d2 = Direction::from_vector(CycNum(-5));
    CHECK(d2.slope == d.slope);
    CHECK(line_key(p, d2) == line_key(p, d));
}

TEST_CASE("an x-ray counts points per line") {
    Direction d = dir_slope(0, 4);
    XRayProfile one = xray({CycNum(0)}, d);
    CHECK(one.lines.size() == 1);
    CHECK(one.total() == 1);

    XRayProfile pr = xray({CycNum(0), CycNum(1), CycNum::zeta(4)}, d);
    CHECK(pr.lines.size() == 2);
    CHECK(pr.total() == 3);
    std::vector<long> counts;
    for (const auto& [key, c] : pr.lines) counts.push_back(c);
    std::sort(counts.begin(), counts.end());
    CHECK(counts == std::vector<long>{1, 2});

    CHECK_THROWS_AS(xray({CycNum(0), CycNum(0)}, d), std::domain_error);
}

TEST_CASE("profile totals partition the set") {
    auto g = testutil::rng(41);
    std::uniform_int_distribution<long> c(-3, 3);
    for (int t = 0; t < 20; ++t) {
        std::vector<CycNum> F;
        for (int k = 0; k < 8; ++k) {
            CycNum z = gauss(c(g), c(g));
            bool dup = false;
            for (const CycNum& q : F) dup = dup || q == z;
            if (!dup) F.push_back(z);
        }
        for (const Direction& d : {dir_slope(0, 4), dir_slope(1, 4), dir_inf(4)})
            CHECK(xray(F, d).total() == static_cast<long>(F.size()));
    }
}

TEST_CASE("x-ray equality is a per-line comparison") {
    std::vector<Direction> U{dir_slope(0, 4)};
    CHECK(xrays_equal({CycNum(0)}, {CycNum(1)}, U));           // same horizontal line
    CHECK(!xrays_equal({CycNum(0)}, {CycNum::zeta(4)}, U));    // different line
    CHECK(!xrays_equal({CycNum(0)}, {CycNum(0), CycNum(1)}, U));
    CHECK(xrays_equal({CycNum(0), CycNum(1)}, {CycNum(0), CycNum(1)},
                      {dir_slope(0, 4), dir_slope(1, 4), dir_inf(4)}));
    CHECK(xrays_equal({}, {}, U));
}

TEST_CASE("the square pair has equal x-rays horizontally and vertically") {
    CycNum i = CycNum::zeta(4);
    std::vector<CycNum> F1{CycNum(0), CycNum(1) + i};
    std::vector<CycNum> F2{CycNum(1), i};
    std::vector<Direction> U{dir_slope(0, 4), dir_inf(4)};
    CHECK(xrays_equal(F1, F2, U));
    U.push_back(dir_slope(1, 4));
    CHECK(!xrays_equal(F1, F2, U));  // the diagonal separates them
}

TEST_CASE("translation shifts lines but preserves count multisets") {
    std::vector<CycNum> F{CycNum(0), CycNum(1), gauss(1, 1), gauss(0, 2)};
    CycNum t = gauss(-2, 5);
    std::vector<CycNum> G;
    for (const CycNum& p : F) G.push_back(p + t);
    for (const Direction& d : {dir_slope(0, 4), dir_slope(2, 4), dir_inf(4)}) {
        XRayProfile pf = xray(F, d);
        XRayProfile pg = xray(G, d);
        std::vector<long> cf, cg;
        for (const auto& [k, c] : pf.lines) cf.push_back(c);
        for (const auto& [k, c] : pg.lines) cg.push_back(c);
        std::sort(cf.begin(), cf.end());
        std::sort(cg.begin(), cg.end());
        CHECK(cf == cg);
    }
}

TEST_CASE("profiles agree across representation orders") {
    // The same point set handed over in order-4 and order-12 coordinates.
    std::vector<CycNum> F4{CycNum(0), CycNum(1), gauss(1, 1)};
    std::vector<CycNum> F12;
    for (const CycNum& p : F4) F12.push_back(embed_order(p, 12));
    for (const Direction& d : {dir_slope(0, 4), dir_slope(1, 4), dir_inf(4)}) {
        CHECK(xrays_equal(F4, F12, {d}));
        CHECK(xray(F4, d).total() == xray(F12, d).total());
    }
}

TEST_CASE("convex subsets are hull-closed within the patch") {
    ModelSetPatch p = generate_patch(make_scheme_lattice(4), Rational(9, 4));
    CHECK(is_convex_subset({}, p));
    for (const CycNum& z : p.points) CHECK(is_convex_subset({z}, p));
    CHECK(is_convex_subset({CycNum(0), gauss(1, 1)}, p));
    CHECK(!is_convex_subset({gauss(-1, 0), gauss(1, 0)}, p));  // misses the origin
    CHECK(is_convex_subset({gauss(-1, 0), gauss(0, 0), gauss(1, 0)}, p));
    CHECK_THROWS_AS(is_convex_subset({gauss(7, 7)}, p), std::domain_error);
}
