#include "cyclotomo/certifier.hpp"

#include <doctest.h>

#include <stdexcept>
#include <string>
#include <vector>

#include "helpers.hpp"

using namespace cyclotomo;
using testutil::dir_inf;
using testutil::dir_slope;

namespace {

std::vector<Direction> slopes_0_1_5_inf() {
    return {dir_slope(0, 4), dir_slope(1, 4), dir_slope(5, 4), dir_inf(4)};
}

}  // namespace

TEST_CASE("bound table and its successor identity") {
    CHECK(tabulated_orders() == std::vector<long>{3, 4, 5, 8, 12});
    long expect_b[] = {6, 6, 10, 8, 12};
    size_t i = 0;
    for (long n : tabulated_orders()) {
        auto mb = magic_bounds(n);
        REQUIRE(mb.has_value());
        CHECK(mb->b == expect_b[i++]);
        CHECK(mb->m == mb->b + 1);
    }
    CHECK(!magic_bounds(7).has_value());
    CHECK(!magic_bounds(6).has_value());
}

TEST_CASE("verdict and rule names are stable") {
    CHECK(std::string(verdict_name(Verdict::Determined)) == "determined");
    CHECK(std::string(verdict_name(Verdict::NotDetermined)) == "not-determined");
    CHECK(std::string(verdict_name(Verdict::Inconclusive)) == "inconclusive");
    CHECK(std::string(rule_name(Rule::CardinalityBelowFour)) == "cardinality-below-four");
    CHECK(std::string(rule_name(Rule::ExceedsBound)) == "exceeds-b_n");
    CHECK(std::string(rule_name(Rule::GoodCrossRatio)) == "good-cross-ratio");
    CHECK(std::string(rule_name(Rule::AllQuadruplesForbidden)) == "all-quadruples-forbidden");
}

TEST_CASE("fewer than four directions never determine") {
    Certificate c = certify(4, {dir_slope(0, 4), dir_slope(1, 4), dir_inf(4)});
    CHECK(c.verdict == Verdict::NotDetermined);
    CHECK(c.rule == Rule::CardinalityBelowFour);
    CHECK(c.cardinality == 3);
    CHECK(!c.witness.has_value());
}

TEST_CASE("more directions than the bound always determine") {
    std::vector<Direction> U;
    for (long k = 0; k < 8; ++k)
        U.push_back(Direction::from_vector(CycNum(1) + CycNum(k) * CycNum::zeta(8, 2)));
    U.push_back(Direction::from_vector(CycNum::zeta(8, 2)));
    REQUIRE(U.size() == 9);
    Certificate c = certify(8, U);
    CHECK(c.verdict == Verdict::Determined);
    CHECK(c.rule == Rule::ExceedsBound);
    CHECK(c.bound == 8);
}

TEST_CASE("four directions with an all-forbidden cross ratio are inconclusive") {
    Certificate c = certify(4, {dir_slope(0, 4), dir_slope(1, 4), dir_slope(2, 4), dir_inf(4)});
    CHECK(c.verdict == Verdict::Inconclusive);
    CHECK(c.rule == Rule::AllQuadruplesForbidden);
}

TEST_CASE("a cross ratio outside the forbidden set certifies determination") {
    Certificate c = certify(4, slopes_0_1_5_inf());
    CHECK(c.verdict == Verdict::Determined);
    CHECK(c.rule == Rule::GoodCrossRatio);
    REQUIRE(c.witness.has_value());
    CHECK(c.witness->ratio == CycNum(Rational(5, 4)));
    CHECK(!forbidden_set(4).contains(c.witness->ratio));

    // The witness's arranged order is the angle order of its slopes, and the
    // ratio is the cross ratio of the arranged slopes.
    std::vector<Direction> U = slopes_0_1_5_inf();
    std::vector<Slope> arranged;
    for (size_t i : c.witness->arranged) arranged.push_back(U[i].slope);
    for (size_t i = 0; i + 1 < arranged.size(); ++i)
        CHECK(angle_less(arranged[i], arranged[i + 1]));
    CHECK(cross_ratio(arranged[0], arranged[1], arranged[2], arranged[3]) ==
          c.witness->ratio);
}

TEST_CASE("adding directions preserves a good-cross-ratio verdict") {
    std::vector<Direction> U = slopes_0_1_5_inf();
    U.push_back(dir_slope(3, 4));
    Certificate c = certify(4, U);
    CHECK(c.verdict == Verdict::Determined);
    U.push_back(dir_slope(7, 4));
    CHECK(certify(4, U).verdict == Verdict::Determined);
}

TEST_CASE("rotating every direction by a right angle preserves the verdict") {
    std::vector<Direction> U;
    for (const Direction& d : slopes_0_1_5_inf())
        U.push_back(Direction::from_vector(d.vector * CycNum::zeta(4)));
    Certificate c = certify(4, U);
    CHECK(c.verdict == Verdict::Determined);
    CHECK(c.rule == Rule::GoodCrossRatio);
}

TEST_CASE("certify validates its inputs") {
    CHECK_THROWS_AS(certify(2, slopes_0_1_5_inf()), std::domain_error);
    CHECK_THROWS_AS(certify(4, {dir_slope(0, 4), dir_slope(0, 4)}), std::domain_error);
    CHECK_THROWS_AS(
        certify(4, {dir_slope(0, 4), Direction::from_vector(CycNum::zeta(8))}),
        std::domain_error);
}

TEST_CASE("suggested directions come back certified") {
    std::vector<Direction> four = suggest_directions(4, 4, 3);
    REQUIRE(four.size() == 4);
    Certificate c4 = certify(4, four);
    CHECK(c4.verdict == Verdict::Determined);
    CHECK(c4.rule == Rule::GoodCrossRatio);

    std::vector<Direction> twelve = suggest_directions(12, 4, 2);
    CHECK(certify(12, twelve).verdict == Verdict::Determined);

    std::vector<Direction> eleven = suggest_directions(5, 11, 2);
    REQUIRE(eleven.size() == 11);
    Certificate c5 = certify(5, eleven);
    CHECK(c5.verdict == Verdict::Determined);
    CHECK(c5.rule == Rule::ExceedsBound);

    CHECK_THROWS_AS(suggest_directions(4, 3, 3), std::domain_error);
    CHECK_THROWS_AS(suggest_directions(4, 4, 0), std::domain_error);
    CHECK_THROWS_AS(suggest_directions(4, 100, 1), std::runtime_error);
}
