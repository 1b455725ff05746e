#include "cyclotomo/forbidden.hpp"

#include <doctest.h>

#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <vector>

#include "helpers.hpp"

using namespace cyclotomo;

namespace {

/// sin(pi k1/N) sin(pi k2/N) / (sin(pi k3/N) sin(pi k4/N)); the phase factors
/// cancel because k1 + k2 = k3 + k4.
double sine_ratio(const QuadrupleIndex& q) {
    auto s = [&](long k) { return std::sin(M_PI * static_cast<double>(k) / q.N); };
    return s(q.k1) * s(q.k2) / (s(q.k3) * s(q.k4));
}

bool values_contain(const ForbiddenSet& fs, const Rational& r) {
    return fs.contains(CycNum(r));
}

}  // namespace

TEST_CASE("quadruple index validity") {
    CHECK(QuadrupleIndex{12, 2, 2, 1, 3}.valid());
    CHECK(!QuadrupleIndex{12, 2, 2, 1, 4}.valid());   // sum mismatch
    CHECK(!QuadrupleIndex{12, 2, 2, 2, 2}.valid());   // k3 not below k1
    CHECK(!QuadrupleIndex{12, 3, 2, 1, 4}.valid());   // k1 above k2
    CHECK(!QuadrupleIndex{12, 6, 7, 1, 12}.valid());  // k4 out of range
    CHECK_THROWS_AS(quadruple_value(QuadrupleIndex{12, 2, 2, 1, 4}), std::domain_error);
}

TEST_CASE("quadruple value is real and matches its sine ratio") {
    QuadrupleIndex q{12, 2, 2, 1, 3};
    CycNum v = quadruple_value(q);
    CHECK(is_real(v));

    CycNum z = CycNum::zeta(12);
    CycNum expect = (CycNum(1) - z * z) * (CycNum(1) - z * z) /
                    ((CycNum(1) - z) * (CycNum(1) - pow(z, 3)));
    CHECK(v == expect);

    ComplexInterval e = eval_interval(v, 128);
    CHECK(e.re.mid_double() == doctest::Approx(1.36603).epsilon(1e-5));
    CHECK(e.re.mid_double() == doctest::Approx(sine_ratio(q)).epsilon(1e-9));
}

TEST_CASE("every quadruple at N=12 is real and matches the sine identity") {
    long count = 0;
    for_each_quadruple(12, [&](const QuadrupleIndex& q) {
        REQUIRE(q.valid());
        CycNum v = quadruple_value(q);
        CHECK(is_real(v));
        ComplexInterval e = eval_interval(v, 128);
        double mid = e.re.mid_double();
        double width = e.re.width_double();
        CHECK(std::abs(mid - sine_ratio(q)) <= width + 1e-9 * std::abs(mid));
        ++count;
    });
    CHECK(count > 50);
}

TEST_CASE("rationals 4/3, 3/2, 2, 3, 4 are forbidden at n=3 and n=4") {
    ForbiddenSet f3 = forbidden_set(3);
    CHECK(f3.n == 3);
    CHECK(f3.N == 12);
    for (long num : {4L, 3L}) CHECK(values_contain(f3, Rational(num, num - 1)));
    for (long num : {2L, 3L, 4L}) CHECK(values_contain(f3, Rational(num)));
    CHECK(f3.values.size() == 5);  // frozen computed cardinality
    for (const CycNum& v : f3.values) CHECK(v.is_rational());

    ForbiddenSet f4 = forbidden_set(4);
    CHECK(f4.N == 24);
    for (long num : {4L, 3L}) CHECK(values_contain(f4, Rational(num, num - 1)));
    for (long num : {2L, 3L, 4L}) CHECK(values_contain(f4, Rational(num)));
    CHECK(!values_contain(f4, Rational(5, 4)));
}

TEST_CASE("forbidden values are sorted, deduplicated and provenance-backed") {
    ForbiddenSet fs = forbidden_set(3);
    REQUIRE(fs.values.size() == fs.provenance.size());
    for (size_t i = 0; i < fs.values.size(); ++i) {
        CHECK(is_real(fs.values[i]));
        CHECK(in_subfield(fs.values[i], fs.n));
        if (i > 0)
            CHECK(sign_of_real(fs.values[i] - fs.values[i - 1]) == Sign::positive);
        REQUIRE(!fs.provenance[i].empty());
        for (const QuadrupleIndex& q : fs.provenance[i]) {
            CHECK(q.N == fs.N);
            CHECK(quadruple_value(q) == fs.values[i]);
        }
    }
}

TEST_CASE("the value 2 has a witnessing quadruple at N=24") {
    ForbiddenSet fs = forbidden_set(4);
    bool found = false;
    for (size_t i = 0; i < fs.values.size(); ++i) {
        if (fs.values[i] != CycNum(2)) continue;
        found = true;
        REQUIRE(!fs.provenance[i].empty());
        CHECK(quadruple_value(fs.provenance[i].front()) == CycNum(2));
    }
    CHECK(found);
}

TEST_CASE("membership is a value test, not a representation test") {
    ForbiddenSet fs = forbidden_set(4);
    CHECK(fs.contains(CycNum(2)));
    CHECK(fs.contains(embed_order(CycNum(2), 8)));
    CHECK(fs.contains(embed_order(CycNum(2), 48)));
    CHECK(!fs.contains(CycNum(Rational(5, 4))));
    CHECK_THROWS_AS(fs.contains(CycNum::zeta(8)), std::domain_error);
    CHECK_THROWS_AS(forbidden_set(2), std::domain_error);
}

TEST_CASE("recomputation is deterministic") {
    ForbiddenSet a = forbidden_set(3);
    ForbiddenSet b = forbidden_set(3);
    REQUIRE(a.values.size() == b.values.size());
    for (size_t i = 0; i < a.values.size(); ++i) {
        CHECK(a.values[i] == b.values[i]);
        CHECK(a.provenance[i].size() == b.provenance[i].size());
    }
}

TEST_CASE("disk cache round-trips and survives corruption") {
    std::string dir = "/tmp/cyclotomo-test-cache-XXXXXX";
    REQUIRE(mkdtemp(dir.data()) != nullptr);
    setenv("CYCLOTOMO_CACHE_DIR", dir.c_str(), 1);

    ForbiddenSet fresh = forbidden_set(3);
    std::string path = dir + "/forbidden-n3.json";
    {
        std::ifstream in(path);
        CHECK(in.good());
    }

    ForbiddenSet cached = forbidden_set(3);
    REQUIRE(cached.values.size() == fresh.values.size());
    for (size_t i = 0; i < cached.values.size(); ++i)
        CHECK(cached.values[i] == fresh.values[i]);

    {
        std::ofstream out(path, std::ios::trunc);
        out << "not json";
    }
    ForbiddenSet recovered = forbidden_set(3);
    REQUIRE(recovered.values.size() == fresh.values.size());
    for (size_t i = 0; i < recovered.values.size(); ++i)
        CHECK(recovered.values[i] == fresh.values[i]);

    unsetenv("CYCLOTOMO_CACHE_DIR");
    std::remove(path.c_str());
    rmdir(dir.c_str());
}
