#include "cyclotomo/cyclotomic.hpp"

#include <doctest.h>

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "helpers.hpp"

using namespace cyclotomo;
using testutil::random_cyc;
using testutil::random_nonzero;

namespace {

const long kOrders[] = {1, 3, 4, 5, 8, 12, 24};

}  // namespace

TEST_CASE("euler_phi on small arguments") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(2) == 1);
    CHECK(euler_phi(3) == 2);
    CHECK(euler_phi(4) == 2);
    CHECK(euler_phi(5) == 4);
    CHECK(euler_phi(8) == 4);
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(24) == 8);
    CHECK(euler_phi(60) == 16);
    CHECK_THROWS_AS(euler_phi(0), std::domain_error);
}

TEST_CASE("cyclotomic polynomials of small order") {
    CHECK(cyclotomic_polynomial(1) == std::vector<mpz_class>{-1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<mpz_class>{1, 0, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<mpz_class>{1, 0, -1, 0, 1});
}

TEST_CASE("zeta powers reduce canonically") {
    CHECK(CycNum::zeta(4) * CycNum::zeta(4) == CycNum(-1));
    CHECK(pow(CycNum::zeta(12), 12) == CycNum(1));
    CHECK(pow(CycNum::zeta(12), 15) == CycNum::zeta(12, 3));
    CHECK(pow(CycNum::zeta(8), 0) == CycNum(1));
    CHECK_THROWS_AS(pow(CycNum::zeta(8), -1), std::domain_error);
}

TEST_CASE("construction validates order and coefficient count") {
    CHECK_THROWS_AS(CycNum(0, {}), std::domain_error);
    CHECK_THROWS_AS(CycNum(12, {Rational(1)}), std::domain_error);
    CHECK(CycNum(12, {Rational(1), Rational(0), Rational(0), Rational(0)}) == CycNum(1));
}

TEST_CASE("field inverse is exact") {
    CycNum a = CycNum(1) - CycNum::zeta(3);
    CycNum inv = cyc_inv(a);
    CHECK(a * inv == CycNum(1));
    CHECK(inv == CycNum(3, {Rational(2, 3), Rational(1, 3)}));
    CHECK_THROWS_AS(cyc_inv(CycNum(0)), std::domain_error);

    auto g = testutil::rng(11);
    for (int i = 0; i < 50; ++i)
        for (long order : kOrders) {
            CycNum z = random_nonzero(g, order);
            CHECK(z * cyc_inv(z) == CycNum(1));
        }
}

TEST_CASE("mixed orders embed into the lcm") {
    CHECK(CycNum::zeta(3) * CycNum::zeta(4) == CycNum::zeta(12, 7));
    CHECK(CycNum::zeta(3) == CycNum::zeta(12, 4));
    CHECK(CycNum::zeta(3) + CycNum(0) == embed_order(CycNum::zeta(3), 12));
}

TEST_CASE("embed_order and reduce_order round-trip") {
    CHECK(embed_order(CycNum::zeta(3), 12) == CycNum::zeta(12, 4));
    CHECK(embed_order(CycNum(1), 24) == CycNum(1));
    CHECK(reduce_order(embed_order(CycNum::zeta(3), 12), 3) == CycNum::zeta(3));
    CHECK_THROWS_AS(embed_order(CycNum::zeta(8), 12), std::domain_error);
    CHECK_THROWS_AS(reduce_order(CycNum::zeta(12), 4), std::domain_error);

    auto g = testutil::rng(12);
    for (int i = 0; i < 50; ++i) {
        CycNum z = random_cyc(g, 4);
        CycNum e = embed_order(z, 24);
        CHECK(in_subfield(e, 4));
        CHECK(reduce_order(e, 4) == z);
    }
}

TEST_CASE("conjugation fixes rationals and inverts zeta") {
    CHECK(cyc_conj(CycNum::zeta(4)) == -CycNum::zeta(4));
    CHECK(cyc_conj(CycNum(Rational(5, 3))) == CycNum(Rational(5, 3)));

    auto g = testutil::rng(13);
    for (int i = 0; i < 50; ++i)
        for (long order : kOrders) {
            CycNum a = random_cyc(g, order);
            CycNum b = random_cyc(g, order);
            CHECK(cyc_conj(cyc_conj(a)) == a);
            CHECK(cyc_conj(a * b) == cyc_conj(a) * cyc_conj(b));
            CHECK(is_real(a * cyc_conj(a)));
        }
}

TEST_CASE("galois automorphisms compose multiplicatively") {
    auto g = testutil::rng(14);
    CHECK(galois_apply(CycNum::zeta(8), 3) == CycNum::zeta(8, 3));
    CHECK_THROWS_AS(galois_apply(CycNum::zeta(8), 2), std::domain_error);
    for (long order : {8L, 12L, 24L}) {
        std::vector<long> units;
        for (long s = 1; s < order; ++s)
            if (std::gcd(s, order) == 1) units.push_back(s);
        std::uniform_int_distribution<size_t> pick(0, units.size() - 1);
        for (int i = 0; i < 40; ++i) {
            CycNum a = random_cyc(g, order);
            long s = units[pick(g)];
            long t = units[pick(g)];
            CHECK(galois_apply(a, 1) == a);
            CHECK(galois_apply(galois_apply(a, s), t) == galois_apply(a, (s * t) % order));
            CHECK(galois_apply(a + a, s) == galois_apply(a, s) + galois_apply(a, s));
        }
    }
}

TEST_CASE("realness and subfield membership are exact") {
    CHECK(is_real(CycNum::zeta(12) + CycNum::zeta(12, 11)));
    CHECK(!is_real(CycNum::zeta(12)));
    CHECK(in_subfield(embed_order(CycNum::zeta(4), 24), 4));
    CHECK(!in_subfield(CycNum::zeta(24), 4));
    CHECK_THROWS_AS(in_subfield(CycNum::zeta(8), 3), std::domain_error);
}

TEST_CASE("sign_of_real decides exactly") {
    CHECK(sign_of_real(CycNum(0)) == Sign::zero);
    CHECK(sign_of_real(CycNum::zeta(12) + CycNum::zeta(12, 11)) == Sign::positive);
    CycNum sqrt5 = CycNum::zeta(5) + CycNum::zeta(5, 4) - CycNum::zeta(5, 2) -
                   CycNum::zeta(5, 3);
    CHECK(sign_of_real(sqrt5) == Sign::positive);
    CHECK(sign_of_real(-sqrt5) == Sign::negative);
    CHECK(sign_of_real(sqrt5 * sqrt5 - CycNum(5)) == Sign::zero);
    CHECK_THROWS_AS(sign_of_real(CycNum::zeta(8)), std::domain_error);
}

TEST_CASE("sign_of_imag avoids embedding i") {
    CycNum z = CycNum::zeta(3) - cyc_conj(CycNum::zeta(3));
    CHECK(sign_of_imag(z) == Sign::positive);
    CHECK(sign_of_imag(-z) == Sign::negative);
    CHECK(sign_of_imag(CycNum(0)) == Sign::zero);
    CHECK_THROWS_AS(sign_of_imag(CycNum(1)), std::domain_error);
}

TEST_CASE("float approximations enclose the value") {
    FloatApprox one = to_complex_float(CycNum(1), 64);
    CHECK(one.re == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(std::abs(one.im) <= 1e-15);
    CHECK(one.err <= 1e-15);

    FloatApprox i = to_complex_float(CycNum::zeta(4), 64);
    CHECK(std::abs(i.re) <= 1e-15);
    CHECK(i.im == doctest::Approx(1.0).epsilon(1e-15));

    FloatApprox z8 = to_complex_float(CycNum::zeta(8), 64);
    CHECK(std::hypot(z8.re, z8.im) == doctest::Approx(1.0).epsilon(1e-12));

    CHECK_THROWS_AS(to_complex_float(CycNum(1), 32), std::domain_error);

    ComplexInterval e = eval_interval(CycNum::zeta(3), 128);
    CHECK(e.re.lo_double() <= -0.5);
    CHECK(e.re.hi_double() >= -0.5);
    CHECK(e.im.lo_double() <= std::sqrt(3.0) / 2);
    CHECK(e.im.hi_double() >= std::sqrt(3.0) / 2 - 1e-15);
}

TEST_CASE("canonical form makes equality a coefficient comparison") {
    auto g = testutil::rng(15);
    for (int i = 0; i < 100; ++i) {
        CycNum a = random_cyc(g, 12);
        CycNum b = random_cyc(g, 12);
        CHECK((a - b).is_zero() == (a == b));
        CHECK(a + CycNum(0) == a);
    }
    CHECK(cyc_less(CycNum(0), CycNum(1)));
    CHECK(!cyc_less(CycNum(1), CycNum(1)));
}

TEST_CASE("rational values are recognized across orders") {
    CHECK(CycNum(Rational(7, 2)).is_rational());
    CHECK(CycNum(Rational(7, 2)).rational_value() == Rational(7, 2));
    CHECK(embed_order(CycNum(Rational(7, 2)), 24).is_rational());
    CHECK(!CycNum::zeta(8).is_rational());
    CHECK_THROWS_AS(CycNum::zeta(8).rational_value(), std::domain_error);
    // zeta_6 in the power basis of order 3: e^{i pi/3} = 1 + zeta_3.
    CHECK(CycNum::zeta(6) == CycNum(1) + CycNum::zeta(3));
}

TEST_CASE("ring axioms hold on random triples") {
    auto g = testutil::rng(16);
    for (int i = 0; i < 80; ++i)
        for (long order : kOrders) {
            CycNum a = random_cyc(g, order);
            CycNum b = random_cyc(g, order);
            CycNum c = random_cyc(g, order);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * b == b * a);
            CHECK(a + (-a) == CycNum(0));
        }
}
