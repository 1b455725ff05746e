#pragma once

#include <mpfr.h>

#include <memory>
#include <vector>

#include "cyclotomo/rational.hpp"

namespace cyclotomo {

/// Closed interval [lo, hi] with MPFR endpoints, lo rounded down and hi
/// rounded up through every operation, so the true value is always enclosed.
class RealInterval {
public:
    explicit RealInterval(mpfr_prec_t prec = 64);
    RealInterval(const Rational& v, mpfr_prec_t prec);
    RealInterval(const RealInterval& o);
    RealInterval(RealInterval&& o) noexcept;
    RealInterval& operator=(RealInterval o);
    ~RealInterval();

    mpfr_prec_t precision() const { return prec_; }

    RealInterval operator+(const RealInterval& o) const;
    RealInterval operator-(const RealInterval& o) const;
    RealInterval operator-() const;
    RealInterval operator*(const RealInterval& o) const;
    /// Requires an interval that excludes zero in the denominator.
    RealInterval operator/(const RealInterval& o) const;
    RealInterval sqrt() const;  // requires lo >= 0

    RealInterval mul_rational(const Rational& q) const;

    bool contains_zero() const;
    bool is_positive() const;  // entire interval > 0
    bool is_negative() const;  // entire interval < 0

    double lo_double() const;  // rounded down
    double hi_double() const;  // rounded up
    double mid_double() const;
    double width_double() const;  // rounded up
    /// Upper bound on |x| over the interval, rounded up.
    double abs_upper_double() const;

private:
    friend RealInterval cos_two_pi(long j, long n, mpfr_prec_t prec);
    friend RealInterval sin_two_pi(long j, long n, mpfr_prec_t prec);
    mpfr_t lo_, hi_;
    mpfr_prec_t prec_;
};

/// Rectangular complex enclosure.
struct ComplexInterval {
    RealInterval re, im;

    ComplexInterval(mpfr_prec_t prec = 64) : re(prec), im(prec) {}
    ComplexInterval(RealInterval r, RealInterval i)
        : re(std::move(r)), im(std::move(i)) {}

    ComplexInterval operator+(const ComplexInterval& o) const {
        return {re + o.re, im + o.im};
    }
    ComplexInterval operator*(const ComplexInterval& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    ComplexInterval mul_rational(const Rational& q) const {
        return {re.mul_rational(q), im.mul_rational(q)};
    }
};

/// Enclosures of cos(2*pi*j/n) and sin(2*pi*j/n) for 0 <= j < n.
RealInterval cos_two_pi(long j, long n, mpfr_prec_t prec);
RealInterval sin_two_pi(long j, long n, mpfr_prec_t prec);

/// Memoized enclosures of the n-th roots of unity: entry j encloses
/// exp(2*pi*i*j/n). Safe for concurrent callers.
std::shared_ptr<const std::vector<ComplexInterval>> unit_root_table(long n,
                                                                    mpfr_prec_t prec);

}  // namespace cyclotomo
