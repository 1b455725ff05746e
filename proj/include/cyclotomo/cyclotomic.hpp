#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cyclotomo/interval.hpp"
#include "cyclotomo/rational.hpp"

namespace cyclotomo {

/// Exact sign of a real quantity.
enum class Sign { negative = -1, zero = 0, positive = 1 };

inline int sign_int(Sign s) { return static_cast<int>(s); }

long euler_phi(long n);

/// Coefficients of the n-th cyclotomic polynomial, ascending degree, monic,
/// degree euler_phi(n); computed by exact division of x^n - 1 by the
/// cyclotomic polynomials of the proper divisors of n.
std::vector<mpz_class> cyclotomic_polynomial(long n);

struct OrderData;  // per-order reduction tables, shared and immutable

/// Rigorous floating approximation of a complex value.
struct FloatApprox {
    double re = 0.0;
    double im = 0.0;
    double err = 0.0;  // max half-width of the enclosing rectangle
};

/// Element of Q(zeta_N): rational coefficients of zeta_N^0 .. zeta_N^{phi(N)-1}
/// in the power basis, canonically reduced modulo the N-th cyclotomic
/// polynomial. Values are immutable; operations on operands of different
/// orders embed both into the lcm order first. Equality compares values
/// (embedding as needed); see cyc_less for the representation order used by
/// deterministic containers.
class CycNum {
public:
    CycNum();                                      // zero, order 1
    explicit CycNum(const Rational& r);            // rational constant, order 1
    CycNum(long i) : CycNum(Rational(i)) {}
    CycNum(long order, std::vector<Rational> coeffs);

    /// zeta_order^k, canonically reduced.
    static CycNum zeta(long order, long k = 1);

    long order() const;
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    /// True when the value is rational (all non-constant coefficients zero
    /// after reduction to this representation happens to be order-local; a
    /// rational always reduces to this shape in any order's power basis).
    bool is_rational() const;
    Rational rational_value() const;  // requires is_rational()

    CycNum operator-() const;
    friend CycNum operator+(const CycNum& a, const CycNum& b);
    friend CycNum operator-(const CycNum& a, const CycNum& b);
    friend CycNum operator*(const CycNum& a, const CycNum& b);
    friend CycNum operator/(const CycNum& a, const CycNum& b);
    friend bool operator==(const CycNum& a, const CycNum& b);
    friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

    friend CycNum cyc_inv(const CycNum& a);             // requires a != 0
    friend CycNum cyc_conj(const CycNum& a);            // zeta -> zeta^{N-1}
    friend CycNum galois_apply(const CycNum& a, long s);  // requires gcd(s, N) = 1
    friend CycNum embed_order(const CycNum& a, long m);   // requires order | m
    /// Rewrites a in the power basis of Q(zeta_n); requires n | order and the
    /// value to lie in Q(zeta_n) (error otherwise).
    friend CycNum reduce_order(const CycNum& a, long n);

    friend CycNum pow(CycNum a, long k);  // k >= 0

    friend bool is_real(const CycNum& a);
    /// True iff a is fixed by every Galois automorphism sigma_s with
    /// s = 1 (mod n) and gcd(s, N) = 1; requires n | order.
    friend bool in_subfield(const CycNum& a, long n);

    /// Exact sign of a real value: exact zero test first, then adaptive
    /// interval evaluation with doubling precision until zero is excluded.
    friend Sign sign_of_real(const CycNum& a);   // requires is_real(a)
    /// Exact sign of the imaginary part of a purely imaginary value
    /// (conj(a) = -a); avoids embedding i into the field.
    friend Sign sign_of_imag(const CycNum& a);

    friend ComplexInterval eval_interval(const CycNum& a, mpfr_prec_t prec);
    friend FloatApprox to_complex_float(const CycNum& a, mpfr_prec_t prec);

    std::string to_string() const;  // human-readable, for diagnostics

private:
    CycNum(std::shared_ptr<const OrderData> od, std::vector<Rational> coeffs);
    std::shared_ptr<const OrderData> od_;
    std::vector<Rational> c_;
};

/// Strict total order on representations (order, then coefficients
/// lexicographically); used for deterministic containers, not value order.
bool cyc_less(const CycNum& a, const CycNum& b);

struct CycLess {
    bool operator()(const CycNum& a, const CycNum& b) const { return cyc_less(a, b); }
};

}  // namespace cyclotomo
