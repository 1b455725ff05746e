#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>

namespace cyclotomo {

/// Arbitrary-precision rational in canonical form:
/// gcd(|numerator|, denominator) = 1 and denominator > 0.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}
    Rational(long n, long d) : Rational(mpz_class(n), mpz_class(d)) {}
    Rational(const mpz_class& n, const mpz_class& d) : q_(n, d) {
        if (d == 0) throw std::domain_error("Rational: zero denominator");
        q_.canonicalize();
    }

    /// Parses "num" or "num/den" with optional sign, decimal digits only.
    static Rational from_string(const std::string& s) {
        auto slash = s.find('/');
        mpz_class n, d;
        if (slash == std::string::npos) {
            if (n.set_str(s, 10) != 0)
                throw std::domain_error("Rational: bad integer literal '" + s + "'");
            d = 1;
        } else {
            if (n.set_str(s.substr(0, slash), 10) != 0 ||
                d.set_str(s.substr(slash + 1), 10) != 0)
                throw std::domain_error("Rational: bad rational literal '" + s + "'");
        }
        return Rational(n, d);
    }

    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }
    std::string num_string() const { return q_.get_num().get_str(); }
    std::string den_string() const { return q_.get_den().get_str(); }
    std::string to_string() const {
        return q_.get_den() == 1 ? num_string() : num_string() + "/" + den_string();
    }

    double to_double() const { return q_.get_d(); }
    int sgn() const { return mpq_sgn(q_.get_mpq_t()); }
    bool is_zero() const { return sgn() == 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.cmp(b) == 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.cmp(b) != 0; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.cmp(b) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.cmp(b) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.cmp(b) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.cmp(b) >= 0; }

    int cmp(const Rational& o) const { return mpq_cmp(q_.get_mpq_t(), o.q_.get_mpq_t()); }

    friend Rational abs(const Rational& a) { return a.sgn() < 0 ? -a : a; }

    const mpq_class& raw() const { return q_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& a) {
        return os << a.to_string();
    }

private:
    explicit Rational(mpq_class q) : q_(std::move(q)) {}  // already canonical
    mpq_class q_;
};

}  // namespace cyclotomo
