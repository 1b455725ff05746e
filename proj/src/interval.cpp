#include "cyclotomo/interval.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace cyclotomo {

RealInterval::RealInterval(mpfr_prec_t prec) : prec_(prec) {
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

RealInterval::RealInterval(const Rational& v, mpfr_prec_t prec) : prec_(prec) {
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
    mpfr_set_q(lo_, v.raw().get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(hi_, v.raw().get_mpq_t(), MPFR_RNDU);
}

RealInterval::RealInterval(const RealInterval& o) : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

RealInterval::RealInterval(RealInterval&& o) noexcept : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
}

RealInterval& RealInterval::operator=(RealInterval o) {
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
    std::swap(prec_, o.prec_);
    return *this;
}

RealInterval::~RealInterval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

RealInterval RealInterval::operator+(const RealInterval& o) const {
    RealInterval r(std::max(prec_, o.prec_));
    mpfr_add(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, hi_, o.hi_, MPFR_RNDU);
    return r;
}

RealInterval RealInterval::operator-(const RealInterval& o) const {
    RealInterval r(std::max(prec_, o.prec_));
    mpfr_sub(r.lo_, lo_, o.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, hi_, o.lo_, MPFR_RNDU);
    return r;
}

RealInterval RealInterval::operator-() const {
    RealInterval r(prec_);
    mpfr_neg(r.lo_, hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    return r;
}

RealInterval RealInterval::operator*(const RealInterval& o) const {
    RealInterval r(std::max(prec_, o.prec_));
    mpfr_t t;
    mpfr_init2(t, r.prec_);
    const mpfr_srcptr as[2] = {lo_, hi_};
    const mpfr_srcptr bs[2] = {o.lo_, o.hi_};
    bool first = true;
    for (auto a : as)
        for (auto b : bs) {
            mpfr_mul(t, a, b, MPFR_RNDD);
            if (first || mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
            mpfr_mul(t, a, b, MPFR_RNDU);
            if (first || mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
            first = false;
        }
    mpfr_clear(t);
    return r;
}

RealInterval RealInterval::operator/(const RealInterval& o) const {
    if (o.contains_zero())
        throw std::domain_error("RealInterval: division by interval containing zero");
    RealInterval r(std::max(prec_, o.prec_));
    mpfr_t t;
    mpfr_init2(t, r.prec_);
    const mpfr_srcptr as[2] = {lo_, hi_};
    const mpfr_srcptr bs[2] = {o.lo_, o.hi_};
    bool first = true;
    for (auto a : as)
        for (auto b : bs) {
            mpfr_div(t, a, b, MPFR_RNDD);
            if (first || mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
            mpfr_div(t, a, b, MPFR_RNDU);
            if (first || mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
            first = false;
        }
    mpfr_clear(t);
    return r;
}

RealInterval RealInterval::sqrt() const {
    if (mpfr_sgn(lo_) < 0)
        throw std::domain_error("RealInterval: sqrt of interval below zero");
    RealInterval r(prec_);
    mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
    mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
    return r;
}

RealInterval RealInterval::mul_rational(const Rational& q) const {
    RealInterval r(prec_);
    if (q.sgn() >= 0) {
        mpfr_mul_q(r.lo_, lo_, q.raw().get_mpq_t(), MPFR_RNDD);
        mpfr_mul_q(r.hi_, hi_, q.raw().get_mpq_t(), MPFR_RNDU);
    } else {
        mpfr_mul_q(r.lo_, hi_, q.raw().get_mpq_t(), MPFR_RNDD);
        mpfr_mul_q(r.hi_, lo_, q.raw().get_mpq_t(), MPFR_RNDU);
    }
    return r;
}

bool RealInterval::contains_zero() const {
    return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
}

bool RealInterval::is_positive() const { return mpfr_sgn(lo_) > 0; }
bool RealInterval::is_negative() const { return mpfr_sgn(hi_) < 0; }

double RealInterval::lo_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double RealInterval::hi_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }

double RealInterval::mid_double() const {
    return 0.5 * (mpfr_get_d(lo_, MPFR_RNDN) + mpfr_get_d(hi_, MPFR_RNDN));
}

double RealInterval::width_double() const {
    mpfr_t w;
    mpfr_init2(w, prec_);
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);
    double d = mpfr_get_d(w, MPFR_RNDU);
    mpfr_clear(w);
    return d;
}

double RealInterval::abs_upper_double() const {
    return std::max(std::abs(lo_double()), std::abs(hi_double()));
}

namespace {

// Encloses theta = 2*pi*j/n with directed rounding, then evaluates cos or sin
// at the lower endpoint and widens by the theta width; valid because both
// functions are 1-Lipschitz.
void trig_enclose(mpfr_ptr out_lo, mpfr_ptr out_hi, long j, long n, mpfr_prec_t prec,
                  bool sine) {
    if (j < 0 || n <= 0) throw std::domain_error("trig enclosure: need 0 <= j, 0 < n");
    mpq_class q(2 * j, n);
    q.canonicalize();
    mpfr_t pi_lo, pi_hi, th_lo, th_hi, w, v_lo, v_hi;
    mpfr_inits2(prec, pi_lo, pi_hi, th_lo, th_hi, w, v_lo, v_hi, (mpfr_ptr)nullptr);
    mpfr_const_pi(pi_lo, MPFR_RNDD);
    mpfr_const_pi(pi_hi, MPFR_RNDU);
    mpfr_mul_q(th_lo, pi_lo, q.get_mpq_t(), MPFR_RNDD);
    mpfr_mul_q(th_hi, pi_hi, q.get_mpq_t(), MPFR_RNDU);
    mpfr_sub(w, th_hi, th_lo, MPFR_RNDU);
    if (sine) {
        mpfr_sin(v_lo, th_lo, MPFR_RNDD);
        mpfr_sin(v_hi, th_lo, MPFR_RNDU);
    } else {
        mpfr_cos(v_lo, th_lo, MPFR_RNDD);
        mpfr_cos(v_hi, th_lo, MPFR_RNDU);
    }
    mpfr_sub(out_lo, v_lo, w, MPFR_RNDD);
    mpfr_add(out_hi, v_hi, w, MPFR_RNDU);
    mpfr_clears(pi_lo, pi_hi, th_lo, th_hi, w, v_lo, v_hi, (mpfr_ptr)nullptr);
}

}  // namespace

RealInterval cos_two_pi(long j, long n, mpfr_prec_t prec) {
    RealInterval r(prec);
    trig_enclose(r.lo_, r.hi_, j, n, prec, false);
    return r;
}

RealInterval sin_two_pi(long j, long n, mpfr_prec_t prec) {
    RealInterval r(prec);
    trig_enclose(r.lo_, r.hi_, j, n, prec, true);
    return r;
}

std::shared_ptr<const std::vector<ComplexInterval>> unit_root_table(long n,
                                                                    mpfr_prec_t prec) {
    static std::mutex mu;
    static std::map<std::pair<long, mpfr_prec_t>,
                    std::shared_ptr<const std::vector<ComplexInterval>>>
        cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(n, prec);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto table = std::make_shared<std::vector<ComplexInterval>>();
    table->reserve(n);
    for (long j = 0; j < n; ++j)
        table->emplace_back(cos_two_pi(j, n, prec), sin_two_pi(j, n, prec));
    auto r = std::shared_ptr<const std::vector<ComplexInterval>>(std::move(table));
    cache[key] = r;
    return r;
}

}  // namespace cyclotomo
