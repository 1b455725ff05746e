#include "cyclotomo/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace cyclotomo {

long euler_phi(long n) {
    if (n <= 0) throw std::domain_error("euler_phi: need n >= 1");
    long result = n, m = n;
    for (long p = 2; p * p <= m; ++p)
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    if (m > 1) result -= result / m;
    return result;
}

namespace {

// Integer polynomials, ascending coefficients.
using ZPoly = std::vector<mpz_class>;

ZPoly zp_mul(const ZPoly& a, const ZPoly& b) {
    ZPoly r(a.size() + b.size() - 1, mpz_class(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

// Exact division by a monic divisor; the remainder must vanish.
ZPoly zp_divexact_monic(ZPoly a, const ZPoly& b) {
    if (a.size() < b.size()) throw std::logic_error("zp_divexact_monic: degree underflow");
    ZPoly q(a.size() - b.size() + 1, mpz_class(0));
    for (size_t k = q.size(); k-- > 0;) {
        q[k] = a[k + b.size() - 1];
        if (q[k] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) a[k + j] -= q[k] * b[j];
    }
    for (const auto& c : a)
        if (c != 0) throw std::logic_error("zp_divexact_monic: nonzero remainder");
    return q;
}

ZPoly cyclo_poly_impl(long n, std::map<long, ZPoly>& memo) {
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    ZPoly num(n + 1, mpz_class(0));
    num[0] = -1;
    num[n] = 1;
    ZPoly den{mpz_class(1)};
    for (long d = 1; d < n; ++d)
        if (n % d == 0) den = zp_mul(den, cyclo_poly_impl(d, memo));
    ZPoly q = zp_divexact_monic(std::move(num), den);
    memo[n] = q;
    return q;
}

}  // namespace

std::vector<mpz_class> cyclotomic_polynomial(long n) {
    if (n < 1) throw std::domain_error("cyclotomic_polynomial: need n >= 1");
    static std::mutex mu;
    static std::map<long, ZPoly> memo;
    std::lock_guard<std::mutex> lock(mu);
    return cyclo_poly_impl(n, memo);
}

struct OrderData {
    long N = 1;
    long phi = 1;
    std::vector<mpz_class> phi_poly;          // monic, ascending, size phi+1
    std::vector<std::vector<Rational>> red;   // x^e mod Phi_N for e in [phi, N)
};

namespace {

std::shared_ptr<const OrderData> get_order_data(long n) {
    if (n < 1) throw std::domain_error("CycNum: order must be >= 1");
    static std::mutex mu;
    static std::map<long, std::shared_ptr<const OrderData>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    auto od = std::make_shared<OrderData>();
    od->N = n;
    od->phi = euler_phi(n);
    od->phi_poly = cyclotomic_polynomial(n);
    od->red.reserve(n - od->phi);
    if (n > od->phi) {
        // x^phi = -(c_0 + c_1 x + ... + c_{phi-1} x^{phi-1})
        std::vector<Rational> cur(od->phi, Rational(0));
        for (long k = 0; k < od->phi; ++k) cur[k] = Rational(-od->phi_poly[k], mpz_class(1));
        od->red.push_back(cur);
        for (long e = od->phi + 1; e < n; ++e) {
            std::vector<Rational> next(od->phi, Rational(0));
            const Rational top = cur[od->phi - 1];
            for (long k = od->phi - 1; k >= 1; --k) next[k] = cur[k - 1];
            if (!top.is_zero())
                for (long k = 0; k < od->phi; ++k) next[k] += top * od->red[0][k];
            od->red.push_back(next);
            cur = od->red.back();
        }
    }
    cache[n] = od;
    return od;
}

// Reduces a raw power-expansion (coefficients of x^0..x^{len-1}, len <= 2N)
// to the canonical phi-length form: folds x^e for e >= N via x^N = 1, then
// rewrites x^e for phi <= e < N with the reduction table.
std::vector<Rational> reduce_raw(const OrderData& od, std::vector<Rational> w) {
    for (long e = static_cast<long>(w.size()) - 1; e >= od.N; --e)
        if (!w[e].is_zero()) {
            w[e - od.N] += w[e];
            w[e] = Rational(0);
        }
    std::vector<Rational> r(od.phi, Rational(0));
    const long top = std::min<long>(static_cast<long>(w.size()), od.N);
    for (long e = 0; e < std::min<long>(top, od.phi); ++e) r[e] = w[e];
    for (long e = od.phi; e < top; ++e)
        if (!w[e].is_zero()) {
            const auto& row = od.red[e - od.phi];
            for (long k = 0; k < od.phi; ++k) r[k] += w[e] * row[k];
        }
    return r;
}

// Rational polynomials for the extended Euclid in cyc_inv.
using QPoly = std::vector<Rational>;

void qp_norm(QPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

QPoly qp_sub_mul(QPoly a, const QPoly& q, const QPoly& b) {  // a - q*b
    if (!q.empty() && !b.empty()) {
        a.resize(std::max(a.size(), q.size() + b.size() - 1), Rational(0));
        for (size_t i = 0; i < q.size(); ++i) {
            if (q[i].is_zero()) continue;
            for (size_t j = 0; j < b.size(); ++j) a[i + j] -= q[i] * b[j];
        }
    }
    qp_norm(a);
    return a;
}

// Division with remainder; b nonzero and normalized.
std::pair<QPoly, QPoly> qp_divmod(QPoly a, const QPoly& b) {
    qp_norm(a);
    QPoly q;
    if (a.size() >= b.size()) {
        q.assign(a.size() - b.size() + 1, Rational(0));
        const Rational& lead = b.back();
        for (size_t k = q.size(); k-- > 0;) {
            Rational c = a[k + b.size() - 1] / lead;
            q[k] = c;
            if (c.is_zero()) continue;
            for (size_t j = 0; j < b.size(); ++j) a[k + j] -= c * b[j];
        }
    }
    qp_norm(a);
    return {std::move(q), std::move(a)};
}

}  // namespace

CycNum::CycNum() : od_(get_order_data(1)), c_{Rational(0)} {}

CycNum::CycNum(const Rational& r) : od_(get_order_data(1)), c_{r} {}

CycNum::CycNum(long order, std::vector<Rational> coeffs)
    : od_(get_order_data(order)), c_(std::move(coeffs)) {
    if (static_cast<long>(c_.size()) != od_->phi)
        throw std::domain_error("CycNum: coefficient list must have length phi(order)");
}

CycNum::CycNum(std::shared_ptr<const OrderData> od, std::vector<Rational> coeffs)
    : od_(std::move(od)), c_(std::move(coeffs)) {}

CycNum CycNum::zeta(long order, long k) {
    auto od = get_order_data(order);
    long e = ((k % order) + order) % order;
    if (e < od->phi) {
        std::vector<Rational> c(od->phi, Rational(0));
        c[e] = Rational(1);
        return CycNum(od, std::move(c));
    }
    return CycNum(od, od->red[e - od->phi]);
}

long CycNum::order() const { return od_->N; }

bool CycNum::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return x.is_zero(); });
}

bool CycNum::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

Rational CycNum::rational_value() const {
    if (!is_rational()) throw std::domain_error("CycNum: value is not rational");
    return c_[0];
}

CycNum embed_order(const CycNum& a, long m) {
    const long n = a.order();
    if (m < n || m % n != 0)
        throw std::domain_error("embed_order: target order must be a multiple of the order");
    if (m == n) return a;
    auto od = get_order_data(m);
    std::vector<Rational> w(m, Rational(0));
    const long step = m / n;
    for (size_t j = 0; j < a.c_.size(); ++j)
        if (!a.c_[j].is_zero()) w[j * step] += a.c_[j];
    return CycNum(od, reduce_raw(*od, std::move(w)));
}

namespace {

std::pair<CycNum, CycNum> align(const CycNum& a, const CycNum& b) {
    if (a.order() == b.order()) return {a, b};
    long m = std::lcm(a.order(), b.order());
    return {embed_order(a, m), embed_order(b, m)};
}

}  // namespace

CycNum CycNum::operator-() const {
    std::vector<Rational> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
    return CycNum(od_, std::move(c));
}

CycNum operator+(const CycNum& a, const CycNum& b) {
    auto [x, y] = align(a, b);
    std::vector<Rational> c(x.c_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = x.c_[i] + y.c_[i];
    return CycNum(x.od_, std::move(c));
}

CycNum operator-(const CycNum& a, const CycNum& b) {
    auto [x, y] = align(a, b);
    std::vector<Rational> c(x.c_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = x.c_[i] - y.c_[i];
    return CycNum(x.od_, std::move(c));
}

CycNum operator*(const CycNum& a, const CycNum& b) {
    auto [x, y] = align(a, b);
    const OrderData& od = *x.od_;
    std::vector<Rational> w(std::max<long>(2 * od.phi - 1, od.phi), Rational(0));
    for (size_t i = 0; i < x.c_.size(); ++i) {
        if (x.c_[i].is_zero()) continue;
        for (size_t j = 0; j < y.c_.size(); ++j) {
            if (y.c_[j].is_zero()) continue;
            w[i + j] += x.c_[i] * y.c_[j];
        }
    }
    return CycNum(x.od_, reduce_raw(od, std::move(w)));
}

CycNum cyc_inv(const CycNum& a) {
    if (a.is_zero()) throw std::domain_error("cyc_inv: division by zero");
    const OrderData& od = *a.od_;
    QPoly r0(od.phi_poly.size());
    for (size_t i = 0; i < od.phi_poly.size(); ++i) r0[i] = Rational(od.phi_poly[i], mpz_class(1));
    QPoly r1 = a.c_;
    qp_norm(r1);
    QPoly s0, s1{Rational(1)};
    while (r1.size() > 1) {
        auto [q, r2] = qp_divmod(r0, r1);
        QPoly s2 = qp_sub_mul(std::move(s0), q, s1);
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // Phi_N is irreducible and deg a < deg Phi_N, so the gcd is a nonzero constant.
    if (r1.empty()) throw std::logic_error("cyc_inv: unexpected zero gcd");
    const Rational c = r1[0];
    std::vector<Rational> u(od.phi, Rational(0));
    for (size_t i = 0; i < s1.size(); ++i) u[i] = s1[i] / c;
    return CycNum(a.od_, std::move(u));
}

CycNum operator/(const CycNum& a, const CycNum& b) { return a * cyc_inv(b); }

bool operator==(const CycNum& a, const CycNum& b) {
    auto [x, y] = align(a, b);
    return x.c_ == y.c_;
}

CycNum galois_apply(const CycNum& a, long s) {
    const OrderData& od = *a.od_;
    const long sm = ((s % od.N) + od.N) % od.N;
    if (std::gcd(sm, od.N) != 1)
        throw std::domain_error("galois_apply: exponent not coprime to the order");
    std::vector<Rational> w(od.N, Rational(0));
    for (size_t j = 0; j < a.c_.size(); ++j)
        if (!a.c_[j].is_zero()) w[(static_cast<long>(j) * sm) % od.N] += a.c_[j];
    return CycNum(a.od_, reduce_raw(od, std::move(w)));
}

CycNum cyc_conj(const CycNum& a) { return galois_apply(a, a.order() - 1); }

CycNum reduce_order(const CycNum& a, long n) {
    const long N = a.order();
    if (n < 1 || N % n != 0)
        throw std::domain_error("reduce_order: target order must divide the order");
    if (n == N) return a;
    const long phi_n = euler_phi(n);
    const long phi_N = a.od_->phi;
    // Columns: coefficients of zeta_n^j embedded into order N.
    std::vector<std::vector<Rational>> aug(phi_N, std::vector<Rational>(phi_n + 1, Rational(0)));
    for (long j = 0; j < phi_n; ++j) {
        CycNum col = CycNum::zeta(N, j * (N / n));
        for (long r = 0; r < phi_N; ++r) aug[r][j] = col.c_[r];
    }
    for (long r = 0; r < phi_N; ++r) aug[r][phi_n] = a.c_[r];
    long rank = 0;
    std::vector<long> pivot_col(phi_n, -1);
    for (long col = 0; col < phi_n && rank < phi_N; ++col) {
        long p = -1;
        for (long r = rank; r < phi_N; ++r)
            if (!aug[r][col].is_zero()) { p = r; break; }
        if (p < 0) continue;
        std::swap(aug[p], aug[rank]);
        const Rational inv_lead = Rational(1) / aug[rank][col];
        for (long k = col; k <= phi_n; ++k) aug[rank][k] *= inv_lead;
        for (long r = 0; r < phi_N; ++r) {
            if (r == rank || aug[r][col].is_zero()) continue;
            const Rational f = aug[r][col];
            for (long k = col; k <= phi_n; ++k) aug[r][k] -= f * aug[rank][k];
        }
        pivot_col[col] = rank;
        ++rank;
    }
    for (long r = rank; r < phi_N; ++r)
        if (!aug[r][phi_n].is_zero())
            throw std::domain_error("reduce_order: value is not in the subfield");
    std::vector<Rational> x(phi_n, Rational(0));
    for (long col = 0; col < phi_n; ++col)
        if (pivot_col[col] >= 0) x[col] = aug[pivot_col[col]][phi_n];
    return CycNum(n, std::move(x));
}

CycNum pow(CycNum a, long k) {
    if (k < 0) throw std::domain_error("pow: negative exponent");
    CycNum r(Rational(1));
    while (k > 0) {
        if (k & 1) r = r * a;
        a = a * a;
        k >>= 1;
    }
    return r;
}

bool is_real(const CycNum& a) { return cyc_conj(a) == a; }

bool in_subfield(const CycNum& a, long n) {
    const long N = a.order();
    if (n < 1 || N % n != 0)
        throw std::domain_error("in_subfield: n must divide the order");
    for (long s = 1 + n; s < N; s += n)
        if (std::gcd(s, N) == 1 && galois_apply(a, s) != a) return false;
    return true;
}

namespace {

constexpr mpfr_prec_t kMaxSignPrec = 1 << 20;

template <typename Pick>
Sign adaptive_sign(const CycNum& a, Pick pick) {
    for (mpfr_prec_t prec = 64; prec <= kMaxSignPrec; prec *= 2) {
        const RealInterval iv = pick(eval_interval(a, prec));
        if (iv.is_positive()) return Sign::positive;
        if (iv.is_negative()) return Sign::negative;
    }
    // A nonzero algebraic number is bounded away from zero, so this is
    // unreachable for exact nonzero inputs.
    throw std::logic_error("adaptive_sign: sign undecided at maximum precision");
}

}  // namespace

Sign sign_of_real(const CycNum& a) {
    if (!is_real(a)) throw std::domain_error("sign_of_real: value is not real");
    if (a.is_zero()) return Sign::zero;
    if (a.is_rational()) return a.c_[0].sgn() > 0 ? Sign::positive : Sign::negative;
    return adaptive_sign(a, [](const ComplexInterval& iv) { return iv.re; });
}

Sign sign_of_imag(const CycNum& a) {
    if (cyc_conj(a) != -a) throw std::domain_error("sign_of_imag: value is not purely imaginary");
    if (a.is_zero()) return Sign::zero;
    return adaptive_sign(a, [](const ComplexInterval& iv) { return iv.im; });
}

ComplexInterval eval_interval(const CycNum& a, mpfr_prec_t prec) {
    auto table = unit_root_table(a.order(), prec);
    ComplexInterval acc(prec);
    for (size_t j = 0; j < a.c_.size(); ++j)
        if (!a.c_[j].is_zero()) acc = acc + (*table)[j].mul_rational(a.c_[j]);
    return acc;
}

FloatApprox to_complex_float(const CycNum& a, mpfr_prec_t prec) {
    if (prec < 53) throw std::domain_error("to_complex_float: precision must be >= 53");
    const ComplexInterval iv = eval_interval(a, prec);
    FloatApprox f;
    f.re = iv.re.mid_double();
    f.im = iv.im.mid_double();
    f.err = 0.5 * std::max(iv.re.width_double(), iv.im.width_double());
    return f;
}

std::string CycNum::to_string() const {
    std::ostringstream os;
    os << "[order " << od_->N << "]";
    bool any = false;
    for (size_t j = 0; j < c_.size(); ++j) {
        if (c_[j].is_zero()) continue;
        os << (any ? " + " : " ") << c_[j].to_string();
        if (j > 0) os << "*z^" << j;
        any = true;
    }
    if (!any) os << " 0";
    return os.str();
}

bool cyc_less(const CycNum& a, const CycNum& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    const auto& x = a.coeffs();
    const auto& y = b.coeffs();
    for (size_t i = 0; i < x.size(); ++i) {
        const int c = x[i].cmp(y[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

}  // namespace cyclotomo
