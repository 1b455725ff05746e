#include "cyclotomo/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace cyclotomo {

Slope::Slope(CycNum v) : infinite_(false), value_(std::move(v)) {
    if (!is_real(value_)) throw std::domain_error("Slope: finite slope must be real");
}

const CycNum& Slope::value() const {
    if (infinite_) throw std::domain_error("Slope: infinite slope has no value");
    return value_;
}

std::string Slope::to_string() const {
    if (infinite_) return "inf";
    if (value_.is_rational()) return value_.rational_value().to_string();
    return value_.to_string();
}

Slope slope_of(const CycNum& z) {
    if (z.is_zero()) throw std::domain_error("slope_of: zero vector");
    const CycNum den = re_twice(z);
    if (den.is_zero()) return Slope::infinity();
    const long m = std::lcm(z.order(), 4L);
    const CycNum minus_i = -CycNum::zeta(m, m / 4);
    return Slope(minus_i * im_twice_i(z) / den);
}

bool angle_less(const Slope& a, const Slope& b) {
    auto rank = [](const Slope& s) {
        if (s.is_infinite()) return 1;
        return sign_of_real(s.value()) >= Sign::zero ? 0 : 2;
    };
    const int ra = rank(a), rb = rank(b);
    if (ra != rb) return ra < rb;
    if (ra == 1) return false;
    return sign_of_real(a.value() - b.value()) == Sign::negative;
}

std::vector<size_t> angle_order(const std::vector<Slope>& slopes) {
    std::vector<size_t> idx(slopes.size());
    std::iota(idx.begin(), idx.end(), size_t{0});
    std::sort(idx.begin(), idx.end(),
              [&](size_t i, size_t j) { return angle_less(slopes[i], slopes[j]); });
    for (size_t k = 1; k < idx.size(); ++k)
        if (slopes[idx[k - 1]] == slopes[idx[k]])
            throw std::domain_error("angle_order: duplicate slopes");
    return idx;
}

Direction Direction::from_vector(CycNum v) {
    Slope s = slope_of(v);  // rejects zero
    return Direction{std::move(v), std::move(s)};
}

Direction Direction::from_slope(const Slope& s, long n) {
    if (n < 1) throw std::domain_error("Direction: order must be >= 1");
    if (s.is_infinite()) {
        // A purely imaginary element exists for every n >= 3.
        CycNum w = CycNum::zeta(n) - CycNum::zeta(n, n - 1);
        if (w.is_zero())
            throw std::domain_error("Direction: no vertical direction in Q(zeta_" +
                                    std::to_string(n) + ")");
        return Direction{std::move(w), s};
    }
    const CycNum& t = s.value();
    if (t.is_zero()) return Direction{CycNum(1), s};
    // z = 1 + i t has slope t; t is realizable iff z / conj(z) = e^{2i theta}
    // lies in Q(zeta_n), and then 1 + z/conj(z) is a witness in Q(zeta_n).
    const long m = std::lcm(std::lcm(t.order(), 4L), n);
    const CycNum i = CycNum::zeta(m, m / 4);
    const CycNum z = CycNum(1) + i * embed_order(t, m);
    const CycNum v = z / cyc_conj(z);
    if (!in_subfield(v, n))
        throw std::domain_error("Direction: slope " + s.to_string() +
                                " is not realizable in Q(zeta_" + std::to_string(n) + ")");
    CycNum w = CycNum(1) + reduce_order(v, n);
    if (w.is_zero() || slope_of(w) != s)
        throw std::logic_error("Direction: witness construction failed");
    return Direction{std::move(w), s};
}

CycNum Direction::slope_witness() const {
    if (slope.is_infinite()) return CycNum::zeta(4);
    return CycNum(1) + CycNum::zeta(4) * slope.value();
}

CycNum cross_ratio(const Slope& t1, const Slope& t2, const Slope& t3, const Slope& t4) {
    const Slope* t[4] = {&t1, &t2, &t3, &t4};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (*t[i] == *t[j]) throw std::domain_error("cross_ratio: repeated slopes");
    auto factor = [&](int i, int j) -> std::optional<CycNum> {
        if (t[i]->is_infinite() || t[j]->is_infinite()) return std::nullopt;
        return t[i]->value() - t[j]->value();
    };
    CycNum num(1), den(1);
    if (auto f = factor(2, 0)) num = num * *f;
    if (auto f = factor(3, 1)) num = num * *f;
    if (auto f = factor(2, 1)) den = den * *f;
    if (auto f = factor(3, 0)) den = den * *f;
    return num / den;
}

CycNum re_twice(const CycNum& z) { return z + cyc_conj(z); }
CycNum im_twice_i(const CycNum& z) { return z - cyc_conj(z); }

CycNum norm_squared(const CycNum& z) { return z * cyc_conj(z); }

Sign orientation(const CycNum& p, const CycNum& q, const CycNum& r) {
    const CycNum u = q - p;
    const CycNum v = r - p;
    return sign_of_imag(im_twice_i(cyc_conj(u) * v));
}

bool point_less(const CycNum& a, const CycNum& b) {
    const CycNum d = a - b;
    switch (sign_of_real(re_twice(d))) {
        case Sign::negative: return true;
        case Sign::positive: return false;
        case Sign::zero: break;
    }
    return sign_of_imag(im_twice_i(d)) == Sign::negative;
}

std::vector<CycNum> convex_hull(std::vector<CycNum> points) {
    std::sort(points.begin(), points.end(), point_less);
    points.erase(std::unique(points.begin(), points.end(),
                             [](const CycNum& a, const CycNum& b) { return a == b; }),
                 points.end());
    const size_t n = points.size();
    if (n <= 2) return points;
    std::vector<CycNum> hull;
    hull.reserve(2 * n);
    // Lower chain, then upper chain; strict left turns only.
    for (size_t pass = 0; pass < 2; ++pass) {
        const size_t base = hull.size();
        for (size_t k = 0; k < n; ++k) {
            const CycNum& p = pass == 0 ? points[k] : points[n - 1 - k];
            while (hull.size() >= base + 2 &&
                   orientation(hull[hull.size() - 2], hull.back(), p) != Sign::positive)
                hull.pop_back();
            hull.push_back(p);
        }
        hull.pop_back();  // chain endpoint repeats as the next chain's start
    }
    return hull;
}

bool in_hull(const CycNum& p, const std::vector<CycNum>& hull) {
    if (hull.empty()) return false;
    if (hull.size() == 1) return p == hull[0];
    if (hull.size() == 2) {
        if (orientation(hull[0], hull[1], p) != Sign::zero) return false;
        const CycNum u = p - hull[0];
        const CycNum v = p - hull[1];
        // 2 Re(conj(u) v) <= 0 iff p lies between the endpoints.
        return sign_of_real(re_twice(cyc_conj(u) * v)) != Sign::positive;
    }
    for (size_t k = 0; k < hull.size(); ++k)
        if (orientation(hull[k], hull[(k + 1) % hull.size()], p) == Sign::negative)
            return false;
    return true;
}

bool strictly_inside(const CycNum& p, const std::vector<CycNum>& hull) {
    if (hull.size() < 3) return false;
    for (size_t k = 0; k < hull.size(); ++k)
        if (orientation(hull[k], hull[(k + 1) % hull.size()], p) != Sign::positive)
            return false;
    return true;
}

}  // namespace cyclotomo
