#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "cyclotomo/cyclotomic.hpp"
#include "cyclotomo/geometry.hpp"

namespace testutil {

using cyclotomo::CycLess;
using cyclotomo::CycNum;
using cyclotomo::Direction;
using cyclotomo::Rational;
using cyclotomo::Slope;

inline std::mt19937_64 rng(uint64_t seed) { return std::mt19937_64(seed); }

inline Rational random_rational(std::mt19937_64& g, long num_bound = 9, long den_bound = 9) {
    std::uniform_int_distribution<long> num(-num_bound, num_bound);
    std::uniform_int_distribution<long> den(1, den_bound);
    return Rational(num(g), den(g));
}

/// Random element of Q(zeta_order) with small rational coefficients.
inline CycNum random_cyc(std::mt19937_64& g, long order) {
    const long phi = cyclotomo::euler_phi(order);
    std::vector<Rational> c;
    c.reserve(static_cast<size_t>(phi));
    for (long j = 0; j < phi; ++j) c.push_back(random_rational(g));
    return CycNum(order, std::move(c));
}

inline CycNum random_nonzero(std::mt19937_64& g, long order) {
    for (;;) {
        CycNum z = random_cyc(g, order);
        if (!z.is_zero()) return z;
    }
}

inline Direction dir_slope(long k, long n) {
    return Direction::from_slope(Slope(CycNum(k)), n);
}

inline Direction dir_inf(long n) { return Direction::from_slope(Slope::infinity(), n); }

/// The Gaussian integer a + b*zeta_4.
inline CycNum gauss(long a, long b) { return CycNum(4, {Rational(a), Rational(b)}); }

/// Value-level set equality: representation orders may differ between the
/// two lists, so match elements by exact equality instead of sorting.
inline bool same_point_set(const std::vector<CycNum>& a, const std::vector<CycNum>& b) {
    if (a.size() != b.size()) return false;
    std::vector<bool> used(b.size(), false);
    for (const CycNum& x : a) {
        bool hit = false;
        for (size_t j = 0; j < b.size(); ++j) {
            if (used[j] || !(x == b[j])) continue;
            used[j] = hit = true;
            break;
        }
        if (!hit) return false;
    }
    return true;
}

}  // namespace testutil
