#pragma once

#include <string>
#include <vector>

#include "cyclotomo/cyclotomic.hpp"

namespace cyclotomo {

/// Slope of a direction: a real cyclotomic number, or infinity for vertical.
class Slope {
public:
    static Slope infinity() { return Slope(); }
    explicit Slope(CycNum v);  // requires is_real(v)

    bool is_infinite() const { return infinite_; }
    const CycNum& value() const;  // requires a finite slope

    friend bool operator==(const Slope& a, const Slope& b) {
        if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
        return a.value_ == b.value_;
    }
    friend bool operator!=(const Slope& a, const Slope& b) { return !(a == b); }

    std::string to_string() const;

private:
    Slope() : infinite_(true) {}
    bool infinite_;
    CycNum value_;
};

/// slope(z) = -i (z - conj z) / (z + conj z), or infinity when z + conj z = 0.
Slope slope_of(const CycNum& z);  // requires z != 0

/// Angle order on [0, pi): nonnegative finite slopes ascending, then
/// infinity, then negative slopes ascending.
bool angle_less(const Slope& a, const Slope& b);

/// Permutation sorting slopes by angle; requires pairwise distinct slopes.
std::vector<size_t> angle_order(const std::vector<Slope>& slopes);

/// A Lambda-direction: a nonzero witness vector together with its slope.
/// Directions are parallel iff their slopes are equal.
struct Direction {
    CycNum vector;
    Slope slope;

    static Direction from_vector(CycNum v);  // requires v != 0
    /// Builds a direction of the given slope realizable in Q(zeta_n);
    /// errors when no element of Q(zeta_n) has that slope.
    static Direction from_slope(const Slope& s, long n);

    /// Witness used for X-ray line keys: a function of the slope alone, so
    /// parallel representations of a direction produce identical keys.
    CycNum slope_witness() const;
};

/// <t1,t2,t3,t4> = (t3-t1)(t4-t2) / ((t3-t2)(t4-t1)); a factor containing an
/// infinite slope is cancelled against its counterpart on the other side.
/// Requires pairwise distinct slopes.
CycNum cross_ratio(const Slope& t1, const Slope& t2, const Slope& t3, const Slope& t4);

/// 2*Re(z) as a real value and 2i*Im(z) as a purely imaginary value.
CycNum re_twice(const CycNum& z);
CycNum im_twice_i(const CycNum& z);

/// |z|^2 = z * conj(z), a real value.
CycNum norm_squared(const CycNum& z);

/// Exact sign of the signed area of the triangle (p, q, r); positive is
/// counterclockwise.
Sign orientation(const CycNum& p, const CycNum& q, const CycNum& r);

/// Lexicographic order by (Re, Im), decided exactly.
bool point_less(const CycNum& a, const CycNum& b);

/// Vertices of the convex hull in counterclockwise order; collinear
/// non-vertex points are excluded. Handles 0-, 1- and 2-point hulls.
std::vector<CycNum> convex_hull(std::vector<CycNum> points);

/// Containment with the boundary counted as inside; `hull` must be a
/// convex_hull result.
bool in_hull(const CycNum& p, const std::vector<CycNum>& hull);

/// Strict interior containment (false for boundary points).
bool strictly_inside(const CycNum& p, const std::vector<CycNum>& hull);

}  // namespace cyclotomo
