#include "cyclotomo/modelset.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

#include "cyclotomo/interval.hpp"

namespace cyclotomo {

namespace {

/// Exact rational from a double (doubles are dyadic rationals).
Rational rational_from_double(double d) {
    mpq_class q(d);
    return Rational(q.get_num(), q.get_den());
}

struct PolygonPreset {
    const char* name;
    long base_power;   // polygon turns by zeta_n^base_power * (-1)^negate
    bool negate;
    long vertex_count;
    long star_exponent;
};

PolygonPreset polygon_preset(long n) {
    switch (n) {
        case 5: return {"decagon", 3, true, 10, 2};    // -zeta_5^3 = e^{i pi/5}
        case 8: return {"octagon", 1, false, 8, 3};    // zeta_8
        case 12: return {"dodecagon", 1, false, 12, 5};  // zeta_12
        default:
            throw std::domain_error("model set windows are available for n in {5, 8, 12}");
    }
}

long star_exponent_for(long n) { return polygon_preset(n).star_exponent; }

/// Interval linear solve: inverse of a dim x dim matrix by Gauss-Jordan with
/// midpoint pivoting; fails (returns false) when a pivot interval straddles
/// zero at this precision.
bool interval_inverse(std::vector<std::vector<RealInterval>>& m,
                      std::vector<std::vector<RealInterval>>& inv, mpfr_prec_t prec) {
    const size_t dim = m.size();
    inv.assign(dim, std::vector<RealInterval>(dim, RealInterval(prec)));
    const RealInterval one(Rational(1), prec);
    for (size_t i = 0; i < dim; ++i) inv[i][i] = one;
    for (size_t col = 0; col < dim; ++col) {
        size_t pivot = col;
        double best = -1;
        for (size_t r = col; r < dim; ++r) {
            double mag = std::abs(m[r][col].mid_double());
            if (!m[r][col].contains_zero() && mag > best) {
                best = mag;
                pivot = r;
            }
        }
        if (best < 0) return false;
        std::swap(m[col], m[pivot]);
        std::swap(inv[col], inv[pivot]);
        RealInterval p = m[col][col];
        for (size_t c = 0; c < dim; ++c) {
            m[col][c] = m[col][c] / p;
            inv[col][c] = inv[col][c] / p;
        }
        for (size_t r = 0; r < dim; ++r) {
            if (r == col) continue;
            RealInterval f = m[r][col];
            for (size_t c = 0; c < dim; ++c) {
                m[r][c] = m[r][c] - f * m[col][c];
                inv[r][c] = inv[r][c] - f * inv[col][c];
            }
        }
    }
    return true;
}

/// Per-coefficient enumeration bounds: any z in Z[zeta_n] with |z| <= R and
/// (non-lattice) |star(z)| <= S has |a_j| <= bound[j]. Derived from a
/// rigorous interval inverse of the real embedding matrix.
std::vector<long> coefficient_bounds(const CutProjectScheme& scheme, const Rational& r2) {
    const long n = scheme.n;
    const long phi = euler_phi(n);
    const size_t dim = static_cast<size_t>(phi);
    if ((scheme.is_lattice && phi != 2) || (!scheme.is_lattice && phi != 4))
        throw std::logic_error("coefficient_bounds: unexpected basis rank");

    for (mpfr_prec_t prec = 128; prec <= 2048; prec *= 2) {
        std::vector<std::vector<RealInterval>> m(dim,
                                                 std::vector<RealInterval>(dim, RealInterval(prec)));
        for (long j = 0; j < phi; ++j) {
            ComplexInterval z = eval_interval(CycNum::zeta(n, j), prec);
            m[0][j] = z.re;
            m[1][j] = z.im;
            if (!scheme.is_lattice) {
                ComplexInterval w =
                    eval_interval(CycNum::zeta(n, (j * scheme.star_exponent) % n), prec);
                m[2][j] = w.re;
                m[3][j] = w.im;
            }
        }
        std::vector<std::vector<RealInterval>> inv;
        if (!interval_inverse(m, inv, prec)) continue;

        RealInterval radius = RealInterval(r2, prec).sqrt();
        std::vector<RealInterval> rhs(dim, radius);
        if (!scheme.is_lattice) {
            RealInterval s(scheme.window.enclosing_radius_bound(), prec);
            rhs[2] = s;
            rhs[3] = s;
        }
        std::vector<long> bounds(dim);
        for (size_t j = 0; j < dim; ++j) {
            double total = 0;
            for (size_t k = 0; k < dim; ++k)
                total += inv[j][k].abs_upper_double() * rhs[k].hi_double();
            if (!std::isfinite(total) || total > 1e7)
                throw std::domain_error("generate_patch: coefficient bound too large; "
                                        "shrink the radius or the window");
            bounds[j] = static_cast<long>(std::floor(total));
        }
        return bounds;
    }
    throw std::logic_error("coefficient_bounds: embedding matrix not invertible");
}

/// |a0 + a1*zeta_n|^2 for the lattice cases as an exact integer.
long lattice_norm2(long n, long a0, long a1) {
    return n == 4 ? a0 * a0 + a1 * a1 : a0 * a0 + a1 * a1 - a0 * a1;
}

struct FloatPoint {
    double x, y;
};

FloatPoint approx(const CycNum& z) {
    FloatApprox f = to_complex_float(z, 64);
    return {f.re, f.im};
}

/// Float prefilter for the window test: half-plane checks for polygons
/// (counterclockwise edges) and a squared-radius check for disks, both
/// loosened by `margin` so no exact member is ever discarded.
struct WindowPrefilter {
    const Window& window;
    double margin;
    std::vector<double> ex, ey, ox, oy;  // edge vectors and origins
    double cx = 0, cy = 0, r2 = 0;

    WindowPrefilter(const Window& w, double m) : window(w), margin(m) {
        if (w.kind == Window::Kind::polygon) {
            const size_t k = w.vertices.size();
            for (size_t i = 0; i < k; ++i) {
                FloatPoint a = approx(w.vertices[i]);
                FloatPoint b = approx(w.vertices[(i + 1) % k]);
                ox.push_back(a.x);
                oy.push_back(a.y);
                ex.push_back(b.x - a.x);
                ey.push_back(b.y - a.y);
            }
        } else {
            FloatPoint c = approx(w.center);
            cx = c.x;
            cy = c.y;
            r2 = w.disk_r2.to_double();
        }
    }

    bool may_contain(double x, double y) const {
        if (window.kind == Window::Kind::polygon) {
            for (size_t i = 0; i < ex.size(); ++i)
                if (ex[i] * (y - oy[i]) - ey[i] * (x - ox[i]) < -margin) return false;
            return true;
        }
        double dx = x - cx, dy = y - cy;
        return dx * dx + dy * dy <= r2 + margin;
    }
};

}  // namespace

bool Window::contains(const CycNum& w) const {
    switch (kind) {
        case Kind::polygon: {
            const size_t k = vertices.size();
            for (size_t i = 0; i < k; ++i)
                if (orientation(vertices[i], vertices[(i + 1) % k], w) == Sign::negative)
                    return false;
            return true;
        }
        case Kind::disk:
            return sign_of_real(CycNum(disk_r2) - norm_squared(w - center)) != Sign::negative;
        case Kind::none:
            break;
    }
    throw std::logic_error("Window::contains: window has no kind");
}

Rational Window::enclosing_radius_bound() const {
    double best = 0;
    if (kind == Kind::polygon) {
        for (const CycNum& v : vertices) {
            ComplexInterval e = eval_interval(v, 128);
            double b = (e.re * e.re + e.im * e.im).sqrt().hi_double();
            best = std::max(best, b);
        }
    } else if (kind == Kind::disk) {
        ComplexInterval c = eval_interval(center, 128);
        best = (c.re * c.re + c.im * c.im).sqrt().hi_double() +
               RealInterval(disk_r2, 128).sqrt().hi_double();
    } else {
        throw std::logic_error("enclosing_radius_bound: window has no kind");
    }
    return rational_from_double(std::nextafter(best, HUGE_VAL));
}

CycNum CutProjectScheme::star(const CycNum& z) const {
    return is_lattice ? z : galois_apply(z, star_exponent);
}

CutProjectScheme make_scheme_lattice(long n) {
    if (n != 3 && n != 4)
        throw std::domain_error("lattice schemes exist for n in {3, 4}");
    CutProjectScheme s;
    s.n = n;
    s.is_lattice = true;
    s.star_exponent = 1;
    s.min_dist2 = Rational(1);
    return s;
}

CutProjectScheme make_scheme_polygon(long n, const Rational& scale, const CycNum& center) {
    if (scale.sgn() <= 0)
        throw std::domain_error("polygon window scale must be positive");
    PolygonPreset p = polygon_preset(n);
    CutProjectScheme s;
    s.n = n;
    s.is_lattice = false;
    s.star_exponent = p.star_exponent;
    s.window.kind = Window::Kind::polygon;
    s.window.preset = p.name;
    s.window.scale = scale;
    s.window.center = center;
    CycNum base = CycNum::zeta(n, p.base_power);
    if (p.negate) base = CycNum(0) - base;
    CycNum v = CycNum(Rational(1));
    for (long k = 0; k < p.vertex_count; ++k) {
        s.window.vertices.push_back(v * CycNum(scale) + center);
        v = v * base;
    }
    // Star images of distinct points differ by at most twice the window
    // radius around its center; |z|^2 |z*|^2 >= 1 bounds the distance below.
    Rational w2 = scale * scale * Rational(4);
    s.min_dist2 = Rational(1) / (w2 * w2);
    return s;
}

CutProjectScheme make_scheme_disk(long n, const Rational& r2, const CycNum& center) {
    if (r2.sgn() <= 0) throw std::domain_error("disk window radius must be positive");
    CutProjectScheme s;
    s.n = n;
    s.is_lattice = false;
    s.star_exponent = star_exponent_for(n);
    s.window.kind = Window::Kind::disk;
    s.window.disk_r2 = r2;
    s.window.center = center;
    Rational w2 = r2 * Rational(4);
    s.min_dist2 = Rational(1) / (w2 * w2);
    return s;
}

CutProjectScheme make_scheme_preset(long n) {
    if (n == 3 || n == 4) return make_scheme_lattice(n);
    return make_scheme_polygon(n, Rational(1), CycNum(0));
}

ModelSetPatch generate_patch(const CutProjectScheme& scheme, const Rational& radius_squared) {
    if (radius_squared.sgn() <= 0)
        throw std::domain_error("generate_patch: radius_squared must be positive");
    ModelSetPatch patch;
    patch.scheme = scheme;
    patch.radius_squared = radius_squared;

    std::vector<long> bound = coefficient_bounds(scheme, radius_squared);

    if (scheme.is_lattice) {
        for (long a0 = -bound[0]; a0 <= bound[0]; ++a0)
            for (long a1 = -bound[1]; a1 <= bound[1]; ++a1) {
                if (Rational(lattice_norm2(scheme.n, a0, a1)) > radius_squared) continue;
                patch.points.push_back(
                    CycNum(scheme.n, {Rational(a0), Rational(a1)}));
            }
        std::sort(patch.points.begin(), patch.points.end(), CycLess{});
        return patch;
    }

    const long n = scheme.n;
    const long s = scheme.star_exponent;
    // Basis values in physical and internal space for the float prefilter.
    double bre[4], bim[4], tre[4], tim[4];
    for (long j = 0; j < 4; ++j) {
        bre[j] = std::cos(2 * M_PI * j / n);
        bim[j] = std::sin(2 * M_PI * j / n);
        tre[j] = std::cos(2 * M_PI * ((j * s) % n) / n);
        tim[j] = std::sin(2 * M_PI * ((j * s) % n) / n);
    }
    double coeff_reach = 0;
    for (long j = 0; j < 4; ++j) coeff_reach += static_cast<double>(bound[j]);
    const double margin = 1e-6 * (1 + coeff_reach * coeff_reach);
    const double r2d = radius_squared.to_double() + margin;
    WindowPrefilter wf(scheme.window, margin);

    const CycNum r2c{radius_squared};
    for (long a0 = -bound[0]; a0 <= bound[0]; ++a0)
        for (long a1 = -bound[1]; a1 <= bound[1]; ++a1)
            for (long a2 = -bound[2]; a2 <= bound[2]; ++a2)
                for (long a3 = -bound[3]; a3 <= bound[3]; ++a3) {
                    const double zx = a0 * bre[0] + a1 * bre[1] + a2 * bre[2] + a3 * bre[3];
                    const double zy = a0 * bim[0] + a1 * bim[1] + a2 * bim[2] + a3 * bim[3];
                    if (zx * zx + zy * zy > r2d) continue;
                    const double wx = a0 * tre[0] + a1 * tre[1] + a2 * tre[2] + a3 * tre[3];
                    const double wy = a0 * tim[0] + a1 * tim[1] + a2 * tim[2] + a3 * tim[3];
                    if (!wf.may_contain(wx, wy)) continue;
                    CycNum z(n, {Rational(a0), Rational(a1), Rational(a2), Rational(a3)});
                    if (sign_of_real(r2c - norm_squared(z)) == Sign::negative) continue;
                    if (!scheme.window.contains(scheme.star(z))) continue;
                    patch.points.push_back(std::move(z));
                }
    std::sort(patch.points.begin(), patch.points.end(), CycLess{});
    return patch;
}

std::vector<Direction> directions_from_patch(const ModelSetPatch& patch, long max_count) {
    if (patch.points.size() < 2)
        throw std::domain_error("directions_from_patch: patch needs at least two points");
    if (max_count < 1)
        throw std::domain_error("directions_from_patch: max_count must be positive");
    struct AngleLess {
        bool operator()(const Slope& a, const Slope& b) const { return angle_less(a, b); }
    };
    std::map<Slope, CycNum, AngleLess> witnesses;
    const auto& pts = patch.points;
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j) {
            CycNum d = pts[j] - pts[i];
            Slope sl = slope_of(d);
            auto it = witnesses.find(sl);
            if (it == witnesses.end()) witnesses.emplace(std::move(sl), std::move(d));
        }
    std::vector<Direction> out;
    for (auto& [sl, vec] : witnesses) {
        if (static_cast<long>(out.size()) >= max_count) break;
        out.push_back(Direction{vec, sl});
    }
    return out;
}

}  // namespace cyclotomo
