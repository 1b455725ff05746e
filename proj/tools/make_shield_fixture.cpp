/// Builds the bundled n = 12 U-polygon fixture: a centrally symmetric
/// 24-gon whose edges run along the 12 directions at angles k*pi/12, found
/// inside a dodecagon-window model set patch fitted around it.
///
/// The construction solves, over the real subfield of Q(zeta_12), for edge
/// lengths t_0..t_11 (opposite edges congruent) such that for every
/// direction j the chords v_{j+1+i} - v_{j-i} are parallel to that
/// direction; the kernel of the resulting linear system gives the shape,
/// a positive representative is scaled to integral coordinates, and window
/// scale, window center and patch radius are fitted so the polygon's
/// vertices are model set points. The polygon written to the fixture is
/// the one search_upolygon finds in the generated patch.

#include "cyclotomo/json_io.hpp"
#include "cyclotomo/svg.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iostream>
#include <string>
#include <vector>

using namespace cyclotomo;

namespace {

/// Exact imaginary part of z as a real element of Q(zeta_12).
CycNum imc(const CycNum& z) {
    return (z - cyc_conj(z)) * CycNum(Rational(-1, 2)) * CycNum::zeta(12, 3);
}

/// Kernel basis of the matrix over the exact cyclotomic field.
std::vector<std::vector<CycNum>> kernel_basis(std::vector<std::vector<CycNum>> a, size_t cols) {
    const size_t rows = a.size();
    std::vector<long> pivot_col_of_row(rows, -1);
    std::vector<bool> col_is_pivot(cols, false);
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t pr = r;
        while (pr < rows && a[pr][c].is_zero()) ++pr;
        if (pr == rows) continue;
        std::swap(a[r], a[pr]);
        CycNum inv = cyc_inv(a[r][c]);
        for (size_t k = c; k < cols; ++k) a[r][k] = a[r][k] * inv;
        for (size_t q = 0; q < rows; ++q) {
            if (q == r || a[q][c].is_zero()) continue;
            CycNum f = a[q][c];
            for (size_t k = c; k < cols; ++k) a[q][k] = a[q][k] - f * a[r][k];
        }
        pivot_col_of_row[r] = static_cast<long>(c);
        col_is_pivot[c] = true;
        ++r;
    }
    std::vector<std::vector<CycNum>> basis;
    for (size_t f = 0; f < cols; ++f) {
        if (col_is_pivot[f]) continue;
        std::vector<CycNum> v(cols, CycNum(0));
        v[f] = CycNum(1);
        for (size_t q = 0; q < r; ++q) {
            long pc = pivot_col_of_row[q];
            if (pc >= 0) v[pc] = CycNum(0) - a[q][f];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

bool all_positive(const std::vector<CycNum>& t) {
    for (const CycNum& x : t)
        if (sign_of_real(x) != Sign::positive) return false;
    return true;
}

double upper_abs(const CycNum& z) {
    ComplexInterval e = eval_interval(z, 256);
    double r = e.re.abs_upper_double(), i = e.im.abs_upper_double();
    return std::sqrt(r * r + i * i);
}

/// Smallest multiple of 1/64 at or above v: a readable safe upper bound.
Rational rational_above(double v) {
    return Rational(mpz_class(static_cast<long>(std::ceil(std::nextafter(v, HUGE_VAL) * 64))),
                    mpz_class(64));
}

}  // namespace

int main(int argc, char** argv) {
    const std::string out = argc > 1 ? argv[1] : "fixtures/upolygon_n12.json";
    const std::string svg_out = argc > 2 ? argv[2] : "";
    using clock = std::chrono::steady_clock;

    // The 12 directions at angles k*pi/12: zeta_12^(k/2) for even k,
    // 1 + zeta_12^k for odd k, negated where that vector points below the
    // real axis so every d_k has argument exactly k*pi/12.
    std::vector<CycNum> d;
    for (long k = 0; k < 12; ++k) {
        if (k % 2 == 0) {
            d.push_back(CycNum::zeta(12, k / 2));
        } else {
            CycNum v = CycNum(1) + CycNum::zeta(12, k);
            if (k > 6) v = CycNum(0) - v;
            d.push_back(std::move(v));
        }
    }

    // Edge m of the 24-gon is t_{m mod 12} * d_{m mod 12}, negated for the
    // second half. For direction j and offset i, the chord from vertex
    // (j - i) to vertex (j + 1 + i) must be parallel to d_j; offsets 1..5
    // are the independent conditions (central symmetry supplies the rest).
    // Parallel means the exact imaginary part of chord * conj(d_j)
    // vanishes, one linear equation in the t's.
    std::vector<std::vector<CycNum>> rows;
    for (long j = 0; j < 12; ++j) {
        const CycNum wc = cyc_conj(d[j]);
        for (long i = 1; i <= 5; ++i) {
            std::vector<CycNum> row(12, CycNum(0));
            long m = ((j - i) % 24 + 24) % 24;
            const long stop = (j + 1 + i) % 24;
            while (m != stop) {
                const long q = m % 12;
                const CycNum coeff = imc(d[q] * wc);
                row[q] = m < 12 ? row[q] + coeff : row[q] - coeff;
                m = (m + 1) % 24;
            }
            rows.push_back(std::move(row));
        }
    }

    auto basis = kernel_basis(std::move(rows), 12);
    std::cout << "kernel dimension " << basis.size() << "\n";
    if (basis.empty()) {
        std::cerr << "no nontrivial edge-length solution\n";
        return 1;
    }

    std::vector<CycNum> t;
    for (const auto& b : basis) {
        if (all_positive(b)) { t = b; break; }
        std::vector<CycNum> neg;
        for (const CycNum& x : b) neg.push_back(CycNum(0) - x);
        if (all_positive(neg)) { t = neg; break; }
    }
    if (t.empty() && basis.size() > 1) {
        std::vector<CycNum> sum(12, CycNum(0));
        for (const auto& b : basis)
            for (size_t q = 0; q < 12; ++q) sum[q] = sum[q] + b[q];
        if (all_positive(sum)) t = sum;
    }
    if (t.empty()) {
        std::cerr << "kernel has no positive representative among the candidates\n";
        return 1;
    }
    for (size_t q = 0; q < 12; ++q) {
        if (!is_real(t[q])) {
            std::cerr << "edge length " << q << " is not real\n";
            return 1;
        }
        std::cout << "t[" << q << "] ~ " << eval_interval(t[q], 128).re.mid_double() << "\n";
    }

    // Scale by the least common denominator of all edge-vector coefficients
    // so every vertex lands in Z[zeta_12].
    mpz_class lcd = 1;
    for (size_t q = 0; q < 12; ++q) {
        CycNum e = t[q] * d[q];
        for (const Rational& c : e.coeffs())
            mpz_lcm(lcd.get_mpz_t(), lcd.get_mpz_t(), c.den().get_mpz_t());
    }
    std::cout << "denominator clearing factor " << lcd.get_str() << "\n";
    const CycNum lam{Rational(lcd, mpz_class(1))};
    std::vector<CycNum> edge;
    for (size_t q = 0; q < 12; ++q) edge.push_back(lam * t[q] * d[q]);

    std::vector<CycNum> verts{CycNum(0)};
    for (long m = 0; m < 23; ++m) {
        const long q = m % 12;
        CycNum step = m < 12 ? edge[q] : CycNum(0) - edge[q];
        verts.push_back(verts.back() + step);
    }

    // Recenter near the origin: the symmetry center is v_12 / 2; translate
    // by the nearest ring element (floor of coefficient + 1/2).
    CycNum center = verts[12] * CycNum(Rational(1, 2));
    {
        std::vector<Rational> shift_coeffs;
        for (const Rational& c : center.coeffs()) {
            mpz_class num2 = 2 * c.num() + c.den(), den2 = 2 * c.den(), q;
            mpz_fdiv_q(q.get_mpz_t(), num2.get_mpz_t(), den2.get_mpz_t());
            shift_coeffs.emplace_back(-q, mpz_class(1));
        }
        CycNum shift(center.order(), shift_coeffs);
        for (CycNum& v : verts) v = v + shift;
        center = center + shift;
    }

    std::vector<Direction> U;
    for (const CycNum& dk : d) U.push_back(Direction::from_vector(dk));
    VerifyFailure why;
    if (!verify_upolygon(verts, U, &why)) {
        std::cerr << "constructed polygon fails verification: " << why.reason << " at vertex "
                  << why.vertex << " direction " << why.direction << "\n";
        return 1;
    }
    double vmax = 0;
    for (const CycNum& v : verts) vmax = std::max(vmax, upper_abs(v));
    std::cout << "24-gon verified, max |v| <= " << vmax << "\n";

    // Window: dodecagon centered at the star image of the symmetry center,
    // scale grown from the star images' spread until exact containment.
    const CycNum wcenter = galois_apply(center, 5);
    double rho = 0;
    for (const CycNum& v : verts) rho = std::max(rho, upper_abs(galois_apply(v, 5) - wcenter));
    std::cout << "star image spread <= " << rho << "\n";
    const double apothem = std::cos(M_PI / 12);
    Rational scale = rational_above(rho / apothem * 1.001);
    CutProjectScheme scheme;
    bool window_ok = false;
    for (int attempt = 0; attempt < 24 && !window_ok; ++attempt) {
        scheme = make_scheme_polygon(12, scale, wcenter);
        window_ok = true;
        for (const CycNum& v : verts)
            if (!scheme.window.contains(galois_apply(v, 5))) {
                window_ok = false;
                break;
            }
        if (!window_ok) scale = scale * Rational(21, 20);
    }
    if (!window_ok) {
        std::cerr << "window fit failed\n";
        return 1;
    }
    std::cout << "window scale " << scale.num().get_str() << "/" << scale.den().get_str()
              << "\n";

    Rational r2 = rational_above(vmax * vmax * 1.002);
    for (const CycNum& v : verts) {
        if (sign_of_real(CycNum(r2) - norm_squared(v)) == Sign::negative) {
            std::cerr << "patch radius fit failed\n";
            return 1;
        }
    }
    std::cout << "patch radius_squared " << r2.num().get_str() << "/" << r2.den().get_str()
              << "\n";

    auto t0 = clock::now();
    ModelSetPatch patch = generate_patch(scheme, r2);
    auto t1 = clock::now();
    std::cout << "patch: " << patch.points.size() << " points ("
              << std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count()
              << " ms)\n";
    for (const CycNum& v : verts) {
        if (!std::binary_search(patch.points.begin(), patch.points.end(), v, CycLess{})) {
            std::cerr << "a polygon vertex is missing from the patch\n";
            return 1;
        }
    }

    t0 = clock::now();
    SearchResult res = search_upolygon(patch, U, 30, 50'000'000);
    t1 = clock::now();
    const long search_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    std::cout << "search: status " << static_cast<int>(res.status) << ", " << res.nodes
              << " nodes (" << search_ms << " ms)\n";

    std::vector<CycNum> fixture_verts;
    if (res.status == SearchStatus::found) {
        fixture_verts = res.polygon->vertices;
        std::cout << "freezing the search-found polygon (" << fixture_verts.size()
                  << " vertices)\n";
    } else {
        fixture_verts = verts;
        std::cout << "search did not finish in budget; freezing the constructed polygon\n";
    }

    UPolygon P{fixture_verts, U};
    t0 = clock::now();
    CounterexamplePair pair = derive_counterexample(P, patch);
    t1 = clock::now();
    std::cout << "counterexample: |F1| = " << pair.F1.size() << ", |F2| = " << pair.F2.size()
              << " ("
              << std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count()
              << " ms)\n";

    UPolygonFixture f{scheme, r2, U, fixture_verts};
    write_file_atomic(out, dump_json(fixture_to_json(f)));
    std::cout << "wrote " << out << "\n";
    if (!svg_out.empty()) {
        std::vector<CycNum> black, grey;
        std::set_difference(pair.F1.begin(), pair.F1.end(), pair.F2.begin(), pair.F2.end(),
                            std::back_inserter(black), CycLess{});
        std::set_difference(pair.F2.begin(), pair.F2.end(), pair.F1.begin(), pair.F1.end(),
                            std::back_inserter(grey), CycLess{});
        write_file_atomic(svg_out, render_svg(patch, &P, &black, &grey));
        std::cout << "wrote " << svg_out << "\n";
    }
    return 0;
}
