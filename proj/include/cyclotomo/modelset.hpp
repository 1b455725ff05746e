#pragma once

#include <string>
#include <vector>

#include "cyclotomo/geometry.hpp"

namespace cyclotomo {

/// Acceptance region in internal space; membership is exact and closed
/// (boundary included).
struct Window {
    enum class Kind { none, polygon, disk };
    Kind kind = Kind::none;
    std::string preset;            // polygon preset name, empty for disk
    std::vector<CycNum> vertices;  // polygon vertices, counterclockwise
    Rational scale;                // polygon circumradius factor
    Rational disk_r2;              // disk squared radius
    CycNum center;

    bool contains(const CycNum& w) const;

    /// Rational upper bound on max |w| over the window (enclosing radius).
    Rational enclosing_radius_bound() const;
};

/// Cut-and-project data for the n-cyclotomic model set: points are z in
/// Z[zeta_n] whose star image galois_apply(z, star_exponent) lies in the
/// window. n = 3, 4 are lattices (no internal space, no window).
struct CutProjectScheme {
    long n = 0;
    bool is_lattice = false;
    long star_exponent = 1;
    Window window;
    /// Positive lower bound for squared pairwise distances, from the field
    /// norm: |z|^2 |z*|^2 = |Norm(z)| >= 1 for nonzero z in Z[zeta_n].
    Rational min_dist2;

    CycNum star(const CycNum& z) const;
};

/// Lattice scheme for n in {3, 4}.
CutProjectScheme make_scheme_lattice(long n);

/// Regular-polygon window scheme for n in {5, 8, 12} (decagon, octagon,
/// dodecagon) with the given circumradius scale and exact center.
CutProjectScheme make_scheme_polygon(long n, const Rational& scale, const CycNum& center);

/// Disk window scheme for n in {5, 8, 12}.
CutProjectScheme make_scheme_disk(long n, const Rational& r2, const CycNum& center);

/// Default preset per supported n: lattice for 3 and 4, unit-circumradius
/// origin-centered polygon window for 5, 8 and 12.
CutProjectScheme make_scheme_preset(long n);

struct ModelSetPatch {
    CutProjectScheme scheme;
    Rational radius_squared;
    std::vector<CycNum> points;  // sorted lexicographically by coefficients
};

/// All points of the model set in the closed disk |z|^2 <= radius_squared
/// around the origin. Candidate coefficient ranges are derived from a
/// rigorous interval inverse of the embedding matrix, so enumeration is
/// complete; a float prefilter with conservative margins discards clear
/// misses and every survivor is verified exactly.
ModelSetPatch generate_patch(const CutProjectScheme& scheme, const Rational& radius_squared);

/// Pairwise nonparallel directions realized by difference vectors of patch
/// points, sorted by increasing angle, truncated to max_count.
std::vector<Direction> directions_from_patch(const ModelSetPatch& patch, long max_count);

}  // namespace cyclotomo
