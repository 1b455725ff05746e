#pragma once

#include <map>
#include <vector>

#include "cyclotomo/geometry.hpp"
#include "cyclotomo/modelset.hpp"

namespace cyclotomo {

/// Discrete parallel X-ray of a finite set in one direction: the number of
/// set points on each line parallel to the direction, keyed so that keys
/// agree exactly iff the lines coincide.
struct XRayProfile {
    Direction direction;
    std::map<CycNum, long, CycLess> lines;  // canonical line key -> count > 0

    long total() const;
};

/// Canonical key of the line through p in direction d: with w the
/// slope-derived witness of d, key = p*conj(w) - conj(p)*w. Constant on the
/// line, distinct across parallel lines, independent of the representation
/// of d. Points must share the key's order; xray() handles embedding.
CycNum line_key(const CycNum& p, const Direction& d);

/// Groups F by line_key and counts per line. Duplicate points are rejected.
XRayProfile xray(const std::vector<CycNum>& F, const Direction& d);

/// True iff for every direction in U the two profiles agree as maps (same
/// lines, same counts).
bool xrays_equal(const std::vector<CycNum>& F, const std::vector<CycNum>& G,
                 const std::vector<Direction>& U);

/// True iff every patch point inside conv(C) belongs to C (boundary
/// included). C must be a subset of the patch.
bool is_convex_subset(const std::vector<CycNum>& C, const ModelSetPatch& patch);

}  // namespace cyclotomo
