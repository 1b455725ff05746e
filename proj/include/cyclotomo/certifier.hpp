#pragma once

#include <array>
#include <optional>
#include <vector>

#include "cyclotomo/forbidden.hpp"
#include "cyclotomo/geometry.hpp"

namespace cyclotomo {

enum class Verdict { Determined, NotDetermined, Inconclusive };

enum class Rule {
    CardinalityBelowFour,    // fewer than four directions never determine
    ExceedsBound,            // more directions than b_n rules out U-polygons
    GoodCrossRatio,          // a 4-subset has a cross ratio outside the forbidden set
    AllQuadruplesForbidden,  // every 4-subset cross ratio is forbidden
};

const char* verdict_name(Verdict v);
const char* rule_name(Rule r);

/// Tabulated bounds per n: b_n = max direction count of any set admitting a
/// U-polygon, m_n = b_n + 1 = direction count that always determines.
struct MagicBounds {
    long b;
    long m;
};
std::optional<MagicBounds> magic_bounds(long n);
std::vector<long> tabulated_orders();

/// Machine-checkable witness for the good-cross-ratio rule: four input
/// indices, the same indices arranged by increasing angle, and the exact
/// cross ratio of the arranged slopes.
struct CrossRatioWitness {
    std::array<size_t, 4> subset;
    std::array<size_t, 4> arranged;
    CycNum ratio;
};

struct Certificate {
    Verdict verdict;
    Rule rule;
    long n = 0;
    long cardinality = 0;
    std::optional<long> bound;  // b_n when n is tabulated
    std::optional<CrossRatioWitness> witness;
};

/// Decides whether X-rays in the directions of U determine the convex
/// subsets of an n-cyclotomic model set, by cardinality rules and exact
/// cross-ratio membership. Directions must be pairwise nonparallel and lie
/// in Q(zeta_n); violations throw.
Certificate certify(long n, const std::vector<Direction>& U);

/// Deterministically searches Z[zeta_n] vectors with coefficients bounded by
/// norm_bound for `count` pairwise nonparallel directions certified
/// Determined; throws (reporting the searched space) when none exists
/// within the bound.
std::vector<Direction> suggest_directions(long n, long count, long norm_bound);

}  // namespace cyclotomo
