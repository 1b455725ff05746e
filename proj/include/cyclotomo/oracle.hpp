#pragma once

#include "cyclotomo/upolygon.hpp"
#include "cyclotomo/xray.hpp"

#include <optional>
#include <vector>

namespace cyclotomo {

/// Deterministic work counters for an oracle run.
struct OracleStats {
    long convex_subsets = 0;
    long work_units = 0;
};

/// Outcome of a brute-force determination check on one patch. A missing
/// pair means no two distinct convex subsets of the patch share X-rays in
/// all given directions; that is evidence at this patch size only, never a
/// statement about the full point set.
struct OracleReport {
    long n = 0;
    Rational radius_squared;
    long patch_size = 0;
    std::vector<Direction> U;
    std::optional<CounterexamplePair> collision;
    OracleStats stats;
};

/// All convex subsets of the patch: the sets C with conv(C) meeting the
/// patch in exactly C. Includes the empty set and all singletons. Order is
/// deterministic: each subset appears when its extreme-point index set is
/// first reached by a lexicographic depth-first walk. Every convex subset
/// appears exactly once because it is the hull closure of a unique set of
/// points in strictly convex position.
/// Throws std::domain_error when the patch exceeds max_points; shrink the
/// patch radius to stay under the cap.
std::vector<std::vector<CycNum>> enumerate_convex_subsets(const ModelSetPatch& patch,
                                                          long max_points = 24);

/// Power-set filter over is_convex_subset, usable only for tiny patches.
/// Returns the same family as enumerate_convex_subsets (order differs).
std::vector<std::vector<CycNum>> enumerate_convex_subsets_naive(const ModelSetPatch& patch,
                                                                long max_points = 12);

/// Groups every convex subset of the patch by an exact fingerprint of its
/// X-ray profiles across U and reports the first pair of distinct subsets
/// sharing all profiles, if any. The pair is re-verified against the exact
/// predicates before it is returned.
OracleReport determination_check(const ModelSetPatch& patch, const std::vector<Direction>& U,
                                 long max_points = 24);

}  // namespace cyclotomo
