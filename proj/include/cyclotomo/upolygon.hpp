#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cyclotomo/modelset.hpp"
#include "cyclotomo/xray.hpp"

namespace cyclotomo {

/// Strictly convex polygon (counterclockwise vertices) such that for every
/// vertex and every direction of U, the line through the vertex in that
/// direction passes through another vertex.
struct UPolygon {
    std::vector<CycNum> vertices;
    std::vector<Direction> U;
};

/// Why a vertex list fails to be a U-polygon.
struct VerifyFailure {
    std::string reason;  // "not-strictly-convex" or "unpaired-vertex"
    size_t vertex = 0;
    size_t direction = 0;  // meaningful for unpaired-vertex
};

/// Exact check of strict convexity and the vertex pairing property. On
/// failure, fills *failure (when non-null) with the first violation.
bool verify_upolygon(const std::vector<CycNum>& vertices, const std::vector<Direction>& U,
                     VerifyFailure* failure = nullptr);

enum class SearchStatus {
    found,            // a U-polygon was found
    exhausted,        // none exists with vertices in this patch (within max_vertices)
    budget_exceeded,  // node budget hit before the space was exhausted
};

struct SearchResult {
    SearchStatus status = SearchStatus::exhausted;
    std::optional<UPolygon> polygon;
    long nodes = 0;
};

/// Deterministic backtracking search for a U-polygon with vertices drawn
/// from the patch: seeds each point in canonical order, then repeatedly
/// satisfies unmet (vertex, direction) obligations with patch points on the
/// mandated line, pruning sets not in strictly convex position. Exhaustion
/// means absence within this patch only, never global nonexistence.
SearchResult search_upolygon(const ModelSetPatch& patch, const std::vector<Direction>& U,
                             long max_vertices, long node_budget = 2'000'000);

/// Two different convex subsets of the patch with identical X-rays in all
/// directions of U.
struct CounterexamplePair {
    std::vector<CycNum> F1, F2;
    std::vector<Direction> U;
};

/// Splits the polygon's vertices into the two alternation classes of the
/// per-direction pairing (black class first, containing the lowest-index
/// vertex of each component), joins each with the patch points strictly
/// inside the polygon, and closes both under convex hull intersection with
/// the patch. Distinctness, convexity and X-ray equality are verified; any
/// failure throws.
CounterexamplePair derive_counterexample(const UPolygon& P, const ModelSetPatch& patch);

}  // namespace cyclotomo
