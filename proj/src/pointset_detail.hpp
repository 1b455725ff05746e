#pragma once

#include "cyclotomo/geometry.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <unordered_map>
#include <vector>

namespace cyclotomo::detail {

/// Index-based exact geometry over a fixed point list, with memoized
/// orientation signs. Triples are cached in ascending index order and
/// permutation parity recovers the rest, so at most C(|pts|, 3) exact
/// evaluations ever run.
class PointSetGeometry {
public:
    explicit PointSetGeometry(const std::vector<CycNum>& pts) : pts_(pts) {
        std::vector<size_t> by_geo(pts_.size());
        std::iota(by_geo.begin(), by_geo.end(), size_t{0});
        std::sort(by_geo.begin(), by_geo.end(),
                  [&](size_t a, size_t b) { return point_less(pts_[a], pts_[b]); });
        geo_rank_.resize(pts_.size());
        for (size_t r = 0; r < by_geo.size(); ++r) geo_rank_[by_geo[r]] = r;
    }

    const std::vector<CycNum>& points() const { return pts_; }

    /// Rank of point i in lexicographic (Re, Im) order. Restricted to
    /// collinear points this is the order along their common line.
    size_t geo_rank(size_t i) const { return geo_rank_[i]; }

    int orient(size_t a, size_t b, size_t c) {
        size_t i = a, j = b, k = c;
        int parity = 1;
        if (i > j) { std::swap(i, j); parity = -parity; }
        if (j > k) { std::swap(j, k); parity = -parity; }
        if (i > j) { std::swap(i, j); parity = -parity; }
        const uint64_t key = (static_cast<uint64_t>(i) << 42) |
                             (static_cast<uint64_t>(j) << 21) | static_cast<uint64_t>(k);
        auto it = cache_.find(key);
        int s;
        if (it != cache_.end()) {
            s = it->second;
        } else {
            s = sign_int(orientation(pts_[i], pts_[j], pts_[k]));
            cache_.emplace(key, static_cast<int8_t>(s));
        }
        return parity * s;
    }

    /// Counterclockwise hull of the index set, strict turns only, so the
    /// result is exactly the extreme points. Input need not be sorted.
    std::vector<size_t> hull(std::vector<size_t> idx) {
        std::sort(idx.begin(), idx.end(),
                  [&](size_t a, size_t b) { return geo_rank_[a] < geo_rank_[b]; });
        const size_t k = idx.size();
        if (k <= 2) return idx;
        std::vector<size_t> h;
        for (size_t pass = 0; pass < 2; ++pass) {
            const size_t base = h.size();
            for (size_t t = 0; t < k; ++t) {
                size_t p = pass == 0 ? idx[t] : idx[k - 1 - t];
                while (h.size() >= base + 2 && orient(h[h.size() - 2], h.back(), p) <= 0)
                    h.pop_back();
                h.push_back(p);
            }
            h.pop_back();
        }
        return h;
    }

    /// True when every point of the set is an extreme point of its hull.
    bool in_convex_position(const std::vector<size_t>& idx) {
        if (idx.size() <= 2) return true;
        return hull(idx).size() == idx.size();
    }

    /// Closed-region membership against a hull from hull() (ccw, >= 1 point).
    bool in_hull_idx(size_t q, const std::vector<size_t>& h) {
        const size_t m = h.size();
        if (m == 1) return q == h[0];
        if (m == 2) return on_segment(q, h[0], h[1]);
        for (size_t i = 0; i < m; ++i)
            if (orient(h[i], h[(i + 1) % m], q) < 0) return false;
        return true;
    }

    bool on_segment(size_t q, size_t a, size_t b) {
        if (q == a || q == b) return true;
        if (orient(a, b, q) != 0) return false;
        auto [lo, hi] = std::minmax(geo_rank_[a], geo_rank_[b]);
        return lo < geo_rank_[q] && geo_rank_[q] < hi;
    }

private:
    const std::vector<CycNum>& pts_;
    std::vector<size_t> geo_rank_;
    std::unordered_map<uint64_t, int8_t> cache_;
};

}  // namespace cyclotomo::detail
