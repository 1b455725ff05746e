#pragma once

#include <functional>
#include <vector>

#include "cyclotomo/cyclotomic.hpp"

namespace cyclotomo {

/// Exponent quadruple (k1,k2,k3,k4) at level N with k3 < k1 <= k2 < k4 <= N-1
/// and k1 + k2 = k3 + k4, indexing the value
/// (1 - z^k1)(1 - z^k2) / ((1 - z^k3)(1 - z^k4)) at z = zeta_N.
struct QuadrupleIndex {
    long N = 0;
    long k1 = 0, k2 = 0, k3 = 0, k4 = 0;

    bool valid() const {
        return N >= 2 && k3 >= 1 && k3 < k1 && k1 <= k2 && k2 < k4 && k4 <= N - 1 &&
               k1 + k2 == k3 + k4;
    }
    friend bool operator==(const QuadrupleIndex& a, const QuadrupleIndex& b) {
        return a.N == b.N && a.k1 == b.k1 && a.k2 == b.k2 && a.k3 == b.k3 && a.k4 == b.k4;
    }
};

/// Exact value of the quadruple product in Q(zeta_N). The sum constraint
/// forces the value to be real; this is verified, and violations throw.
CycNum quadruple_value(const QuadrupleIndex& q);

/// All quadruple values at level N = lcm(2n, 12) that lie in Q(zeta_n),
/// deduplicated and sorted ascending as real numbers. provenance[i] lists
/// the quadruples producing values[i], in enumeration order.
struct ForbiddenSet {
    long n = 0;
    long N = 0;
    std::vector<CycNum> values;
    std::vector<std::vector<QuadrupleIndex>> provenance;

    /// Exact membership test; v must be real (any order).
    bool contains(const CycNum& v) const;
};

/// Enumerates every QuadrupleIndex at level N in (k1, k2, k3) order and
/// applies f to each.
void for_each_quadruple(long N, const std::function<void(const QuadrupleIndex&)>& f);

/// Computes the forbidden set for n >= 3. Results are cached on disk under
/// $CYCLOTOMO_CACHE_DIR when that variable is set; cache entries are
/// validated on load and recomputed when stale.
ForbiddenSet forbidden_set(long n);

}  // namespace cyclotomo
