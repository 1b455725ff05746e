#include "cyclotomo/forbidden.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <stdexcept>

#include "cyclotomo/json_io.hpp"

namespace cyclotomo {

namespace {

long lcm_2n_12(long n) { return std::lcm(2 * n, 12L); }

/// Total order on real CycNum by value; equality is exact.
struct RealLess {
    bool operator()(const CycNum& a, const CycNum& b) const {
        return sign_of_real(a - b) == Sign::negative;
    }
};

std::string cache_path_for(long n) {
    const char* dir = std::getenv("CYCLOTOMO_CACHE_DIR");
    if (dir == nullptr || *dir == '\0') return {};
    return std::string(dir) + "/forbidden-n" + std::to_string(n) + ".json";
}

ForbiddenSet compute_forbidden_set(long n) {
    const long N = lcm_2n_12(n);

    // Factors 1 - zeta_N^k and their inverses, indexed by k.
    std::vector<CycNum> unit(N), unit_inv(N);
    for (long k = 1; k <= N - 1; ++k) {
        unit[k] = CycNum(1) - CycNum::zeta(N, k);
        unit_inv[k] = cyc_inv(unit[k]);
    }

    // Dedup map keyed by the order-n representation; provenance accumulates
    // in enumeration order.
    std::map<CycNum, std::vector<QuadrupleIndex>, CycLess> found;
    for_each_quadruple(N, [&](const QuadrupleIndex& q) {
        CycNum v = unit[q.k1] * unit[q.k2] * unit_inv[q.k3] * unit_inv[q.k4];
        if (!is_real(v))
            throw std::logic_error("forbidden_set: quadruple value unexpectedly non-real");
        if (!in_subfield(v, n)) return;
        found[reduce_order(v, n)].push_back(q);
    });

    ForbiddenSet fs;
    fs.n = n;
    fs.N = N;
    fs.values.reserve(found.size());
    fs.provenance.reserve(found.size());
    std::vector<size_t> order(found.size());
    for (auto& [v, prov] : found) {
        fs.values.push_back(v);
        fs.provenance.push_back(std::move(prov));
    }
    std::iota(order.begin(), order.end(), size_t{0});
    std::sort(order.begin(), order.end(), [&](size_t i, size_t j) {
        return RealLess{}(fs.values[i], fs.values[j]);
    });
    ForbiddenSet sorted;
    sorted.n = n;
    sorted.N = N;
    for (size_t i : order) {
        sorted.values.push_back(std::move(fs.values[i]));
        sorted.provenance.push_back(std::move(fs.provenance[i]));
    }
    return sorted;
}

/// A cached set is sound if shapes match, values are real, in ascending
/// order, and each value is reproduced by its first provenance quadruple.
bool validate_cached(const ForbiddenSet& fs, long n) {
    if (fs.n != n || fs.N != lcm_2n_12(n)) return false;
    if (fs.values.size() != fs.provenance.size() || fs.values.empty()) return false;
    for (size_t i = 0; i < fs.values.size(); ++i) {
        const CycNum& v = fs.values[i];
        if (v.order() != n || !is_real(v) || !in_subfield(v, n)) return false;
        if (i > 0 && sign_of_real(v - fs.values[i - 1]) != Sign::positive) return false;
        if (fs.provenance[i].empty()) return false;
        const QuadrupleIndex& q = fs.provenance[i].front();
        if (q.N != fs.N || !q.valid()) return false;
        if (quadruple_value(q) != v) return false;
    }
    return true;
}

}  // namespace

CycNum quadruple_value(const QuadrupleIndex& q) {
    if (!q.valid())
        throw std::domain_error("quadruple_value: indices violate k3 < k1 <= k2 < k4 <= N-1 "
                                "with k1 + k2 = k3 + k4");
    auto unit = [&](long k) { return CycNum(1) - CycNum::zeta(q.N, k); };
    CycNum v = unit(q.k1) * unit(q.k2) / (unit(q.k3) * unit(q.k4));
    if (!is_real(v))
        throw std::logic_error("quadruple_value: value unexpectedly non-real");
    return v;
}

void for_each_quadruple(long N, const std::function<void(const QuadrupleIndex&)>& f) {
    for (long k1 = 2; k1 <= N - 2; ++k1) {
        for (long k2 = k1; k2 <= N - 2; ++k2) {
            const long s = k1 + k2;
            for (long k3 = std::max(1L, s - (N - 1)); k3 <= k1 - 1; ++k3)
                f(QuadrupleIndex{N, k1, k2, k3, s - k3});
        }
    }
}

bool ForbiddenSet::contains(const CycNum& v) const {
    if (!is_real(v)) throw std::domain_error("ForbiddenSet::contains: value must be real");
    long lo = 0, hi = static_cast<long>(values.size()) - 1;
    while (lo <= hi) {
        long mid = lo + (hi - lo) / 2;
        Sign s = sign_of_real(v - values[mid]);
        if (s == Sign::zero) return true;
        if (s == Sign::negative)
            hi = mid - 1;
        else
            lo = mid + 1;
    }
    return false;
}

ForbiddenSet forbidden_set(long n) {
    if (n < 3) throw std::domain_error("forbidden_set: n must be at least 3");
    const std::string path = cache_path_for(n);
    if (!path.empty()) {
        try {
            ForbiddenSet fs = forbidden_from_json(read_json_file(path));
            if (validate_cached(fs, n)) return fs;
        } catch (const std::exception&) {
            // Missing or stale cache entry: fall through and recompute.
        }
    }
    ForbiddenSet fs = compute_forbidden_set(n);
    if (!path.empty()) {
        try {
            write_file_atomic(path, dump_json(forbidden_to_json(fs)));
        } catch (const std::exception&) {
            // Cache directory not writable: computation still succeeds.
        }
    }
    return fs;
}

}  // namespace cyclotomo
