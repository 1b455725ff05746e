#include "cyclotomo/oracle.hpp"

#include "pointset_detail.hpp"

#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace cyclotomo {

namespace {

void check_cap(const ModelSetPatch& patch, long max_points, const char* where) {
    const long P = static_cast<long>(patch.points.size());
    if (P > max_points)
        throw std::domain_error(std::string(where) + ": patch has " + std::to_string(P) +
                                " points, cap is " + std::to_string(max_points) +
                                "; shrink the patch radius or raise the cap");
}

/// Walks every subset of patch indices in strictly convex position, in
/// lexicographic depth-first order, and hands the hull closure of each to
/// the callback (ascending indices). The callback returns false to stop.
/// The empty set is reported first. Convex position is hereditary, so
/// pruning a non-convex-position branch loses nothing.
class ClosureWalker {
public:
    ClosureWalker(detail::PointSetGeometry& geom, long* work) : geom_(geom), work_(work) {}

    template <typename F>
    void walk(F&& emit) {
        const size_t P = geom_.points().size();
        closure_.clear();
        if (!emit(closure_)) return;
        for (size_t s = 0; s < P && go_; ++s) {
            chosen_.assign(1, s);
            descend(emit);
        }
    }

private:
    template <typename F>
    void descend(F&& emit) {
        const size_t P = geom_.points().size();
        *work_ += static_cast<long>(P);
        std::vector<size_t> h = geom_.hull(chosen_);
        closure_.clear();
        for (size_t q = 0; q < P; ++q)
            if (geom_.in_hull_idx(q, h)) closure_.push_back(q);
        if (!emit(closure_)) {
            go_ = false;
            return;
        }
        for (size_t q = chosen_.back() + 1; q < P && go_; ++q) {
            scratch_ = chosen_;
            scratch_.push_back(q);
            if (!geom_.in_convex_position(scratch_)) continue;
            chosen_.push_back(q);
            descend(emit);
            chosen_.pop_back();
        }
    }

    detail::PointSetGeometry& geom_;
    long* work_;
    std::vector<size_t> chosen_, scratch_, closure_;
    bool go_ = true;
};

}  // namespace

std::vector<std::vector<CycNum>> enumerate_convex_subsets(const ModelSetPatch& patch,
                                                          long max_points) {
    check_cap(patch, max_points, "enumerate_convex_subsets");
    detail::PointSetGeometry geom(patch.points);
    long work = 0;
    std::vector<std::vector<CycNum>> out;
    ClosureWalker walker(geom, &work);
    walker.walk([&](const std::vector<size_t>& idx) {
        std::vector<CycNum> C;
        C.reserve(idx.size());
        for (size_t i : idx) C.push_back(patch.points[i]);
        out.push_back(std::move(C));
        return true;
    });
    return out;
}

std::vector<std::vector<CycNum>> enumerate_convex_subsets_naive(const ModelSetPatch& patch,
                                                                long max_points) {
    check_cap(patch, max_points, "enumerate_convex_subsets_naive");
    const size_t P = patch.points.size();
    if (P > 20)
        throw std::domain_error("enumerate_convex_subsets_naive: refusing 2^" +
                                std::to_string(P) + " masks");
    std::vector<std::vector<CycNum>> out;
    for (uint64_t mask = 0; mask < (uint64_t{1} << P); ++mask) {
        std::vector<CycNum> C;
        for (size_t i = 0; i < P; ++i)
            if (mask & (uint64_t{1} << i)) C.push_back(patch.points[i]);
        if (is_convex_subset(C, patch)) out.push_back(std::move(C));
    }
    return out;
}

OracleReport determination_check(const ModelSetPatch& patch, const std::vector<Direction>& U,
                                 long max_points) {
    check_cap(patch, max_points, "determination_check");
    for (size_t i = 0; i < U.size(); ++i)
        for (size_t j = i + 1; j < U.size(); ++j)
            if (U[i].slope == U[j].slope)
                throw std::domain_error("determination_check: directions must be pairwise "
                                        "nonparallel");

    OracleReport report;
    report.n = patch.scheme.n;
    report.radius_squared = patch.radius_squared;
    report.patch_size = static_cast<long>(patch.points.size());
    report.U = U;

    // Lines are identified once per direction over the whole patch, so a
    // subset's X-ray fingerprint is its per-direction line-count table.
    const size_t P = patch.points.size();
    std::vector<std::vector<long>> line_of(U.size(), std::vector<long>(P, -1));
    std::vector<size_t> line_count(U.size(), 0);
    for (size_t d = 0; d < U.size(); ++d) {
        const CycNum w = U[d].slope_witness();
        long L = w.order();
        for (const CycNum& p : patch.points) L = std::lcm(L, p.order());
        const CycNum we = embed_order(w, L);
        const CycNum wc = cyc_conj(we);
        std::map<CycNum, long, CycLess> ids;
        for (size_t p = 0; p < P; ++p) {
            CycNum pe = embed_order(patch.points[p], L);
            auto [it, fresh] =
                ids.emplace(pe * wc - cyc_conj(pe) * we, static_cast<long>(ids.size()));
            line_of[d][p] = it->second;
        }
        line_count[d] = ids.size();
    }

    detail::PointSetGeometry geom(patch.points);
    std::unordered_map<std::string, std::vector<size_t>> first_with;
    std::vector<long> counts;
    ClosureWalker walker(geom, &report.stats.work_units);
    walker.walk([&](const std::vector<size_t>& idx) {
        ++report.stats.convex_subsets;
        std::string fp;
        for (size_t d = 0; d < U.size(); ++d) {
            counts.assign(line_count[d], 0);
            for (size_t i : idx) ++counts[line_of[d][i]];
            report.stats.work_units += static_cast<long>(line_count[d]);
            for (size_t l = 0; l < counts.size(); ++l)
                if (counts[l] > 0)
                    fp += std::to_string(l) + ":" + std::to_string(counts[l]) + ";";
            fp += "|";
        }
        auto [it, fresh] = first_with.emplace(std::move(fp), idx);
        if (fresh) return true;
        std::vector<CycNum> F1, F2;
        for (size_t i : it->second) F1.push_back(patch.points[i]);
        for (size_t i : idx) F2.push_back(patch.points[i]);
        report.collision = CounterexamplePair{std::move(F1), std::move(F2), U};
        return false;
    });

    if (report.collision) {
        const CounterexamplePair& c = *report.collision;
        if (c.F1 == c.F2 || !is_convex_subset(c.F1, patch) || !is_convex_subset(c.F2, patch) ||
            !xrays_equal(c.F1, c.F2, U))
            throw std::logic_error("determination_check: collision pair failed exact "
                                   "re-verification");
    }
    return report;
}

}  // namespace cyclotomo
