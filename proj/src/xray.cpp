#include "cyclotomo/xray.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cyclotomo {

namespace {

/// Embeds points and witness into one order so map keys compare by value.
long common_order(const std::vector<CycNum>& pts, const CycNum& w) {
    long L = w.order();
    for (const CycNum& p : pts) L = std::lcm(L, p.order());
    return L;
}

}  // namespace

long XRayProfile::total() const {
    long t = 0;
    for (const auto& [key, count] : lines) t += count;
    return t;
}

CycNum line_key(const CycNum& p, const Direction& d) {
    const CycNum w = d.slope_witness();
    return p * cyc_conj(w) - cyc_conj(p) * w;
}

XRayProfile xray(const std::vector<CycNum>& F, const Direction& d) {
    XRayProfile profile{d, {}};
    const CycNum w = d.slope_witness();
    const long L = common_order(F, w);
    const CycNum we = embed_order(w, L);
    const CycNum wc = cyc_conj(we);

    std::vector<CycNum> pts;
    pts.reserve(F.size());
    for (const CycNum& p : F) pts.push_back(embed_order(p, L));
    std::vector<CycNum> sorted = pts;
    std::sort(sorted.begin(), sorted.end(), CycLess{});
    for (size_t i = 0; i + 1 < sorted.size(); ++i)
        if (sorted[i] == sorted[i + 1])
            throw std::domain_error("xray: duplicate point in input set");

    for (const CycNum& p : pts) ++profile.lines[p * wc - cyc_conj(p) * we];
    return profile;
}

bool xrays_equal(const std::vector<CycNum>& F, const std::vector<CycNum>& G,
                 const std::vector<Direction>& U) {
    for (const Direction& d : U) {
        const CycNum w = d.slope_witness();
        const long L = std::lcm(common_order(F, w), common_order(G, w));
        const CycNum we = embed_order(w, L);
        const CycNum wc = cyc_conj(we);
        auto profile = [&](const std::vector<CycNum>& pts) {
            std::map<CycNum, long, CycLess> lines;
            for (const CycNum& p : pts) {
                CycNum pe = embed_order(p, L);
                ++lines[pe * wc - cyc_conj(pe) * we];
            }
            return lines;
        };
        if (profile(F) != profile(G)) return false;
    }
    return true;
}

bool is_convex_subset(const std::vector<CycNum>& C, const ModelSetPatch& patch) {
    // Patch points share the scheme's order; bring C to the same
    // representation so binary search and equality are value comparisons.
    const long n = patch.scheme.n;
    std::vector<CycNum> cs;
    cs.reserve(C.size());
    for (const CycNum& c : C) {
        if (n % c.order() != 0)
            throw std::domain_error("is_convex_subset: set is not a subset of the patch");
        cs.push_back(embed_order(c, n));
    }
    for (const CycNum& c : cs)
        if (!std::binary_search(patch.points.begin(), patch.points.end(), c, CycLess{}))
            throw std::domain_error("is_convex_subset: set is not a subset of the patch");
    if (cs.size() <= 1) return true;
    std::vector<CycNum> hull = convex_hull(cs);
    for (const CycNum& q : patch.points) {
        if (!in_hull(q, hull)) continue;
        bool in_c = false;
        for (const CycNum& c : cs)
            if (c == q) { in_c = true; break; }
        if (!in_c) return false;
    }
    return true;
}

}  // namespace cyclotomo
