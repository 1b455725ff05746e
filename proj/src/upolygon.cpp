#include "cyclotomo/upolygon.hpp"

#include "pointset_detail.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <stdexcept>

namespace cyclotomo {

namespace {

struct Obligation {
    size_t vertex;
    size_t dir;
};

class Searcher {
public:
    Searcher(const ModelSetPatch& patch, const std::vector<Direction>& U, long max_vertices,
             long node_budget)
        : pts_(patch.points),
          U_(U),
          max_vertices_(max_vertices),
          budget_(node_budget),
          geom_(pts_) {
        // Line structure per direction: line_of_[d][p] identifies the line
        // through point p; members are listed in ascending point index.
        line_of_.assign(U_.size(), std::vector<long>(pts_.size(), -1));
        line_members_.resize(U_.size());
        for (size_t d = 0; d < U_.size(); ++d) {
            const CycNum w = U_[d].slope_witness();
            long L = w.order();
            for (const CycNum& p : pts_) L = std::lcm(L, p.order());
            const CycNum we = embed_order(w, L);
            const CycNum wc = cyc_conj(we);
            std::map<CycNum, long, CycLess> ids;
            for (size_t p = 0; p < pts_.size(); ++p) {
                CycNum pe = embed_order(pts_[p], L);
                CycNum key = pe * wc - cyc_conj(pe) * we;
                auto [it, fresh] = ids.emplace(std::move(key), static_cast<long>(ids.size()));
                if (fresh) line_members_[d].emplace_back();
                line_of_[d][p] = it->second;
                line_members_[d][it->second].push_back(p);
            }
        }
    }

    SearchResult run() {
        SearchResult res;
        for (size_t seed = 0; seed < pts_.size(); ++seed) {
            chosen_.assign(1, seed);
            std::deque<Obligation> obls;
            for (size_t d = 0; d < U_.size(); ++d) obls.push_back({seed, d});
            if (expand(obls, seed)) {
                res.status = SearchStatus::found;
                std::vector<CycNum> verts;
                for (size_t i : chosen_) verts.push_back(pts_[i]);
                res.polygon = UPolygon{convex_hull(verts), U_};
                res.nodes = nodes_;
                return res;
            }
            if (budget_hit_) {
                res.status = SearchStatus::budget_exceeded;
                res.nodes = nodes_;
                return res;
            }
        }
        res.status = SearchStatus::exhausted;
        res.nodes = nodes_;
        return res;
    }

private:
    /// True when the chosen points plus q are in strictly convex position.
    bool convex_position_with(size_t q) {
        scratch_ = chosen_;
        scratch_.push_back(q);
        return geom_.in_convex_position(scratch_);
    }

    bool expand(std::deque<Obligation>& obls, size_t seed) {
        if (nodes_ >= budget_) {
            budget_hit_ = true;
            return false;
        }
        ++nodes_;
        while (!obls.empty()) {
            const Obligation ob = obls.front();
            const long line = line_of_[ob.dir][ob.vertex];
            bool satisfied = false;
            for (size_t w : chosen_)
                if (w != ob.vertex && line_of_[ob.dir][w] == line) {
                    satisfied = true;
                    break;
                }
            if (satisfied) {
                obls.pop_front();
                continue;
            }
            if (static_cast<long>(chosen_.size()) >= max_vertices_) return false;
            for (size_t q : line_members_[ob.dir][line]) {
                if (q <= seed || q == ob.vertex) continue;
                bool already = false;
                for (size_t w : chosen_)
                    if (w == q) { already = true; break; }
                if (already) continue;
                if (!convex_position_with(q)) continue;
                chosen_.push_back(q);
                std::deque<Obligation> next = obls;
                for (size_t d = 0; d < U_.size(); ++d) next.push_back({q, d});
                if (expand(next, seed)) return true;
                chosen_.pop_back();
                if (budget_hit_) return false;
            }
            return false;
        }
        return chosen_.size() >= 3;
    }

    const std::vector<CycNum>& pts_;
    const std::vector<Direction>& U_;
    const long max_vertices_;
    const long budget_;
    detail::PointSetGeometry geom_;
    std::vector<std::vector<long>> line_of_;
    std::vector<std::vector<std::vector<size_t>>> line_members_;
    std::vector<size_t> chosen_;
    std::vector<size_t> scratch_;
    long nodes_ = 0;
    bool budget_hit_ = false;
};

/// Vertex pairs on common lines per direction; every line meeting the
/// polygon's vertex set must contain exactly two of them.
std::vector<std::pair<size_t, size_t>> direction_pairs(const std::vector<CycNum>& verts,
                                                       const Direction& u) {
    std::map<CycNum, std::vector<size_t>, CycLess> groups;
    const CycNum w = u.slope_witness();
    long L = w.order();
    for (const CycNum& v : verts) L = std::lcm(L, v.order());
    const CycNum we = embed_order(w, L);
    const CycNum wc = cyc_conj(we);
    for (size_t i = 0; i < verts.size(); ++i) {
        CycNum ve = embed_order(verts[i], L);
        groups[ve * wc - cyc_conj(ve) * we].push_back(i);
    }
    std::vector<std::pair<size_t, size_t>> pairs;
    for (const auto& [key, members] : groups) {
        if (members.size() == 1)
            throw std::logic_error("derive_counterexample: a verified U-polygon left a vertex "
                                   "unpaired");
        if (members.size() > 2)
            throw std::logic_error("derive_counterexample: three vertices of a strictly convex "
                                   "polygon lie on one line");
        pairs.emplace_back(members[0], members[1]);
    }
    return pairs;
}

}  // namespace

bool verify_upolygon(const std::vector<CycNum>& vertices, const std::vector<Direction>& U,
                     VerifyFailure* failure) {
    const size_t m = vertices.size();
    if (m < 3) throw std::domain_error("verify_upolygon: need at least three vertices");
    for (size_t i = 0; i < m; ++i) {
        if (orientation(vertices[i], vertices[(i + 1) % m], vertices[(i + 2) % m]) !=
            Sign::positive) {
            if (failure) *failure = VerifyFailure{"not-strictly-convex", i, 0};
            return false;
        }
    }
    for (size_t i = 0; i < m; ++i)
        for (size_t d = 0; d < U.size(); ++d) {
            bool paired = false;
            for (size_t j = 0; j < m && !paired; ++j)
                if (j != i && slope_of(vertices[j] - vertices[i]) == U[d].slope) paired = true;
            if (!paired) {
                if (failure) *failure = VerifyFailure{"unpaired-vertex", i, d};
                return false;
            }
        }
    return true;
}

SearchResult search_upolygon(const ModelSetPatch& patch, const std::vector<Direction>& U,
                             long max_vertices, long node_budget) {
    if (U.size() < 2) throw std::domain_error("search_upolygon: need at least two directions");
    if (max_vertices < 4)
        throw std::domain_error("search_upolygon: max_vertices must be at least 4");
    for (size_t i = 0; i < U.size(); ++i)
        for (size_t j = i + 1; j < U.size(); ++j)
            if (U[i].slope == U[j].slope)
                throw std::domain_error("search_upolygon: directions must be pairwise "
                                        "nonparallel");
    Searcher s(patch, U, max_vertices, node_budget);
    return s.run();
}

CounterexamplePair derive_counterexample(const UPolygon& P, const ModelSetPatch& patch) {
    VerifyFailure why;
    if (!verify_upolygon(P.vertices, P.U, &why))
        throw std::domain_error("derive_counterexample: input is not a U-polygon (" +
                                why.reason + " at vertex " + std::to_string(why.vertex) + ")");
    const long n = patch.scheme.n;
    std::vector<CycNum> verts;
    verts.reserve(P.vertices.size());
    for (const CycNum& v : P.vertices) {
        if (n % v.order() != 0 ||
            !std::binary_search(patch.points.begin(), patch.points.end(), embed_order(v, n),
                                CycLess{}))
            throw std::domain_error("derive_counterexample: polygon vertex outside the patch");
        verts.push_back(embed_order(v, n));
    }

    // Union of the per-direction pairings, 2-colored; each component's
    // lowest-index vertex is black. Odd cycles mean no alternation exists.
    std::vector<std::vector<size_t>> adj(verts.size());
    for (const Direction& u : P.U)
        for (auto [a, b] : direction_pairs(verts, u)) {
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
    std::vector<int> color(verts.size(), -1);
    for (size_t root = 0; root < verts.size(); ++root) {
        if (color[root] != -1) continue;
        color[root] = 0;
        std::deque<size_t> queue{root};
        while (!queue.empty()) {
            size_t v = queue.front();
            queue.pop_front();
            for (size_t w : adj[v]) {
                if (color[w] == -1) {
                    color[w] = 1 - color[v];
                    queue.push_back(w);
                } else if (color[w] == color[v]) {
                    throw std::domain_error("derive_counterexample: vertex pairing is not "
                                            "2-colorable (odd cycle through vertex " +
                                            std::to_string(w) + ")");
                }
            }
        }
    }

    std::vector<CycNum> interior;
    for (const CycNum& q : patch.points)
        if (strictly_inside(q, verts)) interior.push_back(q);

    auto closure = [&](int keep) {
        std::vector<CycNum> seeds = interior;
        for (size_t i = 0; i < verts.size(); ++i)
            if (color[i] == keep) seeds.push_back(verts[i]);
        std::vector<CycNum> hull = convex_hull(seeds);
        std::vector<CycNum> out;
        for (const CycNum& q : patch.points)
            if (in_hull(q, hull)) out.push_back(q);
        return out;  // patch order is canonical, so out is sorted
    };
    CounterexamplePair pair{closure(0), closure(1), P.U};

    if (pair.F1 == pair.F2)
        throw std::logic_error("derive_counterexample: the two derived sets coincide");
    if (!is_convex_subset(pair.F1, patch) || !is_convex_subset(pair.F2, patch))
        throw std::logic_error("derive_counterexample: a derived set is not a convex subset");
    for (const Direction& u : P.U)
        if (!xrays_equal(pair.F1, pair.F2, {u}))
            throw std::logic_error("derive_counterexample: X-rays differ in the direction with "
                                   "slope " + u.slope.to_string());
    return pair;
}

}  // namespace cyclotomo
