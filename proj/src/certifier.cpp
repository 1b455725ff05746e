#include "cyclotomo/certifier.hpp"

#include <stdexcept>
#include <string>

namespace cyclotomo {

namespace {

/// First good 4-subset in lexicographic index order, if any.
std::optional<CrossRatioWitness> find_good_subset(const std::vector<Direction>& U,
                                                  const ForbiddenSet& fs) {
    const size_t m = U.size();
    for (size_t a = 0; a + 3 < m; ++a)
        for (size_t b = a + 1; b + 2 < m; ++b)
            for (size_t c = b + 1; c + 1 < m; ++c)
                for (size_t d = c + 1; d < m; ++d) {
                    std::array<size_t, 4> subset{a, b, c, d};
                    std::vector<Slope> slopes;
                    slopes.reserve(4);
                    for (size_t i : subset) slopes.push_back(U[i].slope);
                    std::vector<size_t> perm = angle_order(slopes);
                    std::array<size_t, 4> arranged{subset[perm[0]], subset[perm[1]],
                                                   subset[perm[2]], subset[perm[3]]};
                    CycNum r = cross_ratio(slopes[perm[0]], slopes[perm[1]],
                                           slopes[perm[2]], slopes[perm[3]]);
                    if (!fs.contains(r))
                        return CrossRatioWitness{subset, arranged, std::move(r)};
                }
    return std::nullopt;
}

void check_input(long n, const std::vector<Direction>& U) {
    if (n < 3) throw std::domain_error("certify: n must be at least 3");
    for (size_t i = 0; i < U.size(); ++i) {
        if (n % U[i].vector.order() != 0)
            throw std::domain_error("certify: direction " + std::to_string(i) +
                                    " does not lie in Q(zeta_" + std::to_string(n) + ")");
        for (size_t j = i + 1; j < U.size(); ++j)
            if (U[i].slope == U[j].slope)
                throw std::domain_error("certify: directions " + std::to_string(i) + " and " +
                                        std::to_string(j) + " are parallel");
    }
}

}  // namespace

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Determined: return "determined";
        case Verdict::NotDetermined: return "not-determined";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

const char* rule_name(Rule r) {
    switch (r) {
        case Rule::CardinalityBelowFour: return "cardinality-below-four";
        case Rule::ExceedsBound: return "exceeds-b_n";
        case Rule::GoodCrossRatio: return "good-cross-ratio";
        case Rule::AllQuadruplesForbidden: return "all-quadruples-forbidden";
    }
    return "?";
}

std::optional<MagicBounds> magic_bounds(long n) {
    switch (n) {
        case 3:
        case 4: return MagicBounds{6, 7};
        case 5: return MagicBounds{10, 11};
        case 8: return MagicBounds{8, 9};
        case 12: return MagicBounds{12, 13};
        default: return std::nullopt;
    }
}

std::vector<long> tabulated_orders() { return {3, 4, 5, 8, 12}; }

Certificate certify(long n, const std::vector<Direction>& U) {
    check_input(n, U);
    Certificate cert;
    cert.n = n;
    cert.cardinality = static_cast<long>(U.size());
    auto mb = magic_bounds(n);
    if (mb) cert.bound = mb->b;

    if (cert.cardinality < 4) {
        cert.verdict = Verdict::NotDetermined;
        cert.rule = Rule::CardinalityBelowFour;
        return cert;
    }
    if (mb && cert.cardinality > mb->b) {
        cert.verdict = Verdict::Determined;
        cert.rule = Rule::ExceedsBound;
        return cert;
    }
    ForbiddenSet fs = forbidden_set(n);
    if (auto w = find_good_subset(U, fs)) {
        cert.verdict = Verdict::Determined;
        cert.rule = Rule::GoodCrossRatio;
        cert.witness = std::move(w);
        return cert;
    }
    cert.verdict = Verdict::Inconclusive;
    cert.rule = Rule::AllQuadruplesForbidden;
    return cert;
}

std::vector<Direction> suggest_directions(long n, long count, long norm_bound) {
    if (n < 3) throw std::domain_error("suggest_directions: n must be at least 3");
    if (count < 4) throw std::domain_error("suggest_directions: count must be at least 4");
    if (norm_bound < 1)
        throw std::domain_error("suggest_directions: norm_bound must be at least 1");

    const long phi = euler_phi(n);
    // Pairwise nonparallel pool in deterministic order: coefficient vectors
    // by increasing max-norm shell, lexicographic within a shell.
    std::vector<Direction> pool;
    std::vector<Slope> seen;
    size_t vectors_scanned = 0;
    auto slope_known = [&](const Slope& s) {
        for (const Slope& t : seen)
            if (t == s) return true;
        return false;
    };
    for (long shell = 1; shell <= norm_bound; ++shell) {
        std::vector<long> a(phi, -shell);
        while (true) {
            long maxabs = 0;
            for (long v : a) maxabs = std::max(maxabs, std::labs(v));
            if (maxabs == shell) {
                ++vectors_scanned;
                std::vector<Rational> coeffs;
                coeffs.reserve(phi);
                for (long v : a) coeffs.emplace_back(v);
                CycNum z(n, std::move(coeffs));
                if (z != CycNum(0)) {
                    Direction d = Direction::from_vector(std::move(z));
                    if (!slope_known(d.slope)) {
                        seen.push_back(d.slope);
                        pool.push_back(std::move(d));
                    }
                }
            }
            long i = phi - 1;
            while (i >= 0 && a[i] == shell) a[i--] = -shell;
            if (i < 0) break;
            ++a[i];
        }
    }

    auto not_found = [&](const std::string& why) -> std::runtime_error {
        return std::runtime_error("suggest_directions: " + why + " (scanned " +
                                  std::to_string(vectors_scanned) + " vectors, " +
                                  std::to_string(pool.size()) +
                                  " nonparallel directions, norm bound " +
                                  std::to_string(norm_bound) + ")");
    };
    if (static_cast<long>(pool.size()) < count)
        throw not_found("fewer nonparallel directions than requested");

    auto mb = magic_bounds(n);
    std::vector<Direction> result;
    if (mb && count > mb->b) {
        // Cardinality alone certifies; take the first `count` directions.
        result.assign(pool.begin(), pool.begin() + count);
    } else {
        // Seed with the first good 4-subset, then extend in pool order.
        ForbiddenSet fs = forbidden_set(n);
        auto w = find_good_subset(pool, fs);
        if (!w) throw not_found("no 4-subset with a cross ratio outside the forbidden set");
        for (size_t i : w->subset) result.push_back(pool[i]);
        for (size_t i = 0; static_cast<long>(result.size()) < count && i < pool.size(); ++i) {
            bool used = false;
            for (size_t j : w->subset) used = used || j == i;
            if (!used) result.push_back(pool[i]);
        }
        if (static_cast<long>(result.size()) < count)
            throw not_found("could not extend a certified 4-subset to the requested count");
    }
    Certificate check = certify(n, result);
    if (check.verdict != Verdict::Determined)
        throw std::logic_error("suggest_directions: candidate set failed certification");
    return result;
}

}  // namespace cyclotomo
