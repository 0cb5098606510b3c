#include "wiso/isometry.hpp"

#include <algorithm>
#include <numeric>

namespace wiso {

namespace {

std::vector<std::vector<double>> row_profiles(const FiniteMetricSpace& X) {
    const int n = X.size();
    std::vector<std::vector<double>> p(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            if (j != i) p[i].push_back(X(i, j));
        std::sort(p[i].begin(), p[i].end());
    }
    return p;
}

bool extend(const FiniteMetricSpace& X, const FiniteMetricSpace& Y,
            const std::vector<std::vector<double>>& px, const std::vector<std::vector<double>>& py,
            std::vector<int>& map, std::vector<bool>& used, int i) {
    const int n = X.size();
    if (i == n) return true;
    for (int j = 0; j < n; ++j) {
        if (used[j] || px[i] != py[j]) continue;
        bool ok = true;
        for (int i2 = 0; i2 < i; ++i2)
            if (X(i, i2) != Y(j, map[i2])) { ok = false; break; }
        if (!ok) continue;
        map[i] = j;
        used[j] = true;
        if (extend(X, Y, px, py, map, used, i + 1)) return true;
        used[j] = false;
    }
    return false;
}

}  // namespace

IsometryResult is_isometric(const FiniteMetricSpace& X, const FiniteMetricSpace& Y) {
    if (X.size() != Y.size()) return {false, std::nullopt, "SizeMismatch"};
    const int n = X.size();
    const auto px = row_profiles(X);
    const auto py = row_profiles(Y);

    // cheap global prune: the multiset of profiles must match
    {
        auto sx = px, sy = py;
        std::sort(sx.begin(), sx.end());
        std::sort(sy.begin(), sy.end());
        if (sx != sy) return {false, std::nullopt, "distance profiles differ"};
    }

    std::vector<int> map(n, -1);
    std::vector<bool> used(n, false);
    if (extend(X, Y, px, py, map, used, 0)) return {true, map, ""};
    return {false, std::nullopt, "no distance-preserving bijection"};
}

WeakIsometryResult is_weakly_isometric(const FiniteMetricSpace& X, const FiniteMetricSpace& Y,
                                       double tau) {
    if (X.size() != Y.size()) return {false, std::nullopt, std::nullopt, "SizeMismatch"};
    if (X.size() == 1) {
        return {true, std::vector<int>{0}, MonotoneMap::identity(), ""};
    }
    const CanonicalSpace cx = canonicalize(X, tau);
    const CanonicalSpace cy = canonicalize(Y, tau);
    IsometryResult iso = is_isometric(cx.space, cy.space);
    if (!iso.isometric) return {false, std::nullopt, std::nullopt, iso.reason};

    // Rank-aligned rescaling: i-th smallest distance of X to i-th of Y.
    // Exact on every pair because the canonical isometry preserves ranks.
    const DistanceSet dx = distance_set(X, tau);
    const DistanceSet dy = distance_set(Y, tau);
    std::vector<std::pair<double, double>> table;
    for (std::size_t i = 0; i < dx.size(); ++i) table.emplace_back(dx.values[i], dy.values[i]);
    return {true, iso.mapping, extend_monotone(table), ""};
}

bool brute_force_weak_isometry(const FiniteMetricSpace& X, const FiniteMetricSpace& Y, int cap) {
    if (X.size() != Y.size()) return false;
    const int n = X.size();
    if (n > cap)
        raise(Errc::cap_exceeded, "brute-force weak isometry capped at " + std::to_string(cap));

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
            for (int b = 0; b < n && ok; ++b)
                for (int c = 0; c < n && ok; ++c)
                    for (int d = 0; d < n && ok; ++d) {
                        const double l = X(a, b), r = X(c, d);
                        const double lm = Y(perm[a], perm[b]), rm = Y(perm[c], perm[d]);
                        if (l == r && lm != rm) ok = false;
                        if (l < r && !(lm < rm)) ok = false;
                    }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace wiso
