#pragma once

// Shared fixtures and independent oracles for the test suites. The oracles
// deliberately avoid the library's search strategies: correspondences are
// enumerated as raw subsets, the isotonic check walks an epsilon grid, and
// the rescaling search is a multiresolution grid refinement.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "wiso/canonical.hpp"
#include "wiso/diagram.hpp"
#include "wiso/gromov_hausdorff.hpp"
#include "wiso/isotonic.hpp"
#include "wiso/metric_space.hpp"
#include "wiso/monotone_map.hpp"
#include "wiso/random_space.hpp"

namespace testsupport {

inline wiso::FiniteMetricSpace triangle(double d01, double d02, double d12) {
    return wiso::FiniteMetricSpace::validate(
        {"x1", "x2", "x3"}, std::vector<double>{0, d01, d02, d01, 0, d12, d02, d12, 0});
}

inline wiso::FiniteMetricSpace four_points(std::vector<double> upper) {
    // upper = {d01, d02, d03, d12, d13, d23}
    return wiso::FiniteMetricSpace::validate(
        {"x1", "x2", "x3", "x4"},
        std::vector<double>{0,        upper[0], upper[1], upper[2], upper[0], 0,
                            upper[3], upper[4], upper[1], upper[3], 0,        upper[5],
                            upper[2], upper[4], upper[5], 0});
}

// Named spaces from the worked examples.
inline wiso::FiniteMetricSpace fig1_x() { return triangle(5, 6, 6); }
inline wiso::FiniteMetricSpace fig1_y() { return triangle(6, 5, 5); }
inline wiso::FiniteMetricSpace fig2_x() { return triangle(3, 4, 5); }
inline wiso::FiniteMetricSpace fig2_y() { return triangle(3, 4, 4); }
inline wiso::FiniteMetricSpace fig2_z() { return triangle(3, 4, 6); }
inline wiso::FiniteMetricSpace rem517_x() { return four_points({7, 9, 10, 8, 11, 12}); }
inline wiso::FiniteMetricSpace rem517_y() { return four_points({7, 9, 10, 8, 12, 11}); }
inline wiso::FiniteMetricSpace ex521_x() { return four_points({7, 12, 8, 10, 11, 9}); }
inline wiso::FiniteMetricSpace ex521_y() { return four_points({7, 12, 8, 10, 9, 11}); }

inline double unit(std::mt19937_64& rng) {
    return std::ldexp(static_cast<double>(rng() >> 11), -53);
}

inline wiso::FiniteMetricSpace random_mixed_space(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const int pick = static_cast<int>(rng() % 3);
    const wiso::SpaceKind kind = pick == 0   ? wiso::SpaceKind::uniform
                                 : pick == 1 ? wiso::SpaceKind::integer
                                             : wiso::SpaceKind::perturbed;
    return wiso::random_space(n, rng(), kind);
}

/// Weakly isometric partner: a random concave strict rescaling followed by a
/// label shuffle.
inline wiso::FiniteMetricSpace wi_partner(const wiso::FiniteMetricSpace& X, std::uint64_t seed) {
    const wiso::MonotoneMap psi = wiso::random_concave_rescaling(seed, X.diameter());
    return wiso::shuffle_labels(wiso::apply_rescaling(X, psi), seed ^ 0x9e3779b97f4a7c15ull);
}

// ---- exhaustive-correspondence oracles (subset enumeration) ----

struct SubsetOracle {
    const wiso::FiniteMetricSpace& X;
    const wiso::FiniteMetricSpace& Y;
    int n, m;

    bool surjective(std::uint32_t mask) const {
        std::uint32_t xs = 0, ys = 0;
        for (int k = 0; mask >> k; ++k)
            if (mask >> k & 1) {
                xs |= 1u << (k / m);
                ys |= 1u << (k % m);
            }
        return xs == (1u << n) - 1 && ys == (1u << m) - 1;
    }

    template <typename Fn>
    void for_each_correspondence(Fn&& fn) const {
        const int bits = n * m;
        for (std::uint32_t mask = 1; mask < (1u << bits); ++mask) {
            if (!surjective(mask)) continue;
            std::vector<std::pair<int, int>> pairs;
            for (int k = 0; k < bits; ++k)
                if (mask >> k & 1) pairs.emplace_back(k / m, k % m);
            fn(pairs);
        }
    }
};

/// GH distance by enumerating every correspondence; usable for n*m <= 20.
inline double oracle_gh(const wiso::FiniteMetricSpace& X, const wiso::FiniteMetricSpace& Y) {
    SubsetOracle o{X, Y, X.size(), Y.size()};
    double best = std::numeric_limits<double>::infinity();
    o.for_each_correspondence([&](const std::vector<std::pair<int, int>>& pairs) {
        double dis = 0.0;
        for (std::size_t a = 0; a < pairs.size() && dis < best; ++a)
            for (std::size_t b = a; b < pairs.size(); ++b)
                dis = std::max(dis, std::abs(X(pairs[a].first, pairs[b].first) -
                                             Y(pairs[a].second, pairs[b].second)));
        best = std::min(best, dis);
    });
    return best / 2.0;
}

/// inf over rescalings of GH, by enumerating every correspondence and solving
/// the pinned isotonic problem on each.
inline double oracle_min_rescaled(const wiso::FiniteMetricSpace& X,
                                  const wiso::FiniteMetricSpace& Y) {
    SubsetOracle o{X, Y, X.size(), Y.size()};
    const wiso::DistanceSet ds = wiso::distance_set(X);
    const int n = X.size();
    std::vector<int> gidx(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) {
                auto it = std::lower_bound(ds.values.begin(), ds.values.end(), X(i, j));
                gidx[static_cast<std::size_t>(i) * n + j] =
                    1 + static_cast<int>(it - ds.values.begin());
            }
    const int groups = static_cast<int>(ds.size()) + 1;
    double best = std::numeric_limits<double>::infinity();
    std::vector<double> gmax(groups), gmin(groups);
    std::vector<int> cnt(groups);
    o.for_each_correspondence([&](const std::vector<std::pair<int, int>>& pairs) {
        std::fill(cnt.begin(), cnt.end(), 0);
        double pin = 0.0;
        for (std::size_t a = 0; a < pairs.size(); ++a)
            for (std::size_t b = 0; b < pairs.size(); ++b) {
                const int g = gidx[static_cast<std::size_t>(pairs[a].first) * n + pairs[b].first];
                const double t = Y(pairs[a].second, pairs[b].second);
                if (g == 0) {
                    pin = std::max(pin, t);
                    continue;
                }
                if (cnt[g] == 0)
                    gmax[g] = gmin[g] = t;
                else {
                    gmax[g] = std::max(gmax[g], t);
                    gmin[g] = std::min(gmin[g], t);
                }
                ++cnt[g];
            }
        double eps = pin;
        double prefmax = -std::numeric_limits<double>::infinity();
        for (int g = 1; g < groups; ++g) {
            if (!cnt[g]) continue;
            prefmax = std::max(prefmax, gmax[g]);
            eps = std::max(eps, (prefmax - gmin[g]) / 2.0);
        }
        best = std::min(best, eps);
    });
    return best / 2.0;
}

inline double oracle_dhat(const wiso::FiniteMetricSpace& X, const wiso::FiniteMetricSpace& Y) {
    return oracle_min_rescaled(X, Y) + oracle_min_rescaled(Y, X);
}

// ---- isotonic epsilon-grid oracle ----

/// Smallest feasible epsilon on a grid of the given step: a non-decreasing
/// selection with every group value within eps of all its targets exists iff
/// the greedy forward assignment v_i = max(v_{i-1}, max_i - eps, 0) stays
/// below min_i + eps.
inline double oracle_isotonic_grid(const wiso::IsotonicInstance& inst, double step = 1e-3) {
    double top = 0.0;
    for (const auto& g : inst.groups)
        for (double t : g.targets) top = std::max(top, t);
    auto feasible = [&](double eps) {
        std::size_t begin = 0;
        if (inst.pinned_zero) {
            for (double t : inst.groups[0].targets)
                if (t > eps) return false;
            begin = 1;
        }
        double v = 0.0;
        for (std::size_t i = begin; i < inst.groups.size(); ++i) {
            double mx = inst.groups[i].targets[0], mn = mx;
            for (double t : inst.groups[i].targets) {
                mx = std::max(mx, t);
                mn = std::min(mn, t);
            }
            v = std::max({v, mx - eps, 0.0});
            if (v > mn + eps) return false;
        }
        return true;
    };
    for (double eps = 0.0; eps <= top + step; eps += step)
        if (feasible(eps)) return eps;
    return top;
}

// ---- multiresolution grid oracle for the rescaling infimum ----

inline double oracle_min_rescaled_interleaving(const wiso::Diagram& A, const wiso::Diagram& B,
                                               double step = 1e-3) {
    std::vector<double> keys;
    {
        std::vector<double> vals;
        for (const auto& [b, d] : B.points) {
            if (b > 0.0) vals.push_back(b);
            if (std::isfinite(d) && d > 0.0) vals.push_back(d);
        }
        std::sort(vals.begin(), vals.end());
        vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
        keys = vals;
    }
    const int p = static_cast<int>(keys.size());
    if (p == 0) return wiso::bottleneck_distance(A, B);

    double top = 0.0;
    for (const auto& [b, d] : A.points) {
        top = std::max(top, b);
        if (std::isfinite(d)) top = std::max(top, d);
    }
    for (const auto& [b, d] : B.points) {
        top = std::max(top, b);
        if (std::isfinite(d)) top = std::max(top, d);
    }

    auto eval = [&](const std::vector<double>& u) {
        std::vector<std::pair<double, double>> images(keys.size());
        for (std::size_t i = 0; i < keys.size(); ++i) images[i] = {keys[i], u[i]};
        return wiso::bottleneck_distance(A, wiso::apply_endpoint_images(B, images));
    };

    std::vector<double> lo(p, 0.0), hi(p, top), best_u(p, 0.0);
    double best = eval(best_u);
    const int G = 10;
    double width = top;
    while (width > step / 2.0) {
        // enumerate monotone tuples over the per-coordinate grids
        std::vector<double> u(p);
        std::vector<int> idx(p, 0);
        auto value_at = [&](int dim, int t) { return lo[dim] + (hi[dim] - lo[dim]) * t / G; };
        auto rec = [&](auto&& self, int dim) -> void {
            if (dim == p) {
                const double v = eval(u);
                if (v < best) {
                    best = v;
                    best_u = u;
                }
                return;
            }
            for (int t = 0; t <= G; ++t) {
                const double val = value_at(dim, t);
                if (dim > 0 && val < u[dim - 1]) continue;
                u[dim] = val;
                self(self, dim + 1);
            }
        };
        rec(rec, 0);
        width = 0.0;
        for (int i = 0; i < p; ++i) {
            const double w = (hi[i] - lo[i]) / G;
            lo[i] = std::max(0.0, best_u[i] - w);
            hi[i] = std::min(top, best_u[i] + w);
            width = std::max(width, hi[i] - lo[i]);
        }
    }
    return best;
}

}  // namespace testsupport
