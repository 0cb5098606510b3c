#include "wiso/random_space.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace wiso {

namespace {

// uniform double in [0,1) from the engine's own bits; keeps files identical
// across standard library implementations
double unit(std::mt19937_64& rng) { return std::ldexp(static_cast<double>(rng() >> 11), -53); }

std::vector<std::string> default_labels(int n) {
    std::vector<std::string> labels(n);
    for (int i = 0; i < n; ++i) labels[i] = "p" + std::to_string(i);
    return labels;
}

bool triangle_ok(const std::vector<double>& d, int n) {
    auto at = [&](int i, int j) { return d[static_cast<std::size_t>(i) * n + j]; };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (at(i, k) > at(i, j) + at(j, k)) return false;
    return true;
}

void floyd_warshall(std::vector<double>& d, int n) {
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const double via = d[static_cast<std::size_t>(i) * n + k] +
                                   d[static_cast<std::size_t>(k) * n + j];
                double& cur = d[static_cast<std::size_t>(i) * n + j];
                if (via < cur) cur = via;
            }
}

void fill_symmetric(std::vector<double>& d, int n, auto&& draw) {
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double v = draw();
            d[static_cast<std::size_t>(i) * n + j] = v;
            d[static_cast<std::size_t>(j) * n + i] = v;
        }
}

}  // namespace

FiniteMetricSpace random_space(int n, std::uint64_t seed, SpaceKind kind, bool repair,
                               bool* repaired) {
    if (n < 1) raise(Errc::bad_input, "n must be at least 1");
    if (repaired) *repaired = false;
    std::mt19937_64 rng(seed);
    std::vector<double> d(static_cast<std::size_t>(n) * n, 0.0);

    switch (kind) {
        case SpaceKind::uniform: {
            for (int attempt = 0; attempt < 1000; ++attempt) {
                fill_symmetric(d, n, [&] { return 1.0 + 1.8 * unit(rng); });
                if (triangle_ok(d, n)) return FiniteMetricSpace::validate(default_labels(n), d);
                if (repair) {
                    floyd_warshall(d, n);
                    if (repaired) *repaired = true;
                    return FiniteMetricSpace::validate(default_labels(n), d);
                }
            }
            raise(Errc::bad_input, "could not sample a metric in 1000 attempts");
        }
        case SpaceKind::integer: {
            // range [n, 2n] keeps every triple within the triangle inequality
            fill_symmetric(d, n, [&] {
                return static_cast<double>(n + static_cast<int>(unit(rng) * (n + 1)));
            });
            return FiniteMetricSpace::validate(default_labels(n), d);
        }
        case SpaceKind::perturbed: {
            for (int attempt = 0; attempt < 1000; ++attempt) {
                std::vector<double> base(static_cast<std::size_t>(n) * n, 0.0);
                fill_symmetric(base, n, [&] {
                    return static_cast<double>(n + static_cast<int>(unit(rng) * (n + 1)));
                });
                d = base;
                for (int i = 0; i < n; ++i)
                    for (int j = i + 1; j < n; ++j) {
                        const double jitter = (unit(rng) - 0.5) * 2e-3;
                        d[static_cast<std::size_t>(i) * n + j] += jitter;
                        d[static_cast<std::size_t>(j) * n + i] =
                            d[static_cast<std::size_t>(i) * n + j];
                    }
                if (triangle_ok(d, n)) return FiniteMetricSpace::validate(default_labels(n), d);
            }
            raise(Errc::bad_input, "could not sample a perturbed metric in 1000 attempts");
        }
    }
    raise(Errc::bad_input, "unknown space kind");
}

MonotoneMap random_concave_rescaling(std::uint64_t seed, double domain_max) {
    std::mt19937_64 rng(seed);
    const int segments = 2 + static_cast<int>(unit(rng) * 4);
    std::vector<std::pair<double, double>> bps{{0.0, 0.0}};
    double slope = 0.8 + 1.6 * unit(rng);
    double x = 0.0, y = 0.0;
    const double step = std::max(domain_max, 1.0) / segments;
    for (int s = 0; s < segments; ++s) {
        x += step * (0.5 + unit(rng));
        y += slope * (x - bps.back().first);
        bps.emplace_back(x, y);
        slope *= 0.5 + 0.45 * unit(rng);  // decreasing slopes keep it concave
    }
    return MonotoneMap::from_breakpoints(std::move(bps), slope);
}

FiniteMetricSpace shuffle_labels(const FiniteMetricSpace& X, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const int n = X.size();
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    for (int i = n - 1; i > 0; --i) {
        const int j = static_cast<int>(unit(rng) * (i + 1));
        std::swap(perm[i], perm[j]);
    }
    std::vector<double> d(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            d[static_cast<std::size_t>(perm[i]) * n + perm[j]] = X(i, j);
    return FiniteMetricSpace::validate(X.labels(), d);
}

}  // namespace wiso
