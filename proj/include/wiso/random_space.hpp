#pragma once

#include <cstdint>
#include <span>

#include "wiso/metric_space.hpp"
#include "wiso/monotone_map.hpp"

namespace wiso {

enum class SpaceKind { uniform, integer, perturbed };

/// Deterministic random metric space for a given seed. `uniform` draws
/// continuous distances and rejection-resamples until the triangle inequality
/// holds; `integer` draws natural-valued distances in [n, 2n] (always a
/// metric, rich in repeated values); `perturbed` jitters an integer space.
/// With `repair` set, a failing uniform draw is fixed by shortest-path
/// completion instead of resampled; `repaired` reports whether that happened.
FiniteMetricSpace random_space(int n, std::uint64_t seed, SpaceKind kind, bool repair = false,
                               bool* repaired = nullptr);

/// Strictly increasing concave piecewise-linear map with random decreasing
/// slopes. Concavity with psi(0)=0 gives subadditivity, so rescaling any
/// metric through it preserves the triangle inequality.
MonotoneMap random_concave_rescaling(std::uint64_t seed, double domain_max);

/// Uniformly random permutation of the labels of X (the matrix is permuted
/// accordingly); the metric is unchanged up to isometry.
FiniteMetricSpace shuffle_labels(const FiniteMetricSpace& X, std::uint64_t seed);

}  // namespace wiso
