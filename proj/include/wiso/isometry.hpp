#pragma once

#include <optional>

#include "wiso/canonical.hpp"
#include "wiso/metric_space.hpp"
#include "wiso/monotone_map.hpp"

namespace wiso {

struct IsometryResult {
    bool isometric = false;
    std::optional<std::vector<int>> mapping;  // mapping[i] = index in Y of X's point i
    std::string reason;
};

/// Exact isometry test by backtracking over partial bijections, pruning with
/// per-vertex sorted distance profiles. The witness is the lexicographically
/// first bijection in X-index order.
IsometryResult is_isometric(const FiniteMetricSpace& X, const FiniteMetricSpace& Y);

struct WeakIsometryResult {
    bool equivalent = false;
    std::optional<std::vector<int>> mapping;
    std::optional<MonotoneMap> rescaling;  // psi with psi(d_X(x,x')) = d_Y(phi x, phi x')
    std::string reason;
};

/// Decides weak isometry through the canonicalizations: X ~ Y iff their
/// canonical forms are isometric. On success the returned psi maps the i-th
/// smallest distance of X to the i-th smallest distance of Y exactly.
WeakIsometryResult is_weakly_isometric(const FiniteMetricSpace& X, const FiniteMetricSpace& Y,
                                       double tau = 0.0);

/// Independent oracle: enumerates every bijection and checks the two
/// order-preservation implications literally (equal distances map to equal,
/// smaller to smaller). Guarded by a factorial cap.
bool brute_force_weak_isometry(const FiniteMetricSpace& X, const FiniteMetricSpace& Y,
                               int cap = 8);

}  // namespace wiso
