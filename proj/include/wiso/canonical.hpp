#pragma once

#include "wiso/metric_space.hpp"
#include "wiso/monotone_map.hpp"

namespace wiso {

/// A space in canonical form together with the rescaling that produced it.
/// Canonical means: distances are the consecutive integers
/// 2*C(n,2)-k+1 .. 2*C(n,2) where k is the number of distinct distances.
/// Two spaces are weakly isometric exactly when their canonical forms are
/// isometric, which reduces the rescaling-invariant problem to a classical
/// one.
struct CanonicalSpace {
    FiniteMetricSpace space;
    MonotoneMap psi;         // piecewise-linear extension of the distance table
    bool singleton = false;  // n = 1 has no distances; returned unchanged
};

/// Maps the i-th smallest distance to 2*C(n,2) - k + i. The output always
/// satisfies the triangle inequality (twice its minimum distance exceeds its
/// maximum) and canonicalize is idempotent up to isometry.
CanonicalSpace canonicalize(const FiniteMetricSpace& X, double tau = 0.0);

/// Replaces every off-diagonal distance d with psi(d). psi must be strictly
/// increasing on the distance set unless `allow_collapse` is set, in which
/// case the result may be a semi-metric and is returned unvalidated (internal
/// use). With a strict psi the result is validated: strictly increasing
/// rescalings need not preserve the triangle inequality, and violations are
/// surfaced rather than silently returned.
FiniteMetricSpace apply_rescaling(const FiniteMetricSpace& X, const MonotoneMap& psi,
                                  bool allow_collapse = false);

}  // namespace wiso
