#pragma once

#include <utility>
#include <vector>

#include "wiso/isotonic.hpp"
#include "wiso/metric_space.hpp"

namespace wiso {

/// Relation between the points of two spaces whose projections cover both
/// sides; the optimization variable of the Gromov-Hausdorff distance.
struct Correspondence {
    std::vector<std::pair<int, int>> pairs;  // (index in X, index in Y), sorted unique
};

/// max over pairs (x,y),(x',y') of |d_X(x,x') - d_Y(y,y')|.
double distortion(const Correspondence& C, const FiniteMetricSpace& X,
                  const FiniteMetricSpace& Y);

struct GhResult {
    double distance = 0.0;  // half the minimal distortion
    Correspondence correspondence;
};

/// Exact Gromov-Hausdorff distance by branch and bound over the pair maps
/// (f: X -> Y, g: Y -> X) whose graphs span the minimal correspondences;
/// the objective is monotone under pair inclusion so this covers the full
/// minimum. Assignments are explored in X-index then Y-index order and the
/// partial distortion is the pruning bound.
GhResult gh_distance(const FiniteMetricSpace& X, const FiniteMetricSpace& Y, int cap = 7);

/// inf over strictly increasing psi with psi(0)=0 of GH((X, psi.d_X), (Y, d_Y)).
/// For a fixed correspondence the inner infimum is an L-infinity isotonic
/// regression on the distance values of X with the matched values of Y as
/// targets and the origin pinned; the strict infimum equals that relaxed
/// minimum because non-decreasing maps are the closure of strictly increasing
/// ones on a finite set. The outer minimum runs over the same branch and
/// bound as gh_distance with the isotonic error as bound and objective.
double min_rescaled_gh(const FiniteMetricSpace& X, const FiniteMetricSpace& Y, int cap = 7);

/// The rescaling-invariant dissimilarity: min_rescaled_gh in both directions,
/// summed. Symmetric, non-negative, zero exactly on weakly isometric pairs;
/// not a pseudo-distance (the triangle inequality genuinely fails).
double dhat(const FiniteMetricSpace& X, const FiniteMetricSpace& Y, int cap = 7);

}  // namespace wiso
