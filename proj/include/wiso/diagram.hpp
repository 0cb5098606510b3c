#pragma once

#include <utility>
#include <vector>

#include "wiso/metric_space.hpp"
#include "wiso/monotone_map.hpp"
#include "wiso/persistence.hpp"

namespace wiso {

/// Persistence diagram of a single homology dimension: a multiset of
/// (birth, death) points, death possibly infinite.
struct Diagram {
    std::vector<std::pair<double, double>> points;

    bool empty() const { return points.empty(); }
    static Diagram from_barcode(const Barcode& bc, int dim);
};

/// Exact bottleneck distance with diagonal matching. Finite points match each
/// other at L-infinity cost or their diagonal at half persistence; infinite
/// bars match only infinite bars at |birth difference| and an unequal count
/// of them makes the distance infinite. Computed by a feasibility search over
/// the finite candidate costs.
double bottleneck_distance(const Diagram& A, const Diagram& B);

/// Interleaving distance between the persistence modules the diagrams
/// summarize. For pointwise finite-dimensional modules over the real line the
/// interleaving distance equals the bottleneck distance of the diagrams (the
/// isometry theorem), which is what this returns.
double interleaving_distance(const Diagram& A, const Diagram& B);

/// Diagram of the module reindexed along psi: each bar [b, d) pulls back to
/// [psi^-1(b), psi^-1(d)). Uses the generalized inverse min{x : psi(x) >= y},
/// which coincides with psi^-1 for strict psi; non-strict maps require the
/// collapse flag and degenerate bars are dropped.
Diagram rescale_diagram(const Diagram& A, const MonotoneMap& psi, bool allow_collapse = false);

/// Directly transform the diagram by a monotone assignment on its sorted
/// distinct finite endpoint values (0 maps to 0, infinity stays). This is the
/// finite parametrization the rescaling optimization runs over; equal images
/// collapse a bar, which is then dropped.
Diagram apply_endpoint_images(const Diagram& A,
                              const std::vector<std::pair<double, double>>& images);

/// inf over rescalings psi of the interleaving distance d_I(A, B R_psi).
/// The pulled-back diagram depends on psi only through the images of B's
/// finite endpoints, so the search runs over non-decreasing endpoint images:
/// a coarse pass over candidate values (both diagrams' endpoints, midpoints,
/// zero) followed by per-coordinate descent. Non-decreasing images capture
/// the closure of the strictly increasing maps, including unattained collapse
/// limits.
double min_rescaled_interleaving(const Diagram& A, const Diagram& B, int endpoint_cap = 12);

/// Dissimilarity between persistence modules: the two one-sided rescaling
/// infima summed. Symmetric; zero on modules of weakly isometric spaces.
double dtilde(const Diagram& A, const Diagram& B, int endpoint_cap = 12);

struct StabilityReport {
    double dhat = 0.0;
    struct PerDim {
        int k = 0;
        double dtilde = 0.0;
        bool within_bound = false;
    };
    std::vector<PerDim> dims;
    bool all_within_bound = false;
    int binding_dim = -1;  // dimension with the largest dtilde
    double tolerance = 0.0;
};

/// Evaluates the stability inequality dtilde_k <= 2 * dhat + tol for every
/// homology dimension k <= max_k.
StabilityReport stability_check(const FiniteMetricSpace& X, const FiniteMetricSpace& Y,
                                int max_k = 1, double tol = 1e-6, int gh_cap = 7,
                                int field_char = 2);

}  // namespace wiso
