#pragma once

#include <vector>

#include "wiso/metric_space.hpp"
#include "wiso/monotone_map.hpp"

namespace wiso {

struct Simplex {
    std::vector<int> vertices;  // strictly ascending

    int dim() const { return static_cast<int>(vertices.size()) - 1; }
    bool operator==(const Simplex& o) const = default;
    bool operator<(const Simplex& o) const {
        if (vertices.size() != o.vertices.size()) return vertices.size() < o.vertices.size();
        return vertices < o.vertices;
    }
};

/// All cliques of the eps-neighborhood graph (edges where d <= eps) up to the
/// given dimension, sorted by (dimension, vertices).
std::vector<Simplex> vr_complex(const FiniteMetricSpace& X, double eps, int max_dim);

/// The Vietoris-Rips filtration of a finite metric space, represented by its
/// edge values: a simplex appears at the maximum of its edge values (flag
/// rule), so the whole filtration is determined by the n*(n-1)/2 edges.
class FlagFiltration {
public:
    static FlagFiltration build(const FiniteMetricSpace& X, int max_dim);

    int point_count() const { return n_; }
    int max_dim() const { return max_dim_; }
    double edge_value(int i, int j) const { return edges_[static_cast<std::size_t>(i) * n_ + j]; }

    /// Distinct edge values ascending with 0 prepended.
    const std::vector<double>& critical_values() const { return critical_; }

    /// Every simplex up to max_dim with its appearance value, in filtration
    /// order: (value, dimension, lexicographic vertices).
    std::vector<std::pair<Simplex, double>> simplices(std::size_t simplex_cap = 1000000) const;

    std::vector<Simplex> complex_at(double eps) const;

private:
    FlagFiltration() = default;
    int n_ = 0;
    int max_dim_ = 0;
    std::vector<double> edges_;
    std::vector<double> critical_;
    friend FlagFiltration rescale_filtration(const FlagFiltration&, const MonotoneMap&);
};

/// Maps every edge value through psi. psi must be strictly increasing on the
/// edge values so that appearance order is preserved.
FlagFiltration rescale_filtration(const FlagFiltration& F, const MonotoneMap& psi);

struct ScaleIsoReport {
    bool all_isomorphic = false;
    std::vector<std::pair<double, bool>> per_scale;  // (critical value, isomorphic?)
};

/// Tests, at every merged critical value, whether the two VR complexes are
/// isomorphic. Flag complexes are determined by their 1-skeletons, so this is
/// graph isomorphism of the threshold graphs (backtracking with degree
/// pruning). A per-scale isomorphism everywhere does NOT imply isometry.
ScaleIsoReport per_scale_isomorphic(const FiniteMetricSpace& X, const FiniteMetricSpace& Y,
                                    int cap = 8);

}  // namespace wiso
