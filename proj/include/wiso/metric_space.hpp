#pragma once

#include <span>
#include <string>
#include <vector>

#include "wiso/errors.hpp"

namespace wiso {

/// A finite metric space: labeled points with a symmetric, positive
/// off-diagonal, triangle-inequality-satisfying distance matrix. Instances
/// are immutable; construction goes through `validate` which enforces the
/// metric axioms, or `unchecked` for internal semi-metric intermediates.
class FiniteMetricSpace {
public:
    static FiniteMetricSpace validate(std::vector<std::string> labels,
                                      const std::vector<std::vector<double>>& dist);
    static FiniteMetricSpace validate(std::vector<std::string> labels, std::vector<double> flat);

    /// Skips the metric axioms. Only for internal use where a semi-metric is
    /// acceptable (see apply_rescaling's collapse path).
    static FiniteMetricSpace unchecked(std::vector<std::string> labels, std::vector<double> flat);

    int size() const { return n_; }
    double operator()(int i, int j) const { return dist_[static_cast<std::size_t>(i) * n_ + j]; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::span<const double> data() const { return dist_; }
    double diameter() const;

    bool operator==(const FiniteMetricSpace& other) const {
        return labels_ == other.labels_ && dist_ == other.dist_;
    }

private:
    FiniteMetricSpace(std::vector<std::string> labels, std::vector<double> flat, int n)
        : labels_(std::move(labels)), dist_(std::move(flat)), n_(n) {}

    std::vector<std::string> labels_;
    std::vector<double> dist_;  // n*n row-major
    int n_ = 0;
};

/// The set of distinct positive pairwise distances, strictly ascending.
struct DistanceSet {
    std::vector<double> values;

    std::size_t size() const { return values.size(); }
};

/// Distances are grouped by exact equality by default. A positive `tau`
/// merges values whose consecutive sorted gap is at most tau (single-linkage
/// chaining); each group is represented by its minimum.
DistanceSet distance_set(const FiniteMetricSpace& X, double tau = 0.0);

/// Group index of every off-diagonal entry under the same tau-grouping that
/// distance_set uses. Entry (i,j) belongs to groups[i*n+j]; diagonal is -1.
std::vector<int> distance_group_index(const FiniteMetricSpace& X, double tau = 0.0);

}  // namespace wiso
