#include "wiso/metric_space.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace wiso {

FiniteMetricSpace FiniteMetricSpace::validate(std::vector<std::string> labels,
                                              const std::vector<std::vector<double>>& dist) {
    const std::size_t n = dist.size();
    std::vector<double> flat;
    flat.reserve(n * n);
    for (const auto& row : dist) {
        if (row.size() != n)
            raise(Errc::asymmetric_matrix, "matrix is not square");
        flat.insert(flat.end(), row.begin(), row.end());
    }
    if (labels.size() != n)
        raise(Errc::bad_input, "label count does not match matrix dimension");
    return validate(std::move(labels), std::move(flat));
}

FiniteMetricSpace FiniteMetricSpace::validate(std::vector<std::string> labels,
                                              std::vector<double> flat) {
    const int n = static_cast<int>(labels.size());
    if (n < 1) raise(Errc::bad_input, "a metric space needs at least one point");
    if (flat.size() != static_cast<std::size_t>(n) * n)
        raise(Errc::asymmetric_matrix, "matrix is not n x n");

    {
        std::set<std::string> seen;
        for (int i = 0; i < n; ++i)
            if (!seen.insert(labels[i]).second)
                raise(Errc::duplicate_label, "label '" + labels[i] + "' repeats", {i});
    }

    auto at = [&](int i, int j) { return flat[static_cast<std::size_t>(i) * n + j]; };
    for (int i = 0; i < n; ++i) {
        if (at(i, i) != 0.0)
            raise(Errc::nonzero_diagonal, "d(" + labels[i] + "," + labels[i] + ") != 0", {i, i});
        for (int j = i + 1; j < n; ++j) {
            const double d = at(i, j);
            if (std::isnan(d) || std::isnan(at(j, i)))
                raise(Errc::negative_distance, "NaN distance", {i, j});
            if (d != at(j, i))
                raise(Errc::asymmetric_matrix,
                      "d(" + labels[i] + "," + labels[j] + ") != d(" + labels[j] + "," + labels[i] + ")",
                      {i, j});
            if (d < 0.0)
                raise(Errc::negative_distance, "d(" + labels[i] + "," + labels[j] + ") < 0", {i, j});
            if (d == 0.0)
                raise(Errc::zero_off_diagonal,
                      "distinct points " + labels[i] + "," + labels[j] + " at distance 0", {i, j});
        }
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (at(i, k) > at(i, j) + at(j, k))
                    raise(Errc::triangle_violation,
                          "d(" + labels[i] + "," + labels[k] + ") > d(" + labels[i] + "," +
                              labels[j] + ") + d(" + labels[j] + "," + labels[k] + ")",
                          {i, j, k});

    return FiniteMetricSpace(std::move(labels), std::move(flat), n);
}

FiniteMetricSpace FiniteMetricSpace::unchecked(std::vector<std::string> labels,
                                               std::vector<double> flat) {
    const int n = static_cast<int>(labels.size());
    return FiniteMetricSpace(std::move(labels), std::move(flat), n);
}

double FiniteMetricSpace::diameter() const {
    double d = 0.0;
    for (double v : dist_) d = std::max(d, v);
    return d;
}

namespace {

// Sorted distinct off-diagonal values, then tau-chained group boundaries.
std::vector<std::vector<double>> grouped_values(const FiniteMetricSpace& X, double tau) {
    std::set<double> distinct;
    const int n = X.size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) distinct.insert(X(i, j));

    std::vector<std::vector<double>> groups;
    for (double v : distinct) {
        if (!groups.empty() && tau > 0.0 && v - groups.back().back() <= tau)
            groups.back().push_back(v);
        else
            groups.push_back({v});
    }
    return groups;
}

}  // namespace

DistanceSet distance_set(const FiniteMetricSpace& X, double tau) {
    DistanceSet ds;
    for (const auto& g : grouped_values(X, tau)) ds.values.push_back(g.front());
    return ds;
}

std::vector<int> distance_group_index(const FiniteMetricSpace& X, double tau) {
    const auto groups = grouped_values(X, tau);
    const int n = X.size();
    std::vector<int> idx(static_cast<std::size_t>(n) * n, -1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const double d = X(i, j);
            for (std::size_t g = 0; g < groups.size(); ++g)
                if (d >= groups[g].front() && d <= groups[g].back()) {
                    idx[static_cast<std::size_t>(i) * n + j] = static_cast<int>(g);
                    break;
                }
        }
    return idx;
}

}  // namespace wiso
