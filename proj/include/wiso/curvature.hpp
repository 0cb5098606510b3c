#pragma once

#include <cstddef>
#include <vector>

#include "wiso/metric_space.hpp"

namespace wiso {

/// Distance matrix of an m-tuple of sample points (symmetric, zero diagonal).
struct SampleMatrix {
    int m = 0;
    std::vector<double> entries;  // m*m row-major

    double at(int i, int j) const { return entries[static_cast<std::size_t>(i) * m + j]; }
    bool operator==(const SampleMatrix& o) const = default;
    bool operator<(const SampleMatrix& o) const { return entries < o.entries; }
};

/// Lexicographically least matrix (row-major order) among all simultaneous
/// row/column permutations. Idempotent and invariant under permutation, so
/// two sample matrices are permutation-equivalent iff their forms are equal.
SampleMatrix canonical_matrix_form(const SampleMatrix& M, int perm_cap = 8);

/// m-th curvature set: the distance matrices of all m-tuples (with repetition
/// unless `reduced`). Stored as the exact-equality deduplicated set in sorted
/// order; comparison goes through canonical forms.
struct CurvatureSet {
    int m = 0;
    bool reduced = false;
    std::vector<SampleMatrix> matrices;  // sorted, deduplicated

    std::size_t size() const { return matrices.size(); }
    bool contains(const SampleMatrix& M) const;

    /// Deduplicated canonical forms of the members, sorted.
    std::vector<SampleMatrix> canonical_forms(int perm_cap = 8) const;
};

CurvatureSet curvature_set(const FiniteMetricSpace& X, int m, std::size_t tuple_cap = 1000000);

/// Injective tuples only; defined for m <= n.
CurvatureSet reduced_curvature_set(const FiniteMetricSpace& X, int m, int n_cap = 8);

/// Removes m-l rows/columns in all possible ways: for K_m(X) this reproduces
/// K_l(X), and likewise for reduced sets.
CurvatureSet project(const CurvatureSet& K, int l);

bool curvature_sets_equal(const CurvatureSet& A, const CurvatureSet& B, int perm_cap = 8);

/// Isometry via the complete invariant: X and Y of equal cardinality n are
/// isometric iff their n-th reduced curvature sets agree.
bool is_isometric_via_curvature(const FiniteMetricSpace& X, const FiniteMetricSpace& Y,
                                int n_cap = 8);

/// Weak isometry via the curvature sets of the canonicalizations.
bool is_weakly_isometric_via_curvature(const FiniteMetricSpace& X, const FiniteMetricSpace& Y,
                                       double tau = 0.0, int n_cap = 8);

}  // namespace wiso
