#include "wiso/curvature.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "wiso/canonical.hpp"
#include "wiso/isometry.hpp"

namespace wiso {

SampleMatrix canonical_matrix_form(const SampleMatrix& M, int perm_cap) {
    const int m = M.m;
    if (m > perm_cap)
        raise(Errc::cap_exceeded, "canonical form capped at m = " + std::to_string(perm_cap));
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<double> best = M.entries;
    do {
        // compare the permuted matrix to the incumbent, bailing at the first
        // position that is already larger
        bool better = false;
        bool worse = false;
        for (int r = 0; r < m && !worse; ++r)
            for (int c = 0; c < m; ++c) {
                const double v = M.at(perm[r], perm[c]);
                const double b = best[static_cast<std::size_t>(r) * m + c];
                if (better) {
                    best[static_cast<std::size_t>(r) * m + c] = v;
                    continue;
                }
                if (v < b) {
                    better = true;
                    best[static_cast<std::size_t>(r) * m + c] = v;
                } else if (v > b) {
                    worse = true;
                    break;
                }
            }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return {m, std::move(best)};
}

bool CurvatureSet::contains(const SampleMatrix& M) const {
    return std::binary_search(matrices.begin(), matrices.end(), M);
}

std::vector<SampleMatrix> CurvatureSet::canonical_forms(int perm_cap) const {
    std::set<std::vector<double>> forms;
    for (const auto& M : matrices) forms.insert(canonical_matrix_form(M, perm_cap).entries);
    std::vector<SampleMatrix> out;
    out.reserve(forms.size());
    for (const auto& e : forms) out.push_back({m, e});
    return out;
}

namespace {

CurvatureSet from_entry_set(int m, bool reduced, std::set<std::vector<double>>&& entries) {
    CurvatureSet K{m, reduced, {}};
    K.matrices.reserve(entries.size());
    for (const auto& e : entries) K.matrices.push_back({m, e});
    return K;
}

}  // namespace

CurvatureSet curvature_set(const FiniteMetricSpace& X, int m, std::size_t tuple_cap) {
    if (m < 1) raise(Errc::bad_dimension, "m must be positive");
    const int n = X.size();
    double count = 1;
    for (int i = 0; i < m; ++i) count *= n;
    if (count > static_cast<double>(tuple_cap))
        raise(Errc::cap_exceeded, "n^m exceeds the tuple cap");

    std::set<std::vector<double>> entries;
    std::vector<int> tuple(m, 0);
    std::vector<double> mat(static_cast<std::size_t>(m) * m);
    while (true) {
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                mat[static_cast<std::size_t>(i) * m + j] = i == j ? 0.0 : X(tuple[i], tuple[j]);
        entries.insert(mat);
        int pos = m - 1;
        while (pos >= 0 && tuple[pos] == n - 1) tuple[pos--] = 0;
        if (pos < 0) break;
        ++tuple[pos];
    }
    return from_entry_set(m, false, std::move(entries));
}

namespace {

void injective_tuples(const FiniteMetricSpace& X, int m, std::vector<int>& tuple,
                      std::vector<bool>& used, std::set<std::vector<double>>& entries) {
    const int n = X.size();
    const int depth = static_cast<int>(tuple.size());
    if (depth == m) {
        std::vector<double> mat(static_cast<std::size_t>(m) * m, 0.0);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                if (i != j) mat[static_cast<std::size_t>(i) * m + j] = X(tuple[i], tuple[j]);
        entries.insert(std::move(mat));
        return;
    }
    for (int v = 0; v < n; ++v) {
        if (used[v]) continue;
        used[v] = true;
        tuple.push_back(v);
        injective_tuples(X, m, tuple, used, entries);
        tuple.pop_back();
        used[v] = false;
    }
}

}  // namespace

CurvatureSet reduced_curvature_set(const FiniteMetricSpace& X, int m, int n_cap) {
    if (m < 1) raise(Errc::bad_dimension, "m must be positive");
    const int n = X.size();
    if (m > n)
        raise(Errc::m_exceeds_n,
              "reduced curvature sets do not exist for m > n (m = " + std::to_string(m) +
                  ", n = " + std::to_string(n) + ")");
    if (n > n_cap || m > n_cap)
        raise(Errc::cap_exceeded, "reduced enumeration capped at n = " + std::to_string(n_cap));

    std::set<std::vector<double>> entries;
    std::vector<int> tuple;
    std::vector<bool> used(n, false);
    injective_tuples(X, m, tuple, used, entries);
    return from_entry_set(m, true, std::move(entries));
}

CurvatureSet project(const CurvatureSet& K, int l) {
    if (l < 1 || l > K.m) raise(Errc::bad_dimension, "projection target out of range");
    const int m = K.m;
    std::set<std::vector<double>> entries;

    // all ascending index subsets of size l
    std::vector<int> keep(l);
    std::iota(keep.begin(), keep.end(), 0);
    while (true) {
        for (const auto& M : K.matrices) {
            std::vector<double> sub(static_cast<std::size_t>(l) * l);
            for (int i = 0; i < l; ++i)
                for (int j = 0; j < l; ++j)
                    sub[static_cast<std::size_t>(i) * l + j] = M.at(keep[i], keep[j]);
            entries.insert(std::move(sub));
        }
        int pos = l - 1;
        while (pos >= 0 && keep[pos] == m - l + pos) --pos;
        if (pos < 0) break;
        ++keep[pos];
        for (int q = pos + 1; q < l; ++q) keep[q] = keep[q - 1] + 1;
    }
    return from_entry_set(l, K.reduced, std::move(entries));
}

bool curvature_sets_equal(const CurvatureSet& A, const CurvatureSet& B, int perm_cap) {
    if (A.m != B.m || A.reduced != B.reduced)
        raise(Errc::dimension_mismatch, "curvature sets of different order or kind");
    return A.canonical_forms(perm_cap) == B.canonical_forms(perm_cap);
}

bool is_isometric_via_curvature(const FiniteMetricSpace& X, const FiniteMetricSpace& Y,
                                int n_cap) {
    if (X.size() != Y.size()) return false;
    const int n = X.size();
    return curvature_sets_equal(reduced_curvature_set(X, n, n_cap),
                                reduced_curvature_set(Y, n, n_cap), n_cap);
}

bool is_weakly_isometric_via_curvature(const FiniteMetricSpace& X, const FiniteMetricSpace& Y,
                                       double tau, int n_cap) {
    if (X.size() != Y.size()) return false;
    return is_isometric_via_curvature(canonicalize(X, tau).space, canonicalize(Y, tau).space,
                                      n_cap);
}

}  // namespace wiso
