#include "wiso/canonical.hpp"

namespace wiso {

CanonicalSpace canonicalize(const FiniteMetricSpace& X, double tau) {
    const int n = X.size();
    if (n == 1) return {X, MonotoneMap::identity(), true};

    const DistanceSet ds = distance_set(X, tau);
    const std::vector<int> group = distance_group_index(X, tau);
    const int k = static_cast<int>(ds.size());
    const int top = n * (n - 1);  // 2*C(n,2)

    std::vector<std::pair<double, double>> table;
    table.reserve(k);
    for (int i = 0; i < k; ++i)
        table.emplace_back(ds.values[i], static_cast<double>(top - k + 1 + i));

    std::vector<double> flat(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const int g = group[static_cast<std::size_t>(i) * n + j];
            flat[static_cast<std::size_t>(i) * n + j] = table[g].second;
        }

    // Triangle inequality is automatic for the D_{n,k} range; validate anyway.
    FiniteMetricSpace canon = FiniteMetricSpace::validate(X.labels(), std::move(flat));
    return {std::move(canon), extend_monotone(table), false};
}

FiniteMetricSpace apply_rescaling(const FiniteMetricSpace& X, const MonotoneMap& psi,
                                  bool allow_collapse) {
    const int n = X.size();
    if (!allow_collapse) {
        const DistanceSet ds = distance_set(X);
        if (!psi.strict_on(ds.values))
            raise(Errc::collapse_without_flag,
                  "rescaling collapses distinct distances; pass allow_collapse to permit");
    }
    std::vector<double> flat(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) flat[static_cast<std::size_t>(i) * n + j] = psi(X(i, j));

    if (allow_collapse) return FiniteMetricSpace::unchecked(X.labels(), std::move(flat));
    return FiniteMetricSpace::validate(X.labels(), std::move(flat));
}

}  // namespace wiso
