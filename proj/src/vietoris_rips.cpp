#include "wiso/vietoris_rips.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>

namespace wiso {

namespace {

// extend the clique `cur` with vertices above its last element
void grow_cliques(const std::vector<std::uint64_t>& adj, int n, int max_dim,
                  std::vector<int>& cur, std::vector<Simplex>& out) {
    out.push_back({cur});
    if (static_cast<int>(cur.size()) - 1 >= max_dim) return;
    for (int v = cur.back() + 1; v < n; ++v) {
        bool ok = true;
        for (int u : cur)
            if (!(adj[u] >> v & 1)) { ok = false; break; }
        if (!ok) continue;
        cur.push_back(v);
        grow_cliques(adj, n, max_dim, cur, out);
        cur.pop_back();
    }
}

std::vector<std::uint64_t> threshold_adjacency(const FiniteMetricSpace& X, double eps) {
    const int n = X.size();
    std::vector<std::uint64_t> adj(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && X(i, j) <= eps) adj[i] |= std::uint64_t{1} << j;
    return adj;
}

}  // namespace

std::vector<Simplex> vr_complex(const FiniteMetricSpace& X, double eps, int max_dim) {
    const int n = X.size();
    if (max_dim < 0) raise(Errc::bad_dimension, "max_dim must be non-negative");
    if (n > 64) raise(Errc::cap_exceeded, "complex construction capped at 64 points");
    const auto adj = threshold_adjacency(X, eps);
    std::vector<Simplex> out;
    std::vector<int> cur;
    for (int v = 0; v < n; ++v) {
        cur = {v};
        grow_cliques(adj, n, max_dim, cur, out);
    }
    std::sort(out.begin(), out.end());
    return out;
}

FlagFiltration FlagFiltration::build(const FiniteMetricSpace& X, int max_dim) {
    if (max_dim < 0) raise(Errc::bad_dimension, "max_dim must be non-negative");
    FlagFiltration F;
    F.n_ = X.size();
    F.max_dim_ = std::min(max_dim, F.n_ - 1);
    F.edges_.assign(X.data().begin(), X.data().end());
    std::set<double> crit;
    crit.insert(0.0);
    for (int i = 0; i < F.n_; ++i)
        for (int j = i + 1; j < F.n_; ++j) crit.insert(X(i, j));
    F.critical_.assign(crit.begin(), crit.end());
    return F;
}

std::vector<std::pair<Simplex, double>> FlagFiltration::simplices(std::size_t simplex_cap) const {
    // enumerate all cliques of the complete graph up to max_dim_, carrying
    // appearance values (max edge); the final eps is unconstrained
    std::vector<std::pair<Simplex, double>> out;
    std::vector<int> cur;
    auto value_of = [&](const std::vector<int>& verts) {
        double v = 0.0;
        for (std::size_t a = 0; a < verts.size(); ++a)
            for (std::size_t b = a + 1; b < verts.size(); ++b)
                v = std::max(v, edge_value(verts[a], verts[b]));
        return v;
    };
    // recursive enumeration of ascending vertex tuples
    std::vector<int> stack;
    auto rec = [&](auto&& self, int last) -> void {
        out.push_back({{stack}, value_of(stack)});
        if (out.size() > simplex_cap) raise(Errc::cap_exceeded, "simplex cap exceeded");
        if (static_cast<int>(stack.size()) - 1 >= max_dim_) return;
        for (int v = last + 1; v < n_; ++v) {
            stack.push_back(v);
            self(self, v);
            stack.pop_back();
        }
    };
    for (int v = 0; v < n_; ++v) {
        stack = {v};
        rec(rec, v);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second < b.second;
        return a.first < b.first;
    });
    return out;
}

std::vector<Simplex> FlagFiltration::complex_at(double eps) const {
    std::vector<Simplex> out;
    for (const auto& [s, v] : simplices())
        if (v <= eps) out.push_back(s);
    return out;
}

FlagFiltration rescale_filtration(const FlagFiltration& F, const MonotoneMap& psi) {
    if (!psi.strict_on(F.critical_values()))
        raise(Errc::non_strict_on_values, "rescaling is not strictly increasing on edge values");
    FlagFiltration R;
    R.n_ = F.n_;
    R.max_dim_ = F.max_dim_;
    R.edges_ = F.edges_;
    for (int i = 0; i < R.n_; ++i)
        for (int j = 0; j < R.n_; ++j)
            if (i != j) R.edges_[static_cast<std::size_t>(i) * R.n_ + j] = psi(F.edge_value(i, j));
    R.critical_ = F.critical_;
    for (double& v : R.critical_) v = psi(v);
    return R;
}

namespace {

bool graphs_isomorphic(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b,
                       int n) {
    std::vector<int> da(n), db(n);
    for (int i = 0; i < n; ++i) {
        da[i] = std::popcount(a[i]);
        db[i] = std::popcount(b[i]);
    }
    {
        auto sa = da, sb = db;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }
    std::vector<int> map(n, -1);
    std::vector<bool> used(n, false);
    auto rec = [&](auto&& self, int i) -> bool {
        if (i == n) return true;
        for (int j = 0; j < n; ++j) {
            if (used[j] || da[i] != db[j]) continue;
            bool ok = true;
            for (int i2 = 0; i2 < i && ok; ++i2)
                if (((a[i] >> i2) & 1) != ((b[j] >> map[i2]) & 1)) ok = false;
            if (!ok) continue;
            map[i] = j;
            used[j] = true;
            if (self(self, i + 1)) return true;
            used[j] = false;
        }
        return false;
    };
    return rec(rec, 0);
}

}  // namespace

ScaleIsoReport per_scale_isomorphic(const FiniteMetricSpace& X, const FiniteMetricSpace& Y,
                                    int cap) {
    if (X.size() != Y.size()) return {false, {}};
    const int n = X.size();
    if (n > cap)
        raise(Errc::cap_exceeded, "per-scale isomorphism capped at " + std::to_string(cap));

    std::set<double> crit;
    crit.insert(0.0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            crit.insert(X(i, j));
            crit.insert(Y(i, j));
        }

    ScaleIsoReport rep;
    rep.all_isomorphic = true;
    for (double eps : crit) {
        const bool iso =
            graphs_isomorphic(threshold_adjacency(X, eps), threshold_adjacency(Y, eps), n);
        rep.per_scale.emplace_back(eps, iso);
        rep.all_isomorphic = rep.all_isomorphic && iso;
    }
    return rep;
}

}  // namespace wiso
