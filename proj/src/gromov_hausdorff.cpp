#include "wiso/gromov_hausdorff.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

namespace wiso {

double distortion(const Correspondence& C, const FiniteMetricSpace& X,
                  const FiniteMetricSpace& Y) {
    if (C.pairs.empty()) raise(Errc::bad_input, "empty correspondence");
    for (const auto& [i, j] : C.pairs)
        if (i < 0 || i >= X.size() || j < 0 || j >= Y.size())
            raise(Errc::index_out_of_range, "correspondence pair out of range", {i, j});
    double dis = 0.0;
    for (std::size_t a = 0; a < C.pairs.size(); ++a)
        for (std::size_t b = a; b < C.pairs.size(); ++b) {
            const auto& [x1, y1] = C.pairs[a];
            const auto& [x2, y2] = C.pairs[b];
            dis = std::max(dis, std::abs(X(x1, x2) - Y(y1, y2)));
        }
    return dis;
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Rank-matching start assignment: points ordered by their sorted distance
// profile, matched proportionally. Gives the search a finite incumbent and
// an immediate optimum on relabeled copies.
void rank_heuristic(const FiniteMetricSpace& X, const FiniteMetricSpace& Y, std::vector<int>& f,
                    std::vector<int>& g) {
    auto order = [](const FiniteMetricSpace& S) {
        const int n = S.size();
        std::vector<std::pair<std::vector<double>, int>> prof(n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j)
                if (j != i) prof[i].first.push_back(S(i, j));
            std::sort(prof[i].first.begin(), prof[i].first.end());
            prof[i].second = i;
        }
        std::sort(prof.begin(), prof.end());
        std::vector<int> idx(n);
        for (int r = 0; r < n; ++r) idx[r] = prof[r].second;
        return idx;
    };
    const auto ox = order(X), oy = order(Y);
    const int n = X.size(), m = Y.size();
    f.assign(n, 0);
    g.assign(m, 0);
    for (int r = 0; r < n; ++r) f[ox[r]] = oy[std::min(m - 1, r * m / n)];
    for (int r = 0; r < m; ++r) g[oy[r]] = ox[std::min(n - 1, r * n / m)];
}

double eval_distortion(const FiniteMetricSpace& X, const FiniteMetricSpace& Y,
                       const std::vector<int>& f, const std::vector<int>& g) {
    const int n = X.size(), m = Y.size();
    double dis = 0.0;
    for (int i = 0; i < n; ++i)
        for (int i2 = i; i2 < n; ++i2) dis = std::max(dis, std::abs(X(i, i2) - Y(f[i], f[i2])));
    for (int j = 0; j < m; ++j)
        for (int j2 = j; j2 < m; ++j2) dis = std::max(dis, std::abs(X(g[j], g[j2]) - Y(j, j2)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) dis = std::max(dis, std::abs(X(i, g[j]) - Y(f[i], j)));
    return dis;
}

struct DistortionSearch {
    const FiniteMetricSpace& X;
    const FiniteMetricSpace& Y;
    int n, m;
    std::vector<int> f, g, best_f, best_g;
    double best = kInf;

    void run() {
        rank_heuristic(X, Y, f, g);
        best = eval_distortion(X, Y, f, g);
        best_f = f;
        best_g = g;
        dfs_f(0, 0.0);
    }

    void dfs_f(int i, double cur) {
        if (i == n) {
            dfs_g(0, cur);
            return;
        }
        for (int j = 0; j < m; ++j) {
            double nc = cur;
            for (int i2 = 0; i2 < i; ++i2)
                nc = std::max(nc, std::abs(X(i, i2) - Y(j, f[i2])));
            if (nc >= best) continue;
            f[i] = j;
            dfs_f(i + 1, nc);
        }
    }

    void dfs_g(int j, double cur) {
        if (j == m) {
            if (cur < best) {
                best = cur;
                best_f = f;
                best_g = g;
            }
            return;
        }
        for (int i = 0; i < n; ++i) {
            double nc = cur;
            for (int j2 = 0; j2 < j; ++j2)
                nc = std::max(nc, std::abs(X(i, g[j2]) - Y(j, j2)));
            for (int i2 = 0; i2 < n && nc < best; ++i2)
                nc = std::max(nc, std::abs(X(i2, i) - Y(f[i2], j)));
            if (nc >= best) continue;
            g[j] = i;
            dfs_g(j + 1, nc);
        }
    }
};

void check_cap(const FiniteMetricSpace& X, const FiniteMetricSpace& Y, int cap) {
    if (X.size() > cap || Y.size() > cap)
        raise(Errc::cap_exceeded, "correspondence search capped at " + std::to_string(cap) +
                                      " points per space");
}

}  // namespace

GhResult gh_distance(const FiniteMetricSpace& X, const FiniteMetricSpace& Y, int cap) {
    check_cap(X, Y, cap);
    DistortionSearch s{X, Y, X.size(), Y.size(), {}, {}, {}, {}};
    s.run();
    std::set<std::pair<int, int>> pairs;
    for (int i = 0; i < s.n; ++i) pairs.insert({i, s.best_f[i]});
    for (int j = 0; j < s.m; ++j) pairs.insert({s.best_g[j], j});
    GhResult res;
    res.distance = s.best / 2.0;
    res.correspondence.pairs.assign(pairs.begin(), pairs.end());
    return res;
}

namespace {

// Incrementally maintained isotonic bound over the pairs committed so far.
// Group 0 is the pinned zero key (terms from correspondence pairs sharing an
// X point); groups 1..k are the distinct d_X values in ascending order.
// Adding a target can only raise the optimal error, which makes the bound
// admissible for pruning.
struct IsoBound {
    int k = 0;
    std::vector<double> gmax, gmin;
    std::vector<int> cnt;
    double pin = 0.0;

    struct Delta {
        int g;
        double omax, omin, opin;
        int ocnt;
    };

    void init(int groups) {
        k = groups;
        gmax.assign(k, 0.0);
        gmin.assign(k, 0.0);
        cnt.assign(k, 0);
        pin = 0.0;
    }

    void add(int g, double t, std::vector<Delta>& undo) {
        undo.push_back({g, g > 0 ? gmax[g - 1] : 0.0, g > 0 ? gmin[g - 1] : 0.0, pin,
                        g > 0 ? cnt[g - 1] : 0});
        if (g == 0) {
            pin = std::max(pin, t);
            return;
        }
        const int idx = g - 1;
        if (cnt[idx] == 0) {
            gmax[idx] = gmin[idx] = t;
        } else {
            gmax[idx] = std::max(gmax[idx], t);
            gmin[idx] = std::min(gmin[idx], t);
        }
        ++cnt[idx];
    }

    void rollback(std::vector<Delta>& undo, std::size_t mark) {
        while (undo.size() > mark) {
            const Delta& d = undo.back();
            pin = d.opin;
            if (d.g > 0) {
                gmax[d.g - 1] = d.omax;
                gmin[d.g - 1] = d.omin;
                cnt[d.g - 1] = d.ocnt;
            }
            undo.pop_back();
        }
    }

    double eps() const {
        double e = pin;
        double prefmax = -kInf;
        for (int i = 0; i < k; ++i) {
            if (cnt[i] == 0) continue;
            prefmax = std::max(prefmax, gmax[i]);
            e = std::max(e, (prefmax - gmin[i]) / 2.0);
        }
        return e;
    }
};

struct RescaledSearch {
    const FiniteMetricSpace& X;
    const FiniteMetricSpace& Y;
    int n, m;
    std::vector<int> gidx;  // group index of d_X(i,i2): 0 on the diagonal
    std::vector<int> f, g;
    IsoBound bound;
    std::vector<IsoBound::Delta> undo;
    double best = kInf;

    int group(int i, int i2) const { return gidx[static_cast<std::size_t>(i) * n + i2]; }

    double eval_full(const std::vector<int>& ff, const std::vector<int>& gg) const {
        // assemble the instance the slow way; used once for the start incumbent
        const DistanceSet ds = distance_set(X);
        std::vector<IsotonicInstance::Group> groups(ds.size() + 1);
        groups[0].key = 0.0;
        for (std::size_t r = 0; r < ds.size(); ++r) groups[r + 1].key = ds.values[r];
        auto push = [&](int gi, double t) { groups[gi].targets.push_back(t); };
        for (int i = 0; i < n; ++i)
            for (int i2 = 0; i2 < n; ++i2)
                if (i != i2) push(group(i, i2), Y(ff[i], ff[i2]));
        for (int j = 0; j < m; ++j)
            for (int j2 = 0; j2 < m; ++j2)
                if (j != j2) push(group(gg[j], gg[j2]), Y(j, j2));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < m; ++j) push(group(i, gg[j]), Y(ff[i], j));
        std::vector<IsotonicInstance::Group> nonempty;
        for (auto& gr : groups)
            if (!gr.targets.empty()) nonempty.push_back(std::move(gr));
        return isotonic_linf(IsotonicInstance::make(std::move(nonempty))).error;
    }

    void run() {
        const DistanceSet ds = distance_set(X);
        gidx.assign(static_cast<std::size_t>(n) * n, 0);
        for (int i = 0; i < n; ++i)
            for (int i2 = 0; i2 < n; ++i2)
                if (i != i2) {
                    const auto it =
                        std::lower_bound(ds.values.begin(), ds.values.end(), X(i, i2));
                    gidx[static_cast<std::size_t>(i) * n + i2] =
                        1 + static_cast<int>(it - ds.values.begin());
                }
        bound.init(static_cast<int>(ds.size()) + 1);
        undo.clear();

        rank_heuristic(X, Y, f, g);
        best = eval_full(f, g);
        dfs_f(0);
    }

    void dfs_f(int i) {
        if (i == n) {
            dfs_g(0);
            return;
        }
        for (int j = 0; j < m; ++j) {
            const std::size_t mark = undo.size();
            for (int i2 = 0; i2 < i; ++i2) bound.add(group(i, i2), Y(j, f[i2]), undo);
            if (bound.eps() < best) {
                f[i] = j;
                dfs_f(i + 1);
            }
            bound.rollback(undo, mark);
        }
    }

    void dfs_g(int j) {
        if (j == m) {
            best = std::min(best, bound.eps());
            return;
        }
        for (int i = 0; i < n; ++i) {
            const std::size_t mark = undo.size();
            for (int j2 = 0; j2 < j; ++j2) bound.add(group(i, g[j2]), Y(j, j2), undo);
            for (int i2 = 0; i2 < n; ++i2) bound.add(group(i2, i), Y(f[i2], j), undo);
            if (bound.eps() < best) {
                g[j] = i;
                dfs_g(j + 1);
            }
            bound.rollback(undo, mark);
        }
    }
};

}  // namespace

double min_rescaled_gh(const FiniteMetricSpace& X, const FiniteMetricSpace& Y, int cap) {
    check_cap(X, Y, cap);
    RescaledSearch s{X, Y, X.size(), Y.size(), {}, {}, {}, {}, {}, kInf};
    s.run();
    return s.best / 2.0;
}

double dhat(const FiniteMetricSpace& X, const FiniteMetricSpace& Y, int cap) {
    return min_rescaled_gh(X, Y, cap) + min_rescaled_gh(Y, X, cap);
}

}  // namespace wiso
