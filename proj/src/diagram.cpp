#include "wiso/diagram.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "wiso/gromov_hausdorff.hpp"

namespace wiso {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

Diagram Diagram::from_barcode(const Barcode& bc, int dim) {
    Diagram d;
    for (const Bar& b : bc.bars)
        if (b.dim == dim) d.points.emplace_back(b.birth, b.death);
    std::sort(d.points.begin(), d.points.end());
    return d;
}

namespace {

// Perfect-matching feasibility for the bottleneck test: finite points of A
// match finite points of B within eps or their own diagonal projection;
// diagonal proxies absorb the rest.
bool matching_feasible(const std::vector<std::pair<double, double>>& A,
                       const std::vector<std::pair<double, double>>& B, double eps) {
    const int p = static_cast<int>(A.size());
    const int q = static_cast<int>(B.size());
    const int L = p + q, R = q + p;
    auto cost = [&](int a, int b) {
        return std::max(std::abs(A[a].first - B[b].first), std::abs(A[a].second - B[b].second));
    };
    auto adjacent = [&](int l, int r) {
        if (l < p && r < q) return cost(l, r) <= eps;
        if (l < p) return r - q == l && (A[l].second - A[l].first) / 2.0 <= eps;
        if (r < q) return l - p == r && (B[r].second - B[r].first) / 2.0 <= eps;
        return true;  // diagonal to diagonal
    };
    std::vector<int> match_r(R, -1);
    std::vector<bool> seen;
    auto augment = [&](auto&& self, int l) -> bool {
        for (int r = 0; r < R; ++r) {
            if (seen[r] || !adjacent(l, r)) continue;
            seen[r] = true;
            if (match_r[r] < 0 || self(self, match_r[r])) {
                match_r[r] = l;
                return true;
            }
        }
        return false;
    };
    int matched = 0;
    for (int l = 0; l < L; ++l) {
        seen.assign(R, false);
        if (augment(augment, l)) ++matched;
    }
    return matched == L;
}

}  // namespace

double bottleneck_distance(const Diagram& A, const Diagram& B) {
    std::vector<std::pair<double, double>> fa, fb;
    std::vector<double> ia, ib;
    for (const auto& pt : A.points)
        (pt.second == kInf ? (void)ia.push_back(pt.first) : (void)fa.push_back(pt));
    for (const auto& pt : B.points)
        (pt.second == kInf ? (void)ib.push_back(pt.first) : (void)fb.push_back(pt));

    if (ia.size() != ib.size()) return kInf;  // InfiniteMismatch
    std::sort(ia.begin(), ia.end());
    std::sort(ib.begin(), ib.end());
    double base = 0.0;
    for (std::size_t i = 0; i < ia.size(); ++i) base = std::max(base, std::abs(ia[i] - ib[i]));

    if (fa.empty() && fb.empty()) return base;

    std::set<double> cand;
    cand.insert(0.0);
    for (const auto& a : fa) {
        cand.insert((a.second - a.first) / 2.0);
        for (const auto& b : fb)
            cand.insert(std::max(std::abs(a.first - b.first), std::abs(a.second - b.second)));
    }
    for (const auto& b : fb) cand.insert((b.second - b.first) / 2.0);

    std::vector<double> cs(cand.begin(), cand.end());
    std::size_t lo = 0, hi = cs.size() - 1;
    while (lo < hi) {
        const std::size_t mid = (lo + hi) / 2;
        if (matching_feasible(fa, fb, cs[mid]))
            hi = mid;
        else
            lo = mid + 1;
    }
    return std::max(base, cs[lo]);
}

double interleaving_distance(const Diagram& A, const Diagram& B) {
    return bottleneck_distance(A, B);
}

Diagram rescale_diagram(const Diagram& A, const MonotoneMap& psi, bool allow_collapse) {
    if (!psi.strict() && !allow_collapse)
        raise(Errc::not_invertible_on_endpoints, "rescaling is not strictly increasing");
    Diagram out;
    for (const auto& [b, d] : A.points) {
        const double nb = psi.preimage_min(b);
        const double nd = d == kInf ? kInf : psi.preimage_min(d);
        if (nb < nd) out.points.emplace_back(nb, nd);
    }
    std::sort(out.points.begin(), out.points.end());
    return out;
}

Diagram apply_endpoint_images(const Diagram& A,
                              const std::vector<std::pair<double, double>>& images) {
    for (std::size_t i = 0; i < images.size(); ++i) {
        if (images[i].second < 0.0) raise(Errc::bad_input, "negative endpoint image");
        if (i > 0) {
            if (!(images[i].first > images[i - 1].first))
                raise(Errc::unsorted_table, "endpoint keys must strictly ascend");
            if (images[i].second < images[i - 1].second)
                raise(Errc::decreasing_values, "endpoint images must not decrease");
        }
    }
    auto image_of = [&](double v) {
        if (v == 0.0) return 0.0;
        auto it = std::lower_bound(images.begin(), images.end(), v,
                                   [](const auto& p, double x) { return p.first < x; });
        if (it == images.end() || it->first != v)
            raise(Errc::bad_input, "endpoint without an image");
        return it->second;
    };
    Diagram out;
    for (const auto& [b, d] : A.points) {
        const double nb = image_of(b);
        const double nd = d == kInf ? kInf : image_of(d);
        if (nb < nd) out.points.emplace_back(nb, nd);
    }
    std::sort(out.points.begin(), out.points.end());
    return out;
}

namespace {

std::vector<double> positive_finite_endpoints(const Diagram& D) {
    std::set<double> vals;
    for (const auto& [b, d] : D.points) {
        if (b > 0.0) vals.insert(b);
        if (d != kInf && d > 0.0) vals.insert(d);
    }
    return {vals.begin(), vals.end()};
}

struct RescalingObjective {
    const Diagram& A;
    const Diagram& B;
    const std::vector<double>& keys;  // positive finite endpoints of B

    double operator()(const std::vector<double>& u) const {
        std::vector<std::pair<double, double>> images(keys.size());
        for (std::size_t i = 0; i < keys.size(); ++i) images[i] = {keys[i], u[i]};
        return bottleneck_distance(A, apply_endpoint_images(B, images));
    }
};

void coarse_enumerate(const RescalingObjective& obj, const std::vector<double>& cands,
                      std::vector<double>& u, std::size_t pos, double& best,
                      std::vector<double>& best_u, std::size_t budget, std::size_t& used) {
    if (used > budget) return;
    if (pos == u.size()) {
        ++used;
        const double v = obj(u);
        if (v < best) {
            best = v;
            best_u = u;
        }
        return;
    }
    const double floor_v = pos == 0 ? 0.0 : u[pos - 1];
    for (double c : cands) {
        if (c < floor_v) continue;
        u[pos] = c;
        coarse_enumerate(obj, cands, u, pos + 1, best, best_u, budget, used);
    }
}

}  // namespace

double min_rescaled_interleaving(const Diagram& A, const Diagram& B, int endpoint_cap) {
    const std::vector<double> keys = positive_finite_endpoints(B);
    const int p = static_cast<int>(keys.size());
    if (p > endpoint_cap)
        raise(Errc::cap_exceeded,
              "rescaling search capped at " + std::to_string(endpoint_cap) + " endpoints");
    if (p == 0) return bottleneck_distance(A, B);

    // Candidate images: both diagrams' endpoint values, zero, and midpoints.
    // All-pairs midpoints matter: the best image of a pooled group of bars is
    // the midpoint of the extreme targets, which need not be adjacent values.
    const std::vector<double> ea = positive_finite_endpoints(A);
    auto build_candidates = [&](int level) {
        std::set<double> cs;
        cs.insert(0.0);
        for (double v : ea) cs.insert(v);
        if (level <= 1)
            for (double v : keys) cs.insert(v);
        if (level == 0) {
            std::vector<double> base(cs.begin(), cs.end());
            for (std::size_t i = 0; i < base.size(); ++i)
                for (std::size_t j = i + 1; j < base.size(); ++j)
                    cs.insert((base[i] + base[j]) / 2.0);
        }
        return std::vector<double>(cs.begin(), cs.end());
    };
    auto monotone_tuples = [&](std::size_t vals) {
        double count = 1.0;
        for (int i = 0; i < p; ++i) count = count * (static_cast<double>(vals) + i) / (i + 1);
        return count;
    };

    std::vector<double> cands;
    for (int level = 0; level <= 2; ++level) {
        cands = build_candidates(level);
        if (monotone_tuples(cands.size()) <= 300000.0) break;
    }

    const RescalingObjective obj{A, B, keys};
    double best = kInf;
    std::vector<double> u(p, 0.0), best_u;

    if (monotone_tuples(cands.size()) <= 300000.0) {
        std::size_t used = 0;
        coarse_enumerate(obj, cands, u, 0, best, best_u, 300001, used);
    } else {
        // start points only: identity images and full collapse
        best_u = keys;
        best = obj(best_u);
        std::vector<double> zero(p, 0.0);
        const double vz = obj(zero);
        if (vz < best) {
            best = vz;
            best_u = zero;
        }
    }

    // local coordinate descent, shrinking each window to convergence
    const double top = cands.empty() ? keys.back() : cands.back();
    for (int round = 0; round < 40; ++round) {
        bool improved = false;
        for (int i = 0; i < p; ++i) {
            double lo = i == 0 ? 0.0 : best_u[i - 1];
            double hi = i + 1 < p ? best_u[i + 1] : std::max(top, best_u[p - 1]);
            for (int refine = 0; refine < 18 && hi - lo > 1e-12; ++refine) {
                const int steps = 32;
                double local_best = best, local_arg = best_u[i];
                for (int s = 0; s <= steps; ++s) {
                    const double v = lo + (hi - lo) * s / steps;
                    u = best_u;
                    u[i] = v;
                    const double val = obj(u);
                    if (val < local_best) {
                        local_best = val;
                        local_arg = v;
                    }
                }
                if (local_best < best) {
                    best = local_best;
                    best_u[i] = local_arg;
                    improved = true;
                }
                const double w = (hi - lo) / steps;
                lo = std::max(lo, local_arg - w);
                hi = std::min(hi, local_arg + w);
            }
            // snap to an exact candidate when one ties or improves
            for (double c : cands) {
                if (c < (i == 0 ? 0.0 : best_u[i - 1])) continue;
                if (i + 1 < p && c > best_u[i + 1]) continue;
                u = best_u;
                u[i] = c;
                const double val = obj(u);
                if (val <= best) {
                    if (val < best) improved = true;
                    best = val;
                    best_u[i] = c;
                    break;
                }
            }
        }
        if (!improved) break;
    }
    return best;
}

double dtilde(const Diagram& A, const Diagram& B, int endpoint_cap) {
    return min_rescaled_interleaving(A, B, endpoint_cap) +
           min_rescaled_interleaving(B, A, endpoint_cap);
}

StabilityReport stability_check(const FiniteMetricSpace& X, const FiniteMetricSpace& Y, int max_k,
                                double tol, int gh_cap, int field_char) {
    StabilityReport rep;
    rep.tolerance = tol;
    rep.dhat = dhat(X, Y, gh_cap);
    const Barcode bx = persistence(X, max_k, field_char);
    const Barcode by = persistence(Y, max_k, field_char);
    rep.all_within_bound = true;
    double worst = -1.0;
    for (int k = 0; k <= max_k; ++k) {
        const Diagram a = Diagram::from_barcode(bx, k);
        const Diagram b = Diagram::from_barcode(by, k);
        const double dt = dtilde(a, b);
        const bool ok = dt <= 2.0 * rep.dhat + tol;
        rep.dims.push_back({k, dt, ok});
        rep.all_within_bound = rep.all_within_bound && ok;
        if (dt > worst) {
            worst = dt;
            rep.binding_dim = k;
        }
    }
    return rep;
}

}  // namespace wiso
