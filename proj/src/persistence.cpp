#include "wiso/persistence.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace wiso {

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

// sparse F_p column: ascending row indices with nonzero coefficients
using Column = std::vector<std::pair<int, int>>;

int mod_inverse(int a, int p) {
    int r = 1;
    int e = p - 2;  // Fermat
    long long base = a % p;
    while (e) {
        if (e & 1) r = static_cast<int>(r * base % p);
        base = base * base % p;
        e >>= 1;
    }
    return r;
}

// col += c * other (mod p), keeping ascending order
Column add_scaled(const Column& col, const Column& other, int c, int p) {
    Column out;
    out.reserve(col.size() + other.size());
    std::size_t a = 0, b = 0;
    while (a < col.size() || b < other.size()) {
        if (b == other.size() || (a < col.size() && col[a].first < other[b].first)) {
            out.push_back(col[a++]);
        } else if (a == col.size() || other[b].first < col[a].first) {
            const int v = static_cast<int>(static_cast<long long>(other[b].second) * c % p);
            if (v) out.push_back({other[b].first, v});
            ++b;
        } else {
            const int v =
                static_cast<int>((col[a].second + static_cast<long long>(other[b].second) * c) % p);
            if (v) out.push_back({col[a].first, v});
            ++a;
            ++b;
        }
    }
    return out;
}

}  // namespace

std::vector<Bar> Barcode::in_dim(int k) const {
    std::vector<Bar> out;
    for (const Bar& b : bars)
        if (b.dim == k) out.push_back(b);
    return out;
}

Barcode persistence(const FiniteMetricSpace& X, int max_hom_dim, int field_char,
                    std::size_t simplex_cap) {
    return persistence(FlagFiltration::build(X, max_hom_dim + 1), max_hom_dim, field_char,
                       simplex_cap);
}

Barcode persistence(const FlagFiltration& F, int max_hom_dim, int field_char,
                    std::size_t simplex_cap) {
    if (max_hom_dim < 0) raise(Errc::bad_dimension, "max_hom_dim must be non-negative");
    if (!is_prime(field_char)) raise(Errc::not_prime, "field characteristic must be prime");
    const int p = field_char;

    const auto simp = F.simplices(simplex_cap);
    const int total = static_cast<int>(simp.size());

    std::map<std::vector<int>, int> index_of;
    for (int i = 0; i < total; ++i) index_of[simp[i].first.vertices] = i;

    // boundary column of simplex i with alternating signs mod p
    auto boundary = [&](int i) {
        Column col;
        const auto& vs = simp[i].first.vertices;
        if (vs.size() < 2) return col;
        for (std::size_t drop = 0; drop < vs.size(); ++drop) {
            std::vector<int> face;
            face.reserve(vs.size() - 1);
            for (std::size_t q = 0; q < vs.size(); ++q)
                if (q != drop) face.push_back(vs[q]);
            const int sign = drop % 2 == 0 ? 1 : p - 1;
            col.push_back({index_of.at(face), sign});
        }
        std::sort(col.begin(), col.end());
        return col;
    };

    std::vector<bool> cleared(total, false);
    std::vector<bool> is_death(total, false);
    std::vector<std::pair<int, int>> pairs;  // (birth index, death index)
    const int top = F.max_dim();

    // reduce top dimension first so that paired creators can be cleared
    for (int d = top; d >= 1; --d) {
        std::unordered_map<int, Column> by_pivot;
        for (int j = 0; j < total; ++j) {
            if (simp[j].first.dim() != d || cleared[j]) continue;
            Column col = boundary(j);
            while (!col.empty()) {
                const int piv = col.back().first;
                auto it = by_pivot.find(piv);
                if (it == by_pivot.end()) break;
                const int c =
                    static_cast<int>(static_cast<long long>(p - col.back().second) *
                                     mod_inverse(it->second.back().second, p) % p);
                col = add_scaled(col, it->second, c, p);
            }
            if (col.empty()) continue;  // creator in dimension d
            const int piv = col.back().first;
            pairs.push_back({piv, j});
            cleared[piv] = true;
            is_death[j] = true;
            by_pivot[piv] = std::move(col);
        }
    }

    Barcode bc;
    for (const auto& [bi, di] : pairs) {
        const Bar bar{simp[bi].first.dim(), simp[bi].second, simp[di].second};
        if (bar.dim <= max_hom_dim && bar.birth < bar.death) bc.bars.push_back(bar);
    }
    for (int i = 0; i < total; ++i) {
        if (cleared[i] || is_death[i]) continue;
        const int d = simp[i].first.dim();
        if (d <= max_hom_dim) bc.bars.push_back({d, simp[i].second, kInfiniteDeath});
    }
    std::sort(bc.bars.begin(), bc.bars.end());
    return bc;
}

namespace {

// rank over F_p of the boundary operator from (k)-simplices to (k-1)-simplices
int boundary_rank(const std::vector<Simplex>& lower, const std::vector<Simplex>& upper, int p) {
    if (lower.empty() || upper.empty()) return 0;
    std::map<std::vector<int>, int> row_of;
    for (std::size_t i = 0; i < lower.size(); ++i) row_of[lower[i].vertices] = static_cast<int>(i);

    std::vector<std::vector<int>> mat(upper.size(), std::vector<int>(lower.size(), 0));
    for (std::size_t j = 0; j < upper.size(); ++j) {
        const auto& vs = upper[j].vertices;
        for (std::size_t drop = 0; drop < vs.size(); ++drop) {
            std::vector<int> face;
            for (std::size_t q = 0; q < vs.size(); ++q)
                if (q != drop) face.push_back(vs[q]);
            mat[j][row_of.at(face)] = drop % 2 == 0 ? 1 : p - 1;
        }
    }

    // Gaussian elimination on the columns-as-rows layout
    int rank = 0;
    const int rows = static_cast<int>(upper.size());
    const int cols = static_cast<int>(lower.size());
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (mat[r][c] != 0) { pivot = r; break; }
        if (pivot < 0) continue;
        std::swap(mat[rank], mat[pivot]);
        const int inv = mod_inverse(mat[rank][c], p);
        for (int r = 0; r < rows; ++r) {
            if (r == rank || mat[r][c] == 0) continue;
            const int factor = static_cast<int>(static_cast<long long>(mat[r][c]) * inv % p);
            for (int cc = c; cc < cols; ++cc)
                mat[r][cc] = static_cast<int>(
                    ((mat[r][cc] - static_cast<long long>(factor) * mat[rank][cc]) % p + p) % p);
        }
        ++rank;
    }
    return rank;
}

}  // namespace

int betti(const FiniteMetricSpace& X, double eps, int k, int field_char,
          std::size_t simplex_cap) {
    if (k < 0) raise(Errc::bad_dimension, "homology dimension must be non-negative");
    if (!is_prime(field_char)) raise(Errc::not_prime, "field characteristic must be prime");
    const auto cx = vr_complex(X, eps, k + 1);
    if (cx.size() > simplex_cap) raise(Errc::cap_exceeded, "simplex cap exceeded");
    std::vector<Simplex> km1, kk, kp1;
    for (const auto& s : cx) {
        if (s.dim() == k - 1) km1.push_back(s);
        if (s.dim() == k) kk.push_back(s);
        if (s.dim() == k + 1) kp1.push_back(s);
    }
    const int rank_dk = boundary_rank(km1, kk, field_char);
    const int rank_dk1 = boundary_rank(kk, kp1, field_char);
    return static_cast<int>(kk.size()) - rank_dk - rank_dk1;
}

}  // namespace wiso
