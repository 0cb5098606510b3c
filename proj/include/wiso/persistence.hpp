#pragma once

#include <limits>
#include <vector>

#include "wiso/metric_space.hpp"
#include "wiso/vietoris_rips.hpp"

namespace wiso {

constexpr double kInfiniteDeath = std::numeric_limits<double>::infinity();

/// Half-open bar [birth, death) of a persistence barcode; death may be
/// infinite. Simplices enter at "d <= eps", so a 1-cycle whose filling
/// triangles appear at value v is already dead AT v: the bar is [b, v).
struct Bar {
    int dim = 0;
    double birth = 0.0;
    double death = kInfiniteDeath;

    bool infinite() const { return death == kInfiniteDeath; }
    bool operator==(const Bar& o) const = default;
    bool operator<(const Bar& o) const {
        if (dim != o.dim) return dim < o.dim;
        if (birth != o.birth) return birth < o.birth;
        return death < o.death;
    }
};

struct Barcode {
    std::vector<Bar> bars;  // sorted by (dim, birth, death)

    std::vector<Bar> in_dim(int k) const;
};

/// Persistent homology of the Vietoris-Rips filtration over the prime field
/// F_p, by column reduction of the boundary matrix in filtration order with
/// clearing. The complex is built one dimension above max_hom_dim so that
/// every death in the reported range is seen; zero-length bars are dropped.
Barcode persistence(const FiniteMetricSpace& X, int max_hom_dim = 1, int field_char = 2,
                    std::size_t simplex_cap = 1000000);
Barcode persistence(const FlagFiltration& F, int max_hom_dim, int field_char = 2,
                    std::size_t simplex_cap = 1000000);

/// Rank of H_k of the static complex VR_eps(X), computed from the ranks of
/// the two boundary operators by Gaussian elimination (independent of the
/// persistence reduction).
int betti(const FiniteMetricSpace& X, double eps, int k, int field_char = 2,
          std::size_t simplex_cap = 1000000);

}  // namespace wiso
