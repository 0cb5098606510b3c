#pragma once

#include <span>
#include <utility>
#include <vector>

#include "wiso/errors.hpp"

namespace wiso {

/// Continuous piecewise-linear non-decreasing map psi on the non-negative
/// reals with psi(0) = 0. Beyond the last breakpoint the map continues with
/// `tail_slope` (positive). `strict()` records whether the map is strictly
/// increasing everywhere.
///
/// Evaluation at a breakpoint x-coordinate returns the stored y exactly, so
/// tables built from exact values reproduce them without rounding.
class MonotoneMap {
public:
    static MonotoneMap identity();

    /// Builds the map from explicit breakpoints; the first must be (0,0).
    static MonotoneMap from_breakpoints(std::vector<std::pair<double, double>> breakpoints,
                                        double tail_slope = 1.0);

    double operator()(double x) const;

    /// Exact inverse; requires a strictly increasing map.
    double inverse_at(double y) const;

    /// Generalized inverse min{x : psi(x) >= y}; total for any y >= 0.
    double preimage_min(double y) const;

    bool strict() const { return strict_; }
    double tail_slope() const { return tail_slope_; }
    const std::vector<std::pair<double, double>>& breakpoints() const { return breakpoints_; }

    /// True when the images of the given values are strictly ascending and
    /// positive off zero (duplicates in xs are ignored).
    bool strict_on(std::span<const double> xs) const;

private:
    MonotoneMap(std::vector<std::pair<double, double>> bps, double tail, bool strict)
        : breakpoints_(std::move(bps)), tail_slope_(tail), strict_(strict) {}

    std::vector<std::pair<double, double>> breakpoints_;  // ascending x, starts at (0,0)
    double tail_slope_ = 1.0;
    bool strict_ = true;
};

/// Piecewise-linear extension of a finite monotone table to all of R+:
/// linear from the origin up to the first key, interpolation between keys,
/// unit slope past the last key. The restriction to the keys reproduces the
/// table exactly.
MonotoneMap extend_monotone(std::span<const std::pair<double, double>> table);

/// Composition psi_outer(psi_inner(x)) sampled on the given domain values and
/// re-extended piecewise-linearly through them.
MonotoneMap compose_on(const MonotoneMap& outer, const MonotoneMap& inner,
                       std::span<const double> domain);

}  // namespace wiso
