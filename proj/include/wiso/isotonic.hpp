#pragma once

#include <vector>

#include "wiso/errors.hpp"

namespace wiso {

/// L-infinity isotonic regression instance: choose one value per group,
/// non-decreasing in key order, minimizing the maximum |value - target| over
/// all targets. A group at key 0 is pinned to the value 0 (the rescalings
/// being optimized fix the origin), so its targets contribute their maximum
/// directly to the error.
struct IsotonicInstance {
    struct Group {
        double key = 0.0;
        std::vector<double> targets;
    };

    std::vector<Group> groups;  // keys strictly ascending
    bool pinned_zero = false;   // true iff groups[0].key == 0

    static IsotonicInstance make(std::vector<Group> groups);
};

struct IsotonicResult {
    std::vector<double> values;  // one per group, non-decreasing; 0 for the pinned group
    double error = 0.0;
};

/// Exact solution. The optimal error is
///   max( pin error, max over i <= j of (max targets_i - min targets_j) / 2 )
/// and the returned values are (prefix-max of group maxima + suffix-min of
/// group minima) / 2, which is non-decreasing and attains that error.
IsotonicResult isotonic_linf(const IsotonicInstance& inst);

}  // namespace wiso
