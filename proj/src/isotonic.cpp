#include "wiso/isotonic.hpp"

#include <algorithm>
#include <limits>

namespace wiso {

IsotonicInstance IsotonicInstance::make(std::vector<Group> groups) {
    for (std::size_t i = 0; i < groups.size(); ++i) {
        if (groups[i].targets.empty()) raise(Errc::bad_input, "empty target group");
        if (groups[i].key < 0.0) raise(Errc::bad_input, "negative group key");
        if (i > 0 && !(groups[i].key > groups[i - 1].key))
            raise(Errc::unsorted_table, "group keys must strictly ascend");
        for (double t : groups[i].targets)
            if (t < 0.0) raise(Errc::bad_input, "negative target");
    }
    IsotonicInstance inst;
    inst.pinned_zero = !groups.empty() && groups.front().key == 0.0;
    inst.groups = std::move(groups);
    return inst;
}

IsotonicResult isotonic_linf(const IsotonicInstance& inst) {
    const auto& gs = inst.groups;
    IsotonicResult res;
    res.values.assign(gs.size(), 0.0);

    std::size_t begin = 0;
    if (inst.pinned_zero) {
        for (double t : gs[0].targets) res.error = std::max(res.error, t);
        begin = 1;
    }
    const std::size_t k = gs.size();
    if (begin >= k) return res;

    std::vector<double> gmax(k), gmin(k);
    for (std::size_t i = begin; i < k; ++i) {
        gmax[i] = *std::max_element(gs[i].targets.begin(), gs[i].targets.end());
        gmin[i] = *std::min_element(gs[i].targets.begin(), gs[i].targets.end());
    }

    double prefmax = -std::numeric_limits<double>::infinity();
    std::vector<double> pm(k);
    for (std::size_t i = begin; i < k; ++i) {
        prefmax = std::max(prefmax, gmax[i]);
        pm[i] = prefmax;
        res.error = std::max(res.error, (prefmax - gmin[i]) / 2.0);
    }
    double sufmin = std::numeric_limits<double>::infinity();
    for (std::size_t i = k; i-- > begin;) {
        sufmin = std::min(sufmin, gmin[i]);
        res.values[i] = std::max(0.0, (pm[i] + sufmin) / 2.0);
    }
    return res;
}

}  // namespace wiso
