#include "wiso/monotone_map.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace wiso {

MonotoneMap MonotoneMap::identity() {
    return MonotoneMap({{0.0, 0.0}}, 1.0, true);
}

MonotoneMap MonotoneMap::from_breakpoints(std::vector<std::pair<double, double>> bps,
                                          double tail_slope) {
    if (bps.empty() || bps.front() != std::pair<double, double>{0.0, 0.0})
        raise(Errc::bad_input, "breakpoints must begin with (0,0)");
    if (!(tail_slope > 0.0)) raise(Errc::bad_input, "tail slope must be positive");
    bool strict = true;
    for (std::size_t i = 1; i < bps.size(); ++i) {
        if (!(bps[i].first > bps[i - 1].first))
            raise(Errc::unsorted_table, "breakpoint x-coordinates must strictly ascend");
        if (bps[i].second < bps[i - 1].second)
            raise(Errc::decreasing_values, "breakpoint y-coordinates must not decrease");
        if (bps[i].second == bps[i - 1].second) strict = false;
    }
    return MonotoneMap(std::move(bps), tail_slope, strict);
}

double MonotoneMap::operator()(double x) const {
    const auto& b = breakpoints_;
    if (x <= 0.0) return 0.0;
    // exact hit on a breakpoint
    auto it = std::lower_bound(b.begin(), b.end(), x,
                               [](const auto& p, double v) { return p.first < v; });
    if (it != b.end() && it->first == x) return it->second;
    if (it == b.end()) {
        const auto& last = b.back();
        return last.second + tail_slope_ * (x - last.first);
    }
    const auto& hi = *it;
    const auto& lo = *(it - 1);
    const double t = (x - lo.first) / (hi.first - lo.first);
    return lo.second + t * (hi.second - lo.second);
}

double MonotoneMap::inverse_at(double y) const {
    if (!strict_) raise(Errc::not_invertible_on_endpoints, "map is not strictly increasing");
    return preimage_min(y);
}

double MonotoneMap::preimage_min(double y) const {
    const auto& b = breakpoints_;
    if (y <= 0.0) return 0.0;
    auto it = std::lower_bound(b.begin(), b.end(), y,
                               [](const auto& p, double v) { return p.second < v; });
    if (it == b.end()) {
        const auto& last = b.back();
        return last.first + (y - last.second) / tail_slope_;
    }
    if (it->second == y) return it->first;
    const auto& hi = *it;
    const auto& lo = *(it - 1);
    // hi.second > y > lo.second, segment slope is positive here
    const double t = (y - lo.second) / (hi.second - lo.second);
    return lo.first + t * (hi.first - lo.first);
}

bool MonotoneMap::strict_on(std::span<const double> xs) const {
    std::set<double> distinct(xs.begin(), xs.end());
    double prev = 0.0;
    bool first = true;
    for (double x : distinct) {
        const double y = (*this)(x);
        if (x > 0.0 && y <= 0.0) return false;
        if (!first && y <= prev) return false;
        prev = y;
        first = false;
    }
    return true;
}

MonotoneMap extend_monotone(std::span<const std::pair<double, double>> table) {
    if (table.empty()) raise(Errc::bad_input, "empty table");
    std::vector<std::pair<double, double>> bps;
    bps.reserve(table.size() + 1);
    bps.emplace_back(0.0, 0.0);
    for (std::size_t i = 0; i < table.size(); ++i) {
        const auto [x, y] = table[i];
        if (!(x > 0.0)) raise(Errc::unsorted_table, "table keys must be positive");
        if (y < 0.0) raise(Errc::decreasing_values, "table values must be non-negative");
        if (i > 0 && !(x > table[i - 1].first))
            raise(Errc::unsorted_table, "table keys must strictly ascend");
        if (i > 0 && y < table[i - 1].second)
            raise(Errc::decreasing_values, "table values must not decrease");
        bps.emplace_back(x, y);
    }
    return MonotoneMap::from_breakpoints(std::move(bps), 1.0);
}

MonotoneMap compose_on(const MonotoneMap& outer, const MonotoneMap& inner,
                       std::span<const double> domain) {
    std::set<double> keys(domain.begin(), domain.end());
    keys.erase(0.0);
    std::vector<std::pair<double, double>> table;
    for (double x : keys) table.emplace_back(x, outer(inner(x)));
    if (table.empty()) return MonotoneMap::identity();
    return extend_monotone(table);
}

}  // namespace wiso
