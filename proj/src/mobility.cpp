#include "mcsim/mobility.hpp"

#include <algorithm>
#include <cmath>

namespace mcsim::mobility {

std::optional<Vec2> position_at(const MobilityTrace& trace, double t_s) {
    if (const auto* nomadic = std::get_if<NomadicMode>(&trace.mode)) {
        if (t_s < nomadic->deploy_time_s) return std::nullopt;
        return nomadic->position_m;
    }

    const auto& wps = std::get<WaypointsMode>(trace.mode).waypoints;
    if (wps.size() == 1) return wps.front().position_m;

    double t = t_s;
    const double t0 = wps.front().time_s;
    const double t1 = wps.back().time_s;
    if (trace.loop) {
        const double period = t1 - t0;
        if (period > 0.0) {
            t = t0 + std::fmod(t - t0, period);
            if (t < t0) t += period;
        } else {
            t = t0;
        }
    }
    if (t <= t0) return wps.front().position_m;
    if (t >= t1) return wps.back().position_m;

    auto upper = std::upper_bound(wps.begin(), wps.end(), t,
                                  [](double v, const Waypoint& w) { return v < w.time_s; });
    const Waypoint& b = *upper;
    const Waypoint& a = *(upper - 1);
    const double f = (t - a.time_s) / (b.time_s - a.time_s);
    return a.position_m + (b.position_m - a.position_m) * f;
}

double max_speed_mps(const MobilityTrace& trace) {
    const auto* mode = std::get_if<WaypointsMode>(&trace.mode);
    if (mode == nullptr || mode->waypoints.size() < 2) return 0.0;
    double vmax = 0.0;
    for (size_t i = 1; i < mode->waypoints.size(); ++i) {
        const auto& a = mode->waypoints[i - 1];
        const auto& b = mode->waypoints[i];
        vmax = std::max(vmax, distance(a.position_m, b.position_m) / (b.time_s - a.time_s));
    }
    return vmax;
}

}  // namespace mcsim::mobility
