#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mcsim/geometry.hpp"

namespace mcsim::mobility {

struct Waypoint {
    double time_s;
    Vec2 position_m;
};

/// Followed waypoint path; times strictly increasing, at least one waypoint.
struct WaypointsMode {
    std::vector<Waypoint> waypoints;
};

/// Quasi-static deployment: fixed position from deploy_time_s on, undeployed
/// before that.
struct NomadicMode {
    Vec2 position_m;
    double deploy_time_s = 0.0;
};

struct MobilityTrace {
    std::string trace_id;
    std::variant<WaypointsMode, NomadicMode> mode;
    bool loop = false;
};

/// Position at simulated time t. Waypoints interpolate piecewise-linearly and
/// clamp outside the span (or wrap over the trace period when loop is set).
/// Nomadic traces return nullopt before their deploy time.
std::optional<Vec2> position_at(const MobilityTrace& trace, double t_s);

/// Largest segment speed of a waypoint trace (0 for nomadic/single-point).
double max_speed_mps(const MobilityTrace& trace);

}  // namespace mcsim::mobility
