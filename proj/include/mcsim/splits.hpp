#pragma once

#include <array>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "mcsim/errors.hpp"

namespace mcsim::splits {

/// gNB protocol layers, total order top to bottom.
enum class ProtocolLayer { Rrc, Pdcp, HighRlc, LowRlc, HighMac, LowMac, HighPhy, LowPhy, Rf };

constexpr std::array<ProtocolLayer, 9> kAllLayers = {
    ProtocolLayer::Rrc,     ProtocolLayer::Pdcp,   ProtocolLayer::HighRlc,
    ProtocolLayer::LowRlc,  ProtocolLayer::HighMac, ProtocolLayer::LowMac,
    ProtocolLayer::HighPhy, ProtocolLayer::LowPhy, ProtocolLayer::Rf,
};

std::string layer_name(ProtocolLayer l);

/// The eight functional split points plus the monolithic pseudo-option.
/// Option 7 is modeled as its 7.2 variant only.
enum class SplitOptionId {
    Split1,
    Split2,
    Split3,
    Split4,
    Split5,
    Split6,
    Split7_2,
    Split8,
    NoSplit,
};

std::string split_option_name(SplitOptionId id);
Result<SplitOptionId> parse_split_option(const std::string& name);

/// Where an option cuts the stack: the layer just above and just below the cut.
struct SplitBoundary {
    ProtocolLayer above;
    ProtocolLayer below;
};

/// True for options that separate the DU from the RU (low-level splits).
bool is_low_level_split(SplitOptionId id);

Result<SplitBoundary> split_boundary(SplitOptionId id);

/// CU/DU/RU layer sets, each ordered top to bottom. For a high-level option
/// the RU side defaults to the 7.2 cut; for a low-level option the CU side
/// defaults to the option-2 cut. NoSplit keeps the default grouping but marks
/// all three units co-located.
struct LayerPlacement {
    std::vector<ProtocolLayer> cu;
    std::vector<ProtocolLayer> du;
    std::vector<ProtocolLayer> ru;
    bool colocated = false;
};

Result<LayerPlacement> layer_placement(SplitOptionId id);

/// Transport demand of a split: a one-way latency budget plus a bandwidth
/// model that is either proportional to the user rate or a constant.
struct ProportionalBandwidth {
    double factor = 1.0;  // >= 1, applied to the user rate
};
struct ConstantBandwidth {
    double bps = 0.0;
};
using BandwidthModel = std::variant<ProportionalBandwidth, ConstantBandwidth>;

struct TransportRequirement {
    double max_one_way_latency_s = 0.0;
    BandwidthModel bandwidth;
};

/// Requirement table, keyed by option. Values are configuration, not claims:
/// scenarios may override the defaults.
class RequirementTable {
  public:
    static RequirementTable defaults();

    /// Replaces the entry for an option. No validation here; call validate().
    void set(SplitOptionId id, TransportRequirement req);

    bool has(SplitOptionId id) const;
    const std::map<SplitOptionId, TransportRequirement>& entries() const { return entries_; }

    /// Every high-level-split budget must exceed every low-level-split budget.
    Status validate() const;

    Result<TransportRequirement> lookup(SplitOptionId id) const;

  private:
    std::map<SplitOptionId, TransportRequirement> entries_;
};

struct TransportDemand {
    double latency_budget_s;
    double required_bps;
};

/// Resolves the table entry against a concrete user rate.
/// NoSplit has no transport requirement and yields an unbounded budget.
Result<TransportDemand> transport_requirement(SplitOptionId id, double user_rate_bps,
                                              const RequirementTable& table);

struct LatencyExceeded {
    double by_s;
};
struct BandwidthShort {
    double by_bps;
};
using Violation = std::variant<LatencyExceeded, BandwidthShort>;

struct Feasibility {
    std::vector<Violation> violations;
    bool feasible() const { return violations.empty(); }
};

std::string violation_name(const Violation& v);

Result<Feasibility> check_split_feasibility(SplitOptionId id, double path_latency_s,
                                            double path_capacity_bps, double user_rate_bps,
                                            const RequirementTable& table);

}  // namespace mcsim::splits
