#include "mcsim/splits.hpp"

#include <algorithm>
#include <limits>

namespace mcsim::splits {

namespace {

// Single source of truth for the option geometry. The sub-layer boundaries
// for options 3..6 are the standard reading of the eight-point figure and can
// be corrected here without touching anything else.
struct OptionRow {
    SplitOptionId id;
    const char* name;
    SplitBoundary boundary;
    bool low_level;
};

constexpr OptionRow kOptionTable[] = {
    {SplitOptionId::Split1, "1", {ProtocolLayer::Rrc, ProtocolLayer::Pdcp}, false},
    {SplitOptionId::Split2, "2", {ProtocolLayer::Pdcp, ProtocolLayer::HighRlc}, false},
    {SplitOptionId::Split3, "3", {ProtocolLayer::HighRlc, ProtocolLayer::LowRlc}, false},
    {SplitOptionId::Split4, "4", {ProtocolLayer::LowRlc, ProtocolLayer::HighMac}, false},
    {SplitOptionId::Split5, "5", {ProtocolLayer::HighMac, ProtocolLayer::LowMac}, false},
    {SplitOptionId::Split6, "6", {ProtocolLayer::LowMac, ProtocolLayer::HighPhy}, true},
    {SplitOptionId::Split7_2, "7.2", {ProtocolLayer::HighPhy, ProtocolLayer::LowPhy}, true},
    {SplitOptionId::Split8, "8", {ProtocolLayer::LowPhy, ProtocolLayer::Rf}, true},
};

const OptionRow* find_row(SplitOptionId id) {
    for (const auto& row : kOptionTable) {
        if (row.id == id) return &row;
    }
    return nullptr;
}

int layer_index(ProtocolLayer l) { return static_cast<int>(l); }

std::vector<ProtocolLayer> layer_range(int first, int last_exclusive) {
    std::vector<ProtocolLayer> out;
    for (int i = first; i < last_exclusive; ++i) out.push_back(kAllLayers[i]);
    return out;
}

}  // namespace

std::string layer_name(ProtocolLayer l) {
    switch (l) {
        case ProtocolLayer::Rrc: return "rrc";
        case ProtocolLayer::Pdcp: return "pdcp";
        case ProtocolLayer::HighRlc: return "high_rlc";
        case ProtocolLayer::LowRlc: return "low_rlc";
        case ProtocolLayer::HighMac: return "high_mac";
        case ProtocolLayer::LowMac: return "low_mac";
        case ProtocolLayer::HighPhy: return "high_phy";
        case ProtocolLayer::LowPhy: return "low_phy";
        case ProtocolLayer::Rf: return "rf";
    }
    return "?";
}

std::string split_option_name(SplitOptionId id) {
    if (id == SplitOptionId::NoSplit) return "no_split";
    const OptionRow* row = find_row(id);
    return row ? row->name : "?";
}

Result<SplitOptionId> parse_split_option(const std::string& name) {
    if (name == "no_split") return SplitOptionId::NoSplit;
    if (name == "7" || name == "7.2") return SplitOptionId::Split7_2;
    for (const auto& row : kOptionTable) {
        if (name == row.name) return row.id;
    }
    return Error{Errc::UnknownOption, "unknown split option '" + name + "'"};
}

bool is_low_level_split(SplitOptionId id) {
    const OptionRow* row = find_row(id);
    return row != nullptr && row->low_level;
}

Result<SplitBoundary> split_boundary(SplitOptionId id) {
    const OptionRow* row = find_row(id);
    if (row == nullptr) {
        return Error{Errc::UnknownOption,
                     "no boundary for option '" + split_option_name(id) + "'"};
    }
    return row->boundary;
}

Result<LayerPlacement> layer_placement(SplitOptionId id) {
    // Default complementary cuts: option 2 for CU/DU, option 7.2 for DU/RU.
    const int cut2 = layer_index(ProtocolLayer::HighRlc);
    const int cut72 = layer_index(ProtocolLayer::LowPhy);
    const int total = static_cast<int>(kAllLayers.size());

    LayerPlacement out;
    if (id == SplitOptionId::NoSplit) {
        out.cu = layer_range(0, cut2);
        out.du = layer_range(cut2, cut72);
        out.ru = layer_range(cut72, total);
        out.colocated = true;
        return out;
    }
    const OptionRow* row = find_row(id);
    if (row == nullptr) return Error{Errc::UnknownOption, "unknown split option id"};

    const int cut = layer_index(row->boundary.below);
    if (row->low_level) {
        out.cu = layer_range(0, cut2);
        out.du = layer_range(cut2, cut);
        out.ru = layer_range(cut, total);
    } else {
        out.cu = layer_range(0, cut);
        out.du = layer_range(cut, cut72);
        out.ru = layer_range(cut72, total);
    }
    return out;
}

RequirementTable RequirementTable::defaults() {
    RequirementTable t;
    t.set(SplitOptionId::Split2, {10e-3, ProportionalBandwidth{1.02}});
    t.set(SplitOptionId::Split7_2, {0.25e-3, ConstantBandwidth{10e9}});
    t.set(SplitOptionId::Split8, {0.25e-3, ConstantBandwidth{25e9}});
    return t;
}

void RequirementTable::set(SplitOptionId id, TransportRequirement req) {
    entries_[id] = std::move(req);
}

bool RequirementTable::has(SplitOptionId id) const { return entries_.contains(id); }

Status RequirementTable::validate() const {
    double min_hls = std::numeric_limits<double>::infinity();
    double max_lls = 0.0;
    for (const auto& [id, req] : entries_) {
        if (req.max_one_way_latency_s <= 0.0) {
            return Error{Errc::RangeError, "split " + split_option_name(id) +
                                               ": latency budget must be positive"};
        }
        if (const auto* p = std::get_if<ProportionalBandwidth>(&req.bandwidth);
            p != nullptr && p->factor < 1.0) {
            return Error{Errc::RangeError, "split " + split_option_name(id) +
                                               ": proportional factor must be >= 1"};
        }
        if (is_low_level_split(id)) {
            max_lls = std::max(max_lls, req.max_one_way_latency_s);
        } else {
            min_hls = std::min(min_hls, req.max_one_way_latency_s);
        }
    }
    if (max_lls > 0.0 && min_hls <= max_lls) {
        return Error{Errc::RangeError,
                     "high-level split latency budgets must exceed low-level ones"};
    }
    return Status::ok();
}

Result<TransportRequirement> RequirementTable::lookup(SplitOptionId id) const {
    auto it = entries_.find(id);
    if (it == entries_.end()) {
        return Error{Errc::MissingTableEntry,
                     "no requirement entry for split option '" + split_option_name(id) + "'"};
    }
    return it->second;
}

Result<TransportDemand> transport_requirement(SplitOptionId id, double user_rate_bps,
                                              const RequirementTable& table) {
    if (id == SplitOptionId::NoSplit) {
        return TransportDemand{std::numeric_limits<double>::infinity(), 0.0};
    }
    auto req = table.lookup(id);
    if (!req) return req.error();

    double required = 0.0;
    if (const auto* p = std::get_if<ProportionalBandwidth>(&req.value().bandwidth)) {
        required = p->factor * user_rate_bps;
    } else {
        required = std::get<ConstantBandwidth>(req.value().bandwidth).bps;
    }
    return TransportDemand{req.value().max_one_way_latency_s, required};
}

std::string violation_name(const Violation& v) {
    return std::holds_alternative<LatencyExceeded>(v) ? "latency_exceeded" : "bandwidth_short";
}

Result<Feasibility> check_split_feasibility(SplitOptionId id, double path_latency_s,
                                            double path_capacity_bps, double user_rate_bps,
                                            const RequirementTable& table) {
    auto demand = transport_requirement(id, user_rate_bps, table);
    if (!demand) return demand.error();

    Feasibility out;
    if (path_latency_s > demand.value().latency_budget_s) {
        out.violations.push_back(LatencyExceeded{path_latency_s - demand.value().latency_budget_s});
    }
    if (path_capacity_bps < demand.value().required_bps) {
        out.violations.push_back(BandwidthShort{demand.value().required_bps - path_capacity_bps});
    }
    return out;
}

}  // namespace mcsim::splits
