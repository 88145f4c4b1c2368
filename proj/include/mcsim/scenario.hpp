#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mcsim/geometry.hpp"
#include "mcsim/mobility.hpp"
#include "mcsim/net_types.hpp"
#include "mcsim/radio.hpp"
#include "mcsim/splits.hpp"

namespace mcsim::scenario {

struct Metadata {
    std::string name;
    std::uint64_t seed = 1;
    double end_time_s = 60.0;
    double sample_period_s = 1.0;
};

enum class NetworkRole { Home, Overlay };

struct NetworkDecl {
    std::string id;
    NetworkRole role = NetworkRole::Overlay;
};

/// Sparse patch over RadioParams; only set fields are applied.
struct RadioOverride {
    std::optional<double> tx_power_dbm;
    std::optional<double> antenna_gain_db;
    std::optional<double> bandwidth_hz;
    std::optional<double> noise_figure_db;
    std::optional<std::string> carrier_band_label;
    std::optional<double> sensitivity_dbm;
    std::optional<double> hysteresis_db;

    bool empty() const;
    void apply(radio::RadioParams& p) const;
};

struct ElementDecl {
    std::string id;
    ElementKind kind = ElementKind::Cu;
    std::string network;
    Vec2 position_m;
    std::optional<RadioOverride> radio;
    bool iab_donor_du = false;
};

/// Declared links are always wired; air links are computed by the engine.
struct LinkDecl {
    std::string id;
    std::string a;
    std::string b;
    LinkRole role = LinkRole::NgBackhaul;
    double one_way_latency_s = 0.0;
    double capacity_bps = 0.0;
};

enum class McArch { NoSplit, Split2, IabMbsr };

std::string mc_arch_name(McArch a);

enum class AttachMode { Overlay, IabDirect };

std::string attach_mode_name(AttachMode m);

struct AttachDecl {
    std::string target;
    AttachMode mode = AttachMode::Overlay;
};

struct MobileCellDecl {
    std::string id;
    McArch arch = McArch::NoSplit;
    std::string cu;  // split2 only: fixed CU element id
    bool bap_capable = false;
    std::string trace;
    AttachDecl attach;
    double offered_user_rate_bps = 100e6;
};

struct UeDecl {
    std::string id;
    std::optional<Vec2> position_m;  // exactly one of position_m / trace
    std::optional<std::string> trace;
    std::optional<RadioOverride> radio;
};

struct GridSpec {
    double x0_m = 0.0;
    double y0_m = 0.0;
    double x1_m = 0.0;
    double y1_m = 0.0;
    double resolution_m = 10.0;
};

enum class FaultAction { LinkDown, LinkUp, Deploy, Retract };

std::string fault_action_name(FaultAction a);

/// Timed directive. LinkDown/LinkUp target a wired link id or a mobile cell
/// id (administrative state of its MT air link); Deploy/Retract target a
/// mobile cell id.
struct FaultDecl {
    double time_s = 0.0;
    FaultAction action = FaultAction::LinkDown;
    std::string target;
};

struct RadioConfig {
    radio::PathLossModel path_loss;
    double max_spectral_efficiency = 7.4;
    std::map<ElementKind, RadioOverride> defaults;
    std::map<std::string, RadioOverride> overrides;
};

struct ScenarioDescription {
    Metadata metadata;
    std::vector<NetworkDecl> networks;        // sorted by id
    std::vector<ElementDecl> elements;        // sorted by id
    std::vector<LinkDecl> links;              // sorted by id
    std::vector<MobileCellDecl> mobile_cells; // sorted by id
    std::vector<mobility::MobilityTrace> traces;  // sorted by trace_id
    RadioConfig radio;
    splits::RequirementTable split_table = splits::RequirementTable::defaults();
    std::vector<UeDecl> ues;                  // sorted by id
    std::optional<GridSpec> grid;
    std::vector<FaultDecl> faults;            // sorted by (time, action, target)

    std::string home_network() const;
    const NetworkDecl* find_network(const std::string& id) const;
    const ElementDecl* find_element(const std::string& id) const;
    const LinkDecl* find_link(const std::string& id) const;
    const MobileCellDecl* find_mobile_cell(const std::string& id) const;
    const mobility::MobilityTrace* find_trace(const std::string& id) const;
    const UeDecl* find_ue(const std::string& id) const;

    /// Effective radio parameters for an element: built-in kind defaults,
    /// patched by the scenario kind defaults, then by the per-element override
    /// (id may be an auto-instantiated onboard id such as "mc1.ru").
    radio::RadioParams resolve_radio(ElementKind kind, const std::string& element_id) const;
};

/// Built-in per-kind radio defaults, before any scenario patches.
radio::RadioParams builtin_radio_defaults(ElementKind kind);

struct Finding {
    std::string severity;  // "error" | "warning"
    std::string location;  // JSON-pointer-ish path into the file
    std::string code;
    std::string message;
};

struct ParseOutcome {
    std::optional<ScenarioDescription> description;
    std::vector<Finding> findings;

    bool ok() const { return description.has_value(); }
};

/// Parses and validates a scenario document. Collects every finding instead
/// of stopping at the first; description is only present when there are no
/// error-severity findings.
ParseOutcome parse_scenario(const std::string& text);
ParseOutcome parse_scenario_file(const std::string& path);

/// Canonical serialized form (sorted sections, normalized field order).
/// parse(serialize(d)) reproduces d.
std::string serialize(const ScenarioDescription& d);

}  // namespace mcsim::scenario
