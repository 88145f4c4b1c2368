#include "mcsim/scenario.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace mcsim::scenario {

using nlohmann::json;

namespace {

struct FindingSink {
    std::vector<Finding>* out;
    bool has_error = false;

    void error(const std::string& loc, Errc code, const std::string& msg) {
        out->push_back({"error", loc, std::string(errc_name(code)), msg});
        has_error = true;
    }
    void warning(const std::string& loc, const std::string& code, const std::string& msg) {
        out->push_back({"warning", loc, code, msg});
    }
};

/// Reads fields of one JSON object, tracking which keys were consumed so the
/// leftovers can be reported as unknown fields. Typos must never pass silently.
class Fields {
  public:
    Fields(const json& j, std::string loc, FindingSink& sink)
        : j_(j), loc_(std::move(loc)), sink_(sink) {}

    const json* raw(const char* name) {
        seen_.insert(name);
        auto it = j_.find(name);
        return it == j_.end() ? nullptr : &*it;
    }

    std::optional<std::string> str(const char* name, bool required = false) {
        const json* v = raw(name);
        if (v == nullptr) {
            if (required) missing(name);
            return std::nullopt;
        }
        if (!v->is_string()) {
            sink_.error(loc_ + "/" + name, Errc::SyntaxError, "expected a string");
            return std::nullopt;
        }
        return v->get<std::string>();
    }

    std::optional<double> num(const char* name, bool required = false) {
        const json* v = raw(name);
        if (v == nullptr) {
            if (required) missing(name);
            return std::nullopt;
        }
        if (!v->is_number()) {
            sink_.error(loc_ + "/" + name, Errc::SyntaxError, "expected a number");
            return std::nullopt;
        }
        return v->get<double>();
    }

    std::optional<bool> boolean(const char* name, bool required = false) {
        const json* v = raw(name);
        if (v == nullptr) {
            if (required) missing(name);
            return std::nullopt;
        }
        if (!v->is_boolean()) {
            sink_.error(loc_ + "/" + name, Errc::SyntaxError, "expected a boolean");
            return std::nullopt;
        }
        return v->get<bool>();
    }

    std::optional<Vec2> vec2(const char* name, bool required = false) {
        const json* v = raw(name);
        if (v == nullptr) {
            if (required) missing(name);
            return std::nullopt;
        }
        if (!v->is_array() || v->size() != 2 || !(*v)[0].is_number() || !(*v)[1].is_number()) {
            sink_.error(loc_ + "/" + name, Errc::SyntaxError, "expected [x_m, y_m]");
            return std::nullopt;
        }
        return Vec2{(*v)[0].get<double>(), (*v)[1].get<double>()};
    }

    const json* array(const char* name, bool required = false) {
        const json* v = raw(name);
        if (v == nullptr) {
            if (required) missing(name);
            return nullptr;
        }
        if (!v->is_array()) {
            sink_.error(loc_ + "/" + name, Errc::SyntaxError, "expected an array");
            return nullptr;
        }
        return v;
    }

    const json* object(const char* name, bool required = false) {
        const json* v = raw(name);
        if (v == nullptr) {
            if (required) missing(name);
            return nullptr;
        }
        if (!v->is_object()) {
            sink_.error(loc_ + "/" + name, Errc::SyntaxError, "expected an object");
            return nullptr;
        }
        return v;
    }

    /// Reports any keys never consumed by the getters above.
    void finish() {
        for (auto it = j_.begin(); it != j_.end(); ++it) {
            if (!seen_.contains(it.key())) {
                sink_.error(loc_ + "/" + it.key(), Errc::UnknownField,
                            "unknown field '" + it.key() + "'");
            }
        }
    }

    const std::string& loc() const { return loc_; }

  private:
    void missing(const char* name) {
        sink_.error(loc_ + "/" + name, Errc::SyntaxError,
                    std::string("missing required field '") + name + "'");
    }

    const json& j_;
    std::string loc_;
    FindingSink& sink_;
    std::set<std::string> seen_;
};

std::optional<RadioOverride> parse_radio_override(const json& j, const std::string& loc,
                                                  FindingSink& sink) {
    if (!j.is_object()) {
        sink.error(loc, Errc::SyntaxError, "expected an object of radio parameters");
        return std::nullopt;
    }
    Fields f(j, loc, sink);
    RadioOverride o;
    o.tx_power_dbm = f.num("tx_power_dbm");
    o.antenna_gain_db = f.num("antenna_gain_db");
    o.bandwidth_hz = f.num("bandwidth_hz");
    o.noise_figure_db = f.num("noise_figure_db");
    o.carrier_band_label = f.str("carrier_band_label");
    o.sensitivity_dbm = f.num("sensitivity_dbm");
    o.hysteresis_db = f.num("hysteresis_db");
    f.finish();
    if (o.bandwidth_hz && *o.bandwidth_hz <= 0.0) {
        sink.error(loc + "/bandwidth_hz", Errc::RangeError, "bandwidth must be positive");
    }
    if (o.hysteresis_db && *o.hysteresis_db < 0.0) {
        sink.error(loc + "/hysteresis_db", Errc::RangeError, "hysteresis must be >= 0");
    }
    return o;
}

std::optional<McArch> parse_mc_arch(const std::string& s) {
    if (s == "no_split") return McArch::NoSplit;
    if (s == "split2") return McArch::Split2;
    if (s == "iab_mbsr") return McArch::IabMbsr;
    return std::nullopt;
}

std::optional<AttachMode> parse_attach_mode(const std::string& s) {
    if (s == "overlay") return AttachMode::Overlay;
    if (s == "iab_direct") return AttachMode::IabDirect;
    return std::nullopt;
}

std::optional<FaultAction> parse_fault_action(const std::string& s) {
    if (s == "link_down") return FaultAction::LinkDown;
    if (s == "link_up") return FaultAction::LinkUp;
    if (s == "deploy") return FaultAction::Deploy;
    if (s == "retract") return FaultAction::Retract;
    return std::nullopt;
}

std::vector<std::string> onboard_ids_for(const MobileCellDecl& mc) {
    std::vector<std::string> ids;
    if (mc.arch == McArch::NoSplit) ids.push_back(mc.id + ".cu");
    ids.push_back(mc.id + ".du");
    ids.push_back(mc.id + ".ru");
    ids.push_back(mc.id + ".mt");
    return ids;
}

json radio_override_to_json(const RadioOverride& o) {
    json j = json::object();
    if (o.tx_power_dbm) j["tx_power_dbm"] = *o.tx_power_dbm;
    if (o.antenna_gain_db) j["antenna_gain_db"] = *o.antenna_gain_db;
    if (o.bandwidth_hz) j["bandwidth_hz"] = *o.bandwidth_hz;
    if (o.noise_figure_db) j["noise_figure_db"] = *o.noise_figure_db;
    if (o.carrier_band_label) j["carrier_band_label"] = *o.carrier_band_label;
    if (o.sensitivity_dbm) j["sensitivity_dbm"] = *o.sensitivity_dbm;
    if (o.hysteresis_db) j["hysteresis_db"] = *o.hysteresis_db;
    return j;
}

void merge_override(RadioOverride& base, const RadioOverride& top) {
    if (top.tx_power_dbm) base.tx_power_dbm = top.tx_power_dbm;
    if (top.antenna_gain_db) base.antenna_gain_db = top.antenna_gain_db;
    if (top.bandwidth_hz) base.bandwidth_hz = top.bandwidth_hz;
    if (top.noise_figure_db) base.noise_figure_db = top.noise_figure_db;
    if (top.carrier_band_label) base.carrier_band_label = top.carrier_band_label;
    if (top.sensitivity_dbm) base.sensitivity_dbm = top.sensitivity_dbm;
    if (top.hysteresis_db) base.hysteresis_db = top.hysteresis_db;
}

}  // namespace

bool RadioOverride::empty() const {
    return !tx_power_dbm && !antenna_gain_db && !bandwidth_hz && !noise_figure_db &&
           !carrier_band_label && !sensitivity_dbm && !hysteresis_db;
}

void RadioOverride::apply(radio::RadioParams& p) const {
    if (tx_power_dbm) p.tx_power_dbm = *tx_power_dbm;
    if (antenna_gain_db) p.antenna_gain_db = *antenna_gain_db;
    if (bandwidth_hz) p.bandwidth_hz = *bandwidth_hz;
    if (noise_figure_db) p.noise_figure_db = *noise_figure_db;
    if (carrier_band_label) p.carrier_band_label = *carrier_band_label;
    if (sensitivity_dbm) p.sensitivity_dbm = *sensitivity_dbm;
    if (hysteresis_db) p.hysteresis_db = *hysteresis_db;
}

std::string mc_arch_name(McArch a) {
    switch (a) {
        case McArch::NoSplit: return "no_split";
        case McArch::Split2: return "split2";
        case McArch::IabMbsr: return "iab_mbsr";
    }
    return "?";
}

std::string attach_mode_name(AttachMode m) {
    return m == AttachMode::Overlay ? "overlay" : "iab_direct";
}

std::string fault_action_name(FaultAction a) {
    switch (a) {
        case FaultAction::LinkDown: return "link_down";
        case FaultAction::LinkUp: return "link_up";
        case FaultAction::Deploy: return "deploy";
        case FaultAction::Retract: return "retract";
    }
    return "?";
}

radio::RadioParams builtin_radio_defaults(ElementKind kind) {
    radio::RadioParams p;
    switch (kind) {
        case ElementKind::Ru:
        case ElementKind::MonolithicGnb:
        case ElementKind::Du:
            p.tx_power_dbm = 30.0;
            p.antenna_gain_db = 3.0;
            p.noise_figure_db = 5.0;
            p.sensitivity_dbm = -100.0;
            break;
        case ElementKind::Mt:
            p.tx_power_dbm = 26.0;
            p.antenna_gain_db = 3.0;
            p.noise_figure_db = 7.0;
            p.sensitivity_dbm = -100.0;
            break;
        case ElementKind::Ue:
            p.tx_power_dbm = 23.0;
            p.antenna_gain_db = 0.0;
            p.noise_figure_db = 7.0;
            p.sensitivity_dbm = -95.0;
            break;
        default:
            break;
    }
    return p;
}

std::string ScenarioDescription::home_network() const {
    for (const auto& n : networks) {
        if (n.role == NetworkRole::Home) return n.id;
    }
    return {};
}

const NetworkDecl* ScenarioDescription::find_network(const std::string& id) const {
    for (const auto& n : networks)
        if (n.id == id) return &n;
    return nullptr;
}
const ElementDecl* ScenarioDescription::find_element(const std::string& id) const {
    for (const auto& e : elements)
        if (e.id == id) return &e;
    return nullptr;
}
const LinkDecl* ScenarioDescription::find_link(const std::string& id) const {
    for (const auto& l : links)
        if (l.id == id) return &l;
    return nullptr;
}
const MobileCellDecl* ScenarioDescription::find_mobile_cell(const std::string& id) const {
    for (const auto& m : mobile_cells)
        if (m.id == id) return &m;
    return nullptr;
}
const mobility::MobilityTrace* ScenarioDescription::find_trace(const std::string& id) const {
    for (const auto& t : traces)
        if (t.trace_id == id) return &t;
    return nullptr;
}
const UeDecl* ScenarioDescription::find_ue(const std::string& id) const {
    for (const auto& u : ues)
        if (u.id == id) return &u;
    return nullptr;
}

radio::RadioParams ScenarioDescription::resolve_radio(ElementKind kind,
                                                      const std::string& element_id) const {
    radio::RadioParams p = builtin_radio_defaults(kind);
    if (auto it = radio.defaults.find(kind); it != radio.defaults.end()) it->second.apply(p);
    if (auto it = radio.overrides.find(element_id); it != radio.overrides.end())
        it->second.apply(p);
    return p;
}

ParseOutcome parse_scenario(const std::string& text) {
    ParseOutcome outcome;
    FindingSink sink{&outcome.findings};

    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        sink.error("", Errc::SyntaxError, e.what());
        return outcome;
    }
    if (!root.is_object()) {
        sink.error("", Errc::SyntaxError, "scenario document must be a JSON object");
        return outcome;
    }

    ScenarioDescription d;
    Fields top(root, "", sink);

    // -- metadata
    if (const json* meta = top.object("metadata", /*required=*/true)) {
        Fields f(*meta, "/metadata", sink);
        d.metadata.name = f.str("name", true).value_or("");
        if (auto seed = f.num("seed")) {
            if (*seed < 0 || *seed != std::floor(*seed)) {
                sink.error("/metadata/seed", Errc::RangeError, "seed must be a non-negative integer");
            } else {
                d.metadata.seed = static_cast<std::uint64_t>(*seed);
            }
        }
        if (auto v = f.num("end_time_s")) d.metadata.end_time_s = *v;
        if (auto v = f.num("sample_period_s")) d.metadata.sample_period_s = *v;
        f.finish();
        if (d.metadata.end_time_s <= 0.0)
            sink.error("/metadata/end_time_s", Errc::RangeError, "end time must be positive");
        if (d.metadata.sample_period_s <= 0.0)
            sink.error("/metadata/sample_period_s", Errc::RangeError,
                       "sample period must be positive");
    }

    // -- networks
    int home_count = 0;
    if (const json* nets = top.array("networks", /*required=*/true)) {
        for (size_t i = 0; i < nets->size(); ++i) {
            const std::string loc = "/networks/" + std::to_string(i);
            if (!(*nets)[i].is_object()) {
                sink.error(loc, Errc::SyntaxError, "expected an object");
                continue;
            }
            Fields f((*nets)[i], loc, sink);
            NetworkDecl n;
            n.id = f.str("id", true).value_or("");
            if (auto role = f.str("role", true)) {
                if (*role == "home") {
                    n.role = NetworkRole::Home;
                    ++home_count;
                } else if (*role == "overlay") {
                    n.role = NetworkRole::Overlay;
                } else {
                    sink.error(loc + "/role", Errc::SyntaxError,
                               "network role must be 'home' or 'overlay'");
                }
            }
            f.finish();
            if (d.find_network(n.id) != nullptr) {
                sink.error(loc + "/id", Errc::InvariantViolation,
                           "duplicate network id '" + n.id + "'");
            }
            d.networks.push_back(std::move(n));
        }
        if (home_count != 1) {
            sink.error("/networks", Errc::InvariantViolation,
                       "exactly one network must have role 'home'");
        }
    }

    // -- elements
    std::map<std::string, RadioOverride> inline_radio;
    if (const json* els = top.array("elements")) {
        for (size_t i = 0; i < els->size(); ++i) {
            const std::string loc = "/elements/" + std::to_string(i);
            if (!(*els)[i].is_object()) {
                sink.error(loc, Errc::SyntaxError, "expected an object");
                continue;
            }
            Fields f((*els)[i], loc, sink);
            ElementDecl e;
            e.id = f.str("id", true).value_or("");
            if (auto kind = f.str("kind", true)) {
                auto parsed = parse_element_kind(*kind);
                if (parsed) {
                    e.kind = parsed.value();
                    if (e.kind == ElementKind::Mt || e.kind == ElementKind::Ue) {
                        sink.error(loc + "/kind", Errc::RangeError,
                                   "MT and UE elements are declared via mobile_cells/ues, "
                                   "not the elements section");
                    }
                } else {
                    sink.error(loc + "/kind", Errc::SyntaxError, parsed.error().message);
                }
            }
            e.network = f.str("network", true).value_or("");
            if (auto pos = f.vec2("position_m", true)) e.position_m = *pos;
            if (const json* r = f.raw("radio")) {
                if (auto o = parse_radio_override(*r, loc + "/radio", sink); o && !o->empty()) {
                    inline_radio[e.id] = *o;
                }
            }
            if (auto flag = f.boolean("iab_donor_du")) e.iab_donor_du = *flag;
            f.finish();

            if (e.iab_donor_du && e.kind != ElementKind::Du) {
                sink.error(loc + "/iab_donor_du", Errc::RangeError,
                           "iab_donor_du is only valid on elements of kind 'du'");
            }
            if (kind_forbids_radio(e.kind) && inline_radio.contains(e.id)) {
                sink.error(loc + "/radio", Errc::InvariantViolation,
                           element_kind_name(e.kind) + " elements never carry radio parameters");
            }
            if (d.find_element(e.id) != nullptr) {
                sink.error(loc + "/id", Errc::InvariantViolation,
                           "duplicate element id '" + e.id + "'");
            }
            d.elements.push_back(std::move(e));
        }
    }

    // -- links
    if (const json* links = top.array("links")) {
        for (size_t i = 0; i < links->size(); ++i) {
            const std::string loc = "/links/" + std::to_string(i);
            if (!(*links)[i].is_object()) {
                sink.error(loc, Errc::SyntaxError, "expected an object");
                continue;
            }
            Fields f((*links)[i], loc, sink);
            LinkDecl l;
            l.id = f.str("id", true).value_or("");
            l.a = f.str("a", true).value_or("");
            l.b = f.str("b", true).value_or("");
            if (auto role = f.str("role", true)) {
                auto parsed = parse_link_role(*role);
                if (parsed) {
                    l.role = parsed.value();
                    if (l.role == LinkRole::AccessAir || l.role == LinkRole::BackhaulAir) {
                        sink.error(loc + "/role", Errc::RangeError,
                                   "air links are computed by the radio model, not declared");
                    }
                } else {
                    sink.error(loc + "/role", Errc::SyntaxError, parsed.error().message);
                }
            }
            l.one_way_latency_s = f.num("one_way_latency_s", true).value_or(0.0);
            l.capacity_bps = f.num("capacity_bps", true).value_or(0.0);
            f.finish();

            if (l.one_way_latency_s < 0.0) {
                sink.error(loc + "/one_way_latency_s", Errc::RangeError,
                           "wired latency must be >= 0");
            }
            if (l.capacity_bps <= 0.0) {
                sink.error(loc + "/capacity_bps", Errc::RangeError,
                           "wired capacity must be > 0");
            }
            if (l.a == l.b) {
                sink.error(loc, Errc::RangeError, "link endpoints must differ");
            }
            if (d.find_link(l.id) != nullptr) {
                sink.error(loc + "/id", Errc::InvariantViolation,
                           "duplicate link id '" + l.id + "'");
            }
            d.links.push_back(std::move(l));
        }
    }

    // -- traces
    if (const json* traces = top.array("traces")) {
        for (size_t i = 0; i < traces->size(); ++i) {
            const std::string loc = "/traces/" + std::to_string(i);
            if (!(*traces)[i].is_object()) {
                sink.error(loc, Errc::SyntaxError, "expected an object");
                continue;
            }
            Fields f((*traces)[i], loc, sink);
            mobility::MobilityTrace t;
            t.trace_id = f.str("id", true).value_or("");
            auto mode = f.str("mode", true);
            if (mode && *mode == "waypoints") {
                mobility::WaypointsMode wm;
                if (const json* wps = f.array("waypoints", true)) {
                    for (size_t k = 0; k < wps->size(); ++k) {
                        const auto& w = (*wps)[k];
                        const std::string wloc = loc + "/waypoints/" + std::to_string(k);
                        if (!w.is_array() || w.size() != 3 || !w[0].is_number() ||
                            !w[1].is_number() || !w[2].is_number()) {
                            sink.error(wloc, Errc::SyntaxError, "expected [t_s, x_m, y_m]");
                            continue;
                        }
                        wm.waypoints.push_back(
                            {w[0].get<double>(), {w[1].get<double>(), w[2].get<double>()}});
                    }
                }
                if (wm.waypoints.empty()) {
                    sink.error(loc + "/waypoints", Errc::RangeError,
                               "a waypoint trace needs at least one waypoint");
                }
                for (size_t k = 1; k < wm.waypoints.size(); ++k) {
                    if (wm.waypoints[k].time_s <= wm.waypoints[k - 1].time_s) {
                        sink.error(loc + "/waypoints/" + std::to_string(k), Errc::RangeError,
                                   "waypoint times must be strictly increasing");
                    }
                }
                if (auto loop = f.boolean("loop")) t.loop = *loop;
                t.mode = std::move(wm);
            } else if (mode && *mode == "nomadic") {
                mobility::NomadicMode nm;
                if (auto pos = f.vec2("position_m", true)) nm.position_m = *pos;
                if (auto dt = f.num("deploy_time_s")) nm.deploy_time_s = *dt;
                if (nm.deploy_time_s < 0.0) {
                    sink.error(loc + "/deploy_time_s", Errc::RangeError,
                               "deploy time must be >= 0");
                }
                t.mode = nm;
            } else if (mode) {
                sink.error(loc + "/mode", Errc::SyntaxError,
                           "trace mode must be 'waypoints' or 'nomadic'");
            }
            f.finish();
            if (d.find_trace(t.trace_id) != nullptr) {
                sink.error(loc + "/id", Errc::InvariantViolation,
                           "duplicate trace id '" + t.trace_id + "'");
            }
            d.traces.push_back(std::move(t));
        }
    }

    // -- mobile cells
    if (const json* mcs = top.array("mobile_cells")) {
        for (size_t i = 0; i < mcs->size(); ++i) {
            const std::string loc = "/mobile_cells/" + std::to_string(i);
            if (!(*mcs)[i].is_object()) {
                sink.error(loc, Errc::SyntaxError, "expected an object");
                continue;
            }
            Fields f((*mcs)[i], loc, sink);
            MobileCellDecl m;
            m.id = f.str("id", true).value_or("");
            if (auto arch = f.str("arch", true)) {
                if (auto parsed = parse_mc_arch(*arch)) {
                    m.arch = *parsed;
                } else {
                    sink.error(loc + "/arch", Errc::SyntaxError,
                               "arch must be 'no_split', 'split2' or 'iab_mbsr'");
                }
            }
            m.cu = f.str("cu").value_or("");
            if (auto bap = f.boolean("bap_capable")) m.bap_capable = *bap;
            m.trace = f.str("trace", true).value_or("");
            if (const json* att = f.object("attach", true)) {
                Fields af(*att, loc + "/attach", sink);
                m.attach.target = af.str("target", true).value_or("");
                if (auto mode = af.str("mode", true)) {
                    if (auto parsed = parse_attach_mode(*mode)) {
                        m.attach.mode = *parsed;
                    } else {
                        sink.error(loc + "/attach/mode", Errc::SyntaxError,
                                   "attach mode must be 'overlay' or 'iab_direct'");
                    }
                }
                af.finish();
            }
            if (auto rate = f.num("offered_user_rate_bps")) m.offered_user_rate_bps = *rate;
            f.finish();

            if (m.offered_user_rate_bps < 0.0) {
                sink.error(loc + "/offered_user_rate_bps", Errc::RangeError,
                           "offered user rate must be >= 0");
            }
            if (m.arch == McArch::Split2 && m.cu.empty()) {
                sink.error(loc + "/cu", Errc::SyntaxError,
                           "split2 mobile cells must reference a fixed CU element");
            }
            if (m.arch != McArch::Split2 && !m.cu.empty()) {
                sink.error(loc + "/cu", Errc::RangeError,
                           "cu reference is only valid for split2 mobile cells");
            }
            if (m.arch == McArch::IabMbsr && !m.bap_capable) {
                sink.error(loc + "/bap_capable", Errc::InvariantViolation,
                           "an IAB MBSR mobile cell must be BAP-capable");
            }
            if (d.find_mobile_cell(m.id) != nullptr) {
                sink.error(loc + "/id", Errc::InvariantViolation,
                           "duplicate mobile cell id '" + m.id + "'");
            }
            d.mobile_cells.push_back(std::move(m));
        }
    }

    // -- ues
    if (const json* ues = top.array("ues")) {
        for (size_t i = 0; i < ues->size(); ++i) {
            const std::string loc = "/ues/" + std::to_string(i);
            if (!(*ues)[i].is_object()) {
                sink.error(loc, Errc::SyntaxError, "expected an object");
                continue;
            }
            Fields f((*ues)[i], loc, sink);
            UeDecl u;
            u.id = f.str("id", true).value_or("");
            u.position_m = f.vec2("position_m");
            u.trace = f.str("trace");
            if (const json* r = f.raw("radio")) {
                if (auto o = parse_radio_override(*r, loc + "/radio", sink); o && !o->empty()) {
                    inline_radio[u.id] = *o;
                }
            }
            f.finish();
            if (u.position_m.has_value() == u.trace.has_value()) {
                sink.error(loc, Errc::SyntaxError,
                           "a UE needs exactly one of position_m or trace");
            }
            if (d.find_ue(u.id) != nullptr) {
                sink.error(loc + "/id", Errc::InvariantViolation,
                           "duplicate ue id '" + u.id + "'");
            }
            d.ues.push_back(std::move(u));
        }
    }

    // -- radio config
    if (const json* rc = top.object("radio")) {
        Fields f(*rc, "/radio", sink);
        if (const json* pl = f.object("path_loss")) {
            Fields pf(*pl, "/radio/path_loss", sink);
            if (auto v = pf.num("pl0_db")) d.radio.path_loss.pl0_db = *v;
            if (auto v = pf.num("d0_m")) d.radio.path_loss.d0_m = *v;
            if (auto v = pf.num("exponent_n")) d.radio.path_loss.exponent_n = *v;
            pf.finish();
            if (d.radio.path_loss.d0_m <= 0.0) {
                sink.error("/radio/path_loss/d0_m", Errc::RangeError,
                           "reference distance must be positive");
            }
            if (d.radio.path_loss.exponent_n < 1.0) {
                sink.error("/radio/path_loss/exponent_n", Errc::RangeError,
                           "path loss exponent must be >= 1");
            }
        }
        if (auto v = f.num("max_spectral_efficiency_bps_hz")) {
            d.radio.max_spectral_efficiency = *v;
            if (*v <= 0.0) {
                sink.error("/radio/max_spectral_efficiency_bps_hz", Errc::RangeError,
                           "spectral efficiency cap must be positive");
            }
        }
        if (const json* defs = f.object("defaults")) {
            for (auto it = defs->begin(); it != defs->end(); ++it) {
                const std::string loc = "/radio/defaults/" + it.key();
                auto kind = parse_element_kind(it.key());
                if (!kind) {
                    sink.error(loc, Errc::UnknownField, "unknown element kind '" + it.key() + "'");
                    continue;
                }
                if (kind_forbids_radio(kind.value())) {
                    sink.error(loc, Errc::InvariantViolation,
                               it.key() + " elements never carry radio parameters");
                    continue;
                }
                if (auto o = parse_radio_override(*it, loc, sink)) {
                    d.radio.defaults[kind.value()] = *o;
                }
            }
        }
        if (const json* ovr = f.object("overrides")) {
            for (auto it = ovr->begin(); it != ovr->end(); ++it) {
                const std::string loc = "/radio/overrides/" + it.key();
                if (auto o = parse_radio_override(*it, loc, sink)) {
                    d.radio.overrides[it.key()] = *o;
                }
            }
        }
        f.finish();
    }

    // Inline element/UE patches fold into the override map; an explicit
    // override entry wins field by field.
    for (auto& [id, patch] : inline_radio) {
        RadioOverride merged = patch;
        if (auto it = d.radio.overrides.find(id); it != d.radio.overrides.end()) {
            merge_override(merged, it->second);
        }
        d.radio.overrides[id] = merged;
    }

    // -- split requirement table
    if (const json* st = top.object("split_table")) {
        for (auto it = st->begin(); it != st->end(); ++it) {
            const std::string loc = "/split_table/" + it.key();
            auto opt = splits::parse_split_option(it.key());
            if (!opt) {
                sink.error(loc, Errc::UnknownOption, opt.error().message);
                continue;
            }
            if (opt.value() == splits::SplitOptionId::NoSplit) {
                sink.error(loc, Errc::RangeError, "no_split has no transport requirement");
                continue;
            }
            if (!it->is_object()) {
                sink.error(loc, Errc::SyntaxError, "expected an object");
                continue;
            }
            Fields f(*it, loc, sink);
            splits::TransportRequirement req;
            req.max_one_way_latency_s = f.num("max_one_way_latency_s", true).value_or(0.0);
            if (const json* bw = f.object("bandwidth", true)) {
                Fields bf(*bw, loc + "/bandwidth", sink);
                auto model = bf.str("model", true);
                if (model && *model == "proportional") {
                    req.bandwidth =
                        splits::ProportionalBandwidth{bf.num("factor", true).value_or(1.0)};
                } else if (model && *model == "constant") {
                    req.bandwidth = splits::ConstantBandwidth{bf.num("bps", true).value_or(0.0)};
                } else if (model) {
                    sink.error(loc + "/bandwidth/model", Errc::SyntaxError,
                               "bandwidth model must be 'proportional' or 'constant'");
                }
                bf.finish();
            }
            d.split_table.set(opt.value(), req);
        }
        if (auto status = d.split_table.validate(); !status) {
            sink.error("/split_table", status.code(), status.error().message);
        }
    }

    // -- grid
    if (const json* grid = top.object("grid")) {
        Fields f(*grid, "/grid", sink);
        GridSpec g;
        g.x0_m = f.num("x0_m", true).value_or(0.0);
        g.y0_m = f.num("y0_m", true).value_or(0.0);
        g.x1_m = f.num("x1_m", true).value_or(0.0);
        g.y1_m = f.num("y1_m", true).value_or(0.0);
        g.resolution_m = f.num("resolution_m", true).value_or(0.0);
        f.finish();
        if (g.x1_m <= g.x0_m || g.y1_m <= g.y0_m) {
            sink.error("/grid", Errc::RangeError, "grid bounds must span a positive area");
        }
        if (g.resolution_m <= 0.0) {
            sink.error("/grid/resolution_m", Errc::RangeError, "grid resolution must be positive");
        }
        d.grid = g;
    }

    // -- faults
    if (const json* faults = top.array("faults")) {
        for (size_t i = 0; i < faults->size(); ++i) {
            const std::string loc = "/faults/" + std::to_string(i);
            if (!(*faults)[i].is_object()) {
                sink.error(loc, Errc::SyntaxError, "expected an object");
                continue;
            }
            Fields f((*faults)[i], loc, sink);
            FaultDecl fd;
            fd.time_s = f.num("time_s", true).value_or(0.0);
            if (auto action = f.str("action", true)) {
                if (auto parsed = parse_fault_action(*action)) {
                    fd.action = *parsed;
                } else {
                    sink.error(loc + "/action", Errc::SyntaxError,
                               "action must be link_down, link_up, deploy or retract");
                }
            }
            fd.target = f.str("target", true).value_or("");
            f.finish();
            if (fd.time_s < 0.0) {
                sink.error(loc + "/time_s", Errc::RangeError, "fault time must be >= 0");
            }
            d.faults.push_back(std::move(fd));
        }
    }

    top.finish();

    // -- cross-reference resolution over the whole document
    std::set<std::string> path_ids;  // every id addressable as a path element
    for (const auto& e : d.elements) path_ids.insert(e.id);
    for (const auto& u : d.ues) path_ids.insert(u.id);
    std::set<std::string> onboard;
    for (const auto& m : d.mobile_cells) {
        for (auto& id : onboard_ids_for(m)) {
            if (path_ids.contains(id)) {
                sink.error("/mobile_cells", Errc::InvariantViolation,
                           "auto-instantiated element id '" + id + "' collides with a declaration");
            }
            onboard.insert(id);
            path_ids.insert(id);
        }
    }

    for (size_t i = 0; i < d.elements.size(); ++i) {
        const auto& e = d.elements[i];
        if (!e.network.empty() && d.find_network(e.network) == nullptr) {
            sink.error("/elements/" + std::to_string(i) + "/network", Errc::UnresolvedReference,
                       "unknown network '" + e.network + "'");
        }
    }
    for (size_t i = 0; i < d.links.size(); ++i) {
        const auto& l = d.links[i];
        for (const std::string* end : {&l.a, &l.b}) {
            if (end->empty()) continue;
            if (d.find_element(*end) == nullptr) {
                const bool is_onboard = onboard.contains(*end);
                sink.error("/links/" + std::to_string(i), Errc::UnresolvedReference,
                           is_onboard ? "link endpoint '" + *end +
                                            "' is on a mobile platform; onboard links are "
                                            "auto-instantiated"
                                      : "unknown link endpoint '" + *end + "'");
            }
        }
        if (l.role == LinkRole::F1) {
            const ElementDecl* ea = d.find_element(l.a);
            const ElementDecl* eb = d.find_element(l.b);
            if (ea != nullptr && eb != nullptr) {
                const bool cu_du = (ea->kind == ElementKind::Cu && eb->kind == ElementKind::Du) ||
                                   (ea->kind == ElementKind::Du && eb->kind == ElementKind::Cu);
                if (!cu_du) {
                    sink.error("/links/" + std::to_string(i), Errc::InvariantViolation,
                               "F1 links connect a CU to a DU only");
                }
            }
        }
    }
    for (size_t i = 0; i < d.mobile_cells.size(); ++i) {
        const auto& m = d.mobile_cells[i];
        const std::string loc = "/mobile_cells/" + std::to_string(i);
        if (!m.trace.empty() && d.find_trace(m.trace) == nullptr) {
            sink.error(loc + "/trace", Errc::UnresolvedReference,
                       "unknown trace '" + m.trace + "'");
        }
        if (!m.cu.empty()) {
            const ElementDecl* cu = d.find_element(m.cu);
            if (cu == nullptr) {
                sink.error(loc + "/cu", Errc::UnresolvedReference,
                           "unknown cu element '" + m.cu + "'");
            } else if (cu->kind != ElementKind::Cu) {
                sink.error(loc + "/cu", Errc::InvariantViolation,
                           "'" + m.cu + "' is not a CU element");
            } else if (d.find_network(cu->network) != nullptr &&
                       d.find_network(cu->network)->role != NetworkRole::Home) {
                sink.error(loc + "/cu", Errc::InvariantViolation,
                           "a split2 CU must belong to the home network");
            }
        }
        if (!m.attach.target.empty()) {
            const bool declared = d.find_element(m.attach.target) != nullptr;
            const bool other_du = onboard.contains(m.attach.target) &&
                                  m.attach.target.ends_with(".du") &&
                                  m.attach.target != m.id + ".du";
            if (!declared && !other_du) {
                sink.error(loc + "/attach/target", Errc::UnresolvedReference,
                           "unknown attach target '" + m.attach.target + "'");
            }
        }
    }
    for (size_t i = 0; i < d.ues.size(); ++i) {
        const auto& u = d.ues[i];
        if (u.trace && d.find_trace(*u.trace) == nullptr) {
            sink.error("/ues/" + std::to_string(i) + "/trace", Errc::UnresolvedReference,
                       "unknown trace '" + *u.trace + "'");
        }
    }
    for (const auto& [id, _] : d.radio.overrides) {
        if (!path_ids.contains(id)) {
            sink.error("/radio/overrides/" + id, Errc::UnresolvedReference,
                       "radio override targets unknown element '" + id + "'");
        }
    }
    for (size_t i = 0; i < d.faults.size(); ++i) {
        const auto& fd = d.faults[i];
        const std::string loc = "/faults/" + std::to_string(i) + "/target";
        const bool is_link = d.find_link(fd.target) != nullptr;
        const bool is_mc = d.find_mobile_cell(fd.target) != nullptr;
        if (fd.action == FaultAction::Deploy || fd.action == FaultAction::Retract) {
            if (!is_mc) {
                sink.error(loc, Errc::UnresolvedReference,
                           "deploy/retract targets a mobile cell; '" + fd.target + "' is not one");
            }
        } else if (!is_link && !is_mc) {
            sink.error(loc, Errc::UnresolvedReference,
                       "unknown link or mobile cell '" + fd.target + "'");
        }
    }

    if (sink.has_error) return outcome;

    // Canonical ordering.
    auto by_id = [](const auto& a, const auto& b) { return a.id < b.id; };
    std::sort(d.networks.begin(), d.networks.end(), by_id);
    std::sort(d.elements.begin(), d.elements.end(), by_id);
    std::sort(d.links.begin(), d.links.end(), by_id);
    std::sort(d.mobile_cells.begin(), d.mobile_cells.end(), by_id);
    std::sort(d.ues.begin(), d.ues.end(), by_id);
    std::sort(d.traces.begin(), d.traces.end(),
              [](const auto& a, const auto& b) { return a.trace_id < b.trace_id; });
    std::sort(d.faults.begin(), d.faults.end(), [](const FaultDecl& a, const FaultDecl& b) {
        return std::tie(a.time_s, a.action, a.target) < std::tie(b.time_s, b.action, b.target);
    });

    outcome.description = std::move(d);
    return outcome;
}

ParseOutcome parse_scenario_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        ParseOutcome outcome;
        outcome.findings.push_back(
            {"error", "", std::string(errc_name(Errc::SyntaxError)), "cannot open " + path});
        return outcome;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_scenario(ss.str());
}

std::string serialize(const ScenarioDescription& d) {
    json root;
    root["metadata"] = {{"name", d.metadata.name},
                        {"seed", d.metadata.seed},
                        {"end_time_s", d.metadata.end_time_s},
                        {"sample_period_s", d.metadata.sample_period_s}};

    json nets = json::array();
    for (const auto& n : d.networks) {
        nets.push_back({{"id", n.id}, {"role", n.role == NetworkRole::Home ? "home" : "overlay"}});
    }
    root["networks"] = std::move(nets);

    json els = json::array();
    for (const auto& e : d.elements) {
        json je = {{"id", e.id},
                   {"kind", element_kind_name(e.kind)},
                   {"network", e.network},
                   {"position_m", {e.position_m.x, e.position_m.y}}};
        if (e.iab_donor_du) je["iab_donor_du"] = true;
        els.push_back(std::move(je));
    }
    root["elements"] = std::move(els);

    json links = json::array();
    for (const auto& l : d.links) {
        links.push_back({{"id", l.id},
                         {"a", l.a},
                         {"b", l.b},
                         {"role", link_role_name(l.role)},
                         {"one_way_latency_s", l.one_way_latency_s},
                         {"capacity_bps", l.capacity_bps}});
    }
    root["links"] = std::move(links);

    json mcs = json::array();
    for (const auto& m : d.mobile_cells) {
        json jm = {{"id", m.id},
                   {"arch", mc_arch_name(m.arch)},
                   {"bap_capable", m.bap_capable},
                   {"trace", m.trace},
                   {"attach", {{"target", m.attach.target}, {"mode", attach_mode_name(m.attach.mode)}}},
                   {"offered_user_rate_bps", m.offered_user_rate_bps}};
        if (!m.cu.empty()) jm["cu"] = m.cu;
        mcs.push_back(std::move(jm));
    }
    root["mobile_cells"] = std::move(mcs);

    json traces = json::array();
    for (const auto& t : d.traces) {
        json jt = {{"id", t.trace_id}};
        if (const auto* wm = std::get_if<mobility::WaypointsMode>(&t.mode)) {
            jt["mode"] = "waypoints";
            json wps = json::array();
            for (const auto& w : wm->waypoints) {
                wps.push_back({w.time_s, w.position_m.x, w.position_m.y});
            }
            jt["waypoints"] = std::move(wps);
            if (t.loop) jt["loop"] = true;
        } else {
            const auto& nm = std::get<mobility::NomadicMode>(t.mode);
            jt["mode"] = "nomadic";
            jt["position_m"] = {nm.position_m.x, nm.position_m.y};
            jt["deploy_time_s"] = nm.deploy_time_s;
        }
        traces.push_back(std::move(jt));
    }
    root["traces"] = std::move(traces);

    json rc;
    rc["path_loss"] = {{"pl0_db", d.radio.path_loss.pl0_db},
                       {"d0_m", d.radio.path_loss.d0_m},
                       {"exponent_n", d.radio.path_loss.exponent_n}};
    rc["max_spectral_efficiency_bps_hz"] = d.radio.max_spectral_efficiency;
    if (!d.radio.defaults.empty()) {
        json defs;
        for (const auto& [kind, o] : d.radio.defaults) {
            defs[element_kind_name(kind)] = radio_override_to_json(o);
        }
        rc["defaults"] = std::move(defs);
    }
    if (!d.radio.overrides.empty()) {
        json ovr;
        for (const auto& [id, o] : d.radio.overrides) ovr[id] = radio_override_to_json(o);
        rc["overrides"] = std::move(ovr);
    }
    root["radio"] = std::move(rc);

    json st;
    for (const auto& [id, req] : d.split_table.entries()) {
        json jr = {{"max_one_way_latency_s", req.max_one_way_latency_s}};
        if (const auto* p = std::get_if<splits::ProportionalBandwidth>(&req.bandwidth)) {
            jr["bandwidth"] = {{"model", "proportional"}, {"factor", p->factor}};
        } else {
            jr["bandwidth"] = {{"model", "constant"},
                               {"bps", std::get<splits::ConstantBandwidth>(req.bandwidth).bps}};
        }
        st[splits::split_option_name(id)] = std::move(jr);
    }
    root["split_table"] = std::move(st);

    json ues = json::array();
    for (const auto& u : d.ues) {
        json ju = {{"id", u.id}};
        if (u.position_m) ju["position_m"] = {u.position_m->x, u.position_m->y};
        if (u.trace) ju["trace"] = *u.trace;
        ues.push_back(std::move(ju));
    }
    root["ues"] = std::move(ues);

    if (d.grid) {
        root["grid"] = {{"x0_m", d.grid->x0_m},
                        {"y0_m", d.grid->y0_m},
                        {"x1_m", d.grid->x1_m},
                        {"y1_m", d.grid->y1_m},
                        {"resolution_m", d.grid->resolution_m}};
    }

    json faults = json::array();
    for (const auto& fd : d.faults) {
        faults.push_back(
            {{"time_s", fd.time_s}, {"action", fault_action_name(fd.action)}, {"target", fd.target}});
    }
    root["faults"] = std::move(faults);

    return root.dump(2) + "\n";
}

}  // namespace mcsim::scenario
