#include "mcsim/net_types.hpp"

#include "mcsim/errors.hpp"

namespace mcsim {

std::string_view errc_name(Errc c) {
    switch (c) {
        case Errc::DanglingReference: return "dangling_reference";
        case Errc::InvariantViolation: return "invariant_violation";
        case Errc::MissingCore: return "missing_core";
        case Errc::BapRequired: return "bap_required";
        case Errc::NotADonor: return "not_a_donor";
        case Errc::NotAttached: return "not_attached";
        case Errc::PartitionedTopology: return "partitioned_topology";
        case Errc::UnknownOption: return "unknown_option";
        case Errc::MissingTableEntry: return "missing_table_entry";
        case Errc::Orphan: return "orphan";
        case Errc::PrerequisiteMissing: return "prerequisite_missing";
        case Errc::LinkDownOnPath: return "link_down_on_path";
        case Errc::UnknownUe: return "unknown_ue";
        case Errc::SyntaxError: return "syntax_error";
        case Errc::UnknownField: return "unknown_field";
        case Errc::UnresolvedReference: return "unresolved_reference";
        case Errc::RangeError: return "range_error";
    }
    return "?";
}

std::string element_kind_name(ElementKind k) {
    switch (k) {
        case ElementKind::CoreControl: return "core_control";
        case ElementKind::Upf: return "upf";
        case ElementKind::Cu: return "cu";
        case ElementKind::Du: return "du";
        case ElementKind::Ru: return "ru";
        case ElementKind::MonolithicGnb: return "monolithic_gnb";
        case ElementKind::Mt: return "mt";
        case ElementKind::Ue: return "ue";
    }
    return "?";
}

Result<ElementKind> parse_element_kind(const std::string& name) {
    if (name == "core_control") return ElementKind::CoreControl;
    if (name == "upf") return ElementKind::Upf;
    if (name == "cu") return ElementKind::Cu;
    if (name == "du") return ElementKind::Du;
    if (name == "ru") return ElementKind::Ru;
    if (name == "monolithic_gnb") return ElementKind::MonolithicGnb;
    if (name == "mt") return ElementKind::Mt;
    if (name == "ue") return ElementKind::Ue;
    return Error{Errc::SyntaxError, "unknown element kind '" + name + "'"};
}

bool kind_requires_radio(ElementKind k) {
    return k == ElementKind::Ru || k == ElementKind::MonolithicGnb || k == ElementKind::Mt ||
           k == ElementKind::Ue;
}

bool kind_forbids_radio(ElementKind k) {
    return k == ElementKind::Cu || k == ElementKind::Upf || k == ElementKind::CoreControl;
}

std::string link_role_name(LinkRole r) {
    switch (r) {
        case LinkRole::F1: return "f1";
        case LinkRole::NgBackhaul: return "ng_backhaul";
        case LinkRole::AccessAir: return "access_air";
        case LinkRole::BackhaulAir: return "backhaul_air";
        case LinkRole::InternalBus: return "internal_bus";
    }
    return "?";
}

Result<LinkRole> parse_link_role(const std::string& name) {
    if (name == "f1") return LinkRole::F1;
    if (name == "ng_backhaul") return LinkRole::NgBackhaul;
    if (name == "access_air") return LinkRole::AccessAir;
    if (name == "backhaul_air") return LinkRole::BackhaulAir;
    if (name == "internal_bus") return LinkRole::InternalBus;
    return Error{Errc::SyntaxError, "unknown link role '" + name + "'"};
}

}  // namespace mcsim
