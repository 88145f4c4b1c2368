#pragma once

#include <string>

#include "mcsim/errors.hpp"

namespace mcsim {

/// Kinds of network elements. CoreControl is the AMF/SMF procedure endpoint
/// collapsed into one element; Upf anchors user traffic.
enum class ElementKind { CoreControl, Upf, Cu, Du, Ru, MonolithicGnb, Mt, Ue };

std::string element_kind_name(ElementKind k);
Result<ElementKind> parse_element_kind(const std::string& name);

/// True for kinds that always carry an air interface.
bool kind_requires_radio(ElementKind k);
/// True for kinds that never carry an air interface.
bool kind_forbids_radio(ElementKind k);

enum class LinkRole { F1, NgBackhaul, AccessAir, BackhaulAir, InternalBus };

std::string link_role_name(LinkRole r);
Result<LinkRole> parse_link_role(const std::string& name);

}  // namespace mcsim
