#pragma once

#include <string>
#include <string_view>

#include "gwtower/tower.hpp"

namespace gwt {

/// Parses a tower description. One directive per line; '#' starts a comment.
///
///   alt 36 product          level entry: family parameter action
///   psl2 19 imprimitive     families: alt, psl2; actions: product, imprimitive
///   tail: constant          or "tail: periodic <period>"
///   horizon: 20             defaults to the number of level entries
///
/// The action of the first entry is accepted but unused. Errors are thrown as
/// InvalidInput with "line N, field F: ..." diagnostics.
TowerSpec parse_tower_spec(std::string_view document);

// Canonical text form; parse_tower_spec(format_tower_spec(s)) == s.
std::string format_tower_spec(const TowerSpec& spec);

SimpleGroupId parse_simple_group(std::string_view family, std::string_view parameter);
ActionKind parse_action(std::string_view word);

}  // namespace gwt
