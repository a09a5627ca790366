#pragma once

#include <string>
#include <string_view>

#include "ccs/core/pseudo_configuration.hpp"

namespace ccs {

/// `.ccs` text:
///
///   <n>
///   <C(n,3) characters of '+' / '-', triples in lex order>
///   coords: x0,y0 x1,y1 ...          (optional)
///
/// Coordinates are integers or fractions "p/q". Blank lines and trailing
/// whitespace are ignored.
///
/// Throws SyntaxError (1-based line and column) on malformed text, and
/// AxiomViolation unless `unchecked`. Given coordinates must reproduce the
/// sign line.
PseudoConfiguration parse_ccs(std::string_view text, bool unchecked = false);

/// Inverse of parse_ccs; ends with a newline.
std::string serialize_ccs(const PseudoConfiguration& cfg);

}  // namespace ccs
