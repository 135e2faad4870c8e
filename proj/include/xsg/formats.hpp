#ifndef XSG_FORMATS_HPP
#define XSG_FORMATS_HPP

#include <string>
#include <string_view>

#include "xsg/crossed_set.hpp"
#include "xsg/dagger_category.hpp"
#include "xsg/fin_group.hpp"

namespace xsg {

/// Line-oriented group file:
///   group <name>
///   elements <e0> <e1> ...
///   mul <row of |G| element names>        (one row per element, row g
///                                          column h holding g.h)
/// Throws parse_error (with the offending line) on malformed input or when
/// the table fails the group axioms.
FinGroup parse_group(std::string_view text);

/// Line-oriented category file:
///   category <name>
///   objects <x> <y> ...
///   mor <name> <src> <tgt>
///   id <object> <morphism>
///   comp <f> <g> <h>          (f-then-g equals h)
///   dagger <f> <g>
/// The parsed category must satisfy the category and dagger axioms.
DaggerCategory parse_category(std::string_view text);

/// Serialised crossed set, parseable by parse_crossed_set.
std::string to_text(const CrossedSet& X);

/// Reads a serialised crossed set; shape-checks the tables but does not
/// re-validate the crossed relations (that is `verify`'s job).
CrossedSet parse_crossed_set(std::string_view text);

} // namespace xsg

#endif
