#pragma once

#include <istream>
#include <string>
#include <string_view>

#include "ctx/system.hpp"

namespace ctx {

/// Reads the JSON system document. Probabilities are taken as exact
/// rationals; assignments not listed get probability 0. Structural problems
/// (syntax, unknown content, duplicate ids, bad literals) throw
/// Error{ErrorKind::Parse}. Probability-level problems such as a total of 9/8
/// are left for validate().
System parse_system(std::string_view text);
System parse_system(std::istream& in);

/// Canonical document: contents and contexts in declaration order, nonzero
/// assignments only, ordered lexicographically with -1 before +1, rationals
/// in lowest terms, two-space indentation, trailing newline.
std::string serialize_system(const System& sys);

}  // namespace ctx
