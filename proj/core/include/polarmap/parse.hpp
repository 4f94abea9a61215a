#pragma once

#include <string>
#include <string_view>

#include "polarmap/form.hpp"

namespace polarmap {

/// Parses a ternary form over Q.
///
/// Variables are `x|y|z` or `x0|x1|x2`; a term is an optional integer or
/// `p/q` coefficient followed by factors `v` or `v^e` joined by `*` (adjacent
/// factors without `*` are accepted too); terms are joined by `+`/`-`.
/// Whitespace is ignored. Throws ParseError (with byte position) on syntax
/// errors and NonHomogeneousError when two terms have different degrees.
TernaryForm parse_form(std::string_view text);

/// Drops `#` comments and joins the remaining lines, as used for `@file`
/// arguments.
std::string strip_comments(std::string_view text);

}  // namespace polarmap
