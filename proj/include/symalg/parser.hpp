#pragma once

#include <optional>
#include <string>

#include "symalg/mpoly.hpp"

namespace symalg {

/// Parses a polynomial expression into an MPoly.
///
/// Grammar:
///   poly     := ("+" | "-")? term (("+" | "-") term)*
///   term     := factor ("*" factor)*
///   factor   := base ("^" nat)?
///   base     := rational | var | "(" poly ")"
///   var      := "x" nat | "x" | "y" | "z"
///   rational := nat ("/" nat)?
///
/// x, y, z alias x1, x2, x3 and are only valid when the arity is at most 3.
/// Implicit multiplication is not supported. When arity is absent it is
/// inferred as the maximum variable index used; when present it must cover
/// every index (ArityError otherwise). Syntax errors raise ParseError with
/// line/column.
MPoly parse_poly(const std::string& src,
                 std::optional<std::size_t> arity = std::nullopt);

}  // namespace symalg
