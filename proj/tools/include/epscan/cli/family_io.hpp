#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "epscan/family.hpp"

namespace epscan::cli {

/// Parses `{ "n": int, "A": [[...]], "B": [[...]], "name": str? }` with entries
/// given as integers or rational strings. Syntax errors report line and column.
AffineFamily parse_family(std::string_view json_text, std::string_view source = "<input>");

/// A named preset ("paper") or a path to a family file.
AffineFamily load_family(const std::string& source);

/// Exact rational from "p/q", an integer or a decimal (converted by digits).
Rational parse_beta(std::string_view text);

}  // namespace epscan::cli
