#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

namespace hooleyff::cli {

/// Parses the TOML subset used by experiment configs into JSON:
///   - comments, bare and quoted keys, dotted keys
///   - [table] and [[array.of.tables]] headers
///   - basic "strings" (\" \\ \n \t escapes) and 'literal strings'
///   - integers (with _ separators), floats, booleans
///   - arrays (nested, multi-line, trailing comma) and inline tables
/// Dates, multi-line strings and hex/octal literals are rejected.
/// Throws Error(ConfigParse) with a line number.
nlohmann::json parse_toml(std::string_view text);

}  // namespace hooleyff::cli
