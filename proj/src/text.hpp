#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace ringjsa::detail {

std::string trim(std::string_view s);
/// Splits on commas; no quoting (all fields are numeric or plain labels).
std::vector<std::string> split_csv(std::string_view line);
/// Parses a full field as a double ("nan" accepted); throws ParseError naming line and field.
double parse_double(std::string_view field, std::size_t line, std::size_t column);

}  // namespace ringjsa::detail
