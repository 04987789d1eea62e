#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace petsql {

std::string to_lower(std::string_view s);

// Strips leading/trailing ASCII whitespace.
std::string trim(std::string_view s);

// Number of whitespace-delimited tokens.
std::size_t whitespace_token_count(std::string_view s);

bool iequals(std::string_view a, std::string_view b);

// Splits on any of the given delimiter characters; empty pieces skipped.
std::vector<std::string> split(std::string_view s, char delim);

} // namespace petsql
