#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace petsql {

// SHA-256 of the input, returned as lowercase hex.
std::string sha256_hex(std::string_view data);

// FNV-1a 64-bit hash. Used to derive deterministic sub-seeds, not for security.
std::uint64_t fnv1a64(std::string_view data);

} // namespace petsql
