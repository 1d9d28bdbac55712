#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace psbent {

/// Lowercase hex without prefix, e.g. 0x1b -> "1b".
std::string to_hex(std::uint64_t v);

/// Parses lowercase or uppercase hex with an optional 0x prefix.
/// Throws InvalidParameter naming `what` on malformed input or overflow.
std::uint64_t parse_hex(std::string_view text, std::string_view what);

}  // namespace psbent
