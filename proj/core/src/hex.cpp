#include "psbent/hex.hpp"

#include <charconv>

#include "psbent/errors.hpp"

namespace psbent {

std::string to_hex(std::uint64_t v) {
  char buf[17];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v, 16);
  return std::string(buf, end);
}

std::uint64_t parse_hex(std::string_view text, std::string_view what) {
  if (text.starts_with("0x") || text.starts_with("0X")) text.remove_prefix(2);
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v, 16);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw InvalidParameter(std::string(what) + ": expected a hex value, got '" + std::string(text) + "'");
  }
  return v;
}

}  // namespace psbent
