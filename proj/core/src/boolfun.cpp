#include "psbent/boolfun.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>

#include "psbent/errors.hpp"

namespace psbent {

namespace {

// Masks selecting the bits whose index has bit i clear, for the in-word Moebius steps.
constexpr std::uint64_t kLowHalf[6] = {
    0x5555555555555555ULL, 0x3333333333333333ULL, 0x0f0f0f0f0f0f0f0fULL,
    0x00ff00ff00ff00ffULL, 0x0000ffff0000ffffULL, 0x00000000ffffffffULL,
};

int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

void parse_header_line(std::string_view line, std::map<std::string, std::string>& header) {
  line.remove_prefix(1);  // '#'
  std::istringstream tokens{std::string(line)};
  std::string token;
  while (tokens >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos || eq == 0) continue;
    header[token.substr(0, eq)] = token.substr(eq + 1);
  }
}

}  // namespace

TruthTable::TruthTable(unsigned n) : n_(n) {
  if (n > kMaxVariables) {
    throw InvalidParameter("truth tables are limited to " + std::to_string(kMaxVariables) + " variables, got " +
                           std::to_string(n));
  }
  words_.assign(((std::size_t{1} << n) + 63) / 64, 0);
}

std::uint64_t TruthTable::tail_mask() const {
  if (n_ >= 6) return ~std::uint64_t{0};
  return (std::uint64_t{1} << (std::size_t{1} << n_)) - 1;
}

std::size_t weight(const TruthTable& f) {
  std::size_t w = 0;
  for (std::uint64_t word : f.words()) w += static_cast<std::size_t>(std::popcount(word));
  return w;
}

bool is_balanced(const TruthTable& f) { return 2 * weight(f) == f.size(); }

TruthTable complement(const TruthTable& f) {
  TruthTable g = f;
  for (auto& word : g.words()) word = ~word;
  g.words().back() &= g.tail_mask();
  return g;
}

std::vector<std::int32_t> walsh_spectrum(const TruthTable& f) {
  const std::size_t size = f.size();
  std::vector<std::int32_t> w(size);
  for (std::size_t i = 0; i < size; ++i) w[i] = f[i] ? -1 : 1;
  for (std::size_t h = 1; h < size; h <<= 1) {
    for (std::size_t i = 0; i < size; i += 2 * h) {
      std::int32_t* lo = w.data() + i;
      std::int32_t* hi = lo + h;
      for (std::size_t j = 0; j < h; ++j) {
        const std::int32_t a = lo[j];
        const std::int32_t b = hi[j];
        lo[j] = a + b;
        hi[j] = a - b;
      }
    }
  }
  return w;
}

std::int64_t walsh_at_trace(const TruthTable& f, const Field& field, Elem u, Elem v) {
  const unsigned m = field.degree();
  if (f.variables() != 2 * m) {
    throw InvalidParameter("walsh_at_trace needs a function of " + std::to_string(2 * m) + " variables, got " +
                           std::to_string(f.variables()));
  }
  if (!field.contains(u) || !field.contains(v)) throw InvalidParameter("walsh_at_trace: u, v must be field elements");
  const std::size_t q = field.size();
  std::vector<unsigned char> tu(q), tv(q);
  for (Elem x = 0; x < q; ++x) {
    tu[x] = static_cast<unsigned char>(field.trace(field.mul(u, x)));
    tv[x] = static_cast<unsigned char>(field.trace(field.mul(v, x)));
  }
  std::int64_t sum = 0;
  for (Elem y = 0; y < q; ++y) {
    for (Elem x = 0; x < q; ++x) {
      const unsigned bit = static_cast<unsigned>(f[(std::size_t{y} << m) | x]) ^ tu[x] ^ tv[y];
      sum += bit ? -1 : 1;
    }
  }
  return sum;
}

bool is_bent_spectrum(std::span<const std::int32_t> spectrum, unsigned n) {
  if (n % 2 != 0) throw InvalidParameter("bentness needs an even number of variables, got " + std::to_string(n));
  const std::int32_t target = std::int32_t{1} << (n / 2);
  for (std::int32_t value : spectrum) {
    if (value != target && value != -target) return false;
  }
  return true;
}

bool is_bent(const TruthTable& f) {
  if (f.variables() % 2 != 0) {
    throw InvalidParameter("bentness needs an even number of variables, got " + std::to_string(f.variables()));
  }
  const auto spectrum = walsh_spectrum(f);
  return is_bent_spectrum(spectrum, f.variables());
}

std::map<std::int32_t, std::uint64_t> spectrum_summary(std::span<const std::int32_t> spectrum) {
  std::map<std::int32_t, std::uint64_t> counts;
  for (std::int32_t value : spectrum) ++counts[value];
  return counts;
}

TruthTable anf(const TruthTable& f) {
  TruthTable g = f;
  auto& words = g.words();
  const unsigned in_word = f.variables() < 6 ? f.variables() : 6;
  for (unsigned i = 0; i < in_word; ++i) {
    const unsigned shift = 1u << i;
    for (auto& word : words) word ^= (word & kLowHalf[i]) << shift;
  }
  for (std::size_t h = 1; h < words.size(); h <<= 1) {
    for (std::size_t i = 0; i < words.size(); i += 2 * h) {
      for (std::size_t j = 0; j < h; ++j) words[i + h + j] ^= words[i + j];
    }
  }
  return g;
}

unsigned degree(const TruthTable& f) {
  const TruthTable a = anf(f);
  unsigned best = 0;
  const auto& words = a.words();
  for (std::size_t w = 0; w < words.size(); ++w) {
    std::uint64_t word = words[w];
    while (word != 0) {
      const unsigned bit = static_cast<unsigned>(std::countr_zero(word));
      word &= word - 1;
      const std::size_t index = (w << 6) | bit;
      best = std::max(best, static_cast<unsigned>(std::popcount(index)));
    }
  }
  return best;
}

std::string to_hex_body(const TruthTable& f) {
  static constexpr char kDigits[] = "0123456789abcdef";
  const std::size_t bytes = (f.size() + 7) / 8;
  std::string out;
  out.reserve(2 * bytes);
  for (std::size_t j = 0; j < bytes; ++j) {
    const unsigned byte = static_cast<unsigned>((f.words()[j / 8] >> (8 * (j % 8))) & 0xff);
    out.push_back(kDigits[byte >> 4]);
    out.push_back(kDigits[byte & 15]);
  }
  return out;
}

void write_truth_table(std::ostream& out, const TruthTable& f, std::string_view header) {
  if (!header.empty()) out << "# " << header << '\n';
  out << to_hex_body(f) << '\n';
}

TruthTableFile read_truth_table(std::istream& in) {
  std::map<std::string, std::string> header;
  std::string body;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.pop_back();
    if (line.empty()) continue;
    if (line.front() == '#') {
      if (!body.empty()) throw InvalidParameter("truth table: comment line after the hex body");
      parse_header_line(line, header);
      continue;
    }
    if (!body.empty()) throw InvalidParameter("truth table: the hex body must be a single line");
    body = line;
  }
  if (body.empty()) throw InvalidParameter("truth table: no hex body found");
  if (body.size() % 2 != 0) throw InvalidParameter("truth table: odd number of hex digits");
  const std::size_t bytes = body.size() / 2;

  unsigned n = 0;
  if (bytes == 1) {
    // One byte holds up to 8 entries; the header disambiguates smaller tables.
    n = 3;
    if (auto it = header.find("m"); it != header.end()) {
      const long m = std::strtol(it->second.c_str(), nullptr, 10);
      if (m == 1) n = 2;
    }
  } else {
    if (!std::has_single_bit(bytes)) throw InvalidParameter("truth table: length is not a power of two");
    n = static_cast<unsigned>(std::countr_zero(bytes)) + 3;
  }
  if (n > kMaxVariables) throw InvalidParameter("truth table: more than 2^26 entries");

  TruthTable table(n);
  for (std::size_t j = 0; j < bytes; ++j) {
    const int hi = hex_digit(body[2 * j]);
    const int lo = hex_digit(body[2 * j + 1]);
    if (hi < 0 || lo < 0) {
      throw InvalidParameter("truth table: invalid hex digit near offset " + std::to_string(2 * j));
    }
    const std::uint64_t byte = static_cast<std::uint64_t>((hi << 4) | lo);
    table.words()[j / 8] |= byte << (8 * (j % 8));
  }
  if ((table.words().back() & ~table.tail_mask()) != 0) {
    throw InvalidParameter("truth table: bits set beyond the table length");
  }
  if (auto it = header.find("m"); it != header.end()) {
    const std::string expected = std::to_string(n / 2);
    if (n % 2 != 0 || it->second != expected) {
      throw InvalidParameter("truth table: header m=" + it->second + " does not match a table of " +
                             std::to_string(table.size()) + " entries");
    }
  }
  return {std::move(table), std::move(header)};
}

}  // namespace psbent
