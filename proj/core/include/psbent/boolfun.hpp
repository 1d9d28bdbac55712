#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "psbent/field.hpp"

namespace psbent {

inline constexpr unsigned kMaxVariables = 26;

/// A Boolean function on n variables, bit i = f(i), packed into 64-bit words.
/// For bivariate functions on GF(2^m)^2 the index of (x, y) is (y << m) | x.
class TruthTable {
 public:
  /// The constant-zero function. Throws InvalidParameter for n > 26.
  explicit TruthTable(unsigned n);

  template <class F>
  static TruthTable from_function(unsigned n, F&& f) {
    TruthTable t(n);
    for (std::size_t i = 0; i < t.size(); ++i) t.set(i, static_cast<bool>(f(i)));
    return t;
  }

  unsigned variables() const { return n_; }
  std::size_t size() const { return std::size_t{1} << n_; }

  bool operator[](std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool v) {
    const std::uint64_t bit = std::uint64_t{1} << (i & 63);
    if (v) {
      words_[i >> 6] |= bit;
    } else {
      words_[i >> 6] &= ~bit;
    }
  }
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  const std::vector<std::uint64_t>& words() const { return words_; }
  std::vector<std::uint64_t>& words() { return words_; }
  /// Mask of the valid bits in the last word.
  std::uint64_t tail_mask() const;

  friend bool operator==(const TruthTable&, const TruthTable&) = default;

 private:
  unsigned n_;
  std::vector<std::uint64_t> words_;
};

std::size_t weight(const TruthTable& f);
bool is_balanced(const TruthTable& f);
TruthTable complement(const TruthTable& f);

/// W(w) = sum_x (-1)^(f(x) + <w, x>) with the coordinate dot product, by the
/// fast Walsh-Hadamard transform.
std::vector<std::int32_t> walsh_spectrum(const TruthTable& f);

/// W(u, v) = sum_{x, y} (-1)^(f(x, y) + tr(u x + v y)) by direct summation.
/// Requires f.variables() == 2 * field.degree().
std::int64_t walsh_at_trace(const TruthTable& f, const Field& field, Elem u, Elem v);

/// |W(w)| = 2^(n/2) for every w. Throws InvalidParameter for odd n.
bool is_bent(const TruthTable& f);
bool is_bent_spectrum(std::span<const std::int32_t> spectrum, unsigned n);

/// Walsh value -> multiplicity.
std::map<std::int32_t, std::uint64_t> spectrum_summary(std::span<const std::int32_t> spectrum);

/// Algebraic normal form via the binary Moebius transform (an involution).
TruthTable anf(const TruthTable& f);
/// Largest Hamming weight of a monomial index with a nonzero ANF coefficient;
/// 0 for the zero function.
unsigned degree(const TruthTable& f);

// ---------------------------------------------------------------------------
// File format: optional leading comment lines starting with '#', then raw
// lowercase hex with byte j carrying f(8j) .. f(8j + 7) in bits 0..7.

struct TruthTableFile {
  TruthTable table;
  /// key=value pairs parsed from '#' comment lines, e.g. m, family, params.
  std::map<std::string, std::string> header;
};

/// Writes the optional `# <header>` line followed by the hex body with no
/// trailing whitespace.
void write_truth_table(std::ostream& out, const TruthTable& f, std::string_view header = {});
/// Throws InvalidParameter on malformed input.
TruthTableFile read_truth_table(std::istream& in);

std::string to_hex_body(const TruthTable& f);

}  // namespace psbent
