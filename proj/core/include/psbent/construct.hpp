#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "psbent/boolfun.hpp"
#include "psbent/quasifield.hpp"
#include "psbent/spread.hpp"

namespace psbent {

/// A balanced g : GF(2^m) -> F2 with g(0) = 0, stored as a 2^m-entry table
/// over the integer encoding of field elements.
class Selector {
 public:
  /// g(a) = 1 iff a is in slopes. Throws WrongCardinality unless
  /// |slopes| = 2^(m-1), ZeroInSupport if 0 is listed, and InvalidParameter
  /// for repeated or out-of-range slopes.
  static Selector from_support(unsigned m, std::span<const Elem> slopes);
  /// A uniformly random 2^(m-1)-subset of the nonzero elements, determined by seed.
  static Selector random(unsigned m, std::uint64_t seed);

  unsigned degree() const { return m_; }
  bool operator()(Elem a) const { return table_[a] != 0; }
  const std::vector<std::uint8_t>& table() const { return table_; }
  /// Sorted support.
  std::vector<Elem> support() const;

  friend bool operator==(const Selector&, const Selector&) = default;

 private:
  Selector(unsigned m, std::vector<std::uint8_t> table) : m_(m), table_(std::move(table)) {}
  unsigned m_;
  std::vector<std::uint8_t> table_;
};

/// f(x, y) = g(<>y/x) for an arbitrary table g (no balance requirement and
/// no certification). `division` is indexed by (y << m) | x as produced by
/// division_table().
TruthTable compose_with_division(std::span<const Elem> division, unsigned m, std::span<const std::uint8_t> g);

/// The PS- function f(x, y) = g(<>y/x). With certify set, the result is
/// checked with is_bent and BentCertificationFailed is thrown on failure.
TruthTable ps_minus(const Quasifield& q, const Selector& g, bool certify = true);
/// The same from a precomputed division table.
TruthTable ps_minus(std::span<const Elem> division, const Selector& g, bool certify = true);

/// Sum mod 2 of the indicators of the components with the given slopes.
/// Slope constraints are those of Selector::from_support.
TruthTable ps_from_components(const Spread& spread, std::span<const Elem> slopes);

/// f + 1.
TruthTable ps_plus(const TruthTable& f);

}  // namespace psbent
