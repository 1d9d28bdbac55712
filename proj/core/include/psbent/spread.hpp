#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "psbent/field.hpp"
#include "psbent/quasifield.hpp"

namespace psbent {

/// A point (x, y) of GF(2^m) x GF(2^m), indexed as (y << m) | x.
struct Point {
  Elem x = 0;
  Elem y = 0;

  std::uint32_t index(unsigned m) const { return (y << m) | x; }
  static Point from_index(std::uint32_t index, unsigned m) { return {index & ((1u << m) - 1), index >> m}; }

  friend bool operator==(const Point&, const Point&) = default;
};

/// Slope of a spread component: a field element or infinity. Infinity is a
/// separate tag, never an element value.
class Slope {
 public:
  static Slope finite(Elem a) { return Slope(a, false); }
  static Slope infinity() { return Slope(0, true); }

  bool is_infinity() const { return infinite_; }
  /// Throws InvalidParameter for the infinite slope.
  Elem value() const;
  /// Lowercase hex, or "inf".
  std::string to_string() const;

  friend bool operator==(const Slope&, const Slope&) = default;

 private:
  Slope(Elem a, bool infinite) : value_(a), infinite_(infinite) {}
  Elem value_;
  bool infinite_;
};

/// The 2^m + 1 components E_a = {(x, a <> x)} and E_inf = {(0, y)}, each
/// stored as a sorted vector of point indices.
class Spread {
 public:
  /// Components in slope order 0, 1, ..., 2^m - 1, then infinity.
  Spread(unsigned m, std::vector<std::vector<std::uint32_t>> components, std::string source);

  unsigned degree() const { return m_; }
  const std::string& source() const { return source_; }
  std::size_t size() const { return components_.size(); }

  const std::vector<std::uint32_t>& component(Slope s) const;
  const std::vector<std::vector<std::uint32_t>>& components() const { return components_; }
  static Slope slope_at(std::size_t position, unsigned m);

 private:
  unsigned m_;
  std::vector<std::vector<std::uint32_t>> components_;
  std::string source_;
};

Spread build_spread(const Quasifield& q);

struct SpreadReport {
  bool component_count_ok = true;  // 2^m + 1 components
  bool sizes_ok = true;            // each of size 2^m, containing the origin
  bool closure_ok = true;          // each closed under addition
  bool trivial_intersections = true;
  bool covers_space = true;
  bool counting_identity = true;   // (2^m + 1)(2^m - 1) + 1 = 2^{2m}
  std::vector<std::string> failures;

  bool passed() const {
    return component_count_ok && sizes_ok && closure_ok && trivial_intersections && covers_space &&
           counting_identity;
  }
};

SpreadReport verify_spread(const Spread& spread);

/// The unique component containing p. Throws InvalidParameter for the
/// origin (it lies in every component) and ConsistencyFailure when p lies in
/// zero or several components.
Slope slope_of(const Spread& spread, Point p);

/// One line per component: `slope_hex: point_index_hex,...`, slope "inf" last.
void write_spread_dump(std::ostream& out, const Spread& spread);

}  // namespace psbent
