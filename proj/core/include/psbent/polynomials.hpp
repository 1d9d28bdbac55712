#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "psbent/field.hpp"

namespace psbent {

/// Square matrix over F2 with at most 32 rows, stored column-wise:
/// bit r of column c is entry (r, c).
class BitMatrix {
 public:
  explicit BitMatrix(unsigned dim) : cols_(dim, 0) {}
  explicit BitMatrix(std::vector<std::uint32_t> cols) : cols_(std::move(cols)) {}

  static BitMatrix identity(unsigned dim);

  unsigned dim() const { return static_cast<unsigned>(cols_.size()); }
  std::uint32_t column(unsigned c) const { return cols_[c]; }
  bool at(unsigned r, unsigned c) const { return (cols_[c] >> r) & 1u; }

  /// Matrix-vector product, the vector given as a bit mask.
  std::uint32_t apply(std::uint32_t v) const;
  unsigned rank() const;
  /// Gauss-Jordan inverse, or nullopt when singular.
  std::optional<BitMatrix> inverse() const;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::vector<std::uint32_t> cols_;
};

/// F2-linear map z -> sum_{i<m} c_i z^(2^i) on GF(2^m).
class LinearizedMap {
 public:
  /// `coeffs` must hold exactly m field elements.
  LinearizedMap(Field field, std::vector<Elem> coeffs);

  static LinearizedMap identity(const Field& field);
  /// z -> z^(2^i).
  static LinearizedMap frobenius(const Field& field, unsigned i);
  /// z -> tr(z), all coefficients one.
  static LinearizedMap trace(const Field& field);
  /// The unique linearized polynomial realizing `matrix` (columns are images
  /// of the basis x^j), interpolated through the trace-dual basis.
  static LinearizedMap from_matrix(const Field& field, const BitMatrix& matrix);

  const Field& field() const { return field_; }
  const std::vector<Elem>& coefficients() const { return coeffs_; }

  Elem operator()(Elem z) const;
  /// Column j is the image of x^j.
  BitMatrix matrix() const;
  bool is_bijective() const { return matrix().rank() == field_.degree(); }

  friend bool operator==(const LinearizedMap& l, const LinearizedMap& r) {
    return l.field_ == r.field_ && l.coeffs_ == r.coeffs_;
  }

 private:
  Field field_;
  std::vector<Elem> coeffs_;
};

/// Matrix-based inverse. This is the oracle every closed-form inverse in the
/// library is checked against. Throws NotBijective for singular maps.
LinearizedMap invert_linearized(const LinearizedMap& map);

// ---------------------------------------------------------------------------
// L_a(x) = a x + a^2 x^2 + tr(x) for odd m and tr(1/a) = 1, and its
// closed-form inverse (1/a) C_a(x) + (1/a) tr(x/a).

/// The c_0 coefficient of C_a is usually stated as a step-2 progression 1, 3, ...,
/// m-3 whose endpoint has the wrong parity for odd m. Truncated stops at the
/// last odd index below m-3; Extended runs to m-2, which is the even-i rule
/// evaluated at i = 0.
enum class ProgressionReading { Truncated, Extended };

Elem trace_quadratic_forward(const Field& field, Elem a, Elem z);
LinearizedMap trace_quadratic_map(const Field& field, Elem a);

/// The coefficients c_0..c_{m-1} of C_a straight from the closed form.
std::vector<Elem> trace_quadratic_c_coefficients(const Field& field, Elem a, ProgressionReading reading);

class TraceQuadraticInverse {
 public:
  Elem operator()(Elem z) const;
  Elem a() const { return a_; }
  const LinearizedMap& c_map() const { return c_map_; }
  /// The whole inverse folded into one linearized polynomial.
  LinearizedMap as_linearized() const;

 private:
  friend TraceQuadraticInverse trace_quadratic_inverse(const Field&, Elem, ProgressionReading);
  TraceQuadraticInverse(Elem a, Elem inv_a, LinearizedMap c_map) : a_(a), inv_a_(inv_a), c_map_(std::move(c_map)) {}

  Elem a_;
  Elem inv_a_;
  LinearizedMap c_map_;
};

/// Builds the closed-form inverse and checks it against invert_linearized.
/// Throws InvalidParameter for even m or tr(1/a) != 1, FormulaMismatch when
/// the closed form disagrees with the oracle.
TraceQuadraticInverse trace_quadratic_inverse(const Field& field, Elem a, ProgressionReading reading = ProgressionReading::Extended);

struct ReadingCheck {
  ProgressionReading reading;
  bool matches_oracle;
  std::size_t valid_a_count;
  std::size_t mismatching_a_count;
};

/// For each reading, how many admissible a have a C_a that disagrees with
/// the matrix oracle. Requires odd m.
std::vector<ReadingCheck> trace_quadratic_reading_report(const Field& field);

// ---------------------------------------------------------------------------
// Knuth-type map L_a(z) = a z + a^2 tr(1/a) z^2 + tr(z), a != 0, odd m.

Elem knuth_map_forward(const Field& field, Elem a, Elem z);

/// Both trace cases merged by Lagrange interpolation:
/// (1 + tr(1/a)) z/a + (1/a) tr(z/a) + (1/a) tr(1/a) C_a(z).
class KnuthMapInverse {
 public:
  KnuthMapInverse(const Field& field, Elem a);
  Elem operator()(Elem z) const;

 private:
  Field field_;
  Elem inv_a_;
  unsigned trace_inv_a_;
  std::optional<TraceQuadraticInverse> trace_quadratic_;
};

// ---------------------------------------------------------------------------
// Kantor-type map L_a(z) = a z^2 + tr(a z) + tr(a) z, odd m.

Elem kantor_map_forward(const Field& field, Elem a, Elem z);

/// Corrected: exponents 2^{2i} in the half-trace sum and a trace coefficient
/// 1 + sum_{i <= (m-3)/2} a^{2^{2i}}. Uncorrected: exponents 2^{2i} - 1 and no
/// leading 1. Only Corrected inverts L_a.
enum class KantorReading { Corrected, Uncorrected };

class KantorMapInverse {
 public:
  KantorMapInverse(const Field& field, Elem a, KantorReading reading = KantorReading::Corrected);
  Elem operator()(Elem z) const;

 private:
  Field field_;
  KantorReading reading_;
  Elem a_;
  Elem bracket_scale_;     // tr(a) / a
  Elem trace_coeff_;       // coefficient of tr(az) inside the bracket
  Elem tail_scale_;        // a^(2^(m-1) - 1)
};

// ---------------------------------------------------------------------------
// Dickson polynomials over characteristic 2.

/// D_k(x) via D_k(t + 1/t) = t^k + t^-k with t found in GF(2^{2m}).
/// D_k(0) = 0 for every k.
Elem dickson_eval(const ExtField& ext, std::uint64_t k, Elem x);

inline constexpr std::uint64_t kMaxRecurrenceDegree = std::uint64_t{1} << 20;

/// D_0 = 0, D_1 = x, D_k = x D_{k-1} + D_{k-2}. Throws InvalidParameter for
/// k > kMaxRecurrenceDegree.
Elem dickson_eval_recurrence(const Field& field, std::uint64_t k, Elem x);

/// k' with k k' = 1 mod 2^{2m} - 1 and 0 < k' < 2^{2m} - 1.
/// Throws NotCoprime when gcd(k, 2^{2m} - 1) != 1.
std::uint64_t dickson_inverse_exponent(std::uint64_t k, unsigned m);

}  // namespace psbent
