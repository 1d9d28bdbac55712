#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace psbent {

/// A field element in polynomial-basis form: bit i is the coefficient of x^i.
using Elem = std::uint32_t;

/// Carry-less product of a and b reduced modulo `modulus` (degree m).
/// Works for any modulus, irreducible or not.
Elem clmul_mod(Elem a, Elem b, std::uint32_t modulus, unsigned m);

/// Ben-Or test: gcd(p, x^(2^i) - x mod p) = 1 for 1 <= i <= m/2.
bool is_irreducible(std::uint32_t poly, unsigned m);

/// Smallest integer encoding of an irreducible degree-m polynomial.
std::uint32_t default_modulus(unsigned m);

/// GF(2^m) for 2 <= m <= 16.
///
/// Multiplication, inversion and powers go through exp/log tables built once
/// at construction; the tables are shared between copies, so a Field is cheap
/// to pass by value. Inversion follows the a^(2^m - 2) convention, so
/// inv(0) = 0.
class Field {
 public:
  static constexpr unsigned kMinDegree = 2;
  static constexpr unsigned kMaxDegree = 16;

  explicit Field(unsigned m);
  /// Throws InvalidParameter when `modulus` is not an irreducible polynomial
  /// of degree exactly m.
  Field(unsigned m, std::uint32_t modulus);

  unsigned degree() const { return m_; }
  std::uint32_t modulus() const { return modulus_; }
  /// Number of elements, 2^m.
  std::uint32_t size() const { return size_; }
  Elem mask() const { return size_ - 1; }
  bool contains(Elem a) const { return a < size_; }

  static Elem add(Elem a, Elem b) { return a ^ b; }

  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    return tables_->exp[tables_->log[a] + tables_->log[b]];
  }

  Elem square(Elem a) const { return mul(a, a); }

  /// a^(2^m - 2); zero maps to zero.
  Elem inv(Elem a) const {
    if (a == 0) return 0;
    return tables_->exp[(size_ - 1) - tables_->log[a]];
  }

  /// a^e with 0^0 = 1.
  Elem pow(Elem a, std::uint64_t e) const;

  /// a^(2^i), i taken modulo m.
  Elem frobenius(Elem a, unsigned i) const;

  /// a^(2^(m-1)), the unique square root.
  Elem sqrt(Elem a) const { return frobenius(a, m_ - 1); }

  /// Absolute trace tr(a) = sum_{i<m} a^(2^i), returned as 0 or 1.
  unsigned trace(Elem a) const { return static_cast<unsigned>(__builtin_parity(a & trace_mask_)); }

  /// Bit i set iff tr(x^i) = 1.
  Elem trace_mask() const { return trace_mask_; }

  friend bool operator==(const Field& l, const Field& r) {
    return l.m_ == r.m_ && l.modulus_ == r.modulus_;
  }

 private:
  struct Tables {
    std::vector<Elem> exp;            // 2 * (2^m - 1) entries
    std::vector<std::uint32_t> log;   // log[0] unused
  };

  unsigned m_;
  std::uint32_t modulus_;
  std::uint32_t size_;
  Elem trace_mask_ = 0;
  std::shared_ptr<const Tables> tables_;
};

/// Element a + b*u of GF(2^{2m}) = GF(2^m)[u] / (u^2 + u + c).
struct ExtElem {
  Elem lo = 0;
  Elem hi = 0;

  friend bool operator==(const ExtElem&, const ExtElem&) = default;
};

/// Quadratic extension of a base field, with c the smallest element of
/// trace 1 so that u^2 + u + c is irreducible. Base elements embed as (a, 0).
class ExtField {
 public:
  explicit ExtField(Field base);

  const Field& base() const { return base_; }
  Elem c() const { return c_; }

  static ExtElem embed(Elem a) { return {a, 0}; }
  static bool in_base(ExtElem a) { return a.hi == 0; }

  static ExtElem add(ExtElem a, ExtElem b) { return {a.lo ^ b.lo, a.hi ^ b.hi}; }
  ExtElem mul(ExtElem a, ExtElem b) const;
  ExtElem square(ExtElem a) const { return mul(a, a); }
  /// Zero maps to zero, matching the base-field convention.
  ExtElem inv(ExtElem a) const;
  ExtElem pow(ExtElem a, std::uint64_t e) const;

  /// A root t of t^2 + x t + 1 = 0; the other root is inv(t) and
  /// t + inv(t) = x. Throws InvalidParameter for x = 0.
  ExtElem solve_quadratic(Elem x) const;

  /// Some s in the base field with s^2 + s = delta. Requires tr(delta) = 0;
  /// throws InvalidParameter otherwise.
  Elem solve_artin_schreier(Elem delta) const;

 private:
  Field base_;
  Elem c_ = 0;
  // artin_schreier_[delta] = smaller root of s^2 + s = delta, or kNoRoot.
  std::shared_ptr<const std::vector<Elem>> artin_schreier_;
};

}  // namespace psbent
