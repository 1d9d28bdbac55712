#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "psbent/field.hpp"
#include "psbent/polynomials.hpp"

namespace psbent {

enum class Family { Field, DempwolffMuller, Knuth, Kantor };

/// "field", "dm", "knuth", "kantor".
std::string_view family_name(Family family);
std::optional<Family> parse_family(std::string_view name);

struct QuasifieldParams {
  unsigned k = 0;   // Dempwolff-Mueller
  Elem beta = 0;    // Knuth
};

/// How much checking a constructor does. Auto means Strict for m <= 7.
/// Strict compares the closed-form division with the brute-force oracle on
/// every (y, x) pair and throws FormulaMismatch on any difference.
enum class Validation { Auto, Strict, Skip };

class Quasifield;

/// The inverse of a -> a <> x for one fixed x, with per-x quantities
/// precomputed; evaluates the closed-form left division y -> <>y/x.
class Divider {
 public:
  Elem operator()(Elem y) const;
  Elem x() const { return x_; }

 private:
  friend class Quasifield;
  explicit Divider(Field field) : field_(std::move(field)) {}

  Family family_ = Family::Field;
  Field field_;
  Elem x_ = 0;
  Elem inv_x_ = 0;
  // Dempwolff-Mueller
  std::shared_ptr<const ExtField> ext_;
  std::uint64_t dickson_d_ = 0;
  Elem dm_scale_ = 0;  // 1 / x^(2^k + 1)
  // Knuth
  Elem beta_ = 0;
  unsigned trace_beta_x_ = 0;
  Elem inv_x_squared_ = 0;
  std::optional<TraceQuadraticInverse> c_inverse_;  // for a = 1/(beta x) when tr(beta x) = 1
  // Kantor
  Elem kantor_scale_ = 0;        // tr(x) / x
  Elem kantor_trace_coeff_ = 0;  // 1 + sum_{i <= (m-3)/2} x^(2^(2i))
  Elem kantor_tail_ = 0;         // x^(2^(m-1) - 1)
};

/// A pre-quasifield (GF(2^m), +, <>) from one of four families.
///
/// mul(a, x) is a <> x; the spread component E_a = {(x, a <> x)} has slope a,
/// and left division solves for that slope: divide(y, x) = a with a <> x = y,
/// and divide(y, 0) = 0.
///
///   field  a <> x = a x
///   dm     a <> x = a^e L(a x), e = 2^(m-1) - 2^(k-1) - 1, L(z) = sum_{i<k} z^(2^i)
///   knuth  a <> x = a x + a^2 tr(beta x) + x^2 tr(beta a)
///   kantor a <> x = a^2 x + tr(a x) + a tr(x)
class Quasifield {
 public:
  static Quasifield field_multiplication(Field field, Validation validation = Validation::Auto);
  /// Requires odd m, odd 1 <= k < m, gcd(k, m) = 1.
  static Quasifield dempwolff_muller(Field field, unsigned k, Validation validation = Validation::Auto);
  /// Requires odd m and beta != 0.
  static Quasifield knuth(Field field, Elem beta, Validation validation = Validation::Auto);
  /// Requires odd m.
  static Quasifield kantor(Field field, Validation validation = Validation::Auto);
  static Quasifield make(Family family, Field field, QuasifieldParams params,
                         Validation validation = Validation::Auto);

  Family family() const { return family_; }
  const Field& field() const { return field_; }
  const QuasifieldParams& params() const { return params_; }
  /// e.g. "dm(k=3)", "knuth(beta=5)".
  std::string description() const;

  std::uint64_t dm_exponent() const { return dm_e_; }
  std::uint64_t dm_dickson_exponent() const { return dm_d_; }

  /// a <> x
  Elem mul(Elem a, Elem x) const;
  /// <>y/x through the closed-form inverse.
  Elem divide(Elem y, Elem x) const { return divider(x)(y); }
  /// <>y/x by scanning all 2^m candidates; throws ConsistencyFailure when
  /// the solution is not unique.
  Elem divide_oracle(Elem y, Elem x) const;

  Divider divider(Elem x) const;

 private:
  Quasifield(Family family, Field field, QuasifieldParams params);
  void validate(Validation validation) const;

  Family family_;
  Field field_;
  QuasifieldParams params_;
  std::uint64_t dm_e_ = 0;
  std::uint64_t dm_d_ = 0;
  std::shared_ptr<const ExtField> ext_;
};

/// a -> a <> x for fixed x; a permutation for x != 0, zero for x = 0.
class ParametricMap {
 public:
  ParametricMap(Quasifield q, Elem x) : q_(std::move(q)), x_(x) {}
  Elem operator()(Elem a) const { return q_.mul(a, x_); }
  Elem parameter() const { return x_; }

 private:
  Quasifield q_;
  Elem x_;
};

ParametricMap parametric_map(const Quasifield& q, Elem x);

/// Table indexed by (y << m) | x holding <>y/x, from the closed form.
std::vector<Elem> division_table(const Quasifield& q);
/// The same table built by inverting the multiplication exhaustively.
/// Throws ConsistencyFailure if some a -> a <> x (x != 0) is not a bijection.
std::vector<Elem> division_table_oracle(const Quasifield& q);
/// Number of (y, x) pairs where the closed form and the oracle disagree.
std::size_t count_division_mismatches(const Quasifield& q);

/// Mismatches of the Kantor division formula without the correction
/// (KantorReading::Uncorrected) against the oracle. Requires odd m.
std::size_t kantor_uncorrected_mismatches(const Field& field);

struct AxiomReport {
  bool additive_group = true;     // xor on bit vectors
  bool left_bijective = true;     // x -> a <> x on Q* for every a != 0
  bool right_bijective = true;    // x -> x <> a on Q* for every a != 0
  bool left_distributive = true;  // a <> (y + z) = a <> y + a <> z
  bool zero_left = true;          // 0 <> x = 0
  bool right_distributive = true; // (y + z) <> a = y <> a + z <> a
  bool zero_right = true;         // x <> 0 = 0
  std::vector<std::string> failures;  // first counterexample per failed law

  bool is_prequasifield() const {
    return additive_group && left_bijective && right_bijective && left_distributive && zero_left;
  }
  bool is_presemifield() const { return is_prequasifield() && right_distributive && zero_right; }
};

inline constexpr unsigned kMaxAxiomDegree = 8;

/// Exhaustive check of the pre-quasifield axioms plus the right-hand laws.
/// Costs 2^(3m); throws InvalidParameter for m > 8.
AxiomReport verify_axioms(const Quasifield& q);

}  // namespace psbent
