#include "psbent/quasifield.hpp"

#include <numeric>

#include "psbent/errors.hpp"
#include "psbent/hex.hpp"

namespace psbent {

namespace {

constexpr Elem kUnset = 0xffffffffu;

void require_odd_degree(const Field& field, std::string_view family) {
  if (field.degree() % 2 == 0) {
    throw InvalidParameter("--m: the " + std::string(family) + " family requires odd m, got " +
                           std::to_string(field.degree()));
  }
}

std::size_t pair_index(const Field& field, Elem y, Elem x) {
  return (static_cast<std::size_t>(y) << field.degree()) | x;
}

}  // namespace

std::string_view family_name(Family family) {
  switch (family) {
    case Family::Field: return "field";
    case Family::DempwolffMuller: return "dm";
    case Family::Knuth: return "knuth";
    case Family::Kantor: return "kantor";
  }
  return "unknown";
}

std::optional<Family> parse_family(std::string_view name) {
  for (Family f : {Family::Field, Family::DempwolffMuller, Family::Knuth, Family::Kantor}) {
    if (family_name(f) == name) return f;
  }
  return std::nullopt;
}

Quasifield::Quasifield(Family family, Field field, QuasifieldParams params)
    : family_(family), field_(std::move(field)), params_(params) {}

Quasifield Quasifield::field_multiplication(Field field, Validation validation) {
  Quasifield q(Family::Field, std::move(field), {});
  q.validate(validation);
  return q;
}

Quasifield Quasifield::dempwolff_muller(Field field, unsigned k, Validation validation) {
  require_odd_degree(field, "dm");
  const unsigned m = field.degree();
  if (k == 0 || k >= m || k % 2 == 0 || std::gcd(k, m) != 1) {
    throw InvalidParameter("--k: the dm family needs odd k with 1 <= k < m and gcd(k, m) = 1, got k = " +
                           std::to_string(k));
  }
  Quasifield q(Family::DempwolffMuller, std::move(field), {k, 0});
  q.dm_e_ = (std::uint64_t{1} << (m - 1)) - (std::uint64_t{1} << (k - 1)) - 1;
  q.dm_d_ = dickson_inverse_exponent((std::uint64_t{1} << k) - 1, m);
  q.ext_ = std::make_shared<const ExtField>(q.field_);
  q.validate(validation);
  return q;
}

Quasifield Quasifield::knuth(Field field, Elem beta, Validation validation) {
  require_odd_degree(field, "knuth");
  if (beta == 0 || !field.contains(beta)) {
    throw InvalidParameter("--beta: the knuth family needs a nonzero field element, got " + to_hex(beta));
  }
  Quasifield q(Family::Knuth, std::move(field), {0, beta});
  q.validate(validation);
  return q;
}

Quasifield Quasifield::kantor(Field field, Validation validation) {
  require_odd_degree(field, "kantor");
  Quasifield q(Family::Kantor, std::move(field), {});
  q.validate(validation);
  return q;
}

Quasifield Quasifield::make(Family family, Field field, QuasifieldParams params, Validation validation) {
  switch (family) {
    case Family::Field: return field_multiplication(std::move(field), validation);
    case Family::DempwolffMuller: return dempwolff_muller(std::move(field), params.k, validation);
    case Family::Knuth: return knuth(std::move(field), params.beta, validation);
    case Family::Kantor: return kantor(std::move(field), validation);
  }
  throw InvalidParameter("--family: unknown family");
}

void Quasifield::validate(Validation validation) const {
  const bool strict =
      validation == Validation::Strict || (validation == Validation::Auto && field_.degree() <= 7);
  if (!strict) return;
  const std::size_t mismatches = count_division_mismatches(*this);
  if (mismatches != 0) {
    throw FormulaMismatch("closed-form division of " + description() + " at m = " +
                          std::to_string(field_.degree()) + " disagrees with the oracle on " +
                          std::to_string(mismatches) + " pairs");
  }
}

std::string Quasifield::description() const {
  std::string name(family_name(family_));
  switch (family_) {
    case Family::DempwolffMuller: return name + "(k=" + std::to_string(params_.k) + ")";
    case Family::Knuth: return name + "(beta=" + to_hex(params_.beta) + ")";
    default: return name;
  }
}

Elem Quasifield::mul(Elem a, Elem x) const {
  const Field& f = field_;
  switch (family_) {
    case Family::Field:
      return f.mul(a, x);
    case Family::DempwolffMuller: {
      const Elem ax = f.mul(a, x);
      Elem l = 0;
      Elem power = ax;
      for (unsigned i = 0; i < params_.k; ++i) {
        l ^= power;
        power = f.square(power);
      }
      return f.mul(f.pow(a, dm_e_), l);
    }
    case Family::Knuth: {
      const Elem beta = params_.beta;
      Elem r = f.mul(a, x);
      if (f.trace(f.mul(beta, x))) r ^= f.square(a);
      if (f.trace(f.mul(beta, a))) r ^= f.square(x);
      return r;
    }
    case Family::Kantor: {
      Elem r = f.mul(f.square(a), x) ^ f.trace(f.mul(a, x));
      if (f.trace(x)) r ^= a;
      return r;
    }
  }
  return 0;
}

Elem Quasifield::divide_oracle(Elem y, Elem x) const {
  if (x == 0) return 0;
  Elem found = kUnset;
  for (Elem a = 0; a < field_.size(); ++a) {
    if (mul(a, x) != y) continue;
    if (found != kUnset) {
      throw ConsistencyFailure(description() + ": y = " + to_hex(y) + " has several quotients by x = " + to_hex(x));
    }
    found = a;
  }
  if (found == kUnset) {
    throw ConsistencyFailure(description() + ": y = " + to_hex(y) + " has no quotient by x = " + to_hex(x));
  }
  return found;
}

Divider Quasifield::divider(Elem x) const {
  const Field& f = field_;
  const unsigned m = f.degree();
  Divider d(f);
  d.family_ = family_;
  d.x_ = x;
  d.inv_x_ = f.inv(x);
  if (x == 0) return d;

  switch (family_) {
    case Family::Field:
      break;
    case Family::DempwolffMuller:
      d.ext_ = ext_;
      d.dickson_d_ = dm_d_;
      d.dm_scale_ = f.inv(f.pow(x, (std::uint64_t{1} << params_.k) + 1));
      break;
    case Family::Knuth: {
      d.beta_ = params_.beta;
      const Elem beta_x = f.mul(params_.beta, x);
      d.trace_beta_x_ = f.trace(beta_x);
      d.inv_x_squared_ = f.square(d.inv_x_);
      if (d.trace_beta_x_) d.c_inverse_ = trace_quadratic_inverse(f, f.inv(beta_x));
      break;
    }
    case Family::Kantor:
      d.kantor_scale_ = f.trace(x) ? d.inv_x_ : 0;
      d.kantor_trace_coeff_ = 1;
      for (unsigned i = 0; 2 * i + 3 <= m; ++i) d.kantor_trace_coeff_ ^= f.frobenius(x, 2 * i);
      d.kantor_tail_ = f.pow(x, (std::uint64_t{1} << (m - 1)) - 1);
      break;
  }
  return d;
}

Elem Divider::operator()(Elem y) const {
  if (x_ == 0) return 0;
  const Field& f = field_;
  switch (family_) {
    case Family::Field:
      return f.mul(y, inv_x_);

    case Family::DempwolffMuller: {
      // 1 / (x D_d(y^2 / x^(2^k + 1)))
      const Elem arg = f.mul(f.square(y), dm_scale_);
      return f.inv(f.mul(x_, dickson_eval(*ext_, dickson_d_, arg)));
    }

    case Family::Knuth: {
      // (1 + tr(beta x)) y/x + x tr(beta y/x) + x tr(beta x) C_{1/(beta x)}(y/x^2)
      const Elem y_over_x = f.mul(y, inv_x_);
      Elem r = 0;
      if (!trace_beta_x_) r ^= y_over_x;
      if (f.trace(f.mul(beta_, y_over_x))) r ^= x_;
      if (trace_beta_x_) r ^= f.mul(x_, c_inverse_->c_map()(f.mul(y, inv_x_squared_)));
      return r;
    }

    case Family::Kantor: {
      // tr(x)/x [ (xy)^(2^(m-1)) + sum_{i<=(m-1)/2} (xy)^(2^(2i)) + coeff tr(xy) ]
      //   + x^(2^(m-1) - 1) (y^(2^(m-1)) + tr(xy))
      const unsigned m = f.degree();
      const Elem xy = f.mul(x_, y);
      const unsigned t = f.trace(xy);
      Elem bracket = f.sqrt(xy);
      for (unsigned i = 0; 2 * i + 1 <= m; ++i) bracket ^= f.frobenius(xy, 2 * i);
      if (t) bracket ^= kantor_trace_coeff_;
      return f.mul(kantor_scale_, bracket) ^ f.mul(kantor_tail_, f.sqrt(y) ^ t);
    }
  }
  return 0;
}

ParametricMap parametric_map(const Quasifield& q, Elem x) { return ParametricMap(q, x); }

std::vector<Elem> division_table(const Quasifield& q) {
  const Field& f = q.field();
  std::vector<Elem> table(static_cast<std::size_t>(f.size()) * f.size(), 0);
  for (Elem x = 1; x < f.size(); ++x) {
    const Divider div = q.divider(x);
    for (Elem y = 0; y < f.size(); ++y) table[pair_index(f, y, x)] = div(y);
  }
  return table;
}

std::vector<Elem> division_table_oracle(const Quasifield& q) {
  const Field& f = q.field();
  std::vector<Elem> table(static_cast<std::size_t>(f.size()) * f.size(), kUnset);
  for (Elem y = 0; y < f.size(); ++y) table[pair_index(f, y, 0)] = 0;
  for (Elem x = 1; x < f.size(); ++x) {
    for (Elem a = 0; a < f.size(); ++a) {
      Elem& slot = table[pair_index(f, q.mul(a, x), x)];
      if (slot != kUnset) {
        throw ConsistencyFailure(q.description() + ": a -> a <> " + to_hex(x) + " is not injective");
      }
      slot = a;
    }
  }
  return table;
}

std::size_t count_division_mismatches(const Quasifield& q) {
  const std::vector<Elem> formula = division_table(q);
  const std::vector<Elem> oracle = division_table_oracle(q);
  std::size_t mismatches = 0;
  for (std::size_t i = 0; i < formula.size(); ++i) mismatches += formula[i] != oracle[i];
  return mismatches;
}

std::size_t kantor_uncorrected_mismatches(const Field& field) {
  const Quasifield q = Quasifield::kantor(field, Validation::Skip);
  const std::vector<Elem> oracle = division_table_oracle(q);
  std::size_t mismatches = 0;
  for (Elem x = 0; x < field.size(); ++x) {
    const KantorMapInverse uncorrected(field, x, KantorReading::Uncorrected);
    for (Elem y = 0; y < field.size(); ++y) mismatches += uncorrected(y) != oracle[pair_index(field, y, x)];
  }
  return mismatches;
}

AxiomReport verify_axioms(const Quasifield& q) {
  const Field& f = q.field();
  if (f.degree() > kMaxAxiomDegree) {
    throw InvalidParameter("--m: exhaustive axiom verification is limited to m <= 8");
  }
  const Elem n = f.size();
  std::vector<Elem> table(static_cast<std::size_t>(n) * n);
  auto at = [&](Elem a, Elem x) -> Elem& { return table[static_cast<std::size_t>(a) * n + x]; };
  for (Elem a = 0; a < n; ++a) {
    for (Elem x = 0; x < n; ++x) at(a, x) = q.mul(a, x);
  }

  AxiomReport report;
  auto fail = [&](bool& flag, std::string what) {
    if (flag) report.failures.push_back(std::move(what));
    flag = false;
  };

  std::vector<char> seen(n);
  for (Elem a = 1; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (Elem x = 1; x < n && report.left_bijective; ++x) {
      const Elem v = at(a, x);
      if (v == 0 || seen[v]) fail(report.left_bijective, "left multiplication by " + to_hex(a) + " is not a bijection of Q*");
      seen[v] = 1;
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (Elem x = 1; x < n && report.right_bijective; ++x) {
      const Elem v = at(x, a);
      if (v == 0 || seen[v]) fail(report.right_bijective, "right multiplication by " + to_hex(a) + " is not a bijection of Q*");
      seen[v] = 1;
    }
  }

  for (Elem x = 0; x < n; ++x) {
    if (report.zero_left && at(0, x) != 0) fail(report.zero_left, "0 <> " + to_hex(x) + " != 0");
    if (report.zero_right && at(x, 0) != 0) fail(report.zero_right, to_hex(x) + " <> 0 != 0");
  }

  for (Elem a = 0; a < n; ++a) {
    for (Elem y = 0; y < n; ++y) {
      for (Elem z = 0; z < n; ++z) {
        if (report.left_distributive && at(a, y ^ z) != (at(a, y) ^ at(a, z))) {
          fail(report.left_distributive,
               "left distributivity fails at (a, y, z) = (" + to_hex(a) + ", " + to_hex(y) + ", " + to_hex(z) + ")");
        }
        if (report.right_distributive && at(y ^ z, a) != (at(y, a) ^ at(z, a))) {
          fail(report.right_distributive,
               "right distributivity fails at (y, z, a) = (" + to_hex(y) + ", " + to_hex(z) + ", " + to_hex(a) + ")");
        }
      }
    }
  }
  return report;
}

}  // namespace psbent
