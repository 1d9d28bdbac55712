#include "psbent/field.hpp"

#include <bit>
#include <string>
#include <utility>

#include "psbent/errors.hpp"
#include "psbent/hex.hpp"

namespace psbent {

namespace {

constexpr Elem kNoRoot = 0xffffffffu;

unsigned poly_degree(std::uint64_t p) { return static_cast<unsigned>(std::bit_width(p)) - 1; }

std::uint64_t poly_mod(std::uint64_t a, std::uint64_t b) {
  const unsigned db = poly_degree(b);
  while (a != 0 && poly_degree(a) >= db) {
    a ^= b << (poly_degree(a) - db);
  }
  return a;
}

std::uint64_t poly_gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    a = poly_mod(a, b);
    std::swap(a, b);
  }
  return a;
}

void check_degree(unsigned m) {
  if (m < Field::kMinDegree || m > Field::kMaxDegree) {
    throw InvalidParameter("--m: extension degree must lie in [2, 16], got " + std::to_string(m));
  }
}

}  // namespace

Elem clmul_mod(Elem a, Elem b, std::uint32_t modulus, unsigned m) {
  const std::uint32_t top = 1u << m;
  Elem r = 0;
  while (b != 0) {
    if (b & 1u) r ^= a;
    b >>= 1;
    a <<= 1;
    if (a & top) a ^= modulus;
  }
  return r;
}

bool is_irreducible(std::uint32_t poly, unsigned m) {
  if (m == 0 || m > 31) return false;
  if ((poly >> m) != 1u || (poly & 1u) == 0) return false;
  Elem x_pow = 2;  // x^(2^i) mod poly
  for (unsigned i = 1; i <= m / 2; ++i) {
    x_pow = clmul_mod(x_pow, x_pow, poly, m);
    if (poly_gcd(poly, x_pow ^ 2u) != 1) return false;
  }
  return true;
}

std::uint32_t default_modulus(unsigned m) {
  check_degree(m);
  for (std::uint32_t p = (1u << m) | 1u; p < (2u << m); p += 2) {
    if (is_irreducible(p, m)) return p;
  }
  throw InvalidParameter("no irreducible polynomial found");  // unreachable for m <= 16
}

Field::Field(unsigned m) : Field(m, default_modulus(m)) {}

Field::Field(unsigned m, std::uint32_t modulus) : m_(m), modulus_(modulus), size_(0) {
  check_degree(m);
  if (!is_irreducible(modulus, m)) {
    throw InvalidParameter("--modulus: " + to_hex(modulus) + " is not an irreducible polynomial of degree " +
                           std::to_string(m));
  }
  size_ = 1u << m;
  const std::uint32_t order = size_ - 1;

  // Not every irreducible modulus is primitive, so search for a generator.
  auto tables = std::make_shared<Tables>();
  tables->exp.assign(2 * static_cast<std::size_t>(order), 0);
  tables->log.assign(size_, 0);
  for (Elem g = 2; g < size_; ++g) {
    Elem v = 1;
    std::uint32_t i = 0;
    for (; i < order; ++i) {
      tables->exp[i] = v;
      v = clmul_mod(v, g, modulus, m);
      if (v == 1) break;
    }
    if (i + 1 == order) break;
  }
  for (std::uint32_t i = 0; i < order; ++i) {
    tables->log[tables->exp[i]] = i;
    tables->exp[i + order] = tables->exp[i];
  }
  tables_ = std::move(tables);

  for (unsigned i = 0; i < m; ++i) {
    const Elem basis = 1u << i;
    Elem acc = 0;
    Elem v = basis;
    for (unsigned j = 0; j < m; ++j) {
      acc ^= v;
      v = square(v);
    }
    // acc is 0 or 1
    if (acc == 1) trace_mask_ |= basis;
  }
}

Elem Field::pow(Elem a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t order = size_ - 1;
  const std::uint64_t k = (static_cast<std::uint64_t>(tables_->log[a]) * (e % order)) % order;
  return tables_->exp[k];
}

Elem Field::frobenius(Elem a, unsigned i) const {
  if (a == 0) return 0;
  const std::uint64_t order = size_ - 1;
  const std::uint64_t k = (static_cast<std::uint64_t>(tables_->log[a]) << (i % m_)) % order;
  return tables_->exp[k];
}

ExtField::ExtField(Field base) : base_(std::move(base)) {
  while (base_.trace(c_) != 1) ++c_;
  auto table = std::make_shared<std::vector<Elem>>(base_.size(), kNoRoot);
  for (Elem s = 0; s < base_.size(); ++s) {
    const Elem d = base_.square(s) ^ s;
    if ((*table)[d] == kNoRoot) (*table)[d] = s;
  }
  artin_schreier_ = std::move(table);
}

ExtElem ExtField::mul(ExtElem a, ExtElem b) const {
  // (a0 + a1 u)(b0 + b1 u) with u^2 = u + c
  const Elem hh = base_.mul(a.hi, b.hi);
  return {base_.mul(a.lo, b.lo) ^ base_.mul(hh, c_),
          base_.mul(a.lo, b.hi) ^ base_.mul(a.hi, b.lo) ^ hh};
}

ExtElem ExtField::inv(ExtElem a) const {
  // Conjugate of u is u + 1; the norm a0^2 + a0 a1 + a1^2 c lies in the base field.
  const Elem norm = base_.square(a.lo) ^ base_.mul(a.lo, a.hi) ^ base_.mul(base_.square(a.hi), c_);
  const Elem n_inv = base_.inv(norm);
  return {base_.mul(a.lo ^ a.hi, n_inv), base_.mul(a.hi, n_inv)};
}

ExtElem ExtField::pow(ExtElem a, std::uint64_t e) const {
  ExtElem result{1, 0};
  while (e != 0) {
    if (e & 1u) result = mul(result, a);
    a = square(a);
    e >>= 1;
  }
  return result;
}

Elem ExtField::solve_artin_schreier(Elem delta) const {
  if (!base_.contains(delta) || (*artin_schreier_)[delta] == kNoRoot) {
    throw InvalidParameter("s^2 + s = delta has no root in the base field (tr(delta) = 1)");
  }
  return (*artin_schreier_)[delta];
}

ExtElem ExtField::solve_quadratic(Elem x) const {
  if (x == 0) throw InvalidParameter("solve_quadratic: x must be nonzero");
  // t = x s turns t^2 + x t + 1 = 0 into s^2 + s = 1 / x^2.
  const Elem delta = base_.inv(base_.square(x));
  if (base_.trace(delta) == 0) {
    return {base_.mul(x, solve_artin_schreier(delta)), 0};
  }
  // s = s0 + u with s0^2 + s0 = delta + c, since u^2 + u = c.
  const Elem s0 = solve_artin_schreier(delta ^ c_);
  return {base_.mul(x, s0), x};
}

}  // namespace psbent
