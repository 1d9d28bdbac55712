#include "psbent/construct.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <random>
#include <string>

#include "psbent/errors.hpp"
#include "psbent/hex.hpp"

namespace psbent {

namespace {

void check_degree(unsigned m) {
  if (m < 2 || m > 16) throw InvalidParameter("--m: selector degree must lie in [2, 16], got " + std::to_string(m));
}

std::vector<std::uint8_t> support_table(unsigned m, std::span<const Elem> slopes) {
  check_degree(m);
  const std::size_t q = std::size_t{1} << m;
  if (slopes.size() != q / 2) {
    throw WrongCardinality("--g: need exactly " + std::to_string(q / 2) + " slopes for m=" + std::to_string(m) +
                           ", got " + std::to_string(slopes.size()));
  }
  std::vector<std::uint8_t> table(q, 0);
  for (Elem a : slopes) {
    if (a == 0) throw ZeroInSupport("--g: the slope 0 may not be selected");
    if (a >= q) throw InvalidParameter("--g: slope " + to_hex(a) + " is not an element of GF(2^" + std::to_string(m) + ")");
    if (table[a]) throw InvalidParameter("--g: slope " + to_hex(a) + " listed twice");
    table[a] = 1;
  }
  return table;
}

// Uniform draw from [0, bound) without modulo bias.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t draw;
  do {
    draw = rng();
  } while (draw >= limit);
  return draw % bound;
}

void certify_or_throw(const TruthTable& f, const std::string& what) {
  if (!is_bent(f)) throw BentCertificationFailed(what + ": constructed function is not bent");
}

}  // namespace

Selector Selector::from_support(unsigned m, std::span<const Elem> slopes) {
  return Selector(m, support_table(m, slopes));
}

Selector Selector::random(unsigned m, std::uint64_t seed) {
  check_degree(m);
  const Elem q = Elem{1} << m;
  std::vector<Elem> nonzero(q - 1);
  std::iota(nonzero.begin(), nonzero.end(), Elem{1});
  std::mt19937_64 rng(seed);
  for (std::size_t i = nonzero.size() - 1; i > 0; --i) {
    std::swap(nonzero[i], nonzero[uniform_below(rng, i + 1)]);
  }
  nonzero.resize(q / 2);
  return from_support(m, nonzero);
}

std::vector<Elem> Selector::support() const {
  std::vector<Elem> out;
  for (Elem a = 0; a < table_.size(); ++a) {
    if (table_[a]) out.push_back(a);
  }
  return out;
}

TruthTable compose_with_division(std::span<const Elem> division, unsigned m, std::span<const std::uint8_t> g) {
  const std::size_t q = std::size_t{1} << m;
  if (division.size() != q * q) throw InvalidParameter("division table size does not match m");
  if (g.size() != q) throw InvalidParameter("selector table size does not match m");
  TruthTable f(2 * m);
  for (std::size_t i = 0; i < division.size(); ++i) {
    if (g[division[i]]) f.set(i, true);
  }
  return f;
}

TruthTable ps_minus(const Quasifield& q, const Selector& g, bool certify) {
  const Field& field = q.field();
  const unsigned m = field.degree();
  if (g.degree() != m) throw InvalidParameter("selector degree does not match the quasifield");
  TruthTable f(2 * m);
  for (Elem x = 1; x < field.size(); ++x) {
    const Divider div = q.divider(x);
    for (Elem y = 0; y < field.size(); ++y) {
      if (g(div(y))) f.set((std::size_t{y} << m) | x, true);
    }
  }
  if (certify) certify_or_throw(f, q.description());
  return f;
}

TruthTable ps_minus(std::span<const Elem> division, const Selector& g, bool certify) {
  TruthTable f = compose_with_division(division, g.degree(), g.table());
  if (certify) certify_or_throw(f, "ps_minus");
  return f;
}

TruthTable ps_from_components(const Spread& spread, std::span<const Elem> slopes) {
  const unsigned m = spread.degree();
  support_table(m, slopes);
  TruthTable f(2 * m);
  for (Elem a : slopes) {
    for (std::uint32_t p : spread.component(Slope::finite(a))) f.flip(p);
  }
  return f;
}

TruthTable ps_plus(const TruthTable& f) { return complement(f); }

}  // namespace psbent
