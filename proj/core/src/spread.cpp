#include "psbent/spread.hpp"

#include <algorithm>
#include <optional>
#include <ostream>

#include "psbent/errors.hpp"
#include "psbent/hex.hpp"

namespace psbent {

namespace {

// Rank over F2 of a set of point indices (at most 32 bits each).
unsigned span_dimension(const std::vector<std::uint32_t>& vectors) {
  std::uint32_t basis[32] = {};
  unsigned rank = 0;
  for (std::uint32_t v : vectors) {
    for (int bit = 31; bit >= 0 && v != 0; --bit) {
      if (!((v >> bit) & 1u)) continue;
      if (basis[bit] == 0) {
        basis[bit] = v;
        ++rank;
        v = 0;
      } else {
        v ^= basis[bit];
      }
    }
  }
  return rank;
}

}  // namespace

Elem Slope::value() const {
  if (infinite_) throw InvalidParameter("the infinite slope has no field value");
  return value_;
}

std::string Slope::to_string() const { return infinite_ ? "inf" : to_hex(value_); }

Spread::Spread(unsigned m, std::vector<std::vector<std::uint32_t>> components, std::string source)
    : m_(m), components_(std::move(components)), source_(std::move(source)) {
  for (auto& c : components_) std::sort(c.begin(), c.end());
}

Slope Spread::slope_at(std::size_t position, unsigned m) {
  if (position == (std::size_t{1} << m)) return Slope::infinity();
  return Slope::finite(static_cast<Elem>(position));
}

const std::vector<std::uint32_t>& Spread::component(Slope s) const {
  const std::size_t position = s.is_infinity() ? (std::size_t{1} << m_) : s.value();
  if (position >= components_.size()) throw InvalidParameter("slope " + s.to_string() + " is out of range");
  return components_[position];
}

Spread build_spread(const Quasifield& q) {
  const Field& f = q.field();
  const unsigned m = f.degree();
  std::vector<std::vector<std::uint32_t>> components(f.size() + 1);
  for (Elem a = 0; a < f.size(); ++a) {
    auto& comp = components[a];
    comp.reserve(f.size());
    for (Elem x = 0; x < f.size(); ++x) comp.push_back(Point{x, q.mul(a, x)}.index(m));
  }
  auto& infinite = components[f.size()];
  infinite.reserve(f.size());
  for (Elem y = 0; y < f.size(); ++y) infinite.push_back(Point{0, y}.index(m));
  return Spread(m, std::move(components), q.description());
}

SpreadReport verify_spread(const Spread& spread) {
  const unsigned m = spread.degree();
  const std::size_t q = std::size_t{1} << m;
  const std::size_t points = q * q;
  SpreadReport report;

  if (spread.size() != q + 1) {
    report.component_count_ok = false;
    report.failures.push_back("expected " + std::to_string(q + 1) + " components, found " +
                              std::to_string(spread.size()));
  }

  std::vector<std::uint32_t> cover(points, 0);
  std::size_t nonzero_total = 0;
  for (std::size_t pos = 0; pos < spread.size(); ++pos) {
    const auto& comp = spread.components()[pos];
    const std::string name = Spread::slope_at(pos, m).to_string();
    const bool distinct = std::adjacent_find(comp.begin(), comp.end()) == comp.end();
    if (comp.size() != q || !distinct || comp.empty() || comp.front() != 0) {
      if (report.sizes_ok) {
        report.failures.push_back("component " + name + " does not hold 2^m distinct points including the origin");
      }
      report.sizes_ok = false;
    }
    // A set of distinct vectors is a subspace iff its size equals the size of its span.
    const unsigned dim = span_dimension(comp);
    if (!distinct || dim >= 32 || comp.size() != (std::size_t{1} << dim)) {
      if (report.closure_ok) report.failures.push_back("component " + name + " is not closed under addition");
      report.closure_ok = false;
    }
    for (std::uint32_t p : comp) {
      if (p >= points) continue;
      ++cover[p];
      if (p != 0) ++nonzero_total;
    }
  }

  for (std::size_t p = 1; p < points; ++p) {
    if (cover[p] > 1 && report.trivial_intersections) {
      report.trivial_intersections = false;
      report.failures.push_back("point " + to_hex(p) + " lies in " + std::to_string(cover[p]) + " components");
    }
    if (cover[p] == 0 && report.covers_space) {
      report.covers_space = false;
      report.failures.push_back("point " + to_hex(p) + " lies in no component");
    }
  }

  // (2^m + 1)(2^m - 1) + 1 = 2^{2m}, checked against the materialized components.
  if (nonzero_total + 1 != points || (q + 1) * (q - 1) + 1 != points) {
    report.counting_identity = false;
    report.failures.push_back("components hold " + std::to_string(nonzero_total) + " nonzero points, expected " +
                              std::to_string(points - 1));
  }
  return report;
}

Slope slope_of(const Spread& spread, Point p) {
  const unsigned m = spread.degree();
  const std::uint32_t index = p.index(m);
  if (index == 0) throw InvalidParameter("the origin lies in every component");
  std::optional<Slope> found;
  for (std::size_t pos = 0; pos < spread.size(); ++pos) {
    const auto& comp = spread.components()[pos];
    if (!std::binary_search(comp.begin(), comp.end(), index)) continue;
    if (found) throw ConsistencyFailure("point " + to_hex(index) + " lies in several components");
    found = Spread::slope_at(pos, m);
  }
  if (!found) throw ConsistencyFailure("point " + to_hex(index) + " lies in no component");
  return *found;
}

void write_spread_dump(std::ostream& out, const Spread& spread) {
  for (std::size_t pos = 0; pos < spread.size(); ++pos) {
    out << Spread::slope_at(pos, spread.degree()).to_string() << ':';
    const auto& comp = spread.components()[pos];
    for (std::size_t i = 0; i < comp.size(); ++i) out << (i == 0 ? " " : ",") << to_hex(comp[i]);
    out << '\n';
  }
}

}  // namespace psbent
