#include <gtest/gtest.h>

#include <random>

#include "psbent/construct.hpp"
#include "psbent/errors.hpp"

using namespace psbent;

namespace {

std::vector<Quasifield> families(unsigned m) {
  const Field f(m);
  return {Quasifield::field_multiplication(f), Quasifield::dempwolff_muller(f, m == 3 ? 1 : 3),
          Quasifield::knuth(f, 3), Quasifield::kantor(f)};
}

// All 4-subsets of {1..7}.
std::vector<std::vector<Elem>> all_supports_m3() {
  std::vector<std::vector<Elem>> out;
  for (unsigned mask = 0; mask < 256; ++mask) {
    if ((mask & 1) || __builtin_popcount(mask) != 4) continue;
    std::vector<Elem> s;
    for (Elem a = 1; a < 8; ++a) {
      if ((mask >> a) & 1) s.push_back(a);
    }
    out.push_back(s);
  }
  return out;
}

}  // namespace

TEST(Selector, FromSupport) {
  const std::vector<Elem> slopes{1, 2, 4, 7};
  const Selector g = Selector::from_support(3, slopes);
  EXPECT_FALSE(g(0));
  EXPECT_EQ(g.support(), slopes);
  EXPECT_EQ(g.table(), (std::vector<std::uint8_t>{0, 1, 1, 0, 1, 0, 0, 1}));

  EXPECT_THROW(Selector::from_support(3, std::vector<Elem>{0, 1, 2, 3}), ZeroInSupport);
  EXPECT_THROW(Selector::from_support(3, std::vector<Elem>{1, 2, 3}), WrongCardinality);
  EXPECT_THROW(Selector::from_support(3, std::vector<Elem>{1, 2, 3, 4, 5}), WrongCardinality);
  EXPECT_THROW(Selector::from_support(3, std::vector<Elem>{1, 2, 2, 3}), InvalidParameter);
  EXPECT_THROW(Selector::from_support(3, std::vector<Elem>{1, 2, 3, 8}), InvalidParameter);
}

TEST(Selector, RandomIsDeterministicAndBalanced) {
  for (unsigned m = 2; m <= 10; ++m) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const Selector g = Selector::random(m, seed);
      EXPECT_EQ(g, Selector::random(m, seed));
      EXPECT_FALSE(g(0));
      EXPECT_EQ(g.support().size(), std::size_t{1} << (m - 1));
    }
  }
}

TEST(Selector, PinnedSeeds) {
  EXPECT_EQ(Selector::random(5, 1).support(),
            (std::vector<Elem>{2, 3, 7, 8, 9, 14, 15, 16, 18, 20, 21, 22, 23, 28, 30, 31}));
  EXPECT_EQ(Selector::random(5, 2).support(),
            (std::vector<Elem>{1, 3, 6, 7, 8, 11, 14, 15, 19, 20, 21, 25, 26, 27, 28, 31}));
}

TEST(PsMinus, FieldExample) {
  const Quasifield q = Quasifield::field_multiplication(Field(3));
  const Selector g = Selector::from_support(3, std::vector<Elem>{1, 2, 4, 7});
  const TruthTable f = ps_minus(q, g);
  EXPECT_TRUE(is_bent(f));
  EXPECT_EQ(weight(f), 32u - 4u);
  for (Elem y = 0; y < 8; ++y) EXPECT_FALSE(f[y << 3]);
  // f(x, y) = g(y / x) for the field spread.
  const Field& fld = q.field();
  for (Elem x = 1; x < 8; ++x) {
    for (Elem y = 0; y < 8; ++y) EXPECT_EQ(f[(y << 3) | x], g(fld.mul(y, fld.inv(x))));
  }
}

TEST(PsMinus, AllSelectorsAtDegreeThree) {
  for (const Quasifield& q : families(3)) {
    const Spread spread = build_spread(q);
    for (const auto& support : all_supports_m3()) {
      const Selector g = Selector::from_support(3, support);
      const TruthTable f = ps_minus(q, g);
      ASSERT_EQ(f, ps_from_components(spread, support)) << q.description();
      ASSERT_TRUE(is_bent(f));
      ASSERT_EQ(weight(f), 28u);
      ASSERT_LE(degree(f), 3u);
    }
  }
  EXPECT_EQ(all_supports_m3().size(), 35u);
}

TEST(PsMinus, SeededSelectorsAtDegreeFive) {
  for (const Quasifield& q : families(5)) {
    const Spread spread = build_spread(q);
    const std::vector<Elem> division = division_table(q);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const Selector g = Selector::random(5, seed);
      const TruthTable f = ps_minus(q, g);
      EXPECT_EQ(f, ps_minus(division, g));
      EXPECT_EQ(f, ps_from_components(spread, g.support()));
      EXPECT_EQ(weight(f), 512u - 16u);
      EXPECT_LE(degree(f), 5u);
      const TruthTable p = ps_plus(f);
      EXPECT_TRUE(is_bent(p));
      EXPECT_EQ(weight(p), 512u + 16u);
      EXPECT_EQ(ps_plus(p), f);
    }
  }
}

TEST(PsMinus, UnbalancedSelectorIsNotBent) {
  for (unsigned m : {3u, 5u}) {
    const std::size_t q = std::size_t{1} << m;
    for (const Quasifield& qf : families(m)) {
      std::vector<std::uint8_t> g(q, 0);
      for (std::size_t a = 1; a <= q / 2 + 1; ++a) g[a] = 1;
      EXPECT_FALSE(is_bent(compose_with_division(division_table(qf), m, g))) << qf.description();
    }
  }
}

TEST(PsMinus, CertificationCatchesCorruptDivision) {
  const Quasifield q = Quasifield::kantor(Field(5));
  std::vector<Elem> division = division_table(q);
  std::mt19937 rng(9);
  for (int i = 0; i < 40; ++i) division[rng() % division.size()] = rng() & 31;
  const Selector g = Selector::random(5, 3);
  EXPECT_THROW(ps_minus(division, g), BentCertificationFailed);
  EXPECT_NO_THROW(ps_minus(division, g, false));
}

TEST(PsFromComponents, RejectsBadSlopes) {
  const Spread s = build_spread(Quasifield::field_multiplication(Field(3)));
  EXPECT_THROW(ps_from_components(s, std::vector<Elem>{1, 2, 3}), WrongCardinality);
  EXPECT_THROW(ps_from_components(s, std::vector<Elem>{0, 1, 2, 3}), ZeroInSupport);
  EXPECT_FALSE(ps_from_components(s, std::vector<Elem>{1, 2, 3, 4})[0]);
}
