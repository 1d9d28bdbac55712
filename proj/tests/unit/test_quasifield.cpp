#include <gtest/gtest.h>

#include <numeric>
#include <set>

#include "psbent/errors.hpp"
#include "psbent/quasifield.hpp"

using namespace psbent;

namespace {

std::vector<Quasifield> families(unsigned m) {
  const Field f(m);
  std::vector<Quasifield> out{Quasifield::field_multiplication(f), Quasifield::kantor(f)};
  for (unsigned k = 1; k < m; k += 2) {
    if (std::gcd(k, m) == 1) out.push_back(Quasifield::dempwolff_muller(f, k));
  }
  for (Elem beta : {1u, 2u, f.size() - 1}) out.push_back(Quasifield::knuth(f, beta));
  return out;
}

}  // namespace

TEST(Quasifield, FamilyNames) {
  for (Family fam : {Family::Field, Family::DempwolffMuller, Family::Knuth, Family::Kantor}) {
    EXPECT_EQ(parse_family(family_name(fam)), fam);
  }
  EXPECT_FALSE(parse_family("semifield").has_value());
  EXPECT_EQ(Quasifield::dempwolff_muller(Field(5), 3).description(), "dm(k=3)");
  EXPECT_EQ(Quasifield::knuth(Field(5), 5).description(), "knuth(beta=5)");
}

TEST(Quasifield, ParameterChecks) {
  EXPECT_THROW(Quasifield::knuth(Field(4), 1), InvalidParameter);
  EXPECT_THROW(Quasifield::knuth(Field(5), 0), InvalidParameter);
  EXPECT_THROW(Quasifield::kantor(Field(6)), InvalidParameter);
  EXPECT_THROW(Quasifield::dempwolff_muller(Field(4), 1), InvalidParameter);
  EXPECT_THROW(Quasifield::dempwolff_muller(Field(5), 2), InvalidParameter);
  EXPECT_THROW(Quasifield::dempwolff_muller(Field(5), 5), InvalidParameter);
  EXPECT_THROW(Quasifield::dempwolff_muller(Field(9), 3), InvalidParameter);
  EXPECT_NO_THROW(Quasifield::field_multiplication(Field(4)));
}

TEST(Quasifield, DempwolffMullerExponents) {
  const Quasifield q = Quasifield::dempwolff_muller(Field(3), 1);
  EXPECT_EQ(q.dm_exponent(), 2u);
  EXPECT_EQ(q.dm_dickson_exponent(), 1u);
  const Quasifield q53 = Quasifield::dempwolff_muller(Field(5), 3);
  EXPECT_EQ(q53.dm_exponent(), 16u - 4u - 1u);
  // d (2^k - 1) = 1 mod 2^{2m} - 1
  EXPECT_EQ(q53.dm_dickson_exponent() * 7 % 1023, 1u);
}

TEST(Quasifield, DempwolffMullerSmallExample) {
  // m = 3, k = 1: a <> x = a^3 x, so <>alpha/1 = alpha^(3^-1 mod 7) = alpha^5.
  const Field f(3);
  const Quasifield q = Quasifield::dempwolff_muller(f, 1);
  for (Elem a = 0; a < 8; ++a) {
    for (Elem x = 0; x < 8; ++x) EXPECT_EQ(q.mul(a, x), f.mul(f.pow(a, 3), x));
  }
  EXPECT_EQ(q.divide(2, 1), f.pow(2, 5));
  EXPECT_EQ(q.divide(2, 1), 7u);
  EXPECT_EQ(q.divide_oracle(2, 1), 7u);
}

TEST(Quasifield, DivisionByZeroIsZero) {
  for (const Quasifield& q : families(5)) {
    for (Elem y = 0; y < 32; ++y) {
      EXPECT_EQ(q.divide(y, 0), 0u) << q.description();
      EXPECT_EQ(q.divide_oracle(y, 0), 0u);
    }
  }
}

TEST(Quasifield, ClosedFormMatchesOracle) {
  for (unsigned m : {3u, 5u, 7u}) {
    for (const Quasifield& q : families(m)) EXPECT_EQ(count_division_mismatches(q), 0u) << q.description();
  }
  const Field f(9);
  EXPECT_EQ(count_division_mismatches(Quasifield::kantor(f, Validation::Skip)), 0u);
  EXPECT_EQ(count_division_mismatches(Quasifield::dempwolff_muller(f, 5, Validation::Skip)), 0u);
  EXPECT_EQ(count_division_mismatches(Quasifield::knuth(f, 0x1ab, Validation::Skip)), 0u);
}

TEST(Quasifield, ClosedFormMatchesOracleUnderOtherModulus) {
  const Field f(5, 0x3b);
  EXPECT_EQ(count_division_mismatches(Quasifield::kantor(f, Validation::Skip)), 0u);
  EXPECT_EQ(count_division_mismatches(Quasifield::knuth(f, 3, Validation::Skip)), 0u);
  EXPECT_EQ(count_division_mismatches(Quasifield::dempwolff_muller(f, 3, Validation::Skip)), 0u);
}

TEST(Quasifield, KantorUncorrectedFormulaMismatchCount) {
  EXPECT_EQ(kantor_uncorrected_mismatches(Field(3)), 20u);
  EXPECT_GT(kantor_uncorrected_mismatches(Field(5)), 0u);
}

TEST(Quasifield, DivisionTableIsOracleTable) {
  const Quasifield q = Quasifield::knuth(Field(5), 7);
  EXPECT_EQ(division_table(q), division_table_oracle(q));
}

TEST(Quasifield, ParametricMapsArePermutations) {
  for (const Quasifield& q : families(5)) {
    for (Elem x = 1; x < 32; ++x) {
      const ParametricMap fx = parametric_map(q, x);
      std::set<Elem> image;
      for (Elem a = 0; a < 32; ++a) image.insert(fx(a));
      EXPECT_EQ(image.size(), 32u) << q.description() << " x=" << x;
      EXPECT_EQ(fx(0), 0u);
    }
  }
}

TEST(Axioms, FieldKnuthKantorArePresemifields) {
  for (unsigned m : {3u, 5u}) {
    const Field f(m);
    EXPECT_TRUE(verify_axioms(Quasifield::field_multiplication(f)).is_presemifield());
    EXPECT_TRUE(verify_axioms(Quasifield::kantor(f)).is_presemifield());
    for (Elem beta = 1; beta < f.size(); ++beta) {
      EXPECT_TRUE(verify_axioms(Quasifield::knuth(f, beta)).is_presemifield()) << beta;
    }
  }
}

TEST(Axioms, DempwolffMullerIsPrequasifieldOnly) {
  const AxiomReport r = verify_axioms(Quasifield::dempwolff_muller(Field(5), 3));
  EXPECT_TRUE(r.is_prequasifield());
  EXPECT_FALSE(r.right_distributive);
  EXPECT_FALSE(r.is_presemifield());
  EXPECT_FALSE(r.failures.empty());
  EXPECT_TRUE(verify_axioms(Quasifield::dempwolff_muller(Field(7), 3)).is_prequasifield());
}

TEST(Axioms, DegreeGuard) { EXPECT_THROW(verify_axioms(Quasifield::kantor(Field(9), Validation::Skip)), InvalidParameter); }
