#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "support.hpp"
#include "ulrich/groebner.hpp"

using namespace ulrich;
using namespace testing_support;
using QIdeal = Ideal<RationalField>;

namespace {

QIdeal ideal(const char* text) { return QIdeal(qgens(text)); }

QIdeal random_ideal(std::mt19937& rng, int nvars, int ngens) {
  std::vector<QPoly> g;
  while (static_cast<int>(g.size()) < ngens) {
    auto p = random_poly(rng, nvars, 3, 3, 3);
    if (!p.is_zero()) g.push_back(p);
  }
  return QIdeal(g);
}

}  // namespace

TEST(GroebnerTest, BasisOfReductionIdeal) {
  auto I = ideal("(x*y, x^2 - y^2)");
  std::vector<QPoly> expected = qgens("(x*y, x^2 - y^2, y^3)");
  EXPECT_TRUE(ideals_equal(I, QIdeal(expected)));
  EXPECT_EQ(I.basis().size(), 3u);
  for (const auto& g : expected) EXPECT_TRUE(contains(I, g));
  EXPECT_EQ(normal_form(qp("x^2"), I), qp("y^2"));
  EXPECT_EQ(colength(I), 4u);
  EXPECT_TRUE(is_primary_to_origin(I));
}

TEST(GroebnerTest, UnitAndZeroIdeals) {
  auto U = ideal("(x + 1, x)");
  EXPECT_TRUE(U.is_unit());
  EXPECT_EQ(colength(U), 0u);
  QIdeal Z(RationalField{}, 2, {});
  EXPECT_TRUE(Z.is_zero());
  EXPECT_FALSE(colength(Z).has_value());
  EXPECT_EQ(dim_quotient(Z), 2);
}

TEST(GroebnerTest, SumProductPower) {
  auto m = QIdeal::maximal(RationalField{}, 2);
  EXPECT_TRUE(ideals_equal(ideal_power(m, 3), ideal("(x, y)^3")));
  EXPECT_TRUE(ideals_equal(ideal_product(ideal("(x)"), ideal("(y)")), ideal("(x*y)")));
  EXPECT_TRUE(ideals_equal(ideal_sum(ideal("(x)"), ideal("(y)")), m));
  EXPECT_TRUE(ideals_equal(maximal_ideal_power(RationalField{}, 2, 2), ideal("(x^2, x*y, y^2)")));
}

TEST(GroebnerTest, IntersectionAndQuotient) {
  EXPECT_TRUE(ideals_equal(ideal_intersect(ideal("(x)"), ideal("(y)")), ideal("(x*y)")));
  EXPECT_TRUE(ideals_equal(ideal_intersect(ideal("(x^2, y)"), ideal("(x, y^2)")), ideal("(x^2, x*y, y^2)")));
  EXPECT_TRUE(ideals_equal(ideal_quotient(ideal("(x^2, x*y)"), qp("x")), ideal("(x, y)")));
  EXPECT_TRUE(ideals_equal(ideal_quotient(ideal("(x, y)^3"), ideal("(x, y)")), ideal("(x, y)^2")));
}

TEST(GroebnerTest, ExactDivision) {
  EXPECT_EQ(exact_division(qp("x^3 - y^3"), qp("x - y")), qp("x^2 + x*y + y^2"));
  EXPECT_THROW(exact_division(qp("x^2 + 1"), qp("x")), std::domain_error);
}

TEST(GroebnerTest, ColengthFromStandardMonomials) {
  EXPECT_EQ(colength(ideal("(x^2, y^3)")), 6u);
  EXPECT_EQ(colength(ideal("(x, y)^4")), 10u);
  EXPECT_FALSE(colength(ideal("(x^2)")).has_value());
  auto sm = standard_monomials(ideal("(x^2, x*y, y^2)"));
  ASSERT_TRUE(sm.has_value());
  EXPECT_EQ(sm->size(), 3u);
}

TEST(GroebnerTest, PrimaryToOriginRejectsOtherPoints) {
  // (x^2 - x, y) has colength 2 but is supported at two points.
  auto I = ideal("(x^2 - x, y)");
  EXPECT_EQ(colength(I), 2u);
  EXPECT_FALSE(is_primary_to_origin(I));
}

TEST(GroebnerTest, RelativeLength) {
  auto m = QIdeal::maximal(RationalField{}, 2);
  EXPECT_EQ(relative_length(m, ideal_power(m, 2)), 2u);
  EXPECT_EQ(relative_length(ideal("(x, y^2)"), ideal("(x^2, y^2, x*y)")), 1u);
  EXPECT_THROW(relative_length(ideal("(x^2)"), ideal("(x)")), std::invalid_argument);
}

TEST(GroebnerTest, SamuelMultiplicity) {
  auto e = ideal_multiplicity(ideal("(x^2, y^3)"));
  EXPECT_TRUE(e.stabilized);
  EXPECT_EQ(e.value, 6);
  EXPECT_EQ(ideal_multiplicity(QIdeal::maximal(RationalField{}, 2)).value, 1);
  EXPECT_EQ(ideal_multiplicity(ideal("(x*y, x^2 - y^2)")).value, 4);
  Ambient xyz({"x", "y", "z"});
  EXPECT_EQ(ideal_multiplicity(QIdeal(qgens("(x, y, z)^2", xyz)), 30).value, 8);
}

TEST(GroebnerTest, StabilizedDifferenceNeedsARun) {
  std::vector<long> quad{1, 4, 9, 16, 25, 36};
  auto c = stabilized_difference(quad, 2);
  EXPECT_TRUE(c.stabilized);
  EXPECT_EQ(c.value, 2);
  std::vector<long> short_table{1, 4, 9};
  EXPECT_FALSE(stabilized_difference(short_table, 2).stabilized);
}

TEST(GroebnerTest, PrimeFieldBasis) {
  PrimeField F(7);
  Ambient A = Ambient::xy();
  Ideal<PrimeField> I(F, 2, parse_generators<PrimeField>("(x*y, x^2 - y^2)", A, F));
  EXPECT_EQ(colength(I), 4u);
  EXPECT_EQ(to_string(normal_form(parse_polynomial<PrimeField>("x^2", A, F), I), A), "y^2");
}

// ---------------------------------------------------------------------------
// Properties on random ideals.

TEST(GroebnerProperty, BuchbergerCriterionHolds) {
  std::mt19937 rng(21);
  for (int i = 0; i < 40; ++i) {
    auto I = random_ideal(rng, 3, 3);
    EXPECT_TRUE(satisfies_buchberger_criterion(I));
    for (const auto& g : I.generators()) EXPECT_TRUE(contains(I, g));
  }
}

TEST(GroebnerProperty, NormalFormIdempotentAndCongruent) {
  std::mt19937 rng(22);
  for (int i = 0; i < 40; ++i) {
    auto I = random_ideal(rng, 2, 2);
    for (int k = 0; k < 5; ++k) {
      auto f = random_poly(rng, 2, 5, 5);
      auto r = normal_form(f, I);
      EXPECT_EQ(normal_form(r, I), r);
      EXPECT_TRUE(contains(I, f - r));
    }
  }
}

TEST(GroebnerProperty, MembershipAgreesWithLinearAlgebra) {
  std::mt19937 rng(23);
  for (int i = 0; i < 40; ++i) {
    auto I = random_ideal(rng, 2, 2);
    std::vector<oracle::Poly2> gens;
    for (const auto& g : I.generators()) gens.push_back(oracle::from_library(g));
    // Constructed members: cofactors of total degree ≤ 4.
    QPoly member(RationalField{}, 2);
    for (const auto& g : I.generators()) member += random_poly(rng, 2, 3, 2) * g;
    EXPECT_TRUE(contains(I, member));
    EXPECT_TRUE(oracle::brute_member(gens, oracle::from_library(member), 4));
    // Random elements: a low-degree certificate implies membership, and a
    // nonzero normal form rules out every certificate.
    for (int k = 0; k < 4; ++k) {
      auto f = random_poly(rng, 2, 4, 4);
      bool brute = oracle::brute_member(gens, oracle::from_library(f), 3);
      if (brute) {
        EXPECT_TRUE(contains(I, f));
      }
      if (!contains(I, f)) {
        EXPECT_FALSE(brute);
      }
    }
  }
}

TEST(GroebnerProperty, EqualityIsAnEquivalence) {
  std::mt19937 rng(24);
  for (int i = 0; i < 20; ++i) {
    auto I = random_ideal(rng, 2, 2);
    const auto& g = I.generators();
    // Same ideal, different generators.
    auto J = QIdeal({g[0] + g[1], g[1]});
    auto K = QIdeal({g[0] + g[1] * random_poly(rng, 2, 2, 1), g[1], g[0]});
    EXPECT_TRUE(ideals_equal(I, I));
    EXPECT_EQ(ideals_equal(I, J), ideals_equal(J, I));
    EXPECT_TRUE(ideals_equal(I, J));
    EXPECT_TRUE(ideals_equal(J, K));
    EXPECT_TRUE(ideals_equal(I, K));
    auto L = QIdeal({g[0]});
    if (!contains(L, g[1])) {
      EXPECT_FALSE(ideals_equal(I, L));
    }
  }
}

TEST(GroebnerProperty, FiniteColengthIffZeroDimensional) {
  std::mt19937 rng(25);
  for (int i = 0; i < 40; ++i) {
    auto I = random_ideal(rng, 2, 1 + i % 3);
    if (I.is_unit()) {
      EXPECT_EQ(colength(I), 0u);
      continue;
    }
    EXPECT_EQ(colength(I).has_value(), dim_quotient(I) <= 0) << to_string(I.generators(), Ambient::xy());
  }
}
