#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "support.hpp"
#include "ulrich/groebner.hpp"
#include "ulrich/semigroup.hpp"

using namespace ulrich;
using namespace testing_support;

namespace {

std::vector<oracle::Point> plane_gens(const AffineSemigroup& g) {
  std::vector<oracle::Point> out;
  for (const auto& e : g.generators()) out.push_back({e[0], e[1]});
  return out;
}

}  // namespace

TEST(SemigroupTest, ParseAndPrint) {
  auto g = parse_semigroup("sg 2 {(2,0),(3,0),(1,1),(0,2),(0,3),(2,1),(1,2)}");
  EXPECT_EQ(g, no_ulrich_semigroup(2));
  EXPECT_EQ(parse_semigroup(to_string(g)), g);
  EXPECT_EQ(parse_semigroup("{(3),(5)}").dim(), 1);
  EXPECT_THROW(parse_semigroup("sg 2 {(1,0,0)}"), std::invalid_argument);
  EXPECT_THROW(parse_semigroup("sg 2 {(0,0)}"), std::invalid_argument);
  EXPECT_THROW(parse_semigroup("sg 2 {(1,"), std::invalid_argument);
}

TEST(SemigroupTest, GapSetOfSmallestFamilyMember) {
  auto gs = find_gap_set(no_ulrich_semigroup(2));
  ASSERT_TRUE(gs.finite);
  std::set<ExponentVector> got(gs.gaps.begin(), gs.gaps.end());
  std::set<ExponentVector> want{ExponentVector{1, 0}, ExponentVector{0, 1}};
  EXPECT_EQ(got, want);
}

TEST(SemigroupTest, GapSetsAgreeWithEnumeration) {
  for (int n = 2; n <= 5; ++n) {
    auto g = no_ulrich_semigroup(n);
    auto gs = find_gap_set(g);
    ASSERT_TRUE(gs.finite) << n;
    auto brute = oracle::gaps(plane_gens(g), 6 * n + 6);
    std::set<oracle::Point> want(brute.begin(), brute.end()), got;
    for (const auto& e : gs.gaps) got.insert({e[0], e[1]});
    EXPECT_EQ(got, want) << n;
    // A wider window finds nothing new.
    EXPECT_EQ(oracle::gaps(plane_gens(g), 10 * n + 10).size(), brute.size()) << n;
  }
}

TEST(SemigroupTest, NumericalSemigroupGaps) {
  auto gs = find_gap_set(parse_semigroup("{(3),(5)}"));
  ASSERT_TRUE(gs.finite);
  std::vector<int> got;
  for (const auto& e : gs.gaps) got.push_back(e[0]);
  std::sort(got.begin(), got.end());
  EXPECT_EQ(got, (std::vector<int>{1, 2, 4, 7}));
}

TEST(SemigroupTest, VeroneseHasInfiniteGapSet) {
  auto gs = find_gap_set(parse_semigroup("sg 2 {(2,0),(1,1),(0,2)}"));
  EXPECT_FALSE(gs.finite);
  EXPECT_FALSE(find_gap_set(parse_semigroup("sg 2 {(1,0),(1,1)}")).finite);
}

TEST(SemigroupTest, MembershipCertificates) {
  auto g = no_ulrich_semigroup(3);
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> ex(0, 9);
  for (int i = 0; i < 200; ++i) {
    ExponentVector v{ex(rng), ex(rng)};
    auto c = sg_member(g, v);
    if (!c.member) continue;
    ExponentVector sum;
    for (std::size_t k = 0; k < c.decomposition.size(); ++k)
      for (int j = 0; j < c.decomposition[k]; ++j) sum = sum + g.generators()[k];
    EXPECT_EQ(sum, v);
  }
  EXPECT_TRUE(sg_member(g, ExponentVector{1, 1}).member);
  EXPECT_FALSE(sg_member(g, ExponentVector{2, 0}).member);
  EXPECT_TRUE(sg_member(g, ExponentVector{0, 0}).member);
}

TEST(SemigroupTest, OrderIsSuperadditive) {
  for (int n = 2; n <= 3; ++n) {
    auto g = no_ulrich_semigroup(n);
    OrderTable t(g, 16);
    std::vector<LatticePoint> pts;
    t.for_each_point([&](const LatticePoint& p) {
      if (t.member(p) && lattice_degree(p) <= 8) pts.push_back(p);
    });
    for (const auto& p : pts)
      for (const auto& q : pts) EXPECT_GE(t.ord(p + q), t.ord(p) + t.ord(q));
  }
}

TEST(SemigroupTest, HilbertSamuelIsNondecreasing) {
  for (const auto& g : {no_ulrich_semigroup(2), no_ulrich_semigroup(4), veronese_face_semigroup(2),
                        parse_semigroup("{(3),(5)}")}) {
    auto t = hilbert_samuel_table(g, 12);
    for (std::size_t i = 1; i < t.size(); ++i) EXPECT_LE(t[i - 1], t[i]);
  }
  EXPECT_EQ(hilbert_samuel(no_ulrich_semigroup(2), 2), 8);
  EXPECT_EQ(nu_max_ideal(no_ulrich_semigroup(2)), 7);
}

TEST(SemigroupTest, MultiplicityEqualsReductionColength) {
  RationalField Q;
  auto x = X(), y = Y();
  for (int n = 2; n <= 4; ++n) {
    auto e = multiplicity(no_ulrich_semigroup(n));
    ASSERT_TRUE(e.stabilized);
    Ideal<RationalField> I(Q, 2, {x * y, x.pow(n) - y.pow(n)});
    EXPECT_EQ(static_cast<std::size_t>(e.value), *colength(I)) << n;
    EXPECT_EQ(e.value, 2 * n);
  }
  EXPECT_EQ(multiplicity(parse_semigroup("{(3),(5)}")).value, 3);
}

TEST(SemigroupTest, ThreeDimensionalFaceFamily) {
  for (int n = 2; n <= 3; ++n) {
    auto T = veronese_face_semigroup(n);
    auto e = multiplicity(T);
    ASSERT_TRUE(e.stabilized);
    EXPECT_EQ(e.value, (n + 1) * (n + 1));
    EXPECT_EQ(localize_at_face(T).image, no_ulrich_semigroup(n));
  }
  EXPECT_THROW(localize_at_face(no_ulrich_semigroup(2)), std::invalid_argument);
}

TEST(MonomialModuleTest, RingAsModule) {
  auto R = no_ulrich_semigroup(2);
  MonomialModule M(R, {{0, 0, 0, 0}});
  EXPECT_EQ(M.minimal_generator_count(), 1);
  EXPECT_EQ(M.multiplicity().value, 4);
  EXPECT_EQ(M.saturation_quotient_basis().size(), 2u);
  EXPECT_FALSE(M.contains({1, 0, 0, 0}));
  EXPECT_TRUE(M.saturation_contains({1, 0, 0, 0}));
  auto MS = M.saturation();
  EXPECT_EQ(MS.minimal_generator_count(), 3);
  EXPECT_EQ(MS.multiplicity().value, 4);
  EXPECT_EQ(MS.saturation_generator_count(), 1);
  EXPECT_TRUE(MS.saturation_quotient_basis().empty());
}

TEST(MonomialModuleTest, ZeroModule) {
  MonomialModule Z(no_ulrich_semigroup(2), {});
  EXPECT_EQ(Z.minimal_generator_count(), 0);
  EXPECT_FALSE(Z.contains({0, 0, 0, 0}));
  EXPECT_EQ(Z.multiplicity().value, 0);
}

TEST(MonomialModuleTest, FractionalGenerators) {
  auto R = no_ulrich_semigroup(2);
  MonomialModule M(R, {{-1, 1, 0, 0}, {2, 0, 0, 0}});
  EXPECT_TRUE(M.contains({1, 3, 0, 0}));
  EXPECT_FALSE(M.contains({-1, 2, 0, 0}));
  EXPECT_EQ(M.minimal_generator_count(), 2);
  EXPECT_EQ(M.multiplicity().value, 4);
}
