#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "support.hpp"
#include "ulrich/koszul.hpp"
#include "ulrich/semigroup.hpp"

using namespace ulrich;
using namespace testing_support;
using QIdeal = Ideal<RationalField>;
using QMod = ModuleRep<RationalField>;
using QFin = FiniteLengthModule<RationalField>;
using QMat = DenseMatrix<RationalField>;

namespace {

QIdeal ideal(const char* text) { return QIdeal(qgens(text)); }

QIdeal to_ideal(const oracle::RandomIdeal& r) {
  std::vector<QPoly> gens;
  for (const auto& g : r.gens) {
    QPoly p(RationalField{}, 2);
    for (const auto& [e, c] : g) p += QPoly::monomial(RationalField{}, 2, ExponentVector{e.first, e.second}, c);
    gens.push_back(p);
  }
  return QIdeal(gens);
}

// x acts by a random strictly upper-triangular matrix A, y by a polynomial in A.
QFin random_nilpotent_module(std::mt19937& rng) {
  RationalField Q;
  std::uniform_int_distribution<int> sz(1, 6), co(-2, 2);
  int n = sz(rng);
  QMat A(Q, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) A(i, j) = co(rng);
  QMat B = A.scaled(co(rng)) + (A * A).scaled(co(rng));
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
  return QFin(Q, labels, {A, B});
}

std::vector<oracle::Point> plane(const AffineSemigroup& g) {
  std::vector<oracle::Point> out;
  for (const auto& e : g.generators()) out.push_back({e[0], e[1]});
  return out;
}

}  // namespace

TEST(KoszulTest, ResidueFieldAndFreeModule) {
  auto x = X(), y = Y();
  EXPECT_EQ(koszul_cyclic(x, y, ideal("(x, y)")), (KoszulTally{1, 2, 1}));
  EXPECT_EQ(koszul(QMod::free(1), x, y), (KoszulTally{1, 0, 0}));
  EXPECT_EQ(koszul(QMod::free(3), x.pow(2), y.pow(2)), (KoszulTally{12, 0, 0}));
  EXPECT_EQ(koszul_finlen(QFin::quotient(ideal("(x, y)")), x, y), (KoszulTally{1, 2, 1}));
}

TEST(KoszulTest, CyclicModules) {
  auto x = X(), y = Y();
  // S/(xy) is one-dimensional: h1 = h0 − e.
  EXPECT_EQ(koszul_cyclic(x.pow(2), y.pow(2), ideal("(x*y)")), (KoszulTally{3, 3, 0}));
  EXPECT_EQ(koszul_cyclic(x, y, ideal("(x, y)^2")), (KoszulTally{1, 3, 2}));
  // The unit ideal gives the zero module.
  EXPECT_EQ(koszul_cyclic(x, y, ideal("(1)")), (KoszulTally{0, 0, 0}));
}

TEST(KoszulTest, IdealModules) {
  auto x = X(), y = Y();
  EXPECT_EQ(koszul_ideal_module(x, y, ideal("(x, y)")), (KoszulTally{2, 1, 0}));
  EXPECT_EQ(koszul_ideal_module(x, y, ideal("(x)")), (KoszulTally{1, 0, 0}));
  EXPECT_EQ(koszul_ideal_module(x, y, ideal("(x, y)^2")), (KoszulTally{3, 2, 0}));
  EXPECT_EQ(ideal_minimal_generators(ideal("(x, y)^2")), 3);
  EXPECT_THROW(QMod::ideal(QIdeal(RationalField{}, 2, {})), std::invalid_argument);
}

TEST(KoszulTest, FiniteLengthModuleValidation) {
  RationalField Q;
  QMat A(Q, 2, 2), B(Q, 2, 2);
  A(0, 1) = 1;
  B(1, 0) = 1;
  EXPECT_THROW(QFin(Q, {"a", "b"}, {A, B}), std::invalid_argument);
  EXPECT_THROW(QFin(Q, {"a", "b"}, {QMat::identity(Q, 2), A}), std::invalid_argument);
  auto M = QFin::quotient(ideal("(x^2, y^3)"));
  EXPECT_EQ(M.dimension(), 6);
  EXPECT_EQ(M.minimal_generator_count(), 1);
}

TEST(KoszulProperty, EulerCharacteristicVanishesOnFiniteLength) {
  std::mt19937 rng(41);
  auto x = X(), y = Y();
  std::vector<std::pair<QPoly, QPoly>> sops{{x, y}, {x.pow(2), y}, {x + y, x - y}, {x.pow(2), y.pow(2)}};
  int count = 0;
  while (count < 50) {
    QFin M = (count % 2 == 0) ? random_nilpotent_module(rng) : QFin::quotient(to_ideal(oracle::random_ideal(rng)));
    if (count % 5 == 4) M = direct_sum(M, random_nilpotent_module(rng));
    const auto& [f, g] = sops[count % sops.size()];
    auto t = koszul_finlen(M, f, g);
    EXPECT_EQ(t.chi(), 0);
    EXPECT_GE(t.chi1(), 0);
    EXPECT_EQ(t.h0 + t.h2, t.h1);
    ++count;
  }
}

TEST(KoszulProperty, CyclicHomologyMatchesGradedLinearAlgebra) {
  std::mt19937 rng(42);
  auto x = X(), y = Y();
  std::vector<std::pair<QPoly, QPoly>> sops{{x, y}, {x.pow(2), y.pow(2)}, {x + y, x - y}, {x.pow(2), y}};
  int done = 0;
  while (done < 25) {
    auto r = oracle::random_ideal(rng);
    auto J = to_ideal(r);
    auto len = colength(J);
    if (!len || *len > 30 || *len == 0) continue;
    const auto& [f, g] = sops[done % sops.size()];
    auto lib = koszul_cyclic(f, g, J);
    auto ref = oracle::koszul_on_quotient(r.gens, oracle::from_library(f), oracle::from_library(g), r.N);
    EXPECT_EQ(lib.h0, ref.h0) << to_string(J.generators(), Ambient::xy());
    EXPECT_EQ(lib.h1, ref.h1) << to_string(J.generators(), Ambient::xy());
    EXPECT_EQ(lib.h2, ref.h2) << to_string(J.generators(), Ambient::xy());
    ++done;
  }
}

TEST(KoszulProperty, DirectSumsAreAdditive) {
  std::mt19937 rng(43);
  auto x = X(), y = Y();
  for (int i = 0; i < 10; ++i) {
    auto J = to_ideal(oracle::random_ideal(rng));
    auto A = QMod::cyclic(J), B = QMod::ideal(ideal("(x, y)^2")), C = QMod::free(2);
    auto sum = koszul(A + B + C, x, y);
    EXPECT_EQ(sum, koszul(A, x, y) + koszul(B, x, y) + koszul(C, x, y));
    auto M = random_nilpotent_module(rng), N = random_nilpotent_module(rng);
    EXPECT_EQ(koszul_finlen(direct_sum(M, N), x, y), koszul_finlen(M, x, y) + koszul_finlen(N, x, y));
  }
}

TEST(GradedKoszulTest, MonomialModulesOverR2) {
  auto R = no_ulrich_semigroup(2);
  LatticePoint a{2, 0, 0, 0}, b{0, 2, 0, 0};
  auto self = koszul_monomial_R(MonomialModule(R, {{0, 0, 0, 0}}), a, b);
  EXPECT_EQ(self.tally, (KoszulTally{6, 2, 0}));
  auto S = MonomialModule(R, {{0, 0, 0, 0}}).saturation();
  EXPECT_EQ(koszul_monomial_R(S, a, b).tally, koszul_cyclic(X().pow(2), Y().pow(2), QIdeal(RationalField{}, 2, {})));
  EXPECT_EQ(koszul_monomial_R(MonomialModule(R, {}), a, b).tally, (KoszulTally{0, 0, 0}));
}

TEST(GradedKoszulTest, RejectsNonParameters) {
  auto R = no_ulrich_semigroup(2);
  MonomialModule M(R, {{0, 0, 0, 0}});
  EXPECT_THROW(koszul_monomial_R(M, {1, 0, 0, 0}, {0, 2, 0, 0}), std::invalid_argument);
  EXPECT_THROW(koszul_monomial_R(M, {2, 0, 0, 0}, {1, 1, 0, 0}), std::invalid_argument);
}

TEST(GradedKoszulTest, ColonLengthEqualsH1AgainstLatticeOracle) {
  auto R = no_ulrich_semigroup(2);
  const auto rg = plane(R);
  struct Case {
    std::vector<LatticePoint> gens;
    int t;
  };
  std::vector<Case> cases{
      {{{0, 0, 0, 0}}, 1},
      {{{0, 0, 0, 0}}, 2},
      {{{2, 0, 0, 0}}, 1},
      {{{2, 0, 0, 0}, {0, 2, 0, 0}, {1, 1, 0, 0}}, 1},
      {{{0, 0, 0, 0}, {1, 0, 0, 0}}, 1},
      {{{-1, 1, 0, 0}, {3, 0, 0, 0}}, 2},
      {{{0, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}}, 1},
  };
  for (const auto& c : cases) {
    MonomialModule M(R, c.gens);
    auto lib = colon_module(M, c.t, LatticePoint{2, 0, 0, 0}, LatticePoint{0, 2, 0, 0});
    std::vector<oracle::Point> g;
    for (const auto& p : c.gens) g.push_back({p[0], p[1]});
    oracle::PlaneModule ref(rg, g, 60);
    auto count = oracle::colon_and_h1({ref}, {2 * c.t, 0}, {0, 2 * c.t}, -12, 30);
    EXPECT_EQ(lib.length, count.colon);
    EXPECT_EQ(lib.h1, count.h1);
    EXPECT_EQ(count.colon, count.h1);
    EXPECT_TRUE(lib.agrees);
  }
}

TEST(GradedKoszulTest, ColonDistributesOverSums) {
  auto R = no_ulrich_semigroup(2);
  MonomialModule M(R, {{0, 0, 0, 0}}), N(R, {{4, 0, 0, 0}});
  LatticePoint a{2, 0, 0, 0}, b{0, 2, 0, 0};
  auto both = colon_module(std::vector<MonomialModule>{M, N}, 1, a, b);
  EXPECT_EQ(both.length, colon_module(M, 1, a, b).length + colon_module(N, 1, a, b).length);
  EXPECT_TRUE(both.agrees);
  // An S-module summand contributes nothing.
  auto S = M.saturation();
  EXPECT_EQ(colon_module(S, 1, a, b).length, 0);
}
