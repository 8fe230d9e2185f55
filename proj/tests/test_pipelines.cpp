#include <gtest/gtest.h>

#include "ulrich/pipelines.hpp"

using namespace ulrich;

namespace {

std::string family_ring_text(int n) {
  auto R = no_ulrich_ring<RationalField>(n);
  auto g = to_string(R.generators(), R.ambient());
  return "ring ambient=(x,y) gens=[" + g.substr(1, g.size() - 2) + "]";
}

const Check* find(const Report& r, const std::string& anchor) {
  for (const auto& c : r.checks)
    if (c.anchor == anchor) return &c;
  return nullptr;
}

}  // namespace

TEST(ReportTest, JsonIsDeterministicAndOrdered) {
  auto a = verify_no_ulrich_family<RationalField>(2).to_json().dump(2);
  auto b = verify_no_ulrich_family<RationalField>(2).to_json().dump(2);
  EXPECT_EQ(a, b);
  auto j = verify_no_ulrich_family<RationalField>(2).to_json();
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"schema", "pipeline", "inputs", "checks", "verdict", "field"}));
  EXPECT_EQ(j["schema"], kReportSchema);
}

TEST(ReportTest, RequiredChecksDecide) {
  Report r;
  r.add("a", "a", true);
  r.add("b", "b", false, {}, false);
  EXPECT_TRUE(r.required_pass());
  r.add_verdict("c", "c", "INCONCLUSIVE");
  EXPECT_FALSE(r.required_pass());
  EXPECT_TRUE(r.any_inconclusive());
  EXPECT_NE(r.to_text().find("INCONCLUSIVE"), std::string::npos);
}

TEST(Verify35Test, FamilyHasNoUlrichModules) {
  for (int n = 2; n <= 5; ++n) {
    auto rep = verify_no_ulrich_family<RationalField>(n);
    EXPECT_EQ(rep.verdict, "NO_ULRICH") << rep.to_text();
    const auto* crit = find(rep, "ulrich-criterion");
    ASSERT_NE(crit, nullptr);
    EXPECT_EQ(crit->verdict, "PASS");
    EXPECT_NE(crit->certificate["witness_normal_form"], "0");
  }
}

TEST(Verify35Test, OutsideRangeIsAPreconditionFailure) {
  auto rep = verify_no_ulrich_family<RationalField>(1);
  EXPECT_EQ(rep.verdict, "PRECONDITION_FAILED");
  EXPECT_EQ(rep.checks.back().certificate["failed_clause"], "f not integral over I");
  EXPECT_EQ(verify_no_ulrich_family<RationalField>(0).verdict, "PRECONDITION_FAILED");
}

TEST(Verify35Test, PrimeFieldAgrees) {
  auto rep = verify_no_ulrich_family<PrimeField>(3, PrimeField(101));
  EXPECT_EQ(rep.verdict, "NO_ULRICH");
  EXPECT_EQ(rep.field, "fp:101");
}

TEST(Verify51Test, FamilyRingsFailEveryCondition) {
  for (int n = 2; n <= 3; ++n) {
    auto rep = verify_weak_lim_ulrich_equivalence<RationalField>(family_ring_text(n));
    EXPECT_EQ(rep.verdict, "ALL_FALSE") << rep.to_text();
    for (const char* c : {"condition-a", "condition-b", "condition-c"}) {
      const auto* k = find(rep, c);
      ASSERT_NE(k, nullptr);
      EXPECT_EQ(k->verdict, "DEDUCED_FALSE");
    }
  }
}

TEST(Verify51Test, PolynomialRingAndVeronese) {
  EXPECT_EQ(verify_weak_lim_ulrich_equivalence<RationalField>("ring ambient=(x,y) gens=[x, y]").verdict, "ALL_TRUE");
  auto v = verify_weak_lim_ulrich_equivalence<RationalField>("ring ambient=(x,y) gens=[x^2, x*y, y^2]");
  EXPECT_EQ(v.verdict, "REFUSED");
  EXPECT_EQ(v.checks.back().certificate["reason"], "hypotheses not satisfied");
  auto t = verify_weak_lim_ulrich_equivalence<RationalField>("ring ambient=(x,y) gens=[x + y, x*y]");
  EXPECT_EQ(t.verdict, "REFUSED");
}

TEST(Verify51Test, ExplicitReductionIsUsed) {
  auto rep = verify_weak_lim_ulrich_equivalence<RationalField>(family_ring_text(2) + " reduction=[x*y, x^2 - y^2]");
  EXPECT_EQ(rep.verdict, "ALL_FALSE");
  EXPECT_EQ(rep.inputs["reduction"], "(x*y, x^2 - y^2)");
}

TEST(Verify51Test, AgreesWithFamilyVerifierOnConditionD) {
  for (int n = 2; n <= 3; ++n) {
    auto a = verify_no_ulrich_family<RationalField>(n);
    auto b = verify_weak_lim_ulrich_equivalence<RationalField>(family_ring_text(n));
    bool d35 = find(a, "ulrich-criterion")->verdict == "FAIL";
    bool d51 = find(b, "condition-d")->verdict == "TRUE";
    EXPECT_EQ(d35, d51);
  }
}

TEST(Verify37Test, LocalizesToFamily) {
  for (int n = 2; n <= 3; ++n) {
    auto rep = verify_localized_family<RationalField>(n);
    EXPECT_EQ(rep.verdict, "LOCALIZES_TO_NO_ULRICH") << rep.to_text();
    ASSERT_EQ(rep.attached.size(), 2u);
    EXPECT_EQ(rep.attached[0].verdict, "NO_ULRICH");
    EXPECT_EQ(rep.attached[1].verdict, "ALL_FALSE");
    EXPECT_TRUE(rep.to_json().contains("attached"));
  }
  auto one = verify_localized_family<RationalField>(1);
  EXPECT_EQ(one.verdict, "NO_ULRICH_UNAVAILABLE");
  EXPECT_TRUE(one.attached.empty());
}
