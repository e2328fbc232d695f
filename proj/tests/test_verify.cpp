#include <gtest/gtest.h>

#include "qcbound/verify.hpp"

using namespace qcbound;

namespace {

std::string failures_of(const VerificationReport& r) {
  std::string s;
  for (const auto& c : r.cases)
    if (!c.pass) s += c.name + " (" + std::to_string(c.observed) + ") " + c.note + "\n";
  return s;
}

}  // namespace

TEST(Report, RelationsAndMargins) {
  VerificationReport r;
  r.add("le", 1.0, Relation::LessEqual, 1.0 - 1e-9, 1e-8, Provenance::Paper);
  r.add("ge", 0.5, Relation::GreaterEqual, 0.6, 1e-8, Provenance::Derived);
  r.add("eq", 2.0, Relation::Equal, 2.0 + 1e-13, 1e-12, Provenance::Trivial);
  r.add("nan", std::nan(""), Relation::LessEqual, 1.0, 1.0, Provenance::Derived);
  ASSERT_EQ(r.cases.size(), 4u);
  EXPECT_TRUE(r.cases[0].pass);
  EXPECT_FALSE(r.cases[1].pass);
  EXPECT_NEAR(r.cases[1].margin, -0.1, 1e-15);
  EXPECT_TRUE(r.cases[2].pass);
  EXPECT_FALSE(r.cases[3].pass);
  EXPECT_EQ(r.failures(), 2);
  r.add_error("boom", std::runtime_error("x"), Provenance::Paper);
  EXPECT_EQ(r.failures(), 3);
}

TEST(Report, JsonCarriesProvenanceTags) {
  VerificationReport r;
  r.suite = "demo";
  r.seed = 7;
  r.add("a", 1.0, Relation::Equal, 1.0, 0.0, Provenance::Paper);
  r.add("b", std::numeric_limits<double>::infinity(), Relation::LessEqual, 0.0, 0.0,
        Provenance::Derived);
  const Json j = to_json(r);
  EXPECT_EQ(j["suite"], "demo");
  EXPECT_EQ(j["seed"], 7);
  EXPECT_EQ(j["passed"], 1);
  EXPECT_EQ(j["failed"], 1);
  EXPECT_EQ(j["cases"][0]["provenance"], "PAPER");
  EXPECT_EQ(j["cases"][1]["provenance"], "DERIVED");
  EXPECT_EQ(j["cases"][1]["observed"], "inf");
  EXPECT_EQ(j["cases"][0]["status"], "pass");
}

TEST(Suites, SmallRandomSuitesPassAndAreSeeded) {
  VerificationReport a, b;
  suites::dpt(a, 11, 40);
  suites::dpt(b, 11, 40);
  EXPECT_TRUE(a.all_pass()) << failures_of(a);
  ASSERT_EQ(a.cases.size(), b.cases.size());
  for (std::size_t i = 0; i < a.cases.size(); ++i) EXPECT_EQ(a.cases[i].observed, b.cases[i].observed);

  VerificationReport c;
  suites::dpi(c, 12, 25);
  suites::dmax_additivity(c, 13, 20);
  suites::nonlock(c, 14, 20);
  suites::privacy(c, 15, 20);
  EXPECT_TRUE(c.all_pass()) << failures_of(c);
}

TEST(Suites, DifferentSeedsGiveDifferentInstances) {
  VerificationReport a, b;
  suites::dmax_additivity(a, 1, 5);
  suites::dmax_additivity(b, 2, 5);
  EXPECT_NE(a.cases[0].observed, b.cases[0].observed);
}

TEST(Suites, AppendixAndPrivateBit) {
  const VerificationReport ap = run_suite("appendix", 42);
  EXPECT_TRUE(ap.all_pass()) << failures_of(ap);
  const VerificationReport pb = run_suite("pbit", 42);
  EXPECT_TRUE(pb.all_pass()) << failures_of(pb);
  bool has_paper = false;
  for (const auto& c : pb.cases) has_paper = has_paper || c.provenance == Provenance::Paper;
  EXPECT_TRUE(has_paper);
}

TEST(Suites, IsotropicOracleForOmega2) {
  EXPECT_NEAR(suites::omega2_isotropic_oracle(), 1.0, 1e-9);
}

TEST(Suites, UnknownNameThrows) {
  EXPECT_THROW(run_suite("nope", 1), DomainError);
  EXPECT_EQ(suite_names().size(), 9u);
}
