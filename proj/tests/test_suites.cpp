#include <gtest/gtest.h>

#include "bq/suites.hpp"

using namespace bq;

class SuiteProperties : public ::testing::TestWithParam<std::string> {};

TEST_P(SuiteProperties, AllRecordsPassOnSmallSample) {
  for (std::uint64_t seed : {3u, 1234u}) {
    const auto r = suites::run_suite(GetParam(), seed, 6);
    EXPECT_FALSE(r.records.empty());
    for (const auto& rec : r.records) EXPECT_TRUE(rec.passed) << rec.check_id << " " << rec.params.dump() << " " << rec.payload.dump();
  }
}

INSTANTIATE_TEST_SUITE_P(AllSuites, SuiteProperties, ::testing::ValuesIn(suites::suite_ids()),
                         [](const auto& info) {
                           std::string s = info.param;
                           for (char& ch : s)
                             if (ch == '-') ch = '_';
                           return s;
                         });

TEST(SuiteRunner, DeterministicForFixedSeed) {
  const auto a = report::to_json(suites::run_suites({"c-family", "graded"}, 9, 5));
  const auto b = report::to_json(suites::run_suites({"c-family", "graded"}, 9, 5));
  EXPECT_EQ(a, b);
}

TEST(SuiteRunner, SeedChangesSamples) {
  const auto a = report::to_json(suites::run_suite("c-family", 1, 5));
  const auto b = report::to_json(suites::run_suite("c-family", 2, 5));
  EXPECT_NE(a["records"], b["records"]);
}

TEST(SuiteRunner, AllExpandsToEverySuite) {
  EXPECT_TRUE(suites::is_suite_id("all"));
  EXPECT_FALSE(suites::is_suite_id("nope"));
  const auto ids = suites::suite_ids();
  EXPECT_EQ(ids.size(), 13u);
}

TEST(SuiteRunner, RequestedPairIsRecorded) {
  suites::Options opt;
  opt.not_subgroup_pairs.emplace_back(Rational(5), Rational(-1, 2));
  const auto r = suites::run_suite("not-subgroup", 1, 4, opt);
  ASSERT_FALSE(r.records.empty());
  EXPECT_EQ(r.records.back().check_id, "closure_fails.requested");
  EXPECT_TRUE(r.records.back().passed);
}
