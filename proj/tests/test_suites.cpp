#include <gtest/gtest.h>

#include "hyclif/suites.hpp"

using namespace hyclif;

namespace {

TEST(Suites, EachSuitePassesAtSmallSize) {
  for (const auto& name : suite_names())
    for (int n = 1; n <= 2; ++n) {
      const SuiteReport r = run_suite(name, n, 10, 7);
      EXPECT_TRUE(r.all_passed()) << r.text();
      EXPECT_FALSE(r.results.empty()) << name;
    }
}

TEST(Suites, ContractionsSingleTrialIsQuick) {
  const auto start = std::chrono::steady_clock::now();
  const SuiteReport r = run_suite("contractions", 1, 1, 7);
  EXPECT_TRUE(r.all_passed());
  EXPECT_LT(std::chrono::steady_clock::now() - start, std::chrono::seconds(1));
}

TEST(Suites, ReportsAreDeterministic) {
  const std::string a = run_suite("all", 2, 5, 99, 1).text();
  const std::string b = run_suite("all", 2, 5, 99, 4).text();
  EXPECT_EQ(a, b);
}

TEST(Suites, BadArguments) {
  EXPECT_THROW(run_suite("bogus", 2, 1, 1), Error);
  EXPECT_THROW(run_suite("all", 4, 1, 1), Error);
  EXPECT_THROW(run_suite("all", 2, 0, 1), Error);
}

TEST(Suites, CounterexampleIsReported) {
  using namespace suite_detail;
  const auto ctx = AlgebraContext::make(1);
  const auto e1 = Multivecfor::e(ctx, 1);
  const Outcome bad = same(e1, -e1, {{"u", e1}});
  ASSERT_TRUE(bad.has_value());
  EXPECT_NE(bad->find("u = e1"), std::string::npos);
}

}  // namespace
