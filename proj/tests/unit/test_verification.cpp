#include "supersdet/verification.hpp"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

using namespace supersdet;

TEST(Verification, EverySuitePasses) {
  for (const auto& name : suite_names()) {
    auto r = run_suite(name);
    EXPECT_EQ(r.suite, name);
    EXPECT_FALSE(r.checks.empty()) << name;
    for (const auto& c : r.checks) EXPECT_NE(c.status, CheckStatus::Fail) << name << ": " << c.name << " " << c.detail;
    EXPECT_TRUE(r.passed()) << name;
  }
}

TEST(Verification, KnownChecksExplainThemselves) {
  int known = 0;
  for (const auto& r : run_suites("all")) {
    for (const auto& c : r.checks) {
      if (c.status != CheckStatus::Known) continue;
      ++known;
      EXPECT_FALSE(c.detail.empty()) << c.name;
    }
  }
  EXPECT_GT(known, 0);
}

TEST(Verification, SelectionAndJson) {
  EXPECT_EQ(run_suites("all").size(), suite_names().size());
  EXPECT_EQ(run_suites("zeta").size(), 1u);
  EXPECT_THROW(run_suites("nope"), std::invalid_argument);
  auto j = to_json(run_suites("grassmann"));
  ASSERT_TRUE(j.is_object() || j.is_array());
  EXPECT_NE(j.dump().find("grassmann"), std::string::npos);
  EXPECT_EQ(to_string(CheckStatus::Known), "KNOWN");
}
