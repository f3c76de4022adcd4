#include <gtest/gtest.h>

#include "prismlab/harness/registry.hpp"
#include "prismlab/harness/report_io.hpp"

#include <algorithm>
#include <set>

using namespace prismlab;
using namespace prismlab::harness;

namespace {

SuiteConfig cfg_for(const std::string& suite, std::uint64_t seed = 0) {
  SuiteConfig c;
  c.suite = suite;
  c.seed = seed;
  return c;
}

}  // namespace

TEST(Harness, Registry) {
  const auto& s = all_suites();
  int modules = 0;
  std::set<std::string> ids;
  for (const auto& x : s) {
    EXPECT_TRUE(ids.insert(x.id).second) << x.id;
    EXPECT_FALSE(x.paper_ref.empty()) << x.id;
    modules += x.id.rfind("acceptance.", 0) != 0;
  }
  EXPECT_GE(modules, 20);
  for (int n = 1; n <= 12; ++n) EXPECT_EQ(ids.count("acceptance." + std::to_string(n)), 1u) << n;
}

TEST(Harness, ListHasOneLinePerSuite) {
  auto l = list_suites();
  for (const auto& x : all_suites()) {
    auto label = x.paper_ref.substr(0, x.paper_ref.find(", \""));
    EXPECT_NE(l.find(x.id + " \u2014 " + label + "\n"), std::string::npos) << x.id;
  }
  EXPECT_EQ(static_cast<std::size_t>(std::count(l.begin(), l.end(), '\n')), all_suites().size());
}

TEST(Harness, Selection) {
  EXPECT_EQ(select_suites("all").size(), all_suites().size());
  for (auto* s : select_suites("derham")) EXPECT_EQ(s->id.rfind("derham.", 0), 0u);
  EXPECT_EQ(select_suites("witt.kernel").size(), 1u);
  EXPECT_THROW(select_suites("nosuch"), ConfigError);
  EXPECT_THROW(select_suites("wit"), ConfigError);
}

TEST(Harness, ConfigErrors) {
  auto c = cfg_for("derham");
  c.p = 1;
  try {
    run(c);
    FAIL() << "p = 1 accepted";
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("p must be prime"), std::string::npos);
  }
  c.p = 4;
  EXPECT_THROW(run(c), ConfigError);
  c.p = 2;
  c.L = 0;
  EXPECT_THROW(run(c), ConfigError);
}

TEST(Harness, DerhamExample) {
  auto c = cfg_for("derham", 42);
  c.p = 2;
  c.L = 3;
  auto r = run(c);
  EXPECT_TRUE(r.ok()) << to_text(r);
  EXPECT_GT(r.count(Status::Pass), 0);
  for (const auto& ch : r.checks) EXPECT_EQ(ch.id.rfind("derham.", 0), 0u);
}

TEST(Harness, DeterministicJson) {
  for (const char* s : {"qprism", "intpoly.lambda", "pd_dual.mu_p"}) {
    auto a = to_json(run(cfg_for(s, 7)), false).dump();
    auto b = to_json(run(cfg_for(s, 7)), false).dump();
    EXPECT_EQ(a, b) << s;
  }
}

TEST(Harness, JsonShape) {
  auto c = cfg_for("fgl.laws");
  c.p = 3;
  auto j = to_json(run(c));
  EXPECT_EQ(j["schema_version"], kSchemaVersion);
  EXPECT_EQ(j["params"]["p"], 3);
  EXPECT_TRUE(j["params"]["witt_len"].is_null());
  ASSERT_FALSE(j["checks"].empty());
  for (const auto& ch : j["checks"]) {
    for (const char* k : {"id", "paper_ref", "status", "detail", "elapsed"}) EXPECT_TRUE(ch.contains(k)) << k;
    EXPECT_EQ(ch["status"], "pass");
  }
  EXPECT_EQ(j["summary"]["fail"], 0);
}

// A literal-formula failure must surface as a failed check rather than an error.
TEST(Harness, FindingIsReportedAsFail) {
  auto c = cfg_for("derham.discrepancy_literal");
  c.p = 3;
  c.L = 3;
  auto r = run(c);
  EXPECT_FALSE(r.ok());
  bool seen = false;
  for (const auto& ch : r.checks)
    if (ch.status == Status::Fail) seen = ch.detail.find("81/729") != std::string::npos;
  EXPECT_TRUE(seen) << to_text(r);
}
