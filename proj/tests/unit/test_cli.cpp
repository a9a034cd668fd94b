#include <gtest/gtest.h>

#include <nlohmann/json.hpp>
#include <sstream>

#include "app.hpp"
#include "render.hpp"
#include "verify.hpp"

using namespace symcut;
using json = nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const char* name) { return std::string(SYMCUT_FIXTURES) + "/" + name; }

}  // namespace

TEST(Render, PiSqrtForms) {
  EXPECT_EQ(cli::pretty_pi_sqrt(frac(27, 2)), "(3√6/2)π");
  EXPECT_EQ(cli::pretty_pi_sqrt(16), "4π");
  EXPECT_EQ(cli::pretty_pi_sqrt(frac(1, 4)), "π/2");
  EXPECT_EQ(cli::pretty_pi_sqrt(8), "2√2π");
  EXPECT_EQ(cli::exact_pi_sqrt(frac(27, 2)), "π*sqrt(27/2)");
  EXPECT_EQ(cli::decimal_pi_sqrt(16), "12.5663706144");
}

TEST(Cli, InfoJsonSchema) {
  const Result r = run({"info", "E I", "--gamma", "Z3", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["schema_version"], 1);
  EXPECT_EQ(j["sigma"], "E6");
  EXPECT_EQ(j["center"]["structure"], "Z3");
  EXPECT_EQ(j["result"]["i_exact"], "π*sqrt(8)");
  EXPECT_EQ(j["result"]["d_exact"], "π*sqrt(16)");
  EXPECT_EQ(j["result"]["diameter_case"], "VIII");
  EXPECT_FALSE(j["result"]["beyond_paper"].get<bool>());
  EXPECT_EQ(j["polytope"]["vertices"].size(), 19u);
  for (const char* key : {"space", "gamma", "polytope", "cut_locus"}) EXPECT_TRUE(j.contains(key));
}

TEST(Cli, InfoProjectivePlaneWithRicci) {
  const Result r = run({"info", "S^3", "--sigma", "A1", "--gamma", "Z2", "--ricci", "2", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["result"]["i_exact"], "π*sqrt(1/4)");
  EXPECT_EQ(j["result"]["d_exact"], "π*sqrt(1/4)");
}

TEST(Cli, BeyondClosedFormsIsTagged) {
  const Result r = run({"info", "SU(6)", "--gamma", "Z3", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(json::parse(r.out)["result"]["beyond_paper"].get<bool>());
}

TEST(Cli, TableExamples) {
  const Result r = run({"table", "8.2", "--only", "E6,E7", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  for (const char* s : {"4π", "4√2π", "3√3π", "3√7π"}) EXPECT_NE(r.out.find(s), std::string::npos) << s;
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"info", "Nowhere(3)"}).code, cli::kBadInput);
  EXPECT_EQ(run({"info", "SU(12)"}).code, cli::kResourceCap);
  EXPECT_EQ(run({"info", "E6", "--epsilon", "1", "--ricci", "2"}).code, cli::kBadInput);
  EXPECT_EQ(run({"info", "E6", "--ricci", "0"}).code, cli::kBadInput);
  EXPECT_EQ(run({"info", "E6", "--max-rank", "99"}).code, cli::kResourceCap);
  EXPECT_EQ(run({"bogus"}).code, cli::kBadInput);
  EXPECT_EQ(run({"list"}).code, cli::kOk);
}

TEST(Cli, VerifyUnderLowCapSkips) {
  const Result r = run({"verify", "--max-rank", "2", "--format", "json"});
  EXPECT_EQ(r.code, cli::kOk) << r.out;
  EXPECT_NE(r.out.find("skip"), std::string::npos);
}

TEST(Cli, FullVerifyFailsOnlyOnPrintedDiameter) {
  const auto checks = cli::run_verify(Catalog::builtin(), 8);
  std::vector<std::string> failed;
  for (const auto& c : checks)
    if (c.status == cli::CheckStatus::Fail) failed.push_back(c.name);
  EXPECT_EQ(failed, std::vector<std::string>{"table/8.1/E VII"});
  EXPECT_EQ(run({"verify"}).code, cli::kVerifyFailed);
}

TEST(Cli, CorruptedCatalogNamesTheCase) {
  const Result r = run({"verify", "--catalog", fixture("corrupt_e6.json")});
  EXPECT_EQ(r.code, cli::kVerifyFailed);
  EXPECT_NE(r.out.find("table/8.2/E6"), std::string::npos) << r.out;
}

TEST(Cli, MalformedCatalogIsBadInput) {
  EXPECT_EQ(run({"list", "--catalog", fixture("malformed.json")}).code, cli::kBadInput);
  EXPECT_EQ(run({"list", "--catalog", fixture("missing.json")}).code, cli::kBadInput);
}
