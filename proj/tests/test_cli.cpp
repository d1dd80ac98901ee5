#include <gtest/gtest.h>

#include <sstream>

#include "sqfrob/cli.hpp"
#include "sqfrob/serialize.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = sqfrob::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string trim(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == ' ')) s.pop_back();
  return s;
}

}  // namespace

TEST(Cli, PowerFrobJson) {
  const Outcome r = run({"power-frob", "--gens", "13,18", "--k", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(trim(r.out), R"({"k":2,"root":10,"value":100,"method":"oracle"})");
  EXPECT_TRUE(r.err.empty());
}

TEST(Cli, PowerFrobClosedAgreesWithOracle) {
  for (int d = 1; d <= 5; ++d) {
    for (int a = 3; a <= 150; ++a) {
      if (std::gcd(a, d) != 1) continue;
      const std::string gens = std::to_string(a) + "," + std::to_string(a + d);
      const Outcome o = run({"power-frob", "--gens", gens, "--k", "2", "--method", "oracle"});
      const Outcome c = run({"power-frob", "--gens", gens, "--k", "2", "--method", "closed"});
      ASSERT_EQ(o.code, 0);
      ASSERT_EQ(c.code, 0) << gens << c.err;
      const auto jo = sqfrob::Json::parse(o.out), jc = sqfrob::Json::parse(c.out);
      ASSERT_EQ(jo["value"], jc["value"]) << gens;
      ASSERT_EQ(jc["method"], "closed_form");
    }
  }
}

TEST(Cli, ClosedModeRejectsOtherShapes) {
  EXPECT_EQ(run({"power-frob", "--gens", "13,20", "--k", "2", "--method", "closed"}).code, 2);
  EXPECT_EQ(run({"power-frob", "--gens", "5,7,9", "--k", "2", "--method", "closed"}).code, 2);
  EXPECT_EQ(run({"power-frob", "--gens", "13,18", "--k", "3", "--method", "closed"}).code, 2);
  const Outcome a = run({"power-frob", "--gens", "13,20", "--k", "2", "--method", "auto"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(sqfrob::Json::parse(a.out)["method"], "oracle");
}

TEST(Cli, FullSemigroupIsUndefined) {
  const Outcome r = run({"power-frob", "--gens", "1", "--k", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(sqfrob::Json::parse(r.out)["value"].is_null());
}

TEST(Cli, Frobenius) {
  const Outcome r = run({"frobenius", "--gens", "5,6"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(trim(r.out), "19");
  EXPECT_EQ(trim(run({"--format", "text", "frobenius", "--gens", "4,7"}).out), "17");
  EXPECT_EQ(trim(run({"--format", "csv", "frobenius", "--gens", "4,7"}).out), "frobenius\n17");
}

TEST(Cli, Member) {
  const Outcome yes = run({"member", "--gens", "4,7", "--value", "11"});
  EXPECT_EQ(yes.code, 0);
  EXPECT_EQ(sqfrob::Json::parse(yes.out)["member"], true);
  EXPECT_EQ(trim(run({"--format", "text", "member", "--gens", "4,7", "--value", "10"}).out), "false");
  const Outcome bad = run({"member", "--gens", "4,6"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("NonCoprime"), std::string::npos);
  EXPECT_TRUE(bad.out.empty());
}

TEST(Cli, InvalidInputs) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobenius", "--gens", "5,6", "--bogus"}).code, 2);
  EXPECT_EQ(run({"frobenius", "--gens", "1"}).code, 2);
  EXPECT_EQ(run({"bound", "--a", "13", "--d", "2", "--k", "1"}).code, 2);
  EXPECT_EQ(run({"exceptions", "--d", "2"}).code, 2);
  EXPECT_EQ(run({"--format", "xml", "frobenius", "--gens", "5,6"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, Bound) {
  const Outcome r = run({"bound", "--a", "13", "--d", "5", "--k", "1", "--dump-profile"});
  EXPECT_EQ(r.code, 0);
  const auto j = sqfrob::Json::parse(r.out);
  EXPECT_EQ(j["value"], 81);
  EXPECT_EQ(j["mu"], 1);
  EXPECT_EQ(j["j"], 1);
  EXPECT_EQ(j["hypothesis"], false);
  EXPECT_EQ(j["profile"]["lambda_star"], 3);
}

TEST(Cli, Exceptions) {
  const Outcome e3 = run({"exceptions", "--d", "3"});
  EXPECT_EQ(e3.code, 0);
  const auto j = sqfrob::Json::parse(e3.out);
  EXPECT_TRUE(j["members"].empty());
  EXPECT_EQ(j["matches_golden"], true);
  const Outcome e5 = run({"--format", "csv", "exceptions", "--d", "5"});
  EXPECT_EQ(e5.code, 0);
  EXPECT_NE(e5.out.find("5,13,100,81"), std::string::npos);
}

TEST(Cli, TablesAndVerify) {
  EXPECT_EQ(run({"tables", "--which", "2"}).code, 0);
  EXPECT_EQ(run({"tables", "--which", "3"}).code, 2);
  const Outcome v = run({"--jobs", "2", "verify", "--target", "conj2", "--max", "2000"});
  EXPECT_EQ(v.code, 0);
  EXPECT_EQ(sqfrob::Json::parse(v.out)["passed"], true);
  EXPECT_EQ(run({"verify", "--target", "theorem-ap", "--d", "4", "--k", "2", "--max", "1200"}).code, 0);
  EXPECT_EQ(run({"verify", "--target", "min-power", "--max", "60"}).code, 0);
  EXPECT_EQ(run({"verify", "--target", "closed", "--d", "5", "--max", "500"}).code, 0);
  EXPECT_EQ(run({"verify", "--target", "nope"}).code, 2);
}

TEST(Cli, JsonRoundTrip) {
  const std::vector<std::vector<std::string>> cases{
      {"power-frob", "--gens", "13,18", "--k", "2"},
      {"power-min", "--gens", "5,7,9", "--k", "2"},
      {"gaps", "--gens", "4,7"},
      {"apery", "--gens", "4,7"},
      {"bound", "--a", "114", "--d", "7", "--k", "1", "--dump-profile"},
      {"exceptions", "--d", "7"},
      {"verify", "--target", "conj1", "--max", "500"},
  };
  for (const auto& args : cases) {
    const Outcome r = run(args);
    ASSERT_EQ(r.code, 0) << args[0];
    EXPECT_EQ(sqfrob::Json::parse(r.out).dump(), trim(r.out)) << args[0];
  }
}
