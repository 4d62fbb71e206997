#include <gtest/gtest.h>

#include <sstream>

#include "zmcenter/cli.hpp"
#include "zmcenter/report.hpp"

using zmcenter::report::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = zmcenter::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, AbscenterText) {
  const auto r = run({"abscenter", "5", "16", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("d = 4, e = 1"), std::string::npos);
  EXPECT_NE(r.out.find("L = <b^4>  order 4"), std::string::npos);
  EXPECT_NE(r.out.find("oracle: order 4 over 80 automorphisms"), std::string::npos);
  EXPECT_NE(r.out.find("L = Z: yes"), std::string::npos);
}

TEST(Cli, AbscenterJsonIsDeterministic) {
  const auto a = run({"abscenter", "5", "48", "2", "--json"});
  const auto b = run({"abscenter", "5", "48", "2", "--json"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const auto doc = json::parse(a.out);
  EXPECT_EQ(doc["e"], 3);
  EXPECT_EQ(doc["formula_order"], 4);
  EXPECT_EQ(doc["center_order"], 12);
}

TEST(Cli, AutCounts) {
  const auto r = run({"aut", "5", "16", "2", "--family", "central", "--count-only", "--json"});
  EXPECT_EQ(r.code, 0);
  const auto doc = json::parse(r.out);
  EXPECT_EQ(doc["enumerated"], 4);
  EXPECT_EQ(doc["counts"]["aut"]["value"], 80);
  EXPECT_EQ(doc["counts"]["aut"]["regime"], "guaranteed");
  EXPECT_FALSE(doc.contains("automorphisms"));

  const auto listed = run({"aut", "5", "4", "2", "--family", "ia"});
  EXPECT_EQ(listed.code, 0);
  EXPECT_NE(listed.out.find("complete = yes"), std::string::npos);
  EXPECT_NE(listed.out.find("(4,3,1)"), std::string::npos);
}

TEST(Cli, RealiseAndVerify) {
  const auto r1 = run({"realise", "1"});
  EXPECT_EQ(r1.code, 0);
  EXPECT_NE(r1.out.find("trivial"), std::string::npos);

  const auto j = run({"realise", "12", "--json"});
  EXPECT_EQ(json::parse(j.out)["factors"].size(), 2u);

  const auto v = run({"verify", "12", "--converse", "--json"});
  EXPECT_EQ(v.code, 0);
  const auto doc = json::parse(v.out);
  EXPECT_EQ(doc["pass"], true);
  EXPECT_EQ(doc["forward"].size(), 6u);
  EXPECT_EQ(doc["converse"]["factors"].size(), 2u);
}

TEST(Cli, OracleCheckDisagreement) {
  const auto r = run({"oracle-check", "7", "6", "2", "--json"});
  EXPECT_EQ(r.code, 1);
  const auto doc = json::parse(r.out);
  EXPECT_EQ(doc["verdict"], "disagree");
  EXPECT_EQ(doc["oracle_order"], 2);
  EXPECT_EQ(doc["formula_order"], 1);
  EXPECT_EQ(doc["bruteforce_order"], 2);
  EXPECT_EQ(doc["bruteforce_agrees_with_oracle"], true);
  EXPECT_EQ(run({"oracle-check", "5", "16", "2"}).code, 0);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"abscenter", "3", "6", "2"}).code, 2);        // invalid triple
  EXPECT_EQ(run({"abscenter", "1", "5", "1"}).code, 2);        // formula undefined for m = 1
  EXPECT_EQ(run({"abscenter", "5", "16"}).code, 2);            // missing argument
  EXPECT_EQ(run({"aut", "5", "16", "2", "--family", "x"}).code, 2);
  EXPECT_EQ(run({"verify", "8", "--converse"}).code, 3);       // factor above subgroup bound
  EXPECT_EQ(run({"realise", "8", "--prime-budget", "1"}).code, 3);
  EXPECT_EQ(run({"oracle-check", "5", "48", "2", "--oracle-bound", "100"}).code, 3);
  EXPECT_EQ(run({"--help"}).code, 0);
  const auto bad = run({"abscenter", "3", "6", "2"});
  EXPECT_TRUE(bad.out.empty());
  EXPECT_NE(bad.err.find("gcd(m,n)"), std::string::npos);
}
