#include <gtest/gtest.h>

#include <json.hpp>
#include <sstream>

#include "garside/cli.hpp"
#include "garside/braid.hpp"
#include "garside/word.hpp"

using garside::run_command;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Parser, Terms) {
  const auto t = garside::parse_word("s1^-2 s2 t^3 W");
  ASSERT_EQ(t.size(), 4u);
  EXPECT_EQ(t[0].generator, "s1");
  EXPECT_EQ(t[0].exponent, -2);
  EXPECT_EQ(t[1].offset, 6u);
  EXPECT_EQ(t[3].generator, "W");
  EXPECT_TRUE(garside::parse_word("1").empty());
  EXPECT_EQ(garside::parse_word("s1.s2").size(), 2u);
}

TEST(Parser, ErrorOffsets) {
  try {
    garside::parse_word("s1 s2^");
    FAIL();
  } catch (const garside::ParseError& e) {
    EXPECT_EQ(e.offset(), 6u);
  }
  try {
    garside::parse_word("s1 ?");
    FAIL();
  } catch (const garside::ParseError& e) {
    EXPECT_EQ(e.offset(), 3u);
  }
  const auto m = std::make_shared<garside::BraidModel>(2);
  EXPECT_THROW(garside::expand_word(garside::parse_word("s3"), *m), garside::ParseError);
}

TEST(Cli, SignExample) {
  const CliRun r = run({"sign", "--group", "an", "--n", "2", "s1^-1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, 9), "negative\n");
}

TEST(Cli, SignJson) {
  const CliRun r = run({"--json", "sign", "--group", "an", "--n", "2", "s1^-1"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["command"], "sign");
  EXPECT_EQ(j["group"], "A2");
  EXPECT_EQ(j["inputs"][0], "s1^-1");
  EXPECT_EQ(j["result"]["sign"], "negative");
  EXPECT_EQ(j["result"]["delta_form"]["power"], -1);
  EXPECT_EQ(j["result"]["depth"], 1);
}

TEST(Cli, ConditionAExample) {
  const CliRun r = run({"verify", "condA", "--group", "i2", "--m", "5", "--max-power", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("PASS"), std::string::npos);
  EXPECT_NE(r.out.find("4 7 10"), std::string::npos);
}

TEST(Cli, CompareExample) {
  const CliRun r = run({"compare", "--group", "an", "--n", "2", "--epsilon", "++", "1", "s1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "Less\n");
}

TEST(Cli, OtherCommands) {
  EXPECT_EQ(run({"nf", "--group", "an", "--n", "2", "s1 s1 s2"}).out, "normal form: s1^2 s2\n");
  const auto alt = nlohmann::json::parse(run({"alt-form", "--json", "--n", "2", "s1 s2^2 s1"}).out);
  EXPECT_EQ(alt["result"]["breadth"], 4);
  EXPECT_EQ(alt["result"]["depth"], 2);
  EXPECT_EQ(run({"depth", "--group", "i2", "--m", "5", "W^2"}).out, "depth: 4\n");
  EXPECT_EQ(run({"sort", "--group", "an", "--n", "2", "s1", "1", "s1^-1"}).out, "s1^-1\n1\ns1\n");
  const CliRun e = run({"embed", "--group", "i2", "--m", "4", "s t s t"});
  EXPECT_EQ(e.code, 0);
  EXPECT_NE(e.out.find("normal form: W"), std::string::npos);
  EXPECT_EQ(run({"verify", "lemmas", "--group", "i2", "--m", "4", "--max-len", "4", "--max-power", "2",
                 "--samples", "50"})
                .code,
            0);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"sign", "--group", "an", "--n", "2", "s1 x"}).code, 2);
  EXPECT_EQ(run({"sign", "--group", "an", "--n", "2", "s9"}).code, 2);
  EXPECT_EQ(run({"compare", "--n", "3", "--epsilon", "++", "1", "s1"}).code, 2);
  EXPECT_EQ(run({"alt-form", "--n", "2", "s1^-1"}).code, 2);
  EXPECT_EQ(run({"embed", "--group", "an", "s1"}).code, 2);
  EXPECT_EQ(run({"sign", "--group", "b7", "s1"}).code, 2);
  EXPECT_EQ(run({"verify", "condZ"}).code, 2);
}
