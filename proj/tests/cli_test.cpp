#include "wordmetric/cli.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <sstream>

namespace wordmetric::cli {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args, const Environment& env = {}) {
  args.insert(args.begin(), "wordmetric");
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err, env);
  return {code, out.str(), err.str()};
}

TEST(CliTest, DocumentedExamples) {
  EXPECT_EQ(invoke({"length", "--base", "2", "21"}).out, "3\n");
  EXPECT_EQ(invoke({"equivalent", "2", "8"}).out, "true\n");
  EXPECT_EQ(invoke({"equivalent", "--a", "2", "--b", "3"}).out, "false\n");
  EXPECT_EQ(invoke({"distortion", "--a", "2", "--b", "3", "--jmax", "4", "--format", "csv"}).out,
            "j,length,blocks\n1,2,1\n2,2,2\n3,3,2\n4,3,3\n");
}

TEST(CliTest, LengthVariants) {
  EXPECT_EQ(invoke({"length", "--base", "2", "--oracle", "21"}).out, "3\n");
  EXPECT_EQ(invoke({"length", "--base", "2", "-7"}).out, "2\n");
  const Outcome w = invoke({"length", "--base", "2", "--witness", "7", "--format", "csv"});
  EXPECT_EQ(w.out, "length,witness\n2,2^3-2^0\n");
  EXPECT_EQ(invoke({"length", "--base", "2", "--oracle", "--witness", "7"}).code, 1);
  EXPECT_EQ(invoke({"length", "--base", "2", "--oracle", "--budget", "3", "123456789"}).code, 2);
}

TEST(CliTest, DigitCommands) {
  EXPECT_EQ(invoke({"expand", "--base", "2", "13", "--format", "csv"}).out, "digits,ord\nbase2:1101,3\n");
  EXPECT_EQ(invoke({"blocks", "--base", "2", "13", "--format", "csv"}).out, "count,blocks\n2,\"[0,1) [2,4)\"\n");
  EXPECT_EQ(invoke({"distance", "--base", "2", "7", "-1"}).out, "1\n");
  EXPECT_EQ(invoke({"lemma21", "--base", "10", "--exponents", "3,1", "--digits", "5,3", "--format", "csv"}).out,
            "n,digits,blocks,r\n4970,base10:4970,1,1\n");
  EXPECT_EQ(invoke({"perturb", "--base", "2", "18", "--add", "2:1,3:1", "--format", "csv"}).out,
            "before,after,n_after\n2,1,30\n");
  EXPECT_EQ(invoke({"perturb", "--base", "2", "18", "--add", "1:1"}).code, 1);
  EXPECT_EQ(invoke({"certify-blocks", "--base", "2", "--terms", "4:+1,2:-1,1:+1", "--format", "csv"}).out,
            "n,k,blocks,U,V,W\n14,3,1,4,2,1\n");
}

TEST(CliTest, SearchCommands) {
  EXPECT_EQ(invoke({"search-leading", "10", "2", "--target", "7"}).out, "46\n");
  EXPECT_EQ(invoke({"search-leading", "10", "2", "--target", "1", "--count", "3", "--format", "csv"}).out,
            "n\n4\n7\n10\n");
  const Outcome short_list = invoke({"search-leading", "10", "2", "--target", "7", "--limit", "10"});
  EXPECT_EQ(short_list.code, 0);
  EXPECT_FALSE(short_list.err.empty());
  EXPECT_EQ(invoke({"grow-blocks", "2", "3", "--ell", "3", "--format", "csv"}).out, "n,blocks\n4,3\n");
  EXPECT_EQ(invoke({"grow-blocks", "2", "3", "--ell", "30", "--limit", "10"}).code, 2);
  EXPECT_EQ(invoke({"dependence", "4", "8", "--format", "csv"}).out, "dependent,m,n,root\ntrue,3,2,\"2^2,2^3\"\n");
  EXPECT_EQ(invoke({"certify-equivalence", "2", "8", "--format", "csv"}).out, "m,n,H_A,H_B,K\n3,1,5,2,5\n");
  EXPECT_EQ(invoke({"certify-equivalence", "2", "3"}).code, 3);
  EXPECT_EQ(invoke({"search-leading", "2", "4", "--target", "1"}).code, 3);
  EXPECT_EQ(invoke({"density", "2", "4", "--target", "1"}).code, 3);
}

TEST(CliTest, BilipschitzCheck) {
  EXPECT_EQ(invoke({"check-bilipschitz", "2", "8", "--k", "5", "--random", "200", "--max", "100000", "--format",
                    "csv"})
                .out,
            "ok,checked,violation\ntrue,200,\n");
  EXPECT_EQ(invoke({"check-bilipschitz", "2", "3", "--k", "2", "--pairs", "0:81", "--format", "csv"}).out,
            "ok,checked,violation\nfalse,1,0:81\n");
  EXPECT_EQ(invoke({"check-bilipschitz", "2", "3", "--k", "0", "--pairs", "0:81"}).code, 1);
}

TEST(CliTest, InvalidArguments) {
  EXPECT_EQ(invoke({}).code, 1);
  EXPECT_EQ(invoke({"length", "21"}).code, 1);
  EXPECT_EQ(invoke({"length", "--base", "1", "21"}).code, 1);
  EXPECT_EQ(invoke({"expand", "--base", "2", "-3"}).code, 1);
  EXPECT_EQ(invoke({"length", "--base", "2", "2x"}).code, 1);
  EXPECT_EQ(invoke({"bogus"}).code, 1);
  EXPECT_EQ(invoke({"--format", "xml", "length", "--base", "2", "3"}).code, 1);
  EXPECT_EQ(invoke({"--help"}).code, 0);
}

TEST(CliTest, JsonRecordsRoundTrip) {
  const Outcome o = invoke({"distortion", "2", "3", "--jmax", "5", "--format", "json"});
  ASSERT_EQ(o.code, 0);
  std::istringstream lines(o.out);
  std::string line;
  int n = 0;
  while (std::getline(lines, line)) {
    const Json j = Json::parse(line);
    const OutputRecord rec = j.get<OutputRecord>();
    EXPECT_EQ(rec.command, "distortion");
    EXPECT_EQ(rec.version, kVersion);
    EXPECT_EQ(Json(rec).dump(), line);
    EXPECT_EQ(rec.result["j"], n + 1);
    ++n;
  }
  EXPECT_EQ(n, 5);

  const Outcome big = invoke({"length", "--base", "3", "123456789012345678901234567890", "--format", "json"});
  const OutputRecord rec = Json::parse(big.out).get<OutputRecord>();
  EXPECT_EQ(rec.inputs["n"], "123456789012345678901234567890");
}

TEST(CliTest, CacheDoesNotChangeOutput) {
  const auto dir = std::filesystem::temp_directory_path() / "wordmetric_cli_cache";
  std::filesystem::remove_all(dir);
  const std::vector<std::string> cmd{"certify-equivalence", "9", "27", "--format", "json"};
  const Outcome plain = invoke({"--no-cache", "certify-equivalence", "9", "27", "--format", "json"});
  auto with_dir = cmd;
  with_dir.push_back("--cache-dir");
  with_dir.push_back(dir.string());
  const Outcome cold = invoke(with_dir);
  ASSERT_TRUE(std::filesystem::exists(dir / "lengths.csv"));
  const Outcome warm = invoke(with_dir);
  const Outcome via_env = invoke(cmd, Environment{dir.string()});
  EXPECT_EQ(plain.out, cold.out);
  EXPECT_EQ(cold.out, warm.out);
  EXPECT_EQ(cold.out, via_env.out);
  std::filesystem::remove_all(dir);
}

TEST(CliBinaryTest, ExitCodesAndStreams) {
  auto run_binary = [](const std::string& args) {
    const std::string cmd = std::string(WORDMETRIC_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    std::string out;
    char buf[256];
    while (std::fgets(buf, sizeof buf, pipe) != nullptr) out += buf;
    const int status = pclose(pipe);
    return std::make_pair(WEXITSTATUS(status), out);
  };
  EXPECT_EQ(run_binary("length --base 2 21"), std::make_pair(0, std::string("3\n")));
  EXPECT_EQ(run_binary("equivalent 2 8"), std::make_pair(0, std::string("true\n")));
  EXPECT_EQ(run_binary("search-leading 2 4 --target 1"), std::make_pair(3, std::string()));
  EXPECT_EQ(run_binary("length --base 0 5"), std::make_pair(1, std::string()));
}

}  // namespace
}  // namespace wordmetric::cli
