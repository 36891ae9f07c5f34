#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "harness/harness.hpp"

using namespace copnum::harness;

namespace {

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

CliRun cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  CliRun r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "copnum-harness-test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST(Cli, GenWritesCanonicalEdgeList) {
  const CliRun r = cli({"gen", "--n", "30", "--p", "0.2", "--seed", "5"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("30 ", 0), 0u);
  EXPECT_EQ(cli({"gen", "--n", "30", "--p", "0.2", "--seed", "5"}).out, r.out);
  EXPECT_NE(cli({"gen", "--n", "30", "--p", "0.2", "--seed", "6"}).out, r.out);
}

TEST(Cli, UsageErrorsAreStructured) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"gen", "--n", "1", "--p", "0.5"},
           {"gen", "--n", "20"},
           {"gen", "--n", "20", "--p", "1.5"},
           {"gen", "--n", "20", "--p", "0.5", "--format", "xml"},
           {"exact"},
           {"simulate", "--n", "100", "--d", "10", "--strategy", "magic"},
           {"simulate", "--n", "100", "--d", "10", "--trials", "0"},
           {"verify-expansion", "--n", "100", "--d", "10", "--mode", "sparse", "--eps", "0.6",
            "--delta", "0.2"},
           {"zigzag", "--grid", "0.3"},
           {"scaling", "--n-grid", "900,400"},
           {"gen", "--bogus", "1"},
           {}}) {
    const CliRun r = cli(args);
    EXPECT_EQ(r.code, 2) << (args.empty() ? "(none)" : args[0]) << " " << r.err;
    EXPECT_NE(r.err.find("\"kind\":\"usage\""), std::string::npos) << r.err;
  }
}

TEST(Cli, RuntimeErrorsUseExitOne) {
  const CliRun r = cli({"exact", "--graph", scratch("missing.txt").string()});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("\"error\""), std::string::npos);
  const CliRun b = cli({"exact", "--graph", "petersen", "--budget", "10"});
  EXPECT_EQ(b.code, 1);
  EXPECT_NE(b.err.find("\"kind\":\"budget\""), std::string::npos) << b.err;
}

TEST(Cli, ExactReportsKnownValues) {
  EXPECT_NE(cli({"exact", "--graph", "petersen"}).out.find("cop_number=3"), std::string::npos);
  EXPECT_NE(cli({"exact", "--graph", "cycle-6", "--k-max", "1"}).out.find("cop_number>1"),
            std::string::npos);
}

TEST(Cli, ConfigFileAndOverride) {
  const auto cfg = scratch("gen.cfg");
  {
    std::ofstream f(cfg);
    f << "# comment line\n"
      << "n = 25\n"
      << "p = 0.3   # trailing comment\n"
      << "--seed = 9\n";
  }
  const CliRun from_file = cli({"gen", "--config", cfg.string()});
  ASSERT_EQ(from_file.code, 0) << from_file.err;
  EXPECT_EQ(from_file.out, cli({"gen", "--n", "25", "--p", "0.3", "--seed", "9"}).out);
  const CliRun overridden = cli({"gen", "--config", cfg.string(), "--seed", "10"});
  EXPECT_EQ(overridden.out, cli({"gen", "--n", "25", "--p", "0.3", "--seed", "10"}).out);
  {
    std::ofstream f(cfg);
    f << "just words\n";
  }
  EXPECT_EQ(cli({"gen", "--config", cfg.string()}).code, 2);
  EXPECT_EQ(cli({"gen", "--config", scratch("nope.cfg").string()}).code, 2);
}

TEST(Cli, OutputFilesAreDeterministicAndThreadIndependent) {
  const auto a = scratch("sim-a.csv");
  const auto b = scratch("sim-b.json");
  const auto c = scratch("sim-c.csv");
  const std::vector<std::string> base{"simulate", "--n", "300", "--d-mode", "sparse",
                                      "--trials", "4", "--seed", "3", "--C", "2"};
  auto with = [&](std::vector<std::string> extra) {
    std::vector<std::string> args = base;
    args.insert(args.end(), extra.begin(), extra.end());
    return cli(args);
  };
  ASSERT_EQ(with({"--out", a.string(), "--threads", "1"}).code, 0);
  ASSERT_EQ(with({"--out", c.string(), "--threads", "3"}).code, 0);
  EXPECT_EQ(slurp(a), slurp(c));
  ASSERT_EQ(with({"--out", b.string(), "--format", "json"}).code, 0);
  const auto json = Json::parse(slurp(b));
  EXPECT_EQ(json["rows"].size(), 4u);
  EXPECT_EQ(json["meta"]["command"], "simulate");
  EXPECT_EQ(json["summary"]["invalid_traces"], 0);
  EXPECT_EQ(slurp(a).rfind("# tool=copnum", 0), 0u);
}

TEST(ExperimentSpecTest, DescribeOmitsPathsAndThreads) {
  ExperimentSpec s;
  s.command = "zigzag";
  s.out = "/tmp/whatever.csv";
  s.threads = 7;
  const auto meta = describe(s);
  for (const auto& [key, value] : meta) {
    EXPECT_NE(key, "out");
    EXPECT_NE(key, "threads");
    EXPECT_EQ(value.find("whatever"), std::string::npos);
  }
  ASSERT_GE(meta.size(), 3u);
  EXPECT_EQ(meta[2], (std::pair<std::string, std::string>{"command", "zigzag"}));
}

TEST(ExperimentSpecTest, EffectiveDegree) {
  ExperimentSpec s;
  s.command = "gen";
  s.d_mode = "sparse";
  EXPECT_NEAR(effective_degree(s, 1000), 1.1 * std::log(1000.0), 1e-12);
  s.d_mode = "dense";
  EXPECT_NEAR(effective_degree(s, 1000), std::pow(std::log(1000.0), 3), 1e-9);
  s.d_mode.clear();
  s.p = 0.1;
  EXPECT_NEAR(effective_degree(s, 101), 10.0, 1e-12);
}
