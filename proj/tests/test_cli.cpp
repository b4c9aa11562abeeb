// Copyright 2026 The ptatom Authors
// SPDX-License-Identifier: Apache-2.0

// Runs the installed binary end to end.

#include <gtest/gtest.h>

#include "json.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " \"" PTATOM_CLI_PATH "\" " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return {-1, ""};
  std::string out;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, p)) out.append(buf, n);
  const int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::filesystem::path temp_dir() {
  auto d = std::filesystem::temp_directory_path() / ("ptatom_cli_" + std::to_string(::getpid()));
  std::filesystem::create_directories(d);
  return d;
}

}  // namespace

TEST(Cli, NeonLevels) {
  auto r = run("levels --n 10 --z 10");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("¹S"), std::string::npos);
  EXPECT_NE(r.out.find("-112.2917"), std::string::npos);
}

TEST(Cli, IntegralsCsvLastRow) {
  auto r = run("integrals --format csv");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("(34|43),27/2560,0.0105\n"), std::string::npos);
  EXPECT_EQ(r.out.size() - r.out.rfind("(34|43)"), std::string("(34|43),27/2560,0.0105\n").size());
}

TEST(Cli, GroundStateTitle) {
  auto r = run("ground-state --n 7");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "⁴S°, dim 4");
}

TEST(Cli, ArgumentErrors) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("levels").code, 2);
  EXPECT_EQ(run("levels --n 11").code, 2);
  EXPECT_EQ(run("levels --n 0").code, 2);
  EXPECT_EQ(run("levels --n 3 --z -1").code, 2);
  EXPECT_EQ(run("levels --n 3 --format xml").code, 2);
  EXPECT_EQ(run("bogus").code, 2);
  EXPECT_EQ(run("gaps --n 3 --points 0").code, 2);
}

TEST(Cli, DataErrors) {
  auto dir = temp_dir();
  {
    std::ofstream f(dir / "experiment.csv");
    f << "N,Z,term,energy_hartree,source\n3,3,ZZ,-7.4,x\n";
  }
  EXPECT_EQ(run("compare --experiment " + (dir / "experiment.csv").string()).code, 3);
  EXPECT_EQ(run("compare", "PTATOM_DATA_DIR=" + dir.string()).code, 3);
  EXPECT_EQ(run("compare", "PTATOM_DATA_DIR=" + (dir / "missing").string()).code, 3);
  std::filesystem::remove_all(dir);
}

TEST(Cli, CompareWithBundledData) {
  auto r = run("compare --format csv");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("# neutral"), std::string::npos);
  EXPECT_NE(r.out.find("# inversions"), std::string::npos);
}

TEST(Cli, OutFileAndJson) {
  auto dir = temp_dir();
  const auto path = dir / "levels.json";
  ASSERT_EQ(run("levels --n 6 --format json --out " + path.string()).code, 0);
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  auto j = nlohmann::json::parse(ss.str());
  EXPECT_EQ(j["command"], "levels");
  EXPECT_EQ(j["sections"]["levels"].size(), 12u);
  EXPECT_EQ(ss.str(), run("levels --n 6 --format json").out);
  std::filesystem::remove_all(dir);
}

TEST(Cli, ByteIdenticalAcrossRuns) {
  for (const std::string args : {"sectors --n 5", "vee-matrix --n 6 --format csv", "gaps --n 4 --points 5", "hund"}) {
    auto a = run(args), b = run(args);
    EXPECT_EQ(a.code, 0) << args;
    EXPECT_EQ(a.out, b.out) << args;
  }
}
