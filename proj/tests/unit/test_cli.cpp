/*
 * Copyright (c) 2026, The ucrc Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

int run(const std::string& args) {
  std::string cmd = std::string(UCRC_CLI) + " " + args + " >/dev/null 2>&1";
  int rc = std::system(cmd.c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string models(const std::string& f) { return std::string(UCRC_MODELS_DIR) + "/" + f; }
std::string fixture(const std::string& f) { return std::string(UCRC_FIXTURES_DIR) + "/" + f; }

fs::path fresh_dir(const std::string& name) {
  fs::path d = fs::path(::testing::TempDir()) / ("ucrc_cli_" + name);
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Cli, CheckExitCodes) {
  EXPECT_EQ(run("check " + models("wg_real.ocl")), 0);
  EXPECT_EQ(run("check wg"), 0);
  EXPECT_EQ(run("check " + models("hygiene_undeclared.ocl")), 2);
  EXPECT_EQ(run("check " + fixture("syntax_error.ocl")), 2);
  EXPECT_EQ(run("check nosuch.manifest"), 3);
}

TEST(Cli, EmulatePassAndFail) {
  auto d = fresh_dir("emulate");
  EXPECT_EQ(run("emulate wg --out " + (d / "ok").string()), 0);
  std::string verdict = slurp(d / "ok" / "verdict.txt");
  EXPECT_NE(verdict.find("pass"), std::string::npos) << verdict;
  EXPECT_EQ(run("emulate wg_broken --out " + (d / "bad").string()), 1);
  EXPECT_TRUE(fs::exists(d / "bad" / "counterexample.txt"));
}

TEST(Cli, ReplayCounterexample) {
  auto d = fresh_dir("replay");
  ASSERT_EQ(run("emulate wg_broken --out " + d.string()), 1);
  fs::path ce = d / "counterexample.txt";
  EXPECT_EQ(run("replay " + ce.string()), 0);
  std::string text = slurp(ce);
  auto at = text.find("advantage = ");
  ASSERT_NE(at, std::string::npos);
  auto eol = text.find('\n', at);
  std::string tampered = text.substr(0, at) + "advantage = 1/3" + text.substr(eol);
  std::ofstream(d / "tampered.txt") << tampered;
  EXPECT_EQ(run("replay " + (d / "tampered.txt").string()), 1);
  std::ofstream(d / "empty.txt") << "";
  EXPECT_EQ(run("replay " + (d / "empty.txt").string()), 3);
  EXPECT_EQ(run("replay " + (d / "absent.txt").string()), 3);
}

TEST(Cli, CeilingsAndBadConfiguration) {
  auto d = fresh_dir("ceil");
  EXPECT_EQ(run("emulate wg --grid 1..8 --out " + d.string()), 4);
  EXPECT_EQ(run("emulate wg --max-envs 10 --out " + d.string()), 4);
  EXPECT_EQ(run("emulate wg --grid 3..1 --out " + d.string()), 2);
  EXPECT_EQ(run("emulate wg --equiv fuzzy --out " + d.string()), 2);
  EXPECT_EQ(run("emulate " + fixture("missing_file.manifest") + " --out " + d.string()), 3);
}

TEST(Cli, UniverseCommands) {
  auto d = fresh_dir("universe");
  EXPECT_EQ(run("theorems toy --out " + (d / "t").string()), 0);
  EXPECT_EQ(run("compiler-check toy --out " + (d / "c").string()), 0);
  EXPECT_EQ(run("emulate toy_broken_compiler --out " + (d / "b").string()), 1);
  EXPECT_EQ(run("replay " + (d / "b" / "counterexample.txt").string()), 0);
  EXPECT_EQ(run("emulate wg_compiler --out " + (d / "w").string()), 0);
  EXPECT_EQ(run("emulate wg_compiler --compiler ideal:leak --out " + (d / "l").string()), 1);
}

TEST(Cli, AxiomsAndPrimitives) {
  auto d = fresh_dir("misc");
  EXPECT_EQ(run("axioms toy wg --samples 200 --out " + (d / "a").string()), 0);
  EXPECT_EQ(run("primitives --out " + (d / "p").string()), 0);
  EXPECT_FALSE(fs::is_empty(d / "p"));
}
