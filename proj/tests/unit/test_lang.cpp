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

#include <string>

#include "ucrc/cases/bundled.hpp"
#include "ucrc/cases/cases.hpp"
#include "ucrc/common/error.hpp"
#include "ucrc/lang/link.hpp"
#include "ucrc/lang/syntax.hpp"
#include "ucrc/lang/validate.hpp"

using namespace ucrc;

namespace {

bool ends_with(const std::string& s, const std::string& suf) {
  return s.size() >= suf.size() && s.compare(s.size() - suf.size(), suf.size(), suf) == 0;
}

}  // namespace

TEST(Lang, RoundTripsEveryBundledModel) {
  int seen = 0;
  for (const auto& [name, text] : bundled_files()) {
    if (!ends_with(name, ".ocl")) continue;
    ++seen;
    OracleProgram p = parse_program(text);
    std::string printed = print_program(p);
    OracleProgram q = parse_program(printed);
    EXPECT_EQ(p, q) << name;
    EXPECT_EQ(print_program(q), printed) << name;
  }
  EXPECT_GE(seen, 20);
}

TEST(Lang, ParseErrorHasPosition) {
  try {
    parse_program("program P.\nlet O( := yield.");
    FAIL() << "no error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_EQ(e.col(), 8);
    EXPECT_FALSE(e.expected().empty());
  }
}

TEST(Lang, HygieneFixtureNamesTheForeignRead) {
  OracleProgram p = parse_program(bundled_file("hygiene_undeclared.ocl"));
  auto ds = validate(p);
  ASSERT_TRUE(has_errors(ds));
  bool named = false;
  for (const auto& d : ds)
    if (d.severity == Severity::kError &&
        d.message.find("(Sender, m)") != std::string::npos)
      named = true;
  EXPECT_TRUE(named);
  EXPECT_THROW(load_program("hygiene_undeclared.ocl"), ModelError);
}

TEST(Lang, EveryOtherBundledModelValidates) {
  for (const auto& [name, text] : bundled_files()) {
    if (!ends_with(name, ".ocl") || name == "hygiene_undeclared.ocl") continue;
    EXPECT_FALSE(has_errors(validate(parse_program(text)))) << name;
  }
}

TEST(Lang, DuplicateOracleRejected) {
  auto p = parse_program("program P.\nexport O.\nlet O() := yield.\nlet O() := yield.");
  EXPECT_TRUE(has_errors(validate(p)));
}

TEST(Lang, SizesResolveLinearly) {
  auto p = parse_program(bundled_file("commit_real.ocl"));
  SizeEnv env(p);
  Size s = p.types[1].width;
  Linear l = env.resolve_or_throw(s);
  EXPECT_EQ(l, (Linear{4, 0}));
  EXPECT_EQ(l.at(3), 12);
}

TEST(Lang, LinkQualifiesInternalNames) {
  auto ctx = parse_program(bundled_file("toy_ctx_peek.ocl"));
  auto prg = parse_program(bundled_file("toy_coin.ocl"));
  WholeProgram w = link(ctx, prg);
  EXPECT_EQ(w.exports, (std::vector<std::string>{"A", "O"}));
  EXPECT_EQ(w.origin.at("A"), Origin::kContext);
  EXPECT_EQ(w.origin.at("O"), Origin::kProgram);
  auto solo = link(empty_context(), prg);
  EXPECT_EQ(solo.exports, (std::vector<std::string>{"O"}));
}

TEST(Lang, LinkRejectsExportCollision) {
  auto prg = parse_program(bundled_file("toy_coin.ocl"));
  auto clash = parse_program("program C.\nexport O.\nlet O() := yield.");
  EXPECT_THROW(link(clash, prg), LinkError);
}
