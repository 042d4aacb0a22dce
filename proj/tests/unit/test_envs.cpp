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

#include <cstdint>
#include <set>
#include <string>

#include "helpers.hpp"
#include "ucrc/behavior/envs.hpp"
#include "ucrc/common/error.hpp"

using namespace ucrc;
using namespace ucrc::testing;

namespace {

// Plain recursion over the tree shape: decide 0, decide 1, or a call whose
// every class gets its own subtree one level down.
std::uint64_t brute_count(const EnvClass& c, int depth, int level) {
  std::uint64_t total = 2;
  if (depth == 0) return total;
  for (const auto& t : c.calls) {
    if (t.min_level() > level) continue;
    std::uint64_t sub = brute_count(c, depth - 1, level + 1);
    std::uint64_t prod = 1;
    for (std::size_t i = 0; i < c.classes_of(t.oracle).size(); ++i) prod *= sub;
    total += prod;
  }
  return total;
}

}  // namespace

TEST(Envs, SimpleClassCountsMatchBruteForce) {
  for (int w = 0; w <= 2; ++w)
    for (int d = 0; d <= 2; ++d) {
      EnvClass c = simple_env_class({"O", "P"}, w, d);
      std::uint64_t expect = brute_count(c, d, 0);
      EXPECT_EQ(count_environments(c), expect) << w << "," << d;
      if (expect <= 200000) EXPECT_EQ(enumerate_environments(c).size(), expect) << w << "," << d;
    }
  // one oracle, one class, depth 1: decide 0, decide 1, O then (0 or 1)
  EXPECT_EQ(count_environments(simple_env_class({"O"}, 0, 1)), 4u);
}

TEST(Envs, BundledClassesMatchBruteForce) {
  for (const char* name : {"toy", "commitment", "wg"}) {
    Scenario s = load_scenario(name);
    EXPECT_EQ(count_environments(s.env_class), brute_count(s.env_class, s.env_class.depth, 0))
        << name;
  }
}

TEST(Envs, CanonicalOrderAndIds) {
  auto zs = enumerate_environments(simple_env_class({"O"}, 1, 1), 100, "q");
  ASSERT_EQ(zs.size(), 2u + 4u);
  EXPECT_EQ(zs[0].id, "q0");
  EXPECT_TRUE(zs[0].root->decide);
  EXPECT_EQ(zs[0].root->bit, 0);
  EXPECT_EQ(zs[1].root->bit, 1);
  EXPECT_FALSE(zs[2].root->decide);
  EXPECT_EQ(zs[2].depth(), 1);
  EXPECT_THROW(enumerate_environments(simple_env_class({"O", "P"}, 2, 3), 1000), SpaceTooLarge);
}

TEST(Envs, FormatParseRoundTrip) {
  Scenario s = load_scenario("wg");
  std::set<std::string> seen;
  for (const auto& z : s.universe.envs->all()) {
    std::string text = format_environment(z);
    Environment back = parse_environment(text);
    EXPECT_EQ(back.id, z.id);
    EXPECT_EQ(format_environment(back), text);
    EXPECT_TRUE(seen.insert(text).second) << "duplicate " << z.id;
  }
  EXPECT_TRUE(s.universe.envs->contains("wg_replay"));
  EXPECT_FALSE(s.universe.envs->in_family("wg_replay"));
}

TEST(Envs, ArgumentsAndMatchers) {
  for (const char* t : {"0b01", "zeros", "ones", "obs0", "obs1.1", "flip(obs0,2)"})
    EXPECT_EQ(ArgTemplate::parse(t).str(), t);
  for (const char* t : {"any", "yield", "ret", "eq(01,1)", "zero", "nonzero", "bit(0,1)=1"})
    EXPECT_EQ(Matcher::parse(t).str(), t);
  Matcher b = Matcher::parse("bit(0,1)=1");
  Obs o{false, {Bits::parse("01")}};
  EXPECT_TRUE(b.matches(1, {}, o));
  EXPECT_FALSE(Matcher::parse("zero").matches(1, {}, o));
  EXPECT_FALSE(Matcher::parse("ret").matches(1, {}, Obs::yield()));
}

TEST(Envs, ResolveCallFromHistory) {
  auto z = env("env z depth=2\n-> call O(flip(obs0,0),ones)\n  obs=any -> decide 1\n");
  CallSpec cs;
  std::vector<Obs> hist{Obs{false, {Bits::parse("10")}}};
  ASSERT_TRUE(resolve_call(*z.root, hist, {2, 3}, cs));
  EXPECT_EQ(cs.str(), "O(00,111)");
  EXPECT_FALSE(resolve_call(*z.root, {}, {2, 3}, cs));
}
