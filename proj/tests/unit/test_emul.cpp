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

#include "helpers.hpp"
#include "ucrc/common/error.hpp"
#include "ucrc/emul/emul.hpp"

using namespace ucrc;
using namespace ucrc::testing;

namespace {

CompilerMap identity(const Universe& u) {
  CompilerMap cm;
  for (const auto& p : u.source_programs) cm[p.id] = p.id;
  return cm;
}

const NamedProgram& ctx(const std::vector<NamedProgram>& v, const std::string& id) {
  for (const auto& c : v)
    if (c.id == id) return c;
  throw std::runtime_error("no context " + id);
}

}  // namespace

TEST(Emul, IdentityCompilerPerfectWithoutBudgets) {
  ScenarioOverrides o;
  o.disable_budgets = true;
  Scenario s = load_scenario("toy", o);
  EXPECT_TRUE(s.universe.source_budget.unbounded);
  UniverseEval ev(s.universe);
  RcVerdict v = check_predRHC(ev, identity(s.universe));
  EXPECT_TRUE(v.holds) << v.detail;
}

TEST(Emul, IdentityCompilerCompProxyWithBudgets) {
  ScenarioOverrides o;
  o.equiv = EquivSpec::comp_proxy(1, 0);
  Scenario s = load_scenario("toy", o);
  EXPECT_FALSE(s.universe.source_budget.unbounded);
  UniverseEval ev(s.universe);
  EXPECT_TRUE(check_predRHC(ev, identity(s.universe)).holds);
  // the slow context runs past the budget
  EXPECT_FALSE(ev.predicate(Side::kTarget, ctx(s.universe.target_contexts, "slow"),
                            s.universe.target_programs[0]));
}

TEST(Emul, BrokenCompilerFailsOnTheCoin) {
  Scenario s = load_scenario("toy_broken_compiler");
  UniverseEval ev(s.universe);
  CompilerMap cm{{"coin", "zero"}, {"zero", "zero"}, {"one", "one"}, {"hide", "hide"}};
  RcVerdict v = check_predRHC(ev, cm);
  EXPECT_FALSE(v.holds);
  EXPECT_EQ(v.program, "coin");
  RcVerdict p = check_predRHP(ev, cm, {"coin", "zero", "one", "hide"});
  EXPECT_FALSE(p.holds);
}

TEST(Emul, ProtocolEmulatesItself) {
  Scenario s = load_scenario("toy");
  UniverseEval ev(s.universe);
  const auto& u = s.universe;
  const NamedProgram& dummy = ctx(u.source_contexts, "dummy");
  for (const auto& p : u.source_programs) {
    auto v = verify_emulation(ev, p, p, {dummy}, {ctx(u.target_contexts, "dummy")});
    EXPECT_TRUE(v.holds) << p.id;
    EXPECT_FALSE(v.counterexample);
  }
}

TEST(Emul, MismatchedFunctionalityHasCounterexample) {
  Scenario s = load_scenario("toy");
  UniverseEval ev(s.universe);
  const auto& u = s.universe;
  auto v = verify_emulation(ev, u.target_programs[0] /*coin*/, u.source_programs[2] /*one*/,
                            {ctx(u.source_contexts, "dummy")}, {ctx(u.target_contexts, "dummy")});
  ASSERT_FALSE(v.holds);
  ASSERT_TRUE(v.counterexample);
  const auto& c = *v.counterexample;
  EXPECT_EQ(c.advantage, abs_diff(c.real_p1, c.ideal_p1));
  // Perfect stops at the first differing trace, which need not move Pr[1];
  // the profile still sees the full gap of a fair coin against a constant
  const DiffProfile& prof = v.profiles.at("dummy");
  for (int n : u.grid) EXPECT_EQ(prof.worst.at(n).second, Rational(1, 2));
}

TEST(Emul, MembershipNeedsAMatchingSimulator) {
  Scenario s = load_scenario("toy");
  UniverseEval ev(s.universe);
  const auto& u = s.universe;
  const auto& coin = u.source_programs[0];
  const auto& one = u.source_programs[2];
  EXPECT_TRUE(emul_set_membership(ev, coin, u.target_programs[0], u.source_contexts));
  // only the constant simulator on offer, which cannot produce coin flips
  EXPECT_FALSE(emul_set_membership(ev, one, u.target_programs[0], {ctx(u.source_contexts, "zero")}));
  EXPECT_FALSE(emul_set_membership(ev, coin, u.target_programs[0], {}));
  auto set = ev.emul_set(Side::kTarget, u.target_programs[0]);
  EXPECT_TRUE(set.count("coin"));
  EXPECT_FALSE(set.count("one"));
}

TEST(Emul, HyperpropertyMembership) {
  Scenario s = load_scenario("toy");
  const auto& u = s.universe;
  // environments over O alone: the bare programs export nothing else
  auto envs = EnvRegistry::from_class(simple_env_class({"O"}, 1, 2));
  Behavior always_one(link(empty_context(), bundled_prog("toy_one.ocl")), u.grid,
                      ResourceBudget::none(), envs);
  HyperpropertySpec h{u.source_programs[0], {ctx(u.source_contexts, "dummy")},
                      ResourceBudget::none(), EquivSpec::perfect()};
  EXPECT_FALSE(hyp_membership(always_one, h));
  Behavior coin(link(empty_context(), bundled_prog("toy_coin.ocl")), u.grid, ResourceBudget::none(),
                envs);
  EXPECT_TRUE(hyp_membership(coin, h));
}

TEST(Emul, RecordLayerInHyperpropertyOfTheFunctionality) {
  Scenario s = load_scenario("wg_compiler");
  const auto& u = s.universe;
  Behavior real(link(empty_context(), u.target_programs[0].program), u.grid, u.target_budget,
                u.envs, u.prims);
  Behavior leak(link(empty_context(), u.target_programs[1].program), u.grid, u.target_budget,
                u.envs, u.prims);
  HyperpropertySpec h{u.source_programs[0], u.source_contexts, u.source_budget, u.equiv};
  EXPECT_TRUE(hyp_membership(real, h));
  EXPECT_FALSE(hyp_membership(leak, h));
}

TEST(Emul, RecordLayerCompilers) {
  Scenario s = load_scenario("wg_compiler");
  UniverseEval ev(s.universe);
  EXPECT_TRUE(check_predRHC(ev, {{"ideal", "real"}}).holds);
  EXPECT_TRUE(check_predRHP(ev, {{"ideal", "real"}}, {"ideal"}).holds);
  EXPECT_FALSE(check_predRHC(ev, {{"ideal", "leak"}}).holds);
  EXPECT_FALSE(check_predRHP(ev, {{"ideal", "leak"}}, {"ideal"}).holds);
}

TEST(Emul, TheoremsAgreeOnTheToyUniverse) {
  for (auto spec : {EquivSpec::perfect(), EquivSpec::statistical(Schedule::parse("1/4")),
                    EquivSpec::comp_proxy(1, 0)}) {
    ScenarioOverrides o;
    o.equiv = spec;
    Scenario s = load_scenario("toy", o);
    auto comps = enumerate_compilers(s.universe);
    EXPECT_GE(comps.size(), 20u);
    UniverseEval ev(s.universe);
    TheoremReport r = cross_check_theorems(ev, comps);
    EXPECT_TRUE(r.ok()) << spec.str() << "\n" << r.format();
    EXPECT_GT(r.checks, 0);
  }
}

TEST(Emul, CompilerEnumerationOrder) {
  Scenario s = load_scenario("toy");
  auto comps = enumerate_compilers(s.universe);
  ASSERT_EQ(comps.size(), 256u);
  EXPECT_EQ(comps[0].second.at("coin"), "coin");
  EXPECT_EQ(comps[0].second.at("zero"), "coin");
  EXPECT_EQ(comps[1].second.at("coin"), "coin");
  EXPECT_EQ(comps[64].second.at("coin"), "zero");
  s.universe.ceilings.max_compilers = 10;
  EXPECT_THROW(enumerate_compilers(s.universe), UniverseTooLarge);
}

TEST(Emul, CeilingsAreEnforced) {
  ScenarioOverrides o;
  Ceilings c;
  c.max_cells = 100;
  o.ceilings = c;
  Scenario s = load_scenario("toy", o);
  EXPECT_THROW(UniverseEval{s.universe}, UniverseTooLarge);
  Ceilings e;
  e.max_envs = 10;
  o.ceilings = e;
  EXPECT_THROW(load_scenario("toy", o), SpaceTooLarge);
}
