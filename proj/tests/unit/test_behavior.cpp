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

#include <memory>
#include <string>

#include "helpers.hpp"
#include "ucrc/behavior/axioms.hpp"
#include "ucrc/behavior/behavior.hpp"
#include "ucrc/common/error.hpp"

using namespace ucrc;
using namespace ucrc::testing;

namespace {

std::shared_ptr<const Behavior> make(const Scenario& s, const OracleProgram& ctx,
                                     const OracleProgram& prg, const ResourceBudget& budget) {
  return std::make_shared<Behavior>(link(ctx, prg), s.universe.grid, budget, s.universe.envs,
                                    s.universe.prims);
}

}  // namespace

TEST(Behavior, RestrictEqualsExecOnToyWorlds) {
  Scenario s = load_scenario("toy");
  for (const auto& sw : scenario_worlds(s)) {
    Behavior b(sw.w, s.universe.grid, sw.budget, s.universe.envs);
    for (const auto& z : s.universe.envs->all()) {
      BinaryDistFamily r = restrict(b, z.id);
      EXPECT_EQ(r, exec_family(b, z.id)) << sw.label << " " << z.id;
      for (const auto& [n, d] : r.at) EXPECT_EQ(d.p1 + d.p0 + d.pbot, 1);
    }
  }
}

TEST(Behavior, UnknownEnvironmentRejected) {
  Scenario s = load_scenario("toy");
  auto b = make(s, s.universe.source_contexts[0].program, s.universe.source_programs[0].program,
                s.universe.source_budget);
  EXPECT_THROW(restrict(*b, "nope"), UnknownEnvironment);
}

TEST(Behavior, CanonicalEnvironmentRecoversPrefixMass) {
  Scenario s = load_scenario("commitment");
  const auto& u = s.universe;
  auto b = make(s, u.target_contexts[0].program, u.target_programs[0].program, u.target_budget);
  int checked = 0;
  for (const auto& z : u.envs->all()) {
    if (z.depth() < 2) continue;
    TraceDist d = b->trace_dist(z.id, 1);
    for (const auto& [t, p] : d.entries) {
      auto mu = strip_decide(parse_events(t));
      Rational rho = prefix_mass(d, mu);
      EXPECT_GE(rho, p);
      Environment zp = canonical_env({mu, rho, 1});
      BinaryDist ex = b->exec(zp, 1);
      EXPECT_EQ(ex.p1, rho) << z.id << " " << t;
      ++checked;
    }
    if (checked > 200) break;
  }
  EXPECT_GT(checked, 0);
}

TEST(Behavior, DummyAttackerComposesToTheRealProtocol) {
  Scenario s = load_scenario("wg");
  GameChain c = wg_game_chain(s.manifest);
  const Game& g0 = c.games[0];
  const Game& g1 = c.games[1];
  auto b0 = make(s, g0.context.program, g0.program.program, ResourceBudget::none());
  auto b1 = make(s, g1.context.program, g1.program.program, ResourceBudget::none());
  for (const auto& z : s.universe.envs->all()) {
    EXPECT_EQ(exec_dist(z, g0.context.program, g0.program.program, s.universe.grid,
                        ResourceBudget::none(), s.universe.prims),
              exec_family(*b1, z.id))
        << z.id;
    EXPECT_EQ(b0->trace_dist(z.id, 2), b1->trace_dist(z.id, 2)) << z.id;
  }
}

TEST(Behavior, AxiomsHoldOnBundledModels) {
  std::vector<AxiomModel> ms;
  for (const char* name : {"toy", "commitment", "wg"}) {
    Scenario s = load_scenario(name);
    for (const auto& sw : scenario_worlds(s))
      ms.push_back({sw.label, std::make_shared<Behavior>(sw.w, std::vector<int>{1, 2}, sw.budget,
                                                         s.universe.envs, s.universe.prims)});
  }
  AxiomOptions o;
  o.samples = 300;
  AxiomReport r = axiom_suite(ms, o);
  EXPECT_TRUE(r.ok()) << r.format();
  EXPECT_EQ(r.samples, 300);
  EXPECT_GE(r.checked(1), 300);
  EXPECT_EQ(r.checked(4), 300);
  EXPECT_NO_THROW(require_axioms(r));
}

TEST(Behavior, BrokenExtractionViolatesAxiomFour) {
  Scenario s = load_scenario("toy");
  auto sw = scenario_worlds(s)[0];
  std::vector<AxiomModel> ms{
      {"m", std::make_shared<Behavior>(sw.w, s.universe.grid, sw.budget, s.universe.envs)}};
  AxiomOptions o;
  o.samples = 50;
  o.beta = [](const std::string& t) { return final_bit(t) == 1 ? 0 : 1; };
  AxiomReport r = axiom_suite(ms, o);
  ASSERT_FALSE(r.ok());
  bool four = false;
  for (const auto& f : r.failures) four = four || f.axiom == 4;
  EXPECT_TRUE(four);
  EXPECT_THROW(require_axioms(r), AxiomViolation);
}
