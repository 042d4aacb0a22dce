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

#include <fstream>
#include <string>

#include "helpers.hpp"
#include "oracles.hpp"
#include "ucrc/cases/primitives.hpp"
#include "ucrc/common/error.hpp"
#include "ucrc/emul/emul.hpp"
#include "ucrc/lang/validate.hpp"

using namespace ucrc;
using namespace ucrc::testing;

namespace {

std::shared_ptr<const Behavior> side_behavior(UniverseEval& ev, Side side) {
  const Universe& u = ev.universe();
  if (side == Side::kTarget)
    return ev.behavior(side, u.target_contexts[0], u.target_programs[0]);
  return ev.behavior(side, u.source_contexts[0], u.source_programs[0]);
}

}  // namespace

TEST(Primitives, AdvantagesShrinkWithN) {
  for (int n = 1; n < 5; ++n) {
    EXPECT_GT(prg_advantage(n), prg_advantage(n + 1)) << n;
    EXPECT_GT(prf_advantage(n), prf_advantage(n + 1)) << n;
  }
  // at most 2^n images among 2^4n strings
  for (int n = 1; n <= 4; ++n) EXPECT_LE(prg_image_fraction(n), pow2_neg(3 * n));
}

TEST(Primitives, PermutationIsABijection) {
  for (int n = 1; n <= 6; ++n) {
    auto p = toy_permutation(n);
    std::sort(p.begin(), p.end());
    for (std::uint64_t i = 0; i < p.size(); ++i) ASSERT_EQ(p[i], i);
    EXPECT_EQ(p.size(), std::size_t{1} << n);
  }
  Bits k(1, 3), x(5, 3);
  EXPECT_EQ(toy_prf(3, k, x).value(), toy_permutation(3)[1 ^ 5]);
  EXPECT_EQ(toy_prg(2, k).width(), 8);
}

TEST(Commitment, FrameworkMatchesFlatLoop) {
  Scenario s = load_scenario("commitment", {std::vector<int>{1, 2}, {}, {}, false, 1});
  UniverseEval ev(s.universe);
  auto real = side_behavior(ev, Side::kTarget);
  auto ideal = side_behavior(ev, Side::kSource);
  for (const auto& z : s.universe.envs->all())
    for (int n : {1, 2}) {
      EXPECT_EQ(real->exec(z.id, n).p1, commitment_p1(z, n, false)) << z.id << " n=" << n;
      EXPECT_EQ(ideal->exec(z.id, n).p1, commitment_p1(z, n, true)) << z.id << " n=" << n;
    }
}

TEST(Commitment, BoundedEnvironmentsHoldWithShrinkingAdvantage) {
  CommitmentCase c = build_commitment(4);
  UniverseEval ev(c.scenario.universe);
  EmulationVerdict v = check_scenario(ev);
  ASSERT_TRUE(v.holds) << v.detail;
  const DiffProfile& p = v.profiles.begin()->second;
  EXPECT_TRUE(p.non_increasing());
  for (int n = 1; n <= 4; ++n) EXPECT_LT(p.worst.at(n).second, Rational(1, n));
}

TEST(Commitment, ImageMembershipBreaksUnboundedCheck) {
  CommitmentCase c = build_commitment(2, true);
  ASSERT_TRUE(c.scenario.universe.envs->contains(c.unbounded_env.id));
  UniverseEval ev(c.scenario.universe);
  EmulationVerdict v = check_scenario(ev);
  ASSERT_FALSE(v.holds);
  const DiffProfile& p = v.profiles.begin()->second;
  for (int n : {1, 2}) {
    Rational adv = p.adv.at({c.unbounded_env.id, n});
    EXPECT_EQ(adv, commitment_image_advantage(n)) << n;
    EXPECT_GE(adv, 1 - pow2_neg(3 * n)) << n;
    EXPECT_EQ(commitment_p1(c.unbounded_env, n, false), 1);
  }
}

TEST(RecordLayer, WorstAdvantageIsTwoBlindForgeries) {
  Scenario s = load_scenario("wg");
  UniverseEval ev(s.universe);
  EmulationVerdict v = check_scenario(ev);
  ASSERT_TRUE(v.holds) << v.detail;
  const DiffProfile& p = v.profiles.begin()->second;
  EXPECT_TRUE(p.strictly_decreasing());
  for (int n : s.universe.grid) {
    EXPECT_EQ(p.worst.at(n).second, forgery_advantage(n, 2)) << n;
    EXPECT_LE(p.worst.at(n).second, 2 * pow2_neg(n));
  }
}

TEST(RecordLayer, ReplayAndReorder) {
  Scenario s = load_scenario("wg");
  UniverseEval ev(s.universe);
  auto real = side_behavior(ev, Side::kTarget);
  auto ideal = side_behavior(ev, Side::kSource);
  EXPECT_TRUE(replay_violations(*real, "Oe2aR", 2).empty());
  EXPECT_TRUE(replay_violations(*ideal, "Oe2aR", 2).empty());
  for (int n : s.universe.grid) {
    // a replayed record is never accepted twice
    EXPECT_EQ(real->exec("wg_replay", n).p1, 0);
    // records delivered out of order are both accepted
    EXPECT_EQ(real->exec("wg_reorder", n).p1, 1);
    EXPECT_EQ(ideal->exec("wg_reorder", n).p1, 1);
  }
}

TEST(RecordLayer, ReplayCheckSeesDuplicates) {
  // a receiver with no counter bookkeeping accepts the same record twice
  auto accept_all = prog(
      "program Loose.\ntype c_t = 1.\nexport R.\n"
      "let Recv() = foreach i <= 2 do (R(x: c_t) := return(x)).");
  auto envs = std::make_shared<EnvRegistry>();
  envs->add(env("env twice depth=2\n-> call R(0b0)\n  obs=any -> call R(0b0)\n    obs=any -> decide 1\n"));
  Behavior b(link(empty_context(), accept_all), {1}, ResourceBudget::none(), envs);
  auto v = replay_violations(b, "R", 0);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0], "twice@1");
}

TEST(RecordLayer, HopChainHolds) {
  WgCase c = build_wg_record(2, 2, 2);
  ChainReport r = check_game_hops(c.chain, c.scenario.universe.envs, c.scenario.universe.grid,
                                  c.scenario.universe.prims);
  EXPECT_TRUE(r.ok);
  ASSERT_EQ(r.hops.size(), 7u);
  for (int n : {1, 2}) {
    Rational sum = 0;
    for (const auto& h : r.hops) {
      EXPECT_TRUE(h.holds) << h.hop.name;
      if (h.hop.kind == GameHop::kBound) {
        EXPECT_LE(h.worst.at(n), h.hop.bound.at(n)) << h.hop.name;
        sum += h.hop.bound.at(n);
      } else {
        EXPECT_EQ(h.worst.at(n), 0) << h.hop.name;
      }
    }
    EXPECT_EQ(r.bound_sum.at(n), sum);
    EXPECT_LE(r.direct.at(n), sum);
  }
}

TEST(RecordLayer, BrokenChainRejected) {
  WgCase c = build_wg_record(1, 2, 2);
  c.chain.hops[2].before = "G5";
  EXPECT_THROW(check_game_hops(c.chain, c.scenario.universe.envs, c.scenario.universe.grid,
                               c.scenario.universe.prims),
               ChainBroken);
}

TEST(RecordLayer, LeakyProtocolFails) {
  Scenario s = load_scenario("wg_broken");
  UniverseEval ev(s.universe);
  EmulationVerdict v = check_scenario(ev);
  EXPECT_FALSE(v.holds);
  ASSERT_TRUE(v.counterexample);
  EXPECT_EQ(v.counterexample->advantage,
            abs_diff(v.counterexample->real_p1, v.counterexample->ideal_p1));
}

TEST(Manifests, Errors) {
  EXPECT_THROW(load_scenario(std::string(UCRC_FIXTURES_DIR) + "/missing_file.manifest"), IoError);
  EXPECT_THROW(load_manifest("no_such_manifest"), IoError);
  EXPECT_THROW(parse_grid("3..1"), GridMismatch);
  EXPECT_THROW(parse_grid("0,1"), GridMismatch);
  EXPECT_EQ(parse_grid("1..3"), (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(parse_grid("1,2,4"), (std::vector<int>{1, 2, 4}));
  ScenarioOverrides o;
  o.grid = std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8};
  EXPECT_THROW(load_scenario("wg", o), SpaceTooLarge);
  Manifest m = parse_manifest("# c\nname = x\nmode = universe\n", "m");
  EXPECT_EQ(m.get("name"), "x");
  EXPECT_EQ(m.get_or("grid", "1"), "1");
  EXPECT_THROW(m.get("grid"), ModelError);
}

TEST(Manifests, OverridesApply) {
  Manifest m = parse_manifest("param.n_M = 3\ntype.msg_t = 1\n");
  OracleProgram p = bundled_prog("wg_real.ocl");
  apply_overrides(p, m);
  SizeEnv se(p);
  EXPECT_EQ(se.resolve_or_throw(Size::symbol("n_M")).at(1), 3);
  EXPECT_EQ(se.resolve_or_throw(Size::symbol("msg_t")).at(1), 1);
}
