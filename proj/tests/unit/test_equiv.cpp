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

#include <array>
#include <memory>
#include <random>
#include <vector>

#include "helpers.hpp"
#include "ucrc/common/error.hpp"
#include "ucrc/equiv/equiv.hpp"

using namespace ucrc;
using namespace ucrc::testing;

namespace {

struct Pool {
  Scenario s;
  std::vector<std::unique_ptr<Behavior>> bs;
};

// The source-side toy worlds, distinct (context, program) pairs.
const Pool& pool() {
  static Pool* p = [] {
    auto* out = new Pool{load_scenario("toy"), {}};
    for (const auto& sw : scenario_worlds(out->s)) {
      if (sw.label.find(":source:") == std::string::npos) continue;
      out->bs.push_back(std::make_unique<Behavior>(sw.w, out->s.universe.grid, sw.budget,
                                                   out->s.universe.envs));
    }
    return out;
  }();
  return *p;
}

std::vector<std::array<const Behavior*, 3>> random_triples(int count, std::uint64_t seed) {
  const auto& bs = pool().bs;
  std::mt19937_64 rng(seed);
  std::vector<std::array<const Behavior*, 3>> out;
  for (int i = 0; i < count; ++i)
    out.push_back({bs[rng() % bs.size()].get(), bs[rng() % bs.size()].get(),
                   bs[rng() % bs.size()].get()});
  return out;
}

}  // namespace

TEST(Equiv, SpecAndScheduleText) {
  for (const char* t : {"perfect", "refine", "comp:c=1,N=0", "comp:c=2,N=3"})
    EXPECT_EQ(EquivSpec::parse(t).str(), t);
  EXPECT_EQ(EquivSpec::parse("stat:1/4").eps.at(7), Rational(1, 4));
  EXPECT_EQ(Schedule::parse("1/2*2^-n").at(3), Rational(1, 16));
  EXPECT_EQ(Schedule::parse("1/1*n^-2").at(3), Rational(1, 9));
  EXPECT_THROW(EquivSpec::parse("fuzzy"), Error);
}

TEST(Equiv, ExactRelationsAreReflexiveAndTransitive) {
  const auto& bs = pool().bs;
  ASSERT_GE(bs.size(), 20u);
  for (auto spec : {EquivSpec::perfect(), EquivSpec::refinement()}) {
    std::size_t k = bs.size();
    std::vector<std::vector<bool>> rel(k, std::vector<bool>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) rel[i][j] = equiv_check(*bs[i], *bs[j], spec).holds;
    int nontrivial = 0;
    for (std::size_t i = 0; i < k; ++i) {
      EXPECT_TRUE(rel[i][i]);
      for (std::size_t j = 0; j < k; ++j)
        for (std::size_t l = 0; l < k; ++l)
          if (rel[i][j] && rel[j][l]) {
            EXPECT_TRUE(rel[i][l]) << spec.str() << " " << i << "," << j << "," << l;
            if (i != j && j != l) ++nontrivial;
          }
    }
    EXPECT_GT(nontrivial, 0) << spec.str();
  }
}

TEST(Equiv, PerfectIsSymmetric) {
  const auto& bs = pool().bs;
  for (std::size_t i = 0; i < bs.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      EXPECT_EQ(equiv_check(*bs[i], *bs[j], EquivSpec::perfect()).holds,
                equiv_check(*bs[j], *bs[i], EquivSpec::perfect()).holds);
}

TEST(Equiv, StatisticalTriangleOnRandomTriples) {
  auto triples = random_triples(100, 17);
  LawReport r = preorder_laws(EquivSpec::statistical(Schedule::parse("1/4")), triples);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.checked, 400);
  // the same inequality recomputed from the final-bit masses
  const auto& envs = pool().s.universe.envs->all();
  for (const auto& [a, b, c] : triples)
    for (const auto& z : envs)
      for (int n : a->grid()) {
        Rational pa = a->exec(z.id, n).p1, pb = b->exec(z.id, n).p1, pc = c->exec(z.id, n).p1;
        EXPECT_LE(abs_diff(pa, pc), abs_diff(pa, pb) + abs_diff(pb, pc));
      }
}

TEST(Equiv, LawReportsOnOtherRelations) {
  auto triples = random_triples(100, 99);
  for (auto spec : {EquivSpec::perfect(), EquivSpec::refinement(), EquivSpec::comp_proxy(1, 0)})
    EXPECT_TRUE(preorder_laws(spec, triples).ok()) << spec.str();
}

TEST(Equiv, StrengthOrdering) {
  const auto& bs = pool().bs;
  auto stat = EquivSpec::statistical(Schedule::parse("1/4"));
  auto comp = EquivSpec::comp_proxy(1, 0);
  int perfect_pairs = 0;
  for (const auto& x : bs)
    for (const auto& y : bs) {
      bool p = equiv_check(*x, *y, EquivSpec::perfect()).holds;
      bool s = equiv_check(*x, *y, stat).holds;
      bool c = equiv_check(*x, *y, comp).holds;
      if (p) EXPECT_TRUE(s);
      if (s) EXPECT_TRUE(c);
      perfect_pairs += p;
    }
  EXPECT_GT(perfect_pairs, static_cast<int>(bs.size()));
}

TEST(Equiv, CounterexampleMatchesProfile) {
  const auto& bs = pool().bs;
  for (const auto& x : bs)
    for (const auto& y : bs) {
      Verdict v = equiv_check(*x, *y, EquivSpec::statistical(Schedule::parse("1/4")));
      if (v.holds) continue;
      ASSERT_TRUE(v.counterexample);
      const auto& c = *v.counterexample;
      EXPECT_GT(c.advantage, Rational(1, 4));
      EXPECT_EQ(c.left, x->exec(c.env, c.n).p1);
      EXPECT_EQ(c.right, y->exec(c.env, c.n).p1);
      EXPECT_EQ(v.profile.adv.at({c.env, c.n}), c.advantage);
      return;
    }
  FAIL() << "no pair differs";
}

TEST(Equiv, GridMismatchRejected) {
  const auto& s = pool().s;
  auto w = scenario_worlds(s)[0].w;
  Behavior a(w, {1, 2}, ResourceBudget::none(), s.universe.envs);
  Behavior b(w, {1}, ResourceBudget::none(), s.universe.envs);
  EXPECT_THROW(equiv_check(a, b, EquivSpec::perfect()), GridMismatch);
  EXPECT_THROW(equiv_check(a, a, EquivSpec::comp_proxy(1, 5)), GridMismatch);
}
