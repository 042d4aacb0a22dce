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

#ifndef UCRC_EQUIV_EQUIV_HPP_
#define UCRC_EQUIV_EQUIV_HPP_

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ucrc/behavior/behavior.hpp"

namespace ucrc {

// ε(n) = coeff, coeff·2^-n, or coeff·n^-power.
struct Schedule {
  enum Kind { kConst, kExpHalf, kPolyInv } kind = kConst;
  Rational coeff = 1;
  int power = 1;

  Rational at(int n) const;
  // "1/4", "1/2*2^-n", "1/1*n^-2"
  std::string str() const;
  static Schedule parse(const std::string& text);
  bool operator==(const Schedule&) const = default;
};

struct EquivSpec {
  enum Kind { kPerfect, kStatistical, kCompProxy, kRefinement } kind = kPerfect;
  Schedule eps;  // kStatistical
  int c = 1;     // kCompProxy: advantage < n^-c ...
  int N = 0;     // ... for every grid n > N

  static EquivSpec perfect() { return {}; }
  static EquivSpec statistical(Schedule s) { return {kStatistical, s, 1, 0}; }
  static EquivSpec comp_proxy(int c, int N) { return {kCompProxy, {}, c, N}; }
  static EquivSpec refinement() { return {kRefinement, {}, 1, 0}; }

  // "perfect", "stat:<schedule>", "comp:c=<c>,N=<N>", "refine"
  std::string str() const;
  static EquivSpec parse(const std::string& text);
  bool operator==(const EquivSpec&) const = default;
};

// |Pr[X_n = 1] - Pr[Y_n = 1]| per n.
std::map<int, Rational> binary_diff(const BinaryDistFamily& x, const BinaryDistFamily& y);

struct DiffProfile {
  std::map<std::pair<std::string, int>, Rational> adv;  // (env, n)
  std::map<int, std::pair<std::string, Rational>> worst;  // per n; first env in order on ties

  // worst advantage per n in grid order
  std::vector<Rational> curve() const;
  bool non_increasing() const;
  bool strictly_decreasing() const;
  // "env_id,n,advantage_num,advantage_den" lines, sorted
  std::string csv() const;
};

struct Counterexample {
  std::string env;
  int n = 0;
  Rational left;   // Pr[=1] of the first behavior (or the missing trace mass)
  Rational right;  // Pr[=1] of the second behavior
  Rational advantage;
  std::string trace;  // Perfect/Refinement: the first differing trace
};

struct Verdict {
  bool holds = true;
  EquivSpec spec;
  DiffProfile profile;
  std::optional<Counterexample> counterexample;
  std::string detail;
};

struct EquivOptions {
  // Perfect/Refinement: compare every (env, n) instead of stopping at the
  // first difference.
  bool exhaustive = false;
  // also fill the advantage profile under Perfect/Refinement
  bool profile = false;
};

// Both behaviors must share the grid (GridMismatch) and the environment ids
// (UnknownEnvironment). Counterexamples are the first failing (env, n) in
// registry order, then grid order.
Verdict equiv_check(const Behavior& b1, const Behavior& b2, const EquivSpec& spec,
                    const EquivOptions& opts = {});

// Advantage profile over every registered environment.
DiffProfile diff_profile(const Behavior& b1, const Behavior& b2);

struct LawReport {
  std::vector<std::string> lines;
  int checked = 0;
  int violations = 0;
  bool ok() const { return violations == 0; }
};

// Reflexivity on every behavior of the samples and transitivity on every
// triple; Statistical and CompProxy use the triangle form per (env, n).
LawReport preorder_laws(const EquivSpec& spec,
                        const std::vector<std::array<const Behavior*, 3>>& samples);

}  // namespace ucrc

#endif  // UCRC_EQUIV_EQUIV_HPP_
