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

#ifndef UCRC_EMUL_EMUL_HPP_
#define UCRC_EMUL_EMUL_HPP_

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ucrc/behavior/behavior.hpp"
#include "ucrc/equiv/equiv.hpp"

namespace ucrc {

struct NamedProgram {
  std::string id;
  OracleProgram program;
};

struct Ceilings {
  std::uint64_t max_envs = 200000;
  std::uint64_t max_compilers = 4096;
  // (context, program) pairs times environments times grid points
  std::uint64_t max_cells = 50000000;
  // largest security parameter on a grid
  int max_n = 6;
  // widest single sampling statement at the largest grid point
  int max_sample_bits = 16;
};

// A finite universe of source and target programs and contexts, compared
// over one environment registry and grid.
struct Universe {
  std::vector<NamedProgram> source_programs;
  std::vector<NamedProgram> source_contexts;
  std::vector<NamedProgram> target_programs;
  std::vector<NamedProgram> target_contexts;
  std::shared_ptr<const EnvRegistry> envs;
  std::vector<int> grid;
  ResourceBudget source_budget;
  ResourceBudget target_budget;
  EquivSpec equiv;
  PrimitiveTable prims;
  Ceilings ceilings;
  int threads = 1;
};

// Source program id -> target program id.
using CompilerMap = std::map<std::string, std::string>;

enum class Side { kSource, kTarget };

// Memoizes behaviors, budget predicates and relation verdicts of a universe.
// Throws UniverseTooLarge on construction when the estimated number of
// evaluation cells is above the ceiling.
class UniverseEval {
 public:
  explicit UniverseEval(Universe u);

  const Universe& universe() const { return u_; }

  std::shared_ptr<const Behavior> behavior(Side side, const NamedProgram& ctx,
                                           const NamedProgram& prg);
  // Budget of the side holds on ctx ⋈ prg for every environment and n.
  bool predicate(Side side, const NamedProgram& ctx, const NamedProgram& prg);
  // behav(c1 ⋈ p1) ≡ behav(c2 ⋈ p2) under the universe relation.
  const Verdict& related(Side s1, const NamedProgram& c1, const NamedProgram& p1, Side s2,
                         const NamedProgram& c2, const NamedProgram& p2);

  const NamedProgram& source_program(const std::string& id) const;
  const NamedProgram& target_program(const std::string& id) const;

  // Emul(p) on the given side: ids of the source programs F such that p
  // emulates F with the source contexts as simulators.
  std::set<std::string> emul_set(Side side, const NamedProgram& p);

 private:
  std::string key(Side s, const NamedProgram& c, const NamedProgram& p) const;

  Universe u_;
  std::mutex mu_;
  std::map<std::string, std::shared_ptr<const Behavior>> behaviors_;
  std::map<std::string, bool> preds_;
  std::map<std::string, Verdict> verdicts_;
};

struct EmulationCounterexample {
  std::string attacker;
  std::string simulator;
  std::string env;
  int n = 0;
  Rational real_p1;
  Rational ideal_p1;
  Rational advantage;
};

struct EmulationVerdict {
  bool holds = false;
  std::map<std::string, std::string> witness;  // attacker -> simulator
  std::optional<EmulationCounterexample> counterexample;
  std::map<std::string, DiffProfile> profiles;  // per attacker
  std::string detail;
};

// prot emulates func: for every attacker A (aligned with sims, or all using
// sims[0] when one simulator is given), behav(A ⋈ prot) ≡ behav(S ⋈ func).
// PredicateViolation when a budget fails on either side.
EmulationVerdict verify_emulation(UniverseEval& ev, const NamedProgram& prot,
                                  const NamedProgram& func, const std::vector<NamedProgram>& sims,
                                  const std::vector<NamedProgram>& attackers);

// F ∈ Emul(prot): every target context within budget is matched by some
// simulator of the space within the source budget.
bool emul_set_membership(UniverseEval& ev, const NamedProgram& func, const NamedProgram& prot,
                         const std::vector<NamedProgram>& sim_space);

// HypEq(F) with its simulator space, predicate and relation.
struct HyperpropertySpec {
  NamedProgram anchor;
  std::vector<NamedProgram> simulators;
  ResourceBudget predicate;
  EquivSpec equiv;
};

// t ∈ HypEq(F): some simulator within the predicate makes behav(S ⋈ F)
// related to t. Grids and environments come from t.
bool hyp_membership(const Behavior& t, const HyperpropertySpec& h);

struct RcVerdict {
  bool holds = true;
  // failing source program, target context and (for RHP) anchor
  std::string program;
  std::string context;
  std::string anchor;
  std::string detail;
};

RcVerdict check_predRHC(UniverseEval& ev, const CompilerMap& cm);
// Anchors are source program ids (each standing for HypEq of that program,
// with the universe source contexts as simulators).
RcVerdict check_predRHP(UniverseEval& ev, const CompilerMap& cm,
                        const std::vector<std::string>& anchors);

// Every total map from source to target programs, in canonical order, ids
// "c<k>". UniverseTooLarge above the compiler ceiling.
std::vector<std::pair<std::string, CompilerMap>> enumerate_compilers(const Universe& u);

struct TheoremReport {
  std::vector<std::string> lines;
  int checks = 0;
  int disagreements = 0;
  bool ok() const { return disagreements == 0; }
  std::string format() const;
};

// Computes predRHC, predRHP, membership and Emul-subset for each compiler and
// reports agreement of the biconditionals.
TheoremReport cross_check_theorems(UniverseEval& ev,
                                   const std::vector<std::pair<std::string, CompilerMap>>& compilers);

}  // namespace ucrc

#endif  // UCRC_EMUL_EMUL_HPP_
