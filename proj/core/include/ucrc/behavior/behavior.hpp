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

#ifndef UCRC_BEHAVIOR_BEHAVIOR_HPP_
#define UCRC_BEHAVIOR_BEHAVIOR_HPP_

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "ucrc/behavior/envs.hpp"
#include "ucrc/lang/link.hpp"
#include "ucrc/sem/explorer.hpp"
#include "ucrc/sem/value.hpp"
#include "ucrc/sem/world.hpp"

namespace ucrc {

// Final-bit distribution at one n. p1 + p0 + pbot = 1.
struct BinaryDist {
  Rational p1;
  Rational p0;
  Rational pbot;
  bool operator==(const BinaryDist&) const = default;
};

struct BinaryDistFamily {
  std::map<int, BinaryDist> at;
  std::vector<int> grid() const;
  bool operator==(const BinaryDistFamily&) const = default;
};

struct BehaviorOptions {
  std::size_t state_ceiling = 1u << 22;
};

// behav(W): for every registered environment and every n of the grid, the
// exact trace distribution and the final-bit masses. Everything is computed
// lazily and memoized; methods may be called from several threads.
class Behavior {
 public:
  Behavior(WholeProgram w, std::vector<int> grid, ResourceBudget budget,
           std::shared_ptr<const EnvRegistry> envs, PrimitiveTable prims = {},
           BehaviorOptions opts = {});
  ~Behavior();
  Behavior(const Behavior&) = delete;
  Behavior& operator=(const Behavior&) = delete;

  const WholeProgram& world() const { return w_; }
  const std::vector<int>& grid() const { return grid_; }
  const ResourceBudget& budget() const { return budget_; }
  const EnvRegistry& envs() const { return *envs_; }
  const std::shared_ptr<const EnvRegistry>& env_registry() const { return envs_; }
  const PrimitiveTable& prims() const { return prims_; }

  // Exact trace distribution of a registered environment.
  TraceDist trace_dist(const std::string& env_id, int n) const;
  // Same for an environment outside the registry.
  TraceDist trace_dist(const Environment& z, int n) const;

  // Direct final-bit masses (Exec), without building traces.
  BinaryDist exec(const std::string& env_id, int n) const;
  BinaryDist exec(const Environment& z, int n) const;
  // Largest step count seen on any path of (env, n).
  std::uint64_t max_steps(const std::string& env_id, int n) const;

  // Fills the exec cache for every (env, n); parallel over n.
  void prepare(int threads = 1) const;

  // True iff no path of any registered environment times out.
  bool within_budget() const;

 private:
  struct PerN;
  PerN& slot(int n) const;
  BitMass exec_mass(const std::string& env_id, int n) const;

  WholeProgram w_;
  std::vector<int> grid_;
  ResourceBudget budget_;
  std::shared_ptr<const EnvRegistry> envs_;
  PrimitiveTable prims_;
  BehaviorOptions opts_;
  std::map<int, std::unique_ptr<PerN>> per_n_;
};

// restrict(b, z): per n, trace mass aggregated by final_bit (the summation
// form). UnknownEnvironment when z is not registered.
BinaryDistFamily restrict(const Behavior& b, const std::string& env_id);
// Same aggregation with a caller-supplied extraction function.
BinaryDistFamily restrict_with(const Behavior& b, const std::string& env_id,
                               const std::function<int(const std::string&)>& beta);

// The direct Exec family of z (final-bit masses from the walk).
BinaryDistFamily exec_family(const Behavior& b, const std::string& env_id);

// behav_n: one trace distribution per environment.
std::map<std::string, TraceDist> behav_n(const WholeProgram& w, const std::vector<Environment>& envs,
                                         int n, const ResourceBudget& budget,
                                         const PrimitiveTable& prims = {});

// Exec_n(Z, ctx, prg) over the grid.
BinaryDistFamily exec_dist(const Environment& z, const OracleProgram& ctx, const OracleProgram& prg,
                           const std::vector<int>& grid, const ResourceBudget& budget,
                           const PrimitiveTable& prims = {});

struct TracePrefix {
  std::vector<Event> mu;
  Rational rho;
  int n = 0;
};

// Replays the environment calls of p.mu; branches on each recorded response
// and decides 0 on any deviation, 1 after the last one. A trailing decide in
// mu is ignored.
Environment canonical_env(const TracePrefix& p, const std::string& id = "zp");

// Events of mu without a trailing decide.
std::vector<Event> strip_decide(const std::vector<Event>& mu);

// Total mass of the traces of d that start with the events of mu.
Rational prefix_mass(const TraceDist& d, const std::vector<Event>& mu);

}  // namespace ucrc

#endif  // UCRC_BEHAVIOR_BEHAVIOR_HPP_
