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

#ifndef UCRC_CASES_CASES_HPP_
#define UCRC_CASES_CASES_HPP_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ucrc/behavior/behavior.hpp"
#include "ucrc/behavior/envs.hpp"
#include "ucrc/emul/emul.hpp"
#include "ucrc/equiv/equiv.hpp"

namespace ucrc {

// "key = value" lines; '#' starts a comment line. Later keys override
// earlier ones.
struct Manifest {
  std::string path;  // as given, or "bundled:<name>"
  std::string dir;   // directory for relative references, empty when bundled
  std::map<std::string, std::string> kv;

  bool has(const std::string& key) const { return kv.count(key) != 0; }
  // ModelError when absent
  const std::string& get(const std::string& key) const;
  std::string get_or(const std::string& key, const std::string& def) const;
};

Manifest parse_manifest(std::string_view text, const std::string& path = "");
// A file path, or the name of a bundled manifest when no such file exists.
Manifest load_manifest(const std::string& ref);

// Reads a file next to the manifest, falling back to the bundled copy.
std::string read_model_text(const std::string& ref, const std::string& dir = "");
// Parses and validates; ModelError carries the diagnostics on failure.
OracleProgram load_program(const std::string& ref, const std::string& dir = "");
// Environments separated by their "env <id>" header lines.
std::vector<Environment> load_environments(const std::string& ref, const std::string& dir = "");

// Replaces the value of `param X` and the width of `type X` for every
// "param.X" / "type.X" key of the manifest that the program declares.
void apply_overrides(OracleProgram& p, const Manifest& m);

// "1..3" or "1,2,4"
std::vector<int> parse_grid(const std::string& text);

struct ScenarioOverrides {
  std::optional<std::vector<int>> grid;
  std::optional<EquivSpec> equiv;
  std::optional<Ceilings> ceilings;
  bool disable_budgets = false;
  int threads = 1;
};

// A manifest turned into a universe. An emulation scenario has exactly one
// target program (the protocol), one source program (the functionality),
// source contexts as simulators and target contexts as attackers.
struct Scenario {
  std::string name;
  std::string mode;  // "emulation" or "universe"
  Manifest manifest;
  EnvClass env_class;
  Universe universe;
  std::vector<std::string> notes;
};

// SpaceTooLarge when the grid or a sampling width is above the ceilings.
Scenario load_scenario(const std::string& ref, const ScenarioOverrides& o = {});
Scenario scenario_from_manifest(Manifest m, const ScenarioOverrides& o = {});

// verify_emulation on an emulation scenario.
EmulationVerdict check_scenario(UniverseEval& ev);

// Widest sampling statement of p at n.
int max_sample_width(const OracleProgram& p, int n);

// The commitment scenario on grid 1..n_max. The image-membership
// environment is registered only when budgets are disabled.
struct CommitmentCase {
  Scenario scenario;
  Environment unbounded_env;
};
CommitmentCase build_commitment(int n_max, bool disable_budgets = false);

// --- game-hop chains ---

struct GameHop {
  std::string name;
  std::string before;
  std::string after;
  enum Kind { kPerfect, kBound } kind = kPerfect;
  std::string assumption;  // kBound
  Schedule bound;          // kBound
};

struct Game {
  std::string id;
  NamedProgram context;
  NamedProgram program;
};

struct GameChain {
  std::vector<Game> games;
  std::vector<GameHop> hops;
};

// The record-layer proof as a chain of games, with manifest overrides applied
// to every game.
GameChain wg_game_chain(const Manifest& m);

struct HopResult {
  GameHop hop;
  bool holds = false;
  std::map<int, Rational> worst;  // per n
  std::string detail;
};

struct ChainReport {
  std::vector<HopResult> hops;
  std::map<int, Rational> direct;     // worst advantage first game vs last
  std::map<int, Rational> bound_sum;  // sum of hop bounds (measured for Perfect hops)
  bool ok = false;
  std::vector<std::string> lines;
};

// Checks every hop and that the direct advantage stays within the summed
// bounds. ChainBroken when consecutive hops do not share a game.
// The record layer on grid 1..n_max with the given message width and
// replication bound, and its hop chain.
struct WgCase {
  Scenario scenario;
  GameChain chain;
};
WgCase build_wg_record(int n_max, int msg_width, int n_M);

ChainReport check_game_hops(const GameChain& chain, std::shared_ptr<const EnvRegistry> envs,
                            const std::vector<int>& grid, const PrimitiveTable& prims = {});

// Traces (env, n) in which two calls of `oracle` with the same value of
// argument `arg` both returned. Each entry is "env@n".
std::vector<std::string> replay_violations(const Behavior& b, const std::string& oracle, int arg);

}  // namespace ucrc

#endif  // UCRC_CASES_CASES_HPP_
