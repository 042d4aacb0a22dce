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

#ifndef UCRC_SEM_WORLD_HPP_
#define UCRC_SEM_WORLD_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "ucrc/common/exact.hpp"
#include "ucrc/lang/link.hpp"
#include "ucrc/sem/value.hpp"

namespace ucrc {

// Deterministic primitive implementation, evaluated at security parameter n.
struct Primitive {
  std::string name;
  std::function<Bits(int n, const std::vector<Bits>& args)> fn;
};
using PrimitiveTable = std::map<std::string, Primitive>;

enum class COp {
  kLocal, kPersist, kIndexed, kLit, kXor, kConcat, kTrunc, kEq, kNeq, kAnd, kNot, kInc,
  kDefined, kApp
};

struct CExpr {
  COp op = COp::kLit;
  int slot = -1;   // local slot, or index slot for kIndexed
  int pid = -1;    // persistent variable id
  int width = 0;
  std::uint64_t lit = 0;
  int fn = -1;
  std::vector<CExpr> args;
};

enum class CStmtKind { kSample, kAssign, kInsert, kGet, kFind, kIf, kReturn, kYield, kRun };

struct CPattern {
  enum Kind { kBind, kMatchLocal, kMatchPersist, kExpr } kind = kBind;
  int slot = -1;
  int pid = -1;
  CExpr expr;
};

struct CStmt {
  CStmtKind kind = CStmtKind::kYield;
  Pos pos;
  int slot = -1;        // target slot (sample/assign/find index)
  int pid = -1;         // persistent target (sample/assign), else -1
  int width = 0;        // sample width
  int table = -1;
  int bound = 0;        // find bound
  int target = -1;      // run target oracle
  bool has_cond = false;
  CExpr cond;
  std::vector<CExpr> exprs;
  std::vector<CPattern> pats;
  std::vector<CStmt> next;
};

struct COracle {
  std::string name;
  Origin origin = Origin::kProgram;
  bool exported = false;
  bool continuation = false;
  int instances = 1;
  int index_slot = -1;          // replication index, -1 if none
  std::vector<int> param_slots;
  std::vector<int> param_widths;
  std::vector<int> param_pids;  // persistent id per parameter or -1
  int frame_size = 0;
  CStmt body;
};

struct CPersist {
  std::string owner;
  std::string var;
  int width = 0;
  int instances = 1;
  int offset = 0;  // first slot in State::pvals
};

struct CTable {
  std::string name;
  std::vector<int> widths;
};

// A linked program specialized to one security parameter.
struct CompiledWorld {
  int n = 0;
  std::vector<COracle> oracles;
  std::map<std::string, int> oracle_ids;
  std::vector<CPersist> persist;
  int persist_slots = 0;
  std::vector<CTable> tables;
  std::vector<Primitive> prims;
  std::vector<std::string> exports;

  int oracle_id(const std::string& name) const;
};

// Specializes w at n. Throws ModelError on widths above 64 bits, missing
// primitive implementations or an invalid linked program.
std::shared_ptr<const CompiledWorld> compile(const WholeProgram& w, int n,
                                             const PrimitiveTable& prims = {});

// Global state between environment calls. Transient variables are not part of
// it: they die with the call that defined them.
struct State {
  std::vector<std::uint64_t> pvals;
  std::vector<std::uint8_t> pdef;
  std::vector<std::vector<std::uint64_t>> tables;  // row-major
  std::vector<std::uint32_t> next_instance;         // per oracle
  std::uint64_t steps = 0;
  std::uint32_t sampled = 0;  // bits sampled so far; not part of key()

  static State initial(const CompiledWorld& w);
  std::string key() const;
};

struct CallOutcome {
  Obs obs;
  State state;
  Dyadic mass;
};

// Receives the outcomes of one call.
class OutcomeSink {
 public:
  virtual ~OutcomeSink() = default;
  virtual void outcome(Obs obs, State st, Dyadic mass) = 0;
  virtual void timeout(const State& st, Dyadic mass) = 0;
};

struct InterpOptions {
  std::uint64_t step_bound = UINT64_MAX;
  // collect finds with several matching indices
  std::set<std::string>* find_lint = nullptr;
};

// Runs one environment call of oracle `id` from `st`, enumerating every
// sampling branch. Each branch reports to sink with its mass (the incoming
// mass times 2^-bits sampled).
void run_call(const CompiledWorld& w, const State& st, int id, const std::vector<Bits>& args,
              Dyadic mass, const InterpOptions& opt, OutcomeSink& sink);

}  // namespace ucrc

#endif  // UCRC_SEM_WORLD_HPP_
