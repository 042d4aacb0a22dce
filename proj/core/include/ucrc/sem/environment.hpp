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

#ifndef UCRC_SEM_ENVIRONMENT_HPP_
#define UCRC_SEM_ENVIRONMENT_HPP_

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "ucrc/sem/value.hpp"

namespace ucrc {

// How a call argument is formed from the observation history.
struct ArgTemplate {
  enum Kind { kLit, kZeros, kOnes, kObs, kObsFlip } kind = kLit;
  Bits lit;
  int obs = 0;   // index into the history of observations
  int comp = 0;  // component of that observation
  int bit = 0;   // bit flipped by kObsFlip

  static ArgTemplate literal(Bits b) { return {kLit, b, 0, 0, 0}; }
  static ArgTemplate zeros() { return {kZeros, {}, 0, 0, 0}; }
  static ArgTemplate ones() { return {kOnes, {}, 0, 0, 0}; }
  static ArgTemplate observed(int k, int comp = 0) { return {kObs, {}, k, comp, 0}; }
  static ArgTemplate observed_flip(int k, int comp, int bit) { return {kObsFlip, {}, k, comp, bit}; }

  // "0b01", "zeros", "ones", "obs0", "obs0.1", "flip(obs0,2)"
  std::string str() const;
  static ArgTemplate parse(const std::string& text);
  bool operator==(const ArgTemplate&) const = default;
};

// Predicate over (n, earlier observations, current observation).
using ObsPredicate =
    std::function<bool(int n, const std::vector<Obs>& history, const Obs& current)>;

void register_predicate(const std::string& name, ObsPredicate fn);
const ObsPredicate& lookup_predicate(const std::string& name);

// Test on an observation. Branches of a call node are tried in order.
struct Matcher {
  enum Kind { kAny, kYield, kReturned, kEquals, kZero, kNonzero, kBit, kPredicate } kind = kAny;
  Obs value;         // kEquals
  int comp = 0;      // kBit
  int bit = 0;       // kBit: position
  int expect = 0;    // kBit: expected value
  std::string name;  // kPredicate

  bool matches(int n, const std::vector<Obs>& history, const Obs& o) const;
  // "any", "yield", "ret", "eq(01,1)", "eq(yield)", "zero", "nonzero",
  // "bit(c,j)=b", "pred:name"
  std::string str() const;
  static Matcher parse(const std::string& text);
  bool operator==(const Matcher&) const = default;
};

struct EnvNode;
using EnvPtr = std::shared_ptr<const EnvNode>;

// Deterministic decision tree. Observations matched by no branch lead to
// decide(0).
struct EnvNode {
  bool decide = true;
  int bit = 0;
  std::string oracle;
  std::vector<ArgTemplate> args;
  std::vector<std::pair<Matcher, EnvPtr>> branches;
  int id = -1;  // unique within its factory
};

struct Environment {
  std::string id;
  EnvPtr root;
  int depth() const;
};

int env_depth(const EnvNode& node);

// Hash-conses nodes so equal subtrees are shared; walks memoize on pointers.
class EnvFactory {
 public:
  EnvPtr decide(int bit);
  EnvPtr call(std::string oracle, std::vector<ArgTemplate> args,
              std::vector<std::pair<Matcher, EnvPtr>> branches);
  std::size_t size() const;

 private:
  EnvPtr intern(EnvNode node);
  mutable std::mutex mu_;
  std::unordered_map<std::string, EnvPtr> nodes_;
  int next_id_ = 0;
};

EnvFactory& global_env_factory();

// Concrete call for the node given the exact history, or nullopt when a
// template cannot be formed (the environment then decides 0). `widths` are
// the parameter widths of the called oracle.
bool resolve_call(const EnvNode& node, const std::vector<Obs>& history,
                  const std::vector<int>& widths, CallSpec& out);

}  // namespace ucrc

#endif  // UCRC_SEM_ENVIRONMENT_HPP_
