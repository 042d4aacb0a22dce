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

#ifndef UCRC_SEM_EXPLORER_HPP_
#define UCRC_SEM_EXPLORER_HPP_

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "ucrc/sem/environment.hpp"
#include "ucrc/sem/world.hpp"

namespace ucrc {

// How observations are distinguished when growing the interaction tree.
// With no classes every observation is its own branch. With classes, the
// observation of a call to O is reduced to the index of the first matching
// class of O, except at depths listed in exact_depths, where the value is
// kept because later calls reuse it.
struct KeyPolicy {
  std::map<std::string, std::vector<Matcher>> classes;
  std::set<int> exact_depths;
  bool exact() const { return classes.empty(); }
};

// Lazily grown tree of interaction histories for one world at one n. A node
// holds every global state reachable with the node's history, each with its
// exact mass, identical states merged. Not thread-safe; use one explorer per
// thread.
class Explorer {
 public:
  struct Expansion;
  struct Node {
    int depth = 0;
    std::vector<Obs> hist;
    std::vector<std::pair<State, Dyadic>> states;
    Dyadic mass;
    std::map<CallSpec, std::unique_ptr<Expansion>> cache;
  };
  struct Child {
    Obs obs;
    std::unique_ptr<Node> node;
  };
  struct Expansion {
    std::vector<Child> children;
    Dyadic timeout;
    std::uint64_t max_steps = 0;
  };

  Explorer(std::shared_ptr<const CompiledWorld> world, ResourceBudget budget,
           KeyPolicy policy = {}, bool cache = true, std::size_t state_ceiling = 1u << 22);

  Node& root() { return root_; }
  const CompiledWorld& world() const { return *world_; }
  std::uint64_t step_bound() const { return bound_; }
  bool caching() const { return cache_; }
  std::set<std::string>* lint() { return lint_ ? &lint_findings_ : nullptr; }
  void enable_lint() { lint_ = true; }

  // Cached expansion when caching is on.
  const Expansion& expand(Node& node, const CallSpec& call);
  // Fresh expansion, never cached.
  Expansion compute(const Node& node, const CallSpec& call);

  // Parameter widths of an exported oracle; ModelError when not exported.
  const std::vector<int>& exported_widths(const std::string& oracle) const;
  int exported_id(const std::string& oracle) const;

  std::size_t node_count() const { return nodes_; }

 private:
  std::shared_ptr<const CompiledWorld> world_;
  std::uint64_t bound_;
  KeyPolicy policy_;
  bool cache_;
  std::size_t ceiling_;
  Node root_;
  std::size_t nodes_ = 1;
  bool lint_ = false;
  std::set<std::string> lint_findings_;
};

// Final-bit masses of one environment against one explored world.
struct BitMass {
  Dyadic p1;
  Dyadic p0;
  Dyadic pbot;
  std::uint64_t max_steps = 0;
};

struct PtrPairHash {
  std::size_t operator()(const std::pair<const void*, const void*>& p) const {
    return std::hash<const void*>()(p.first) * 31 + std::hash<const void*>()(p.second);
  }
};
using WalkMemo = std::unordered_map<std::pair<const void*, const void*>, BitMass, PtrPairHash>;

BitMass walk_bits(Explorer& ex, Explorer::Node& node, const EnvNode& env, WalkMemo* memo);

// Adds every complete trace below `node` to `out`, prefixed by `prefix`.
void walk_traces(Explorer& ex, Explorer::Node& node, const EnvNode& env,
                 std::vector<Event>& prefix, std::map<std::string, Rational>& out);

// Origin of the component answering calls to an exported oracle.
Origin oracle_origin(const CompiledWorld& w, const std::string& oracle);

}  // namespace ucrc

#endif  // UCRC_SEM_EXPLORER_HPP_
