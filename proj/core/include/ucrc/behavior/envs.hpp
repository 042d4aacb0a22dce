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

#ifndef UCRC_BEHAVIOR_ENVS_HPP_
#define UCRC_BEHAVIOR_ENVS_HPP_

#include <map>
#include <optional>
#include <memory>
#include <string>
#include <vector>

#include "ucrc/sem/environment.hpp"
#include "ucrc/sem/explorer.hpp"

namespace ucrc {

// One call an enumerated environment may issue.
struct CallTemplate {
  std::string oracle;
  std::vector<ArgTemplate> args;

  // Earliest call position at which every referenced observation exists.
  int min_level() const;
  // "O(0b01,obs0)"
  std::string str() const;
  static CallTemplate parse(const std::string& text);
  bool operator==(const CallTemplate&) const = default;
};

// Bounded environment class: every deterministic tree of at most `depth`
// calls over `calls`, branching on the observation classes of each oracle.
// Observations outside every class lead to decide(0).
struct EnvClass {
  std::vector<CallTemplate> calls;
  std::map<std::string, std::vector<Matcher>> classes;  // per oracle
  std::vector<Matcher> default_classes = {Matcher{}};   // when an oracle has none
  int depth = 0;

  const std::vector<Matcher>& classes_of(const std::string& oracle) const;
  // Key policy that distinguishes exactly what members of the class can.
  KeyPolicy policy() const;
  // "generator depth=<d> calls=<c1>;<c2> classes[.O]=<m1>|<m2> ..."
  std::string str() const;
};

// Closed-form size of the class (the recurrence evaluated directly).
// Saturates at UINT64_MAX.
std::uint64_t count_environments(const EnvClass& c);

// Complete list in canonical order: decide(0), decide(1), then calls in
// alphabet order with child subtrees in mixed-radix order (first class
// slowest). Ids are "<prefix><index>". Throws SpaceTooLarge above ceiling.
std::vector<Environment> enumerate_environments(const EnvClass& c, std::uint64_t ceiling = 200000,
                                                const std::string& prefix = "e");

// Convenience form: zero-argument calls to `oracles`, responses split by the
// given width into all 2^width values, at most `depth` calls.
EnvClass simple_env_class(const std::vector<std::string>& oracles, int alphabet_width, int depth);

// Indented tree text: header "env <id> depth=<d>", root line "-> ...",
// children "obs=<matcher> -> call O(args)" or "obs=<matcher> -> decide b",
// two spaces of indentation per level.
std::string format_environment(const Environment& z);
Environment parse_environment(const std::string& text);

// Registry of the environments a behavior is evaluated on.
class EnvRegistry {
 public:
  EnvRegistry() = default;
  // Family members are evaluated with the class key policy.
  static std::shared_ptr<EnvRegistry> from_class(const EnvClass& c, std::uint64_t ceiling = 200000);

  // Adds a hand-written environment (evaluated with exact keys).
  void add(Environment z);
  const std::vector<Environment>& all() const { return envs_; }
  const Environment& get(const std::string& id) const;
  bool contains(const std::string& id) const { return index_.count(id) != 0; }
  bool in_family(const std::string& id) const;
  const EnvClass* family() const { return family_ ? &*family_ : nullptr; }
  std::size_t size() const { return envs_.size(); }

 private:
  std::vector<Environment> envs_;
  std::map<std::string, std::size_t> index_;
  std::vector<bool> member_;
  std::optional<EnvClass> family_;
};

}  // namespace ucrc

#endif  // UCRC_BEHAVIOR_ENVS_HPP_
