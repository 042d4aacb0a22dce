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

#ifndef UCRC_BEHAVIOR_AXIOMS_HPP_
#define UCRC_BEHAVIOR_AXIOMS_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "ucrc/behavior/behavior.hpp"

namespace ucrc {

struct AxiomModel {
  std::string id;
  std::shared_ptr<const Behavior> behavior;
};

struct AxiomOptions {
  int samples = 1000;
  std::uint64_t seed = 0x5eed5eedULL;
  // β under test; the default reads the trailing decide event.
  std::function<int(const std::string&)> beta;
  // also replay a copy of each prefix with its last response altered
  bool mutate = true;
};

struct AxiomFinding {
  int axiom = 0;
  bool pass = true;
  std::string model;
  std::string detail;
  // "axiom=<a> status=<pass|fail> model=<id> detail=<...>"
  std::string line() const;
};

struct AxiomReport {
  std::string header;
  // per (axiom, model): number of exact identities checked and failed
  std::map<std::pair<int, std::string>, std::pair<int, int>> tally;
  std::vector<AxiomFinding> failures;
  int samples = 0;

  bool ok() const { return failures.empty(); }
  int checked(int axiom) const;
  // header, one summary line per (axiom, model), then every failure
  std::string format() const;
};

// Samples (model, n, environment, trace, cut) and checks Axioms 1, 2 and 4
// as exact identities. Axiom 2 compares every model of the set whose exports
// cover the calls of the prefix.
AxiomReport axiom_suite(const std::vector<AxiomModel>& models, const AxiomOptions& opts = {});

// Throws AxiomViolation describing the first failure.
void require_axioms(const AxiomReport& r);

}  // namespace ucrc

#endif  // UCRC_BEHAVIOR_AXIOMS_HPP_
