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

#ifndef UCRC_SEM_TRACES_HPP_
#define UCRC_SEM_TRACES_HPP_

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "ucrc/lang/link.hpp"
#include "ucrc/sem/environment.hpp"
#include "ucrc/sem/value.hpp"
#include "ucrc/sem/world.hpp"

namespace ucrc {

// Exact distribution over complete traces of w driven by z at n.
TraceDist enumerate_traces(const WholeProgram& w, const Environment& z, int n,
                           const ResourceBudget& budget, const PrimitiveTable& prims = {});

// One execution path (a single random tape) with its sampled-bit count.
struct PathTrace {
  std::string events;
  std::uint32_t sampled_bits = 0;
  Rational rho;
};

// Every execution path without merging: rho = 2^-sampled_bits per path.
std::vector<PathTrace> enumerate_paths(const WholeProgram& w, const Environment& z, int n,
                                       const ResourceBudget& budget,
                                       const PrimitiveTable& prims = {},
                                       std::size_t max_paths = 1u << 20);

struct StepReport {
  // per n: maximum steps over all tapes and environment paths
  std::map<int, std::uint64_t> max_steps;
  // per n: whether some path hit the budget
  std::map<int, bool> hit_budget;
};

StepReport step_count(const WholeProgram& w, const Environment& z, const std::vector<int>& grid,
                      const ResourceBudget& budget, const PrimitiveTable& prims = {});

// True iff no path of any environment at any n exceeds the budget.
bool check_predicate(const WholeProgram& w, const std::vector<Environment>& envs,
                     const std::vector<int>& grid, const ResourceBudget& budget,
                     const PrimitiveTable& prims = {});

// Finds that matched several indices on some execution ("oracle:line:col").
std::set<std::string> find_lint(const WholeProgram& w, const std::vector<Environment>& envs,
                                const std::vector<int>& grid, const PrimitiveTable& prims = {});

}  // namespace ucrc

#endif  // UCRC_SEM_TRACES_HPP_
