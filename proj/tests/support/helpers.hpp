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

#ifndef UCRC_TESTS_SUPPORT_HELPERS_HPP_
#define UCRC_TESTS_SUPPORT_HELPERS_HPP_

#include <string>
#include <vector>

#include "ucrc/behavior/envs.hpp"
#include "ucrc/cases/bundled.hpp"
#include "ucrc/cases/cases.hpp"
#include "ucrc/lang/link.hpp"
#include "ucrc/lang/syntax.hpp"

namespace ucrc::testing {

inline OracleProgram prog(const std::string& text) { return parse_program(text); }

inline OracleProgram bundled_prog(const std::string& name) {
  return parse_program(bundled_file(name));
}

inline WholeProgram solo(const std::string& text) { return link(empty_context(), prog(text)); }

inline Environment env(const std::string& text) { return parse_environment(text); }

// Every (side, context, program) world of a scenario, overrides applied.
struct ScenarioWorld {
  std::string label;
  WholeProgram w;
  ResourceBudget budget;
};

inline std::vector<ScenarioWorld> scenario_worlds(const Scenario& s) {
  std::vector<ScenarioWorld> out;
  const Universe& u = s.universe;
  auto add = [&](const char* side, const std::vector<NamedProgram>& ctxs,
                 const std::vector<NamedProgram>& prgs, const ResourceBudget& b) {
    for (const auto& c : ctxs)
      for (const auto& p : prgs)
        out.push_back(
            {s.name + ":" + side + ":" + c.id + "|" + p.id, link(c.program, p.program), b});
  };
  add("source", u.source_contexts, u.source_programs, u.source_budget);
  add("target", u.target_contexts, u.target_programs, u.target_budget);
  return out;
}

}  // namespace ucrc::testing

#endif  // UCRC_TESTS_SUPPORT_HELPERS_HPP_
