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

#ifndef UCRC_LANG_LINK_HPP_
#define UCRC_LANG_LINK_HPP_

#include <map>
#include <string>
#include <vector>

#include "ucrc/lang/ast.hpp"

namespace ucrc {

enum class Origin { kContext, kProgram, kEnvironment };

const char* origin_name(Origin o);

// A linked context and program. `merged` is an ordinary OracleProgram in which
// every internal name is qualified by role ("ctx'" or "prg'"); exported
// oracles keep their public names.
struct WholeProgram {
  OracleProgram context;
  OracleProgram program;
  OracleProgram merged;
  // merged oracle name -> role that declared it
  std::map<std::string, Origin> origin;
  // public names callable by the environment, sorted
  std::vector<std::string> exports;
};

// Qualified spelling of an internal name.
std::string qualify(Origin role, const std::string& name);

// Throws LinkError on export collisions and absent reads/calls targets, and
// ModelError when either side fails validation.
WholeProgram link(const OracleProgram& ctx, const OracleProgram& prg);

// The context with no oracles; link(empty_context(), p) behaves as p.
OracleProgram empty_context();

}  // namespace ucrc

#endif  // UCRC_LANG_LINK_HPP_
