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

#ifndef UCRC_LANG_VALIDATE_HPP_
#define UCRC_LANG_VALIDATE_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ucrc/lang/ast.hpp"

namespace ucrc {

// a*n + b
struct Linear {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t at(int n) const { return a * n + b; }
  bool operator==(const Linear&) const = default;
};

// Resolves params and type aliases of one program to linear forms in n.
class SizeEnv {
 public:
  explicit SizeEnv(const OracleProgram& p);
  // Returns nullopt and sets *err on unknown or cyclic symbols.
  std::optional<Linear> resolve(const Size& s, std::string* err = nullptr) const;
  Linear resolve_or_throw(const Size& s) const;

 private:
  std::optional<Linear> symbol(const std::string& name, std::string* err, int depth) const;
  std::optional<Linear> resolve_depth(const Size& s, std::string* err, int depth) const;
  std::map<std::string, const Size*> defs_;
};

enum class Severity { kError, kWarning };

struct Diagnostic {
  Severity severity = Severity::kError;
  Pos pos;
  std::string message;
  // "file:line:col: severity: message"
  std::string format(const std::string& file) const;
};

std::vector<Diagnostic> validate(const OracleProgram& p);
bool has_errors(const std::vector<Diagnostic>& ds);

// Resolution of an owner name used in `reads` against a program: the oracle
// that defines `var` inside the named process or oracle. Empty when absent.
std::string resolve_read_owner(const OracleProgram& p, const std::string& owner,
                               const std::string& var);

// Every variable an oracle body defines (params excluded), in first-definition
// order.
std::vector<std::string> defined_variables(const OracleDecl& o);

// Variables referenced anywhere through indexed reads or defined(); these are
// the persistent ones. Keys are (owner oracle, variable).
std::vector<std::pair<std::string, std::string>> persistent_variables(const OracleProgram& p);

}  // namespace ucrc

#endif  // UCRC_LANG_VALIDATE_HPP_
