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

#ifndef UCRC_LANG_SYNTAX_HPP_
#define UCRC_LANG_SYNTAX_HPP_

#include <string>
#include <string_view>

#include "ucrc/lang/ast.hpp"

namespace ucrc {

// Throws ParseError carrying line, column and the expected-token set.
OracleProgram parse_program(std::string_view source);

std::string print_program(const OracleProgram& p);
std::string print_stmt(const Stmt& s, int indent = 0);
std::string print_expr(const Expr& e);
std::string print_size(const Size& s);

}  // namespace ucrc

#endif  // UCRC_LANG_SYNTAX_HPP_
