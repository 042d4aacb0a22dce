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

#include "ucrc/common/error.hpp"

namespace ucrc {

namespace {

std::string render(int line, int col, const std::string& message,
                   const std::vector<std::string>& expected) {
  std::string s = std::to_string(line) + ":" + std::to_string(col) + ": " + message;
  if (!expected.empty()) {
    s += " (expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i) s += i + 1 == expected.size() ? " or " : ", ";
      s += expected[i];
    }
    s += ")";
  }
  return s;
}

}  // namespace

ParseError::ParseError(int line, int col, std::string message,
                       std::vector<std::string> expected)
    : Error(render(line, col, message, expected)),
      line_(line),
      col_(col),
      detail_(std::move(message)),
      expected_(std::move(expected)) {}

}  // namespace ucrc
