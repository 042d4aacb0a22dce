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

#include "ucrc/cases/bundled.hpp"

#include "ucrc/common/error.hpp"

namespace ucrc {

const std::string& bundled_file(const std::string& name) {
  const auto& files = bundled_files();
  auto it = files.find(name);
  if (it == files.end()) throw IoError("no bundled file named '" + name + "'");
  return it->second;
}

}  // namespace ucrc
