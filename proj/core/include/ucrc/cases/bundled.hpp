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

#ifndef UCRC_CASES_BUNDLED_HPP_
#define UCRC_CASES_BUNDLED_HPP_

#include <map>
#include <string>

namespace ucrc {

// Every bundled model and manifest, keyed by file name.
const std::map<std::string, std::string>& bundled_files();

// Text of one bundled file; throws IoError when absent.
const std::string& bundled_file(const std::string& name);

}  // namespace ucrc

#endif  // UCRC_CASES_BUNDLED_HPP_
