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

#ifndef UCRC_COMMON_PARALLEL_HPP_
#define UCRC_COMMON_PARALLEL_HPP_

#include <cstddef>
#include <functional>

namespace ucrc {

// Runs fn(0..count-1) on up to `threads` workers. Results must be written by
// index so the outcome does not depend on the schedule. The exception of the
// lowest failing index is rethrown.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& fn);

// Worker count used when callers pass 0: hardware concurrency, at least 1.
int default_threads();

}  // namespace ucrc

#endif  // UCRC_COMMON_PARALLEL_HPP_
