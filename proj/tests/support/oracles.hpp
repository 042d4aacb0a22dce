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

#ifndef UCRC_TESTS_SUPPORT_ORACLES_HPP_
#define UCRC_TESTS_SUPPORT_ORACLES_HPP_

#include "ucrc/common/exact.hpp"
#include "ucrc/sem/environment.hpp"

namespace ucrc::testing {

// Pr[z decides 1] against the commitment, computed by looping over both
// seeds and sigma directly (no DSL, no interpreter). ideal = simulator plus
// functionality, whose commitments ignore the bit.
Rational commitment_p1(const Environment& z, int n, bool ideal);

// 1 - Pr[prg(s) xor sigma lands in Im PRG] over uniform s and sigma: the
// advantage of the image-membership test (the real world always lands).
Rational commitment_image_advantage(int n);

// Chance that at least one of `attempts` blind forgeries on fresh counters
// hits an n-bit random tag.
Rational forgery_advantage(int n, int attempts);

}  // namespace ucrc::testing

#endif  // UCRC_TESTS_SUPPORT_ORACLES_HPP_
