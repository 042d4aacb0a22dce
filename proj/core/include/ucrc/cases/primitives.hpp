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

#ifndef UCRC_CASES_PRIMITIVES_HPP_
#define UCRC_CASES_PRIMITIVES_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "ucrc/common/bits.hpp"
#include "ucrc/common/exact.hpp"
#include "ucrc/sem/world.hpp"

namespace ucrc {

// Largest n for which the toy primitives are tabulated (4n output bits must
// fit a machine word and the tables must stay enumerable).
inline constexpr int kMaxPrimitiveN = 8;

// Public permutation P_n of {0,1}^n, fixed by a seeded Fisher-Yates shuffle.
const std::vector<std::uint64_t>& toy_permutation(int n);

// PRF_n(k, x) = P_n[k xor (x mod 2^n)], n-bit key and output.
Bits toy_prf(int n, const Bits& k, const Bits& x);
// PRG_n(s) = PRF_n(s,0) || PRF_n(s,1) || PRF_n(s,2) || PRF_n(s,3), 4n bits.
Bits toy_prg(int n, const Bits& s);

// "prg" and "prf" for models declaring them as funs.
PrimitiveTable toy_primitives();

// Image of PRG_n as a sorted list of values.
const std::vector<std::uint64_t>& prg_image(int n);
// |Im PRG_n| / 2^(4n)
Rational prg_image_fraction(int n);

// Best advantage of a point-test distinguisher ([y = v]) between PRG_n(U_n)
// and U_4n.
Rational prg_advantage(int n);
// Best advantage of a two-query point-test distinguisher between PRF_n(k, .)
// for uniform k and a uniformly random function.
Rational prf_advantage(int n);

// Hex dump of P_n, one line per entry ("<x> <P[x]>"), for golden files.
std::string permutation_hex(int n);

// Observation predicates used by bundled environments:
//   commit_img: the first observation xor the current one is in Im PRG_n.
void register_case_predicates();

}  // namespace ucrc

#endif  // UCRC_CASES_PRIMITIVES_HPP_
