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

#ifndef UCRC_COMMON_EXACT_HPP_
#define UCRC_COMMON_EXACT_HPP_

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace ucrc {

using Rational = mpq_class;

// Always "num/den", including integers ("1/1", "0/1").
std::string to_string(const Rational& q);
Rational parse_rational(std::string_view text);
Rational pow2_neg(unsigned exponent);
Rational abs_diff(const Rational& a, const Rational& b);

// Exact non-negative dyadic rational num / 2^exp, kept normalized (num odd or
// zero with exp == 0). Every path probability of the interpreter is dyadic,
// so accumulation stays in integer arithmetic until a report needs a
// Rational.
class Dyadic {
 public:
  static constexpr unsigned kMaxExponent = 120;

  Dyadic() = default;
  static Dyadic one() { return Dyadic(1, 0); }
  static Dyadic half_pow(unsigned exponent) { return Dyadic(1, exponent); }

  bool is_zero() const { return num_ == 0; }
  unsigned exponent() const { return exp_; }

  Dyadic& operator+=(const Dyadic& rhs);
  friend Dyadic operator+(Dyadic a, const Dyadic& b) { return a += b; }
  // Requires *this >= rhs.
  Dyadic& operator-=(const Dyadic& rhs);
  // Multiplies by 2^-k.
  Dyadic scaled_down(unsigned k) const;

  Rational to_rational() const;

  friend bool operator==(const Dyadic&, const Dyadic&) = default;
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

 private:
  Dyadic(unsigned __int128 num, unsigned exp);
  void normalize();

  unsigned __int128 num_ = 0;
  unsigned exp_ = 0;
};

}  // namespace ucrc

#endif  // UCRC_COMMON_EXACT_HPP_
