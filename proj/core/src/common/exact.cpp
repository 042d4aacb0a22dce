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

#include "ucrc/common/exact.hpp"

#include <bit>

#include "ucrc/common/error.hpp"

namespace ucrc {

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.find('/') == std::string::npos) s += "/1";
  Rational q;
  if (q.set_str(s, 10) != 0) throw Error("bad rational '" + std::string(text) + "'");
  if (q.get_den() == 0) throw Error("zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

Rational pow2_neg(unsigned exponent) {
  mpz_class den = 1;
  den <<= exponent;
  return Rational(mpz_class(1), den);
}

Rational abs_diff(const Rational& a, const Rational& b) {
  Rational d = a - b;
  return d < 0 ? Rational(-d) : d;
}

Dyadic::Dyadic(unsigned __int128 num, unsigned exp) : num_(num), exp_(exp) {
  if (exp_ > kMaxExponent) throw SpaceTooLarge("probability denominator exceeds 2^120");
  normalize();
}

void Dyadic::normalize() {
  if (num_ == 0) {
    exp_ = 0;
    return;
  }
  while (exp_ > 0 && (num_ & 1u) == 0) {
    num_ >>= 1;
    --exp_;
  }
}

Dyadic& Dyadic::operator+=(const Dyadic& rhs) {
  if (rhs.num_ == 0) return *this;
  if (num_ == 0) return *this = rhs;
  unsigned e = exp_ > rhs.exp_ ? exp_ : rhs.exp_;
  unsigned __int128 a = num_ << (e - exp_);
  unsigned __int128 b = rhs.num_ << (e - rhs.exp_);
  num_ = a + b;
  exp_ = e;
  normalize();
  return *this;
}

Dyadic& Dyadic::operator-=(const Dyadic& rhs) {
  if (rhs.num_ == 0) return *this;
  unsigned e = exp_ > rhs.exp_ ? exp_ : rhs.exp_;
  unsigned __int128 a = num_ << (e - exp_);
  unsigned __int128 b = rhs.num_ << (e - rhs.exp_);
  if (b > a) throw Error("negative dyadic");
  num_ = a - b;
  exp_ = e;
  normalize();
  return *this;
}

Dyadic Dyadic::scaled_down(unsigned k) const {
  if (num_ == 0) return *this;
  return Dyadic(num_, exp_ + k);
}

Rational Dyadic::to_rational() const {
  std::uint64_t hi = static_cast<std::uint64_t>(num_ >> 64);
  std::uint64_t lo = static_cast<std::uint64_t>(num_);
  mpz_class n = hi;
  n <<= 64;
  n += mpz_class(static_cast<unsigned long>(lo));
  mpz_class d = 1;
  d <<= exp_;
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  unsigned e = a.exp_ > b.exp_ ? a.exp_ : b.exp_;
  unsigned __int128 x = a.num_ << (e - a.exp_);
  unsigned __int128 y = b.num_ << (e - b.exp_);
  if (x < y) return std::strong_ordering::less;
  if (x > y) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace ucrc
