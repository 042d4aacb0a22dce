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

#ifndef UCRC_COMMON_BITS_HPP_
#define UCRC_COMMON_BITS_HPP_

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace ucrc {

inline constexpr int kMaxBitWidth = 64;

// Fixed-width bitstring. Bit 0 is the leftmost (most significant) bit, which
// is also the first character of the textual form.
class Bits {
 public:
  Bits() = default;
  Bits(std::uint64_t value, int width);

  static Bits zeros(int width) { return Bits(0, width); }
  static Bits ones(int width);
  // Accepts "0101" or "0b0101".
  static Bits parse(std::string_view text);

  std::uint64_t value() const { return value_; }
  int width() const { return width_; }

  bool bit(int index) const;
  Bits flipped(int index) const;
  bool is_zero() const { return value_ == 0; }

  Bits concat(const Bits& rhs) const;
  Bits prefix(int width) const;
  Bits slice(int offset, int width) const;
  Bits operator^(const Bits& rhs) const;

  // "0101" (no prefix); the empty string for width 0.
  std::string str() const;

  friend bool operator==(const Bits&, const Bits&) = default;
  friend auto operator<=>(const Bits& a, const Bits& b) {
    if (auto c = a.width_ <=> b.width_; c != 0) return c;
    return a.value_ <=> b.value_;
  }

 private:
  std::uint64_t value_ = 0;
  int width_ = 0;
};

std::uint64_t width_mask(int width);

}  // namespace ucrc

#endif  // UCRC_COMMON_BITS_HPP_
