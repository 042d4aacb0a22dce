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

#include "ucrc/common/bits.hpp"

#include "ucrc/common/error.hpp"

namespace ucrc {

std::uint64_t width_mask(int width) {
  if (width >= 64) return ~std::uint64_t{0};
  return (std::uint64_t{1} << width) - 1;
}

Bits::Bits(std::uint64_t value, int width) : value_(value), width_(width) {
  if (width < 0 || width > kMaxBitWidth)
    throw EvalError("bit width " + std::to_string(width) + " out of range");
  value_ &= width_mask(width);
}

Bits Bits::ones(int width) { return Bits(width_mask(width), width); }

Bits Bits::parse(std::string_view text) {
  if (text.size() >= 2 && text[0] == '0' && text[1] == 'b') text.remove_prefix(2);
  if (text.size() > kMaxBitWidth) throw EvalError("bitstring too long");
  std::uint64_t v = 0;
  for (char c : text) {
    if (c != '0' && c != '1')
      throw EvalError("bad bitstring '" + std::string(text) + "'");
    v = (v << 1) | static_cast<std::uint64_t>(c - '0');
  }
  return Bits(v, static_cast<int>(text.size()));
}

bool Bits::bit(int index) const {
  if (index < 0 || index >= width_) throw EvalError("bit index out of range");
  return (value_ >> (width_ - 1 - index)) & 1u;
}

Bits Bits::flipped(int index) const {
  if (index < 0 || index >= width_) throw EvalError("bit index out of range");
  return Bits(value_ ^ (std::uint64_t{1} << (width_ - 1 - index)), width_);
}

Bits Bits::concat(const Bits& rhs) const {
  if (width_ + rhs.width_ > kMaxBitWidth) throw EvalError("concatenation exceeds 64 bits");
  if (rhs.width_ == 64) return rhs;  // width_ is 0 here
  return Bits((value_ << rhs.width_) | rhs.value_, width_ + rhs.width_);
}

Bits Bits::prefix(int width) const { return slice(0, width); }

Bits Bits::slice(int offset, int width) const {
  if (offset < 0 || width < 0 || offset + width > width_)
    throw EvalError("slice out of range");
  int shift = width_ - offset - width;
  std::uint64_t v = shift >= 64 ? 0 : (value_ >> shift);
  return Bits(v, width);
}

Bits Bits::operator^(const Bits& rhs) const {
  if (width_ != rhs.width_)
    throw EvalError("xor of widths " + std::to_string(width_) + " and " +
                    std::to_string(rhs.width_));
  return Bits(value_ ^ rhs.value_, width_);
}

std::string Bits::str() const {
  std::string s(static_cast<std::size_t>(width_), '0');
  for (int i = 0; i < width_; ++i)
    if (bit(i)) s[static_cast<std::size_t>(i)] = '1';
  return s;
}

}  // namespace ucrc
