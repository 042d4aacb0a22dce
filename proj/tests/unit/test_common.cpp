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

#include <gtest/gtest.h>

#include <atomic>
#include <vector>

#include "ucrc/common/bits.hpp"
#include "ucrc/common/error.hpp"
#include "ucrc/common/exact.hpp"
#include "ucrc/common/parallel.hpp"

using namespace ucrc;

TEST(Bits, LeftmostBitIsIndexZero) {
  Bits b = Bits::parse("0b100");
  EXPECT_EQ(b.width(), 3);
  EXPECT_EQ(b.value(), 4u);
  EXPECT_TRUE(b.bit(0));
  EXPECT_FALSE(b.bit(2));
  EXPECT_EQ(b.flipped(2).str(), "101");
}

TEST(Bits, ConcatPrefixSlice) {
  Bits a = Bits::parse("10");
  Bits c = a.concat(Bits::parse("011"));
  EXPECT_EQ(c.str(), "10011");
  EXPECT_EQ(c.prefix(3).str(), "100");
  EXPECT_EQ(c.slice(2, 3).str(), "011");
  EXPECT_EQ((Bits::parse("1100") ^ Bits::parse("1010")).str(), "0110");
}

TEST(Bits, RejectsBadText) {
  EXPECT_THROW(Bits::parse("0b12"), EvalError);
  EXPECT_THROW(Bits(0, 65), EvalError);
  EXPECT_EQ(Bits::ones(4).value(), 15u);
}

TEST(Exact, RationalText) {
  EXPECT_EQ(to_string(Rational(1, 4) * 2), "1/2");
  EXPECT_EQ(to_string(Rational(2)), "2/1");
  EXPECT_EQ(parse_rational("6/8"), Rational(3, 4));
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_EQ(abs_diff(Rational(1, 4), Rational(3, 4)), Rational(1, 2));
  EXPECT_EQ(pow2_neg(5), Rational(1, 32));
}

TEST(Exact, DyadicSumsMatchRationals) {
  Dyadic d;
  Rational q = 0;
  for (unsigned k = 1; k <= 40; ++k) {
    d += Dyadic::half_pow(k);
    q += pow2_neg(k);
  }
  EXPECT_EQ(d.to_rational(), q);
  d += Dyadic::half_pow(40);
  EXPECT_EQ(d, Dyadic::one());
  EXPECT_EQ(Dyadic::one().scaled_down(3).to_rational(), Rational(1, 8));
  Dyadic e = Dyadic::one();
  e -= Dyadic::half_pow(1);
  EXPECT_EQ(e, Dyadic::half_pow(1));
}

TEST(Parallel, ResultsByIndexAndLowestException) {
  std::vector<int> out(100, 0);
  parallel_for(out.size(), 4, [&](std::size_t i) { out[i] = static_cast<int>(i * i); });
  for (std::size_t i = 0; i < out.size(); ++i) EXPECT_EQ(out[i], static_cast<int>(i * i));
  try {
    parallel_for(50, 3, [&](std::size_t i) {
      if (i == 7 || i == 30) throw Error("at " + std::to_string(i));
    });
    FAIL() << "expected an exception";
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "at 7");
  }
  EXPECT_GE(default_threads(), 1);
}
