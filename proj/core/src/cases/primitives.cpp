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

#include "ucrc/cases/primitives.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <mutex>
#include <random>

#include "ucrc/common/error.hpp"
#include "ucrc/sem/environment.hpp"

namespace ucrc {

namespace {

constexpr std::uint64_t kPermutationSeed = 0x0c0ffee5eedULL;

void check_n(int n) {
  if (n < 1 || n > kMaxPrimitiveN)
    throw SpaceTooLarge("toy primitives are tabulated for 1 <= n <= " +
                        std::to_string(kMaxPrimitiveN) + ", got n=" + std::to_string(n));
}

std::mutex& table_mutex() {
  static std::mutex mu;
  return mu;
}

}  // namespace

const std::vector<std::uint64_t>& toy_permutation(int n) {
  check_n(n);
  static std::map<int, std::vector<std::uint64_t>> cache;
  std::lock_guard<std::mutex> lock(table_mutex());
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<std::uint64_t> p(std::uint64_t{1} << n);
  for (std::uint64_t i = 0; i < p.size(); ++i) p[i] = i;
  std::mt19937_64 rng(kPermutationSeed ^ static_cast<std::uint64_t>(n));
  for (std::size_t i = p.size() - 1; i > 0; --i) std::swap(p[i], p[rng() % (i + 1)]);
  return cache.emplace(n, std::move(p)).first->second;
}

Bits toy_prf(int n, const Bits& k, const Bits& x) {
  const auto& p = toy_permutation(n);
  std::uint64_t idx = (k.value() ^ x.value()) & width_mask(n);
  return Bits(p[idx], n);
}

Bits toy_prg(int n, const Bits& s) {
  Bits out(0, 0);
  for (std::uint64_t j = 0; j < 4; ++j) out = out.concat(toy_prf(n, s, Bits(j, 2)));
  return out;
}

PrimitiveTable toy_primitives() {
  PrimitiveTable t;
  t["prg"] = {"prg", [](int n, const std::vector<Bits>& a) {
                if (a.size() != 1 || a[0].width() != n)
                  throw EvalError("prg expects one n-bit argument");
                return toy_prg(n, a[0]);
              }};
  t["prf"] = {"prf", [](int n, const std::vector<Bits>& a) {
                if (a.size() != 2 || a[0].width() != n) throw EvalError("prf expects (key, input)");
                return toy_prf(n, a[0], a[1]);
              }};
  return t;
}

const std::vector<std::uint64_t>& prg_image(int n) {
  check_n(n);
  static std::map<int, std::vector<std::uint64_t>> cache;
  {
    std::lock_guard<std::mutex> lock(table_mutex());
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  std::vector<std::uint64_t> img;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) img.push_back(toy_prg(n, Bits(s, n)).value());
  std::sort(img.begin(), img.end());
  img.erase(std::unique(img.begin(), img.end()), img.end());
  std::lock_guard<std::mutex> lock(table_mutex());
  return cache.emplace(n, std::move(img)).first->second;
}

Rational prg_image_fraction(int n) {
  return Rational(static_cast<unsigned long>(prg_image(n).size())) * pow2_neg(static_cast<unsigned>(4 * n));
}

Rational prg_advantage(int n) {
  check_n(n);
  std::map<std::uint64_t, unsigned long> count;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) ++count[toy_prg(n, Bits(s, n)).value()];
  Rational ideal = pow2_neg(static_cast<unsigned>(4 * n));
  Rational best = count.size() < (std::uint64_t{1} << (4 * n)) ? ideal : Rational(0);
  for (const auto& [v, c] : count) best = std::max(best, abs_diff(Rational(c) * pow2_neg(n), ideal));
  return best;
}

Rational prf_advantage(int n) {
  check_n(n);
  std::uint64_t size = std::uint64_t{1} << n;
  Rational ideal = pow2_neg(static_cast<unsigned>(2 * n));
  Rational best = 0;
  for (std::uint64_t x = 0; x < size; ++x)
    for (std::uint64_t y = 0; y < size; ++y) {
      if (x == y) continue;
      std::map<std::pair<std::uint64_t, std::uint64_t>, unsigned long> count;
      for (std::uint64_t k = 0; k < size; ++k)
        ++count[{toy_prf(n, Bits(k, n), Bits(x, n)).value(), toy_prf(n, Bits(k, n), Bits(y, n)).value()}];
      if (count.size() < size * size) best = std::max(best, ideal);
      for (const auto& [v, c] : count) best = std::max(best, abs_diff(Rational(c) * pow2_neg(n), ideal));
    }
  return best;
}

std::string permutation_hex(int n) {
  const auto& p = toy_permutation(n);
  std::string out;
  char buf[64];
  for (std::size_t i = 0; i < p.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%llx %llx\n", static_cast<unsigned long long>(i),
                  static_cast<unsigned long long>(p[i]));
    out += buf;
  }
  return out;
}

void register_case_predicates() {
  static std::once_flag once;
  std::call_once(once, [] {
    register_predicate("commit_img", [](int n, const std::vector<Obs>& hist, const Obs& cur) {
      if (hist.empty() || hist[0].yielded || cur.yielded || hist[0].vals.empty() ||
          cur.vals.empty())
        return false;
      const Bits& a = hist[0].vals[0];
      const Bits& b = cur.vals[0];
      if (a.width() != 4 * n || b.width() != 4 * n) return false;
      const auto& img = prg_image(n);
      return std::binary_search(img.begin(), img.end(), (a ^ b).value());
    });
  });
}

}  // namespace ucrc
