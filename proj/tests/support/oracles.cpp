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

#include "oracles.hpp"

#include <set>

#include "ucrc/cases/primitives.hpp"

namespace ucrc::testing {

Rational commitment_p1(const Environment& z, int n, bool ideal) {
  std::uint64_t seeds = std::uint64_t{1} << n;
  std::uint64_t sigmas = std::uint64_t{1} << (4 * n);
  std::uint64_t hits = 0;
  for (std::uint64_t s1 = 0; s1 < seeds; ++s1)
    for (std::uint64_t s2 = 0; s2 < seeds; ++s2)
      for (std::uint64_t sg = 0; sg < sigmas; ++sg) {
        const std::uint64_t seed[2] = {s1, s2};
        int commits = 0, gets = 0;
        std::vector<Obs> hist;
        const EnvNode* node = z.root.get();
        int bit = 0;
        while (true) {
          if (node->decide) {
            bit = node->bit;
            break;
          }
          std::vector<int> widths = node->oracle == "Commit" ? std::vector<int>{1} : std::vector<int>{};
          CallSpec call;
          if (!resolve_call(*node, hist, widths, call)) break;
          Obs o;
          if (call.oracle == "Commit") {
            if (commits >= 2) {
              o = Obs::yield();
            } else {
              std::uint64_t c = toy_prg(n, Bits(seed[commits], n)).value();
              if (!ideal && call.args[0].value() == 1) c ^= sg;
              o.vals.push_back(Bits(c, 4 * n));
              ++commits;
            }
          } else {
            if (gets >= 2) o = Obs::yield();
            else o.vals.push_back(Bits(sg, 4 * n)), ++gets;
          }
          const EnvNode* next = nullptr;
          for (const auto& [m, child] : node->branches)
            if (m.matches(n, hist, o)) {
              next = child.get();
              break;
            }
          hist.push_back(o);
          if (!next) break;
          node = next;
        }
        hits += static_cast<std::uint64_t>(bit);
      }
  return Rational(static_cast<unsigned long>(hits)) /
         Rational(static_cast<unsigned long>(seeds * seeds * sigmas));
}

Rational commitment_image_advantage(int n) {
  std::set<std::uint64_t> image;
  std::uint64_t seeds = std::uint64_t{1} << n;
  for (std::uint64_t s = 0; s < seeds; ++s) image.insert(toy_prg(n, Bits(s, n)).value());
  std::uint64_t sigmas = std::uint64_t{1} << (4 * n);
  std::uint64_t in = 0;
  for (std::uint64_t s = 0; s < seeds; ++s) {
    std::uint64_t c = toy_prg(n, Bits(s, n)).value();
    for (std::uint64_t sg = 0; sg < sigmas; ++sg) in += image.count(c ^ sg);
  }
  return 1 - Rational(static_cast<unsigned long>(in)) /
                 Rational(static_cast<unsigned long>(seeds * sigmas));
}

Rational forgery_advantage(int n, int attempts) {
  Rational miss = 1 - pow2_neg(static_cast<unsigned>(n));
  Rational all = 1;
  for (int i = 0; i < attempts; ++i) all *= miss;
  return 1 - all;
}

}  // namespace ucrc::testing
