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

#ifndef UCRC_SEM_VALUE_HPP_
#define UCRC_SEM_VALUE_HPP_

#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "ucrc/common/bits.hpp"
#include "ucrc/common/exact.hpp"
#include "ucrc/lang/link.hpp"

namespace ucrc {

// What the environment sees after a call: either the returned tuple or yield.
struct Obs {
  bool yielded = false;
  std::vector<Bits> vals;

  static Obs yield() { return Obs{true, {}}; }
  // "yield" or "(01,10)"
  std::string str() const;
  bool operator==(const Obs&) const = default;
  auto operator<=>(const Obs&) const = default;
};

// A concrete environment call.
struct CallSpec {
  std::string oracle;
  std::vector<Bits> args;
  // "O(01,1)"
  std::string str() const;
  bool operator==(const CallSpec&) const = default;
  auto operator<=>(const CallSpec&) const = default;
};

enum class EventKind { kCall, kReturn, kYield, kDecide, kTimeout };

struct Event {
  Origin origin = Origin::kEnvironment;
  EventKind kind = EventKind::kCall;
  std::string oracle;
  std::vector<Bits> payload;
  int bit = 0;

  // Environment-observable serialization. The origin tag is kept on the
  // struct but not serialized, so worlds that differ only in who answers a
  // call produce identical trace keys.
  std::string str() const;
  bool operator==(const Event&) const = default;
};

std::string serialize_events(const std::vector<Event>& evs);
// Inverse of serialize_events on the environment-observable fields.
std::vector<Event> parse_events(const std::string& text);

// 0, 1, or -1 for bottom: the decide bit if the sequence ends with one.
int final_bit(const std::vector<Event>& evs);
int final_bit(const std::string& serialized);

// Exact distribution over complete traces at one security parameter. Keys are
// serialized event sequences.
struct TraceDist {
  int n = 0;
  std::map<std::string, Rational> entries;

  Rational total() const;
  // One line per trace, "n=<n> p=<num>/<den> <events>", sorted.
  std::string format() const;
  bool operator==(const TraceDist& o) const { return n == o.n && entries == o.entries; }
};

// Step bound a*n^k + b; `unbounded` disables timeouts.
struct ResourceBudget {
  std::uint64_t a = 0;
  std::uint64_t k = 0;
  std::uint64_t b = 0;
  bool unbounded = true;

  static ResourceBudget none() { return {}; }
  static ResourceBudget poly(std::uint64_t a, std::uint64_t k, std::uint64_t b) {
    return {a, k, b, false};
  }
  std::uint64_t bound(int n) const;
  // "a,k,b" or "none"
  std::string str() const;
  static ResourceBudget parse(const std::string& text);
  bool operator==(const ResourceBudget&) const = default;
};

}  // namespace ucrc

#endif  // UCRC_SEM_VALUE_HPP_
