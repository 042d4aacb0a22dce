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

#include "ucrc/sem/value.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "ucrc/common/error.hpp"

namespace ucrc {

namespace {

std::string tuple(const std::vector<Bits>& vs) {
  std::string s = "(";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) s += ",";
    s += vs[i].str();
  }
  return s + ")";
}

std::vector<Bits> parse_tuple(const std::string& t) {
  // t includes the parentheses
  std::vector<Bits> out;
  if (t.size() < 2 || t.front() != '(' || t.back() != ')') throw Error("bad tuple '" + t + "'");
  std::string body = t.substr(1, t.size() - 2);
  if (body.empty()) return out;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(Bits::parse(item));
  return out;
}

}  // namespace

std::string Obs::str() const { return yielded ? "yield" : tuple(vals); }

std::string CallSpec::str() const { return oracle + tuple(args); }

std::string Event::str() const {
  switch (kind) {
    case EventKind::kCall: return oracle + tuple(payload);
    case EventKind::kReturn: return "->" + tuple(payload);
    case EventKind::kYield: return "->yield";
    case EventKind::kDecide: return "decide(" + std::to_string(bit) + ")";
    case EventKind::kTimeout: return "timeout";
  }
  return {};
}

std::string serialize_events(const std::vector<Event>& evs) {
  std::string s;
  for (std::size_t i = 0; i < evs.size(); ++i) {
    if (i) s += ";";
    s += evs[i].str();
  }
  return s;
}

std::vector<Event> parse_events(const std::string& text) {
  std::vector<Event> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ';')) {
    Event e;
    if (tok == "timeout") {
      e.kind = EventKind::kTimeout;
    } else if (tok == "->yield") {
      e.kind = EventKind::kYield;
      e.origin = Origin::kProgram;
    } else if (tok.rfind("->", 0) == 0) {
      e.kind = EventKind::kReturn;
      e.origin = Origin::kProgram;
      e.payload = parse_tuple(tok.substr(2));
    } else if (tok == "decide(0)" || tok == "decide(1)") {
      e.kind = EventKind::kDecide;
      e.bit = tok[7] - '0';
    } else {
      auto p = tok.find('(');
      if (p == std::string::npos || p == 0) throw MalformedPrefix("bad event '" + tok + "'");
      e.kind = EventKind::kCall;
      e.oracle = tok.substr(0, p);
      e.payload = parse_tuple(tok.substr(p));
    }
    out.push_back(std::move(e));
  }
  return out;
}

int final_bit(const std::vector<Event>& evs) {
  if (evs.empty() || evs.back().kind != EventKind::kDecide) return -1;
  return evs.back().bit;
}

int final_bit(const std::string& s) {
  auto ends = [&](const char* suf) {
    std::string x(suf);
    return s.size() >= x.size() && s.compare(s.size() - x.size(), x.size(), x) == 0;
  };
  if (ends("decide(1)")) return 1;
  if (ends("decide(0)")) return 0;
  return -1;
}

Rational TraceDist::total() const {
  Rational t = 0;
  for (const auto& [k, v] : entries) t += v;
  return t;
}

std::string TraceDist::format() const {
  std::vector<std::string> lines;
  for (const auto& [k, v] : entries)
    lines.push_back("n=" + std::to_string(n) + " p=" + to_string(v) + " " + k);
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const std::string& l : lines) out += l + "\n";
  return out;
}

std::uint64_t ResourceBudget::bound(int n) const {
  if (unbounded) return std::numeric_limits<std::uint64_t>::max();
  std::uint64_t p = 1;
  for (std::uint64_t i = 0; i < k; ++i) p *= static_cast<std::uint64_t>(n);
  return a * p + b;
}

std::string ResourceBudget::str() const {
  if (unbounded) return "none";
  return std::to_string(a) + "," + std::to_string(k) + "," + std::to_string(b);
}

ResourceBudget ResourceBudget::parse(const std::string& text) {
  if (text == "none") return none();
  std::stringstream ss(text);
  std::string part;
  std::vector<std::uint64_t> v;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stoull(part, &used));
      if (used != part.size()) throw Error("");
    } catch (...) {
      throw Error("bad budget '" + text + "' (expected a,k,b or none)");
    }
  }
  if (v.size() != 3) throw Error("bad budget '" + text + "' (expected a,k,b or none)");
  ResourceBudget r = poly(v[0], v[1], v[2]);
  if (r.bound(1) == 0) throw Error("budget must be positive");
  return r;
}

}  // namespace ucrc
