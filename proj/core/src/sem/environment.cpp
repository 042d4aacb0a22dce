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

#include "ucrc/sem/environment.hpp"

#include <algorithm>

#include "ucrc/common/error.hpp"

namespace ucrc {

std::string ArgTemplate::str() const {
  switch (kind) {
    case kLit: return "0b" + lit.str();
    case kZeros: return "zeros";
    case kOnes: return "ones";
    case kObs: return "obs" + std::to_string(obs) + (comp ? "." + std::to_string(comp) : "");
    case kObsFlip:
      return "flip(obs" + std::to_string(obs) + (comp ? "." + std::to_string(comp) : "") + "," +
             std::to_string(bit) + ")";
  }
  return {};
}

namespace {

int to_int(const std::string& s) {
  if (s.empty() || s.size() > 6 || !std::all_of(s.begin(), s.end(), ::isdigit))
    throw Error("bad number '" + s + "'");
  return std::stoi(s);
}

void parse_obs_ref(const std::string& s, int& k, int& comp) {
  if (s.rfind("obs", 0) != 0) throw Error("bad observation reference '" + s + "'");
  std::string rest = s.substr(3);
  auto dot = rest.find('.');
  k = to_int(rest.substr(0, dot));
  comp = dot == std::string::npos ? 0 : to_int(rest.substr(dot + 1));
}

Obs parse_obs(const std::string& s) {
  if (s == "yield") return Obs::yield();
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') throw Error("bad observation '" + s + "'");
  Obs o;
  std::string body = s.substr(1, s.size() - 2);
  std::size_t at = 0;
  while (!body.empty() && at <= body.size()) {
    auto c = body.find(',', at);
    o.vals.push_back(Bits::parse(body.substr(at, c == std::string::npos ? std::string::npos : c - at)));
    if (c == std::string::npos) break;
    at = c + 1;
  }
  return o;
}

}  // namespace

ArgTemplate ArgTemplate::parse(const std::string& t) {
  if (t == "zeros") return zeros();
  if (t == "ones") return ones();
  if (t.rfind("0b", 0) == 0) return literal(Bits::parse(t));
  if (t.rfind("obs", 0) == 0) {
    ArgTemplate a = observed(0);
    parse_obs_ref(t, a.obs, a.comp);
    return a;
  }
  if (t.rfind("flip(", 0) == 0 && t.back() == ')') {
    std::string body = t.substr(5, t.size() - 6);
    auto c = body.find(',');
    if (c == std::string::npos) throw Error("bad argument template '" + t + "'");
    ArgTemplate a = observed_flip(0, 0, to_int(body.substr(c + 1)));
    parse_obs_ref(body.substr(0, c), a.obs, a.comp);
    return a;
  }
  throw Error("bad argument template '" + t + "'");
}

namespace {

std::mutex& registry_mu() {
  static std::mutex mu;
  return mu;
}
std::map<std::string, ObsPredicate>& registry() {
  static std::map<std::string, ObsPredicate> r;
  return r;
}

}  // namespace

void register_predicate(const std::string& name, ObsPredicate fn) {
  std::lock_guard<std::mutex> lock(registry_mu());
  registry()[name] = std::move(fn);
}

const ObsPredicate& lookup_predicate(const std::string& name) {
  std::lock_guard<std::mutex> lock(registry_mu());
  auto it = registry().find(name);
  if (it == registry().end()) throw ModelError("unknown observation predicate '" + name + "'");
  return it->second;
}

bool Matcher::matches(int n, const std::vector<Obs>& history, const Obs& o) const {
  switch (kind) {
    case kAny: return true;
    case kYield: return o.yielded;
    case kReturned: return !o.yielded;
    case kEquals: return o == value;
    case kZero:
      return !o.yielded &&
             std::all_of(o.vals.begin(), o.vals.end(), [](const Bits& b) { return b.is_zero(); });
    case kNonzero:
      return !o.yielded &&
             std::any_of(o.vals.begin(), o.vals.end(), [](const Bits& b) { return !b.is_zero(); });
    case kBit:
      if (o.yielded || comp >= static_cast<int>(o.vals.size())) return false;
      if (bit >= o.vals[static_cast<std::size_t>(comp)].width()) return false;
      return o.vals[static_cast<std::size_t>(comp)].bit(bit) == (expect != 0);
    case kPredicate: return lookup_predicate(name)(n, history, o);
  }
  return false;
}

std::string Matcher::str() const {
  switch (kind) {
    case kAny: return "any";
    case kYield: return "yield";
    case kReturned: return "ret";
    case kEquals: return "eq" + (value.yielded ? std::string("(yield)") : value.str());
    case kZero: return "zero";
    case kNonzero: return "nonzero";
    case kBit:
      return "bit(" + std::to_string(comp) + "," + std::to_string(bit) + ")=" +
             std::to_string(expect);
    case kPredicate: return "pred:" + name;
  }
  return {};
}

Matcher Matcher::parse(const std::string& t) {
  Matcher m;
  if (t == "any") return m;
  if (t == "yield") { m.kind = kYield; return m; }
  if (t == "ret") { m.kind = kReturned; return m; }
  if (t == "zero") { m.kind = kZero; return m; }
  if (t == "nonzero") { m.kind = kNonzero; return m; }
  if (t == "eq(yield)") {
    m.kind = kEquals;
    m.value = Obs::yield();
    return m;
  }
  if (t.rfind("eq(", 0) == 0) {
    m.kind = kEquals;
    m.value = parse_obs(t.substr(2));
    return m;
  }
  if (t.rfind("pred:", 0) == 0) {
    m.kind = kPredicate;
    m.name = t.substr(5);
    return m;
  }
  if (t.rfind("bit(", 0) == 0) {
    auto close = t.find(')');
    auto comma = t.find(',');
    if (close == std::string::npos || comma == std::string::npos || close + 2 > t.size() ||
        t.substr(close + 1, 1) != "=")
      throw Error("bad matcher '" + t + "'");
    m.kind = kBit;
    m.comp = to_int(t.substr(4, comma - 4));
    m.bit = to_int(t.substr(comma + 1, close - comma - 1));
    m.expect = to_int(t.substr(close + 2));
    return m;
  }
  throw Error("bad matcher '" + t + "'");
}

int env_depth(const EnvNode& node) {
  if (node.decide) return 0;
  int d = 0;
  for (const auto& [m, c] : node.branches) d = std::max(d, env_depth(*c));
  return d + 1;
}

int Environment::depth() const { return root ? env_depth(*root) : 0; }

EnvPtr EnvFactory::intern(EnvNode node) {
  std::string key;
  if (node.decide) {
    key = "d" + std::to_string(node.bit);
  } else {
    key = "c" + node.oracle + "(";
    for (const ArgTemplate& a : node.args) key += a.str() + ",";
    key += ")";
    for (const auto& [m, c] : node.branches) key += m.str() + ">" + std::to_string(c->id) + ";";
  }
  std::lock_guard<std::mutex> lock(mu_);
  auto it = nodes_.find(key);
  if (it != nodes_.end()) return it->second;
  node.id = next_id_++;
  auto p = std::make_shared<const EnvNode>(std::move(node));
  nodes_.emplace(std::move(key), p);
  return p;
}

EnvPtr EnvFactory::decide(int bit) {
  EnvNode n;
  n.decide = true;
  n.bit = bit ? 1 : 0;
  return intern(std::move(n));
}

EnvPtr EnvFactory::call(std::string oracle, std::vector<ArgTemplate> args,
                        std::vector<std::pair<Matcher, EnvPtr>> branches) {
  EnvNode n;
  n.decide = false;
  n.oracle = std::move(oracle);
  n.args = std::move(args);
  n.branches = std::move(branches);
  return intern(std::move(n));
}

std::size_t EnvFactory::size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return nodes_.size();
}

EnvFactory& global_env_factory() {
  static EnvFactory f;
  return f;
}

bool resolve_call(const EnvNode& node, const std::vector<Obs>& history,
                  const std::vector<int>& widths, CallSpec& out) {
  out.oracle = node.oracle;
  out.args.clear();
  if (node.args.size() != widths.size())
    throw ModelError("environment calls " + node.oracle + " with " +
                     std::to_string(node.args.size()) + " arguments, expected " +
                     std::to_string(widths.size()));
  for (std::size_t i = 0; i < node.args.size(); ++i) {
    const ArgTemplate& a = node.args[i];
    int w = widths[i];
    switch (a.kind) {
      case ArgTemplate::kLit:
        if (a.lit.width() != w)
          throw ModelError("environment argument " + a.str() + " for " + node.oracle +
                           " has the wrong width (expected " + std::to_string(w) + ")");
        out.args.push_back(a.lit);
        break;
      case ArgTemplate::kZeros: out.args.push_back(Bits::zeros(w)); break;
      case ArgTemplate::kOnes: out.args.push_back(Bits::ones(w)); break;
      case ArgTemplate::kObs:
      case ArgTemplate::kObsFlip: {
        if (a.obs >= static_cast<int>(history.size())) return false;
        const Obs& o = history[static_cast<std::size_t>(a.obs)];
        if (o.yielded || a.comp >= static_cast<int>(o.vals.size())) return false;
        Bits b = o.vals[static_cast<std::size_t>(a.comp)];
        if (b.width() != w) return false;
        if (a.kind == ArgTemplate::kObsFlip) {
          if (a.bit >= w) return false;
          b = b.flipped(a.bit);
        }
        out.args.push_back(b);
        break;
      }
    }
  }
  return true;
}

}  // namespace ucrc
