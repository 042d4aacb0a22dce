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

#include "ucrc/behavior/envs.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <sstream>

#include "ucrc/common/error.hpp"

namespace ucrc {

namespace {

std::vector<std::string> split_top(const std::string& s, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == sep && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

int CallTemplate::min_level() const {
  int lvl = 0;
  for (const ArgTemplate& a : args)
    if (a.kind == ArgTemplate::kObs || a.kind == ArgTemplate::kObsFlip)
      lvl = std::max(lvl, a.obs + 1);
  return lvl;
}

std::string CallTemplate::str() const {
  std::string s = oracle + "(";
  for (std::size_t i = 0; i < args.size(); ++i) s += (i ? "," : "") + args[i].str();
  return s + ")";
}

CallTemplate CallTemplate::parse(const std::string& text) {
  std::string t = trim(text);
  auto open = t.find('(');
  if (open == std::string::npos || open == 0 || t.back() != ')')
    throw Error("bad call template '" + text + "'");
  CallTemplate c;
  c.oracle = t.substr(0, open);
  std::string body = t.substr(open + 1, t.size() - open - 2);
  if (!trim(body).empty())
    for (const std::string& a : split_top(body, ',')) c.args.push_back(ArgTemplate::parse(trim(a)));
  return c;
}

const std::vector<Matcher>& EnvClass::classes_of(const std::string& oracle) const {
  auto it = classes.find(oracle);
  return it == classes.end() ? default_classes : it->second;
}

KeyPolicy EnvClass::policy() const {
  KeyPolicy p;
  for (const CallTemplate& c : calls) {
    p.classes[c.oracle] = classes_of(c.oracle);
    for (const ArgTemplate& a : c.args)
      if (a.kind == ArgTemplate::kObs || a.kind == ArgTemplate::kObsFlip) p.exact_depths.insert(a.obs);
  }
  return p;
}

std::string EnvClass::str() const {
  std::string s = "generator depth=" + std::to_string(depth) + " calls=";
  for (std::size_t i = 0; i < calls.size(); ++i) s += (i ? ";" : "") + calls[i].str();
  auto list = [](const std::vector<Matcher>& ms) {
    std::string r;
    for (std::size_t i = 0; i < ms.size(); ++i) r += (i ? "|" : "") + ms[i].str();
    return r;
  };
  s += " classes=" + list(default_classes);
  for (const auto& [o, ms] : classes) s += " classes." + o + "=" + list(ms);
  return s;
}

namespace {

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a && b > std::numeric_limits<std::uint64_t>::max() / a)
    return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}
std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max()
                                                           : a + b;
}

std::uint64_t count_at(const EnvClass& c, int level, int rem,
                       std::map<std::pair<int, int>, std::uint64_t>& memo) {
  if (rem == 0) return 2;
  auto key = std::make_pair(level, rem);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  std::uint64_t total = 2;
  std::uint64_t sub = count_at(c, level + 1, rem - 1, memo);
  for (const CallTemplate& t : c.calls) {
    if (t.min_level() > level) continue;
    std::uint64_t prod = 1;
    for (std::size_t i = 0; i < c.classes_of(t.oracle).size(); ++i) prod = sat_mul(prod, sub);
    total = sat_add(total, prod);
  }
  memo[key] = total;
  return total;
}

}  // namespace

std::uint64_t count_environments(const EnvClass& c) {
  std::map<std::pair<int, int>, std::uint64_t> memo;
  return count_at(c, 0, c.depth, memo);
}

std::vector<Environment> enumerate_environments(const EnvClass& c, std::uint64_t ceiling,
                                                const std::string& prefix) {
  std::uint64_t total = count_environments(c);
  if (total > ceiling)
    throw SpaceTooLarge("environment class has " +
                        (total == std::numeric_limits<std::uint64_t>::max() ? std::string("> 2^64")
                                                                             : std::to_string(total)) +
                        " members, ceiling " + std::to_string(ceiling));
  EnvFactory& f = global_env_factory();
  std::map<std::pair<int, int>, std::vector<EnvPtr>> memo;
  std::function<const std::vector<EnvPtr>&(int, int)> gen = [&](int level,
                                                                int rem) -> const std::vector<EnvPtr>& {
    auto key = std::make_pair(level, rem);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    std::vector<EnvPtr> out{f.decide(0), f.decide(1)};
    if (rem > 0) {
      const std::vector<EnvPtr>& sub = gen(level + 1, rem - 1);
      for (const CallTemplate& t : c.calls) {
        if (t.min_level() > level) continue;
        const std::vector<Matcher>& cls = c.classes_of(t.oracle);
        std::vector<std::size_t> digit(cls.size(), 0);
        while (true) {
          std::vector<std::pair<Matcher, EnvPtr>> br;
          for (std::size_t i = 0; i < cls.size(); ++i) br.emplace_back(cls[i], sub[digit[i]]);
          out.push_back(f.call(t.oracle, t.args, std::move(br)));
          // last class fastest
          std::size_t i = cls.size();
          while (i > 0) {
            --i;
            if (++digit[i] < sub.size()) break;
            digit[i] = 0;
            if (i == 0) {
              i = cls.size() + 1;
              break;
            }
          }
          if (cls.empty() || i == cls.size() + 1) break;
        }
      }
    }
    return memo.emplace(key, std::move(out)).first->second;
  };
  const std::vector<EnvPtr>& roots = gen(0, c.depth);
  std::vector<Environment> envs;
  envs.reserve(roots.size());
  int width = static_cast<int>(std::to_string(roots.size() - 1).size());
  for (std::size_t i = 0; i < roots.size(); ++i) {
    std::string num = std::to_string(i);
    envs.push_back({prefix + std::string(static_cast<std::size_t>(width) - num.size(), '0') + num, roots[i]});
  }
  return envs;
}

EnvClass simple_env_class(const std::vector<std::string>& oracles, int alphabet_width, int depth) {
  EnvClass c;
  c.depth = depth;
  for (const std::string& o : oracles) c.calls.push_back({o, {}});
  c.default_classes.clear();
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << alphabet_width); ++v) {
    Matcher m;
    m.kind = Matcher::kEquals;
    m.value.vals.push_back(Bits(v, alphabet_width));
    c.default_classes.push_back(m);
  }
  return c;
}

namespace {

void format_node(const EnvNode& n, int indent, std::string& out) {
  if (n.decide) {
    out += "-> decide " + std::to_string(n.bit) + "\n";
    return;
  }
  out += "-> call " + n.oracle + "(";
  for (std::size_t i = 0; i < n.args.size(); ++i) out += (i ? "," : "") + n.args[i].str();
  out += ")\n";
  for (const auto& [m, c] : n.branches) {
    out += std::string(static_cast<std::size_t>(indent + 2), ' ') + "obs=" + m.str() + " ";
    format_node(*c, indent + 2, out);
  }
}

}  // namespace

std::string format_environment(const Environment& z) {
  std::string out = "env " + z.id + " depth=" + std::to_string(z.depth()) + "\n";
  format_node(*z.root, 0, out);
  return out;
}

Environment parse_environment(const std::string& text) {
  std::vector<std::pair<int, std::string>> lines;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    if (trim(line).empty()) continue;
    int ind = static_cast<int>(line.find_first_not_of(' '));
    lines.emplace_back(ind, trim(line));
  }
  if (lines.empty() || lines[0].second.rfind("env ", 0) != 0)
    throw Error("environment text must start with 'env <id>'");
  Environment z;
  {
    std::stringstream hs(lines[0].second.substr(4));
    hs >> z.id;
  }
  EnvFactory& f = global_env_factory();
  std::size_t pos = 1;
  std::function<EnvPtr(const std::string&, int)> node = [&](const std::string& action,
                                                           int indent) -> EnvPtr {
    std::string a = trim(action);
    if (a.rfind("->", 0) != 0) throw Error("expected '->' in environment line '" + action + "'");
    a = trim(a.substr(2));
    if (a == "decide 0" || a == "decide 1") return f.decide(a.back() - '0');
    if (a.rfind("call ", 0) != 0) throw Error("bad environment action '" + a + "'");
    CallTemplate t = CallTemplate::parse(a.substr(5));
    std::vector<std::pair<Matcher, EnvPtr>> br;
    while (pos < lines.size() && lines[pos].first > indent) {
      const std::string& l = lines[pos].second;
      int ind = lines[pos].first;
      if (l.rfind("obs=", 0) != 0) throw Error("expected 'obs=' in environment line '" + l + "'");
      auto arrow = l.find(" ->");
      if (arrow == std::string::npos) throw Error("missing '->' in '" + l + "'");
      Matcher m = Matcher::parse(l.substr(4, arrow - 4));
      ++pos;
      br.emplace_back(m, node(l.substr(arrow + 1), ind));
    }
    return f.call(t.oracle, t.args, std::move(br));
  };
  if (pos >= lines.size()) throw Error("environment has no root");
  int root_indent = lines[pos].first;
  std::string root = lines[pos++].second;
  z.root = node(root, root_indent);
  if (pos != lines.size()) throw Error("trailing lines in environment text");
  return z;
}

std::shared_ptr<EnvRegistry> EnvRegistry::from_class(const EnvClass& c, std::uint64_t ceiling) {
  auto r = std::make_shared<EnvRegistry>();
  r->family_ = c;
  for (Environment& z : enumerate_environments(c, ceiling)) {
    r->index_[z.id] = r->envs_.size();
    r->envs_.push_back(std::move(z));
    r->member_.push_back(true);
  }
  return r;
}

void EnvRegistry::add(Environment z) {
  if (index_.count(z.id)) throw Error("duplicate environment id '" + z.id + "'");
  index_[z.id] = envs_.size();
  envs_.push_back(std::move(z));
  member_.push_back(false);
}

const Environment& EnvRegistry::get(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw UnknownEnvironment("unknown environment '" + id + "'");
  return envs_[it->second];
}

bool EnvRegistry::in_family(const std::string& id) const {
  auto it = index_.find(id);
  return it != index_.end() && member_[it->second];
}

}  // namespace ucrc
