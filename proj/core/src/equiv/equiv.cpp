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

#include "ucrc/equiv/equiv.hpp"

#include <algorithm>
#include <cstdlib>

#include "ucrc/common/error.hpp"

namespace ucrc {

Rational Schedule::at(int n) const {
  switch (kind) {
    case kConst:
      return coeff;
    case kExpHalf:
      return coeff * pow2_neg(static_cast<unsigned>(n));
    case kPolyInv: {
      mpz_class d;
      mpz_ui_pow_ui(d.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(power));
      return coeff / Rational(d);
    }
  }
  return coeff;
}

std::string Schedule::str() const {
  switch (kind) {
    case kConst:
      return to_string(coeff);
    case kExpHalf:
      return to_string(coeff) + "*2^-n";
    case kPolyInv:
      return to_string(coeff) + "*n^-" + std::to_string(power);
  }
  return {};
}

Schedule Schedule::parse(const std::string& text) {
  Schedule s;
  std::string t = text;
  auto star = t.find('*');
  std::string head = star == std::string::npos ? t : t.substr(0, star);
  std::string tail = star == std::string::npos ? "" : t.substr(star + 1);
  if (head == "2^-n" || head.rfind("n^-", 0) == 0) {
    tail = head;
    head = "1";
  }
  try {
    s.coeff = parse_rational(head);
  } catch (const Error&) {
    throw Error("bad schedule '" + text + "'");
  }
  if (tail.empty()) {
    s.kind = kConst;
  } else if (tail == "2^-n") {
    s.kind = kExpHalf;
  } else if (tail.rfind("n^-", 0) == 0 && tail.size() > 3 &&
             tail.find_first_not_of("0123456789", 3) == std::string::npos) {
    s.kind = kPolyInv;
    s.power = std::atoi(tail.c_str() + 3);
  } else {
    throw Error("bad schedule '" + text + "'");
  }
  if (s.coeff <= 0) throw Error("schedule must be positive: '" + text + "'");
  return s;
}

std::string EquivSpec::str() const {
  switch (kind) {
    case kPerfect:
      return "perfect";
    case kStatistical:
      return "stat:" + eps.str();
    case kCompProxy:
      return "comp:c=" + std::to_string(c) + ",N=" + std::to_string(N);
    case kRefinement:
      return "refine";
  }
  return {};
}

EquivSpec EquivSpec::parse(const std::string& text) {
  if (text == "perfect") return perfect();
  if (text == "refine") return refinement();
  if (text.rfind("stat:", 0) == 0) return statistical(Schedule::parse(text.substr(5)));
  if (text.rfind("comp:", 0) == 0) {
    int c = -1, N = -1;
    char tail = 0;
    if (std::sscanf(text.c_str() + 5, "c=%d,N=%d%c", &c, &N, &tail) != 2 || c < 1 || N < 0)
      throw Error("bad computational spec '" + text + "' (want comp:c=<c>,N=<N>)");
    return comp_proxy(c, N);
  }
  throw Error("unknown equivalence '" + text + "'");
}

std::map<int, Rational> binary_diff(const BinaryDistFamily& x, const BinaryDistFamily& y) {
  if (x.grid() != y.grid()) throw GridMismatch("families are over different grids");
  std::map<int, Rational> out;
  for (const auto& [n, d] : x.at) out[n] = abs_diff(d.p1, y.at.at(n).p1);
  return out;
}

std::vector<Rational> DiffProfile::curve() const {
  std::vector<Rational> c;
  for (const auto& [n, w] : worst) c.push_back(w.second);
  return c;
}

bool DiffProfile::non_increasing() const {
  auto c = curve();
  for (std::size_t i = 1; i < c.size(); ++i)
    if (c[i] > c[i - 1]) return false;
  return true;
}

bool DiffProfile::strictly_decreasing() const {
  auto c = curve();
  for (std::size_t i = 1; i < c.size(); ++i)
    if (c[i] >= c[i - 1]) return false;
  return true;
}

std::string DiffProfile::csv() const {
  std::string out;
  for (const auto& [k, a] : adv)
    out += k.first + "," + std::to_string(k.second) + "," + a.get_num().get_str() + "," +
           a.get_den().get_str() + "\n";
  return out;
}

namespace {

void same_shape(const Behavior& a, const Behavior& b) {
  if (a.grid() != b.grid()) throw GridMismatch("behaviors are over different grids");
  if (a.env_registry() == b.env_registry()) return;
  const auto& x = a.envs().all();
  const auto& y = b.envs().all();
  if (x.size() != y.size()) throw UnknownEnvironment("behaviors use different environment sets");
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i].id != y[i].id) throw UnknownEnvironment("environment '" + x[i].id + "' not shared");
}

void note(DiffProfile& p, const std::string& env, int n, const Rational& a) {
  p.adv[{env, n}] = a;
  auto it = p.worst.find(n);
  if (it == p.worst.end() || a > it->second.second) p.worst[n] = {env, a};
}

std::string curve_text(const DiffProfile& p) {
  std::string s;
  for (const auto& [n, w] : p.worst)
    s += (s.empty() ? "" : ";") + std::to_string(n) + ":" + to_string(w.second) + "@" + w.first;
  return s;
}

// First trace where the two maps differ (Perfect) or that b1 has and b2 lacks
// (Refinement); empty when none.
std::string first_difference(const TraceDist& a, const TraceDist& b, bool inclusion) {
  auto ia = a.entries.begin();
  auto ib = b.entries.begin();
  while (ia != a.entries.end() || ib != b.entries.end()) {
    if (ib == b.entries.end() || (ia != a.entries.end() && ia->first < ib->first)) return ia->first;
    if (ia == a.entries.end() || ib->first < ia->first) {
      if (!inclusion) return ib->first;
      ++ib;
      continue;
    }
    if (!inclusion && ia->second != ib->second) return ia->first;
    ++ia;
    ++ib;
  }
  return {};
}

}  // namespace

DiffProfile diff_profile(const Behavior& b1, const Behavior& b2) {
  same_shape(b1, b2);
  DiffProfile p;
  for (const Environment& z : b1.envs().all())
    for (int n : b1.grid()) note(p, z.id, n, abs_diff(b1.exec(z.id, n).p1, b2.exec(z.id, n).p1));
  return p;
}

Verdict equiv_check(const Behavior& b1, const Behavior& b2, const EquivSpec& spec,
                    const EquivOptions& opts) {
  same_shape(b1, b2);
  Verdict v;
  v.spec = spec;
  if (spec.kind == EquivSpec::kPerfect || spec.kind == EquivSpec::kRefinement) {
    bool inclusion = spec.kind == EquivSpec::kRefinement;
    int compared = 0;
    for (const Environment& z : b1.envs().all()) {
      for (int n : b1.grid()) {
        if (!v.holds && !opts.exhaustive) break;
        ++compared;
        TraceDist d1 = b1.trace_dist(z.id, n);
        TraceDist d2 = b2.trace_dist(z.id, n);
        std::string diff = first_difference(d1, d2, inclusion);
        if (!diff.empty() && v.holds) {
          v.holds = false;
          Counterexample c;
          c.env = z.id;
          c.n = n;
          c.trace = diff;
          auto get = [](const TraceDist& d, const std::string& t) {
            auto it = d.entries.find(t);
            return it == d.entries.end() ? Rational(0) : it->second;
          };
          c.left = get(d1, diff);
          c.right = get(d2, diff);
          c.advantage = abs_diff(b1.exec(z.id, n).p1, b2.exec(z.id, n).p1);
          v.counterexample = c;
        }
      }
    }
    if (opts.profile) v.profile = diff_profile(b1, b2);
    v.detail = "compared=" + std::to_string(compared);
    if (v.counterexample)
      v.detail += ",env=" + v.counterexample->env + ",n=" + std::to_string(v.counterexample->n) +
                  ",trace=" + v.counterexample->trace + ",left=" + to_string(v.counterexample->left) +
                  ",right=" + to_string(v.counterexample->right);
    return v;
  }

  v.profile = diff_profile(b1, b2);
  for (const Environment& z : b1.envs().all()) {
    for (int n : b1.grid()) {
      const Rational& a = v.profile.adv.at({z.id, n});
      bool ok = true;
      if (spec.kind == EquivSpec::kStatistical) {
        ok = a <= spec.eps.at(n);
      } else if (n > spec.N) {
        EquivSpec bound = EquivSpec::statistical({Schedule::kPolyInv, 1, spec.c});
        ok = a < bound.eps.at(n);
      }
      if (!ok && v.holds) {
        v.holds = false;
        v.counterexample = Counterexample{z.id, n, b1.exec(z.id, n).p1, b2.exec(z.id, n).p1, a, {}};
      }
    }
  }
  if (spec.kind == EquivSpec::kCompProxy) {
    bool any = false;
    for (int n : b1.grid()) any = any || n > spec.N;
    if (!any) throw GridMismatch("no grid value above N=" + std::to_string(spec.N));
  }
  v.detail = "curve=" + curve_text(v.profile) +
             ",monotone=" + (v.profile.non_increasing() ? "yes" : "no");
  if (v.counterexample)
    v.detail += ",env=" + v.counterexample->env + ",n=" + std::to_string(v.counterexample->n) +
                ",advantage=" + to_string(v.counterexample->advantage);
  return v;
}

LawReport preorder_laws(const EquivSpec& spec,
                        const std::vector<std::array<const Behavior*, 3>>& samples) {
  LawReport r;
  auto add = [&](const std::string& law, bool ok, std::size_t i, const std::string& detail) {
    ++r.checked;
    if (!ok) ++r.violations;
    r.lines.push_back("law=" + law + " status=" + (ok ? "pass" : "fail") + " spec=" + spec.str() +
                      " sample=" + std::to_string(i) + (detail.empty() ? "" : " detail=" + detail));
  };
  bool exact = spec.kind == EquivSpec::kPerfect || spec.kind == EquivSpec::kRefinement;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto& [a, b, c] = samples[i];
    for (const Behavior* x : {a, b, c}) add("reflexivity", equiv_check(*x, *x, spec).holds, i, "");
    if (exact) {
      bool ab = equiv_check(*a, *b, spec).holds;
      bool bc = equiv_check(*b, *c, spec).holds;
      bool ac = equiv_check(*a, *c, spec).holds;
      add("transitivity", !(ab && bc) || ac, i,
          std::string("ab=") + (ab ? "1" : "0") + ",bc=" + (bc ? "1" : "0") + ",ac=" + (ac ? "1" : "0"));
    } else {
      DiffProfile ab = diff_profile(*a, *b);
      DiffProfile bc = diff_profile(*b, *c);
      DiffProfile ac = diff_profile(*a, *c);
      bool ok = true;
      std::string where;
      for (const auto& [k, d] : ac.adv)
        if (d > ab.adv.at(k) + bc.adv.at(k)) {
          ok = false;
          where = k.first + "@" + std::to_string(k.second);
          break;
        }
      add("triangle", ok, i, where);
    }
  }
  return r;
}

}  // namespace ucrc
