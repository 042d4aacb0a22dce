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

#include "ucrc/emul/emul.hpp"

#include <algorithm>

#include "ucrc/common/error.hpp"

namespace ucrc {

namespace {

const char* side_name(Side s) { return s == Side::kSource ? "source" : "target"; }

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

}  // namespace

UniverseEval::UniverseEval(Universe u) : u_(std::move(u)) {
  if (!u_.envs) throw Error("universe has no environment registry");
  if (u_.grid.empty()) throw GridMismatch("universe grid is empty");
  if (u_.envs->size() > u_.ceilings.max_envs)
    throw UniverseTooLarge(std::to_string(u_.envs->size()) + " environments exceed the ceiling " +
                           std::to_string(u_.ceilings.max_envs));
  std::uint64_t pairs = sat_mul(u_.source_programs.size(), u_.source_contexts.size()) +
                        sat_mul(u_.target_programs.size(), u_.target_contexts.size());
  std::uint64_t cells = sat_mul(sat_mul(pairs, u_.envs->size()), u_.grid.size());
  if (cells > u_.ceilings.max_cells)
    throw UniverseTooLarge("estimated " + std::to_string(cells) + " evaluation cells exceed the ceiling " +
                           std::to_string(u_.ceilings.max_cells));
}

std::string UniverseEval::key(Side s, const NamedProgram& c, const NamedProgram& p) const {
  return std::string(side_name(s)) + ":" + c.id + "|" + p.id;
}

std::shared_ptr<const Behavior> UniverseEval::behavior(Side side, const NamedProgram& ctx,
                                                       const NamedProgram& prg) {
  std::string k = key(side, ctx, prg);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = behaviors_.find(k);
    if (it != behaviors_.end()) return it->second;
  }
  auto b = std::make_shared<const Behavior>(
      link(ctx.program, prg.program), u_.grid,
      side == Side::kSource ? u_.source_budget : u_.target_budget, u_.envs, u_.prims);
  b->prepare(u_.threads);
  std::lock_guard<std::mutex> lock(mu_);
  return behaviors_.emplace(k, b).first->second;
}

bool UniverseEval::predicate(Side side, const NamedProgram& ctx, const NamedProgram& prg) {
  std::string k = key(side, ctx, prg);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = preds_.find(k);
    if (it != preds_.end()) return it->second;
  }
  bool ok = behavior(side, ctx, prg)->within_budget();
  std::lock_guard<std::mutex> lock(mu_);
  preds_[k] = ok;
  return ok;
}

const Verdict& UniverseEval::related(Side s1, const NamedProgram& c1, const NamedProgram& p1,
                                     Side s2, const NamedProgram& c2, const NamedProgram& p2) {
  std::string k = key(s1, c1, p1) + "#" + key(s2, c2, p2);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = verdicts_.find(k);
    if (it != verdicts_.end()) return it->second;
  }
  auto b1 = behavior(s1, c1, p1);
  auto b2 = behavior(s2, c2, p2);
  Verdict v = equiv_check(*b1, *b2, u_.equiv);
  std::lock_guard<std::mutex> lock(mu_);
  return verdicts_.emplace(k, std::move(v)).first->second;
}

const NamedProgram& UniverseEval::source_program(const std::string& id) const {
  for (const NamedProgram& p : u_.source_programs)
    if (p.id == id) return p;
  throw ModelError("no source program '" + id + "' in the universe");
}

const NamedProgram& UniverseEval::target_program(const std::string& id) const {
  for (const NamedProgram& p : u_.target_programs)
    if (p.id == id) return p;
  throw ModelError("no target program '" + id + "' in the universe");
}

namespace {

// p (on `side`, attacked by that side's contexts) emulates func with a
// simulator from the space.
bool emulates(UniverseEval& ev, Side side, const NamedProgram& p, const NamedProgram& func,
              const std::vector<NamedProgram>& sims) {
  const Universe& u = ev.universe();
  const auto& attackers = side == Side::kSource ? u.source_contexts : u.target_contexts;
  for (const NamedProgram& a : attackers) {
    if (!ev.predicate(side, a, p)) continue;
    bool matched = false;
    for (const NamedProgram& s : sims) {
      if (!ev.predicate(Side::kSource, s, func)) continue;
      if (ev.related(side, a, p, Side::kSource, s, func).holds) {
        matched = true;
        break;
      }
    }
    if (!matched) return false;
  }
  return true;
}

// behav(c ⋈ p) on `side` is in HypEq(anchor).
bool in_hyp(UniverseEval& ev, Side side, const NamedProgram& c, const NamedProgram& p,
            const NamedProgram& anchor) {
  for (const NamedProgram& s : ev.universe().source_contexts) {
    if (!ev.predicate(Side::kSource, s, anchor)) continue;
    if (ev.related(side, c, p, Side::kSource, s, anchor).holds) return true;
  }
  return false;
}

}  // namespace

std::set<std::string> UniverseEval::emul_set(Side side, const NamedProgram& p) {
  std::set<std::string> out;
  for (const NamedProgram& f : u_.source_programs)
    if (emulates(*this, side, p, f, u_.source_contexts)) out.insert(f.id);
  return out;
}

EmulationVerdict verify_emulation(UniverseEval& ev, const NamedProgram& prot,
                                  const NamedProgram& func, const std::vector<NamedProgram>& sims,
                                  const std::vector<NamedProgram>& attackers) {
  if (sims.empty()) throw Error("verify_emulation needs at least one simulator");
  if (sims.size() != 1 && sims.size() != attackers.size())
    throw Error("simulator list must have one entry or one per attacker");
  EmulationVerdict v;
  v.holds = true;
  for (std::size_t i = 0; i < attackers.size(); ++i) {
    const NamedProgram& a = attackers[i];
    const NamedProgram& s = sims.size() == 1 ? sims[0] : sims[i];
    if (!ev.predicate(Side::kTarget, a, prot))
      throw PredicateViolation("target budget fails on " + a.id + " ⋈ " + prot.id);
    if (!ev.predicate(Side::kSource, s, func))
      throw PredicateViolation("source budget fails on " + s.id + " ⋈ " + func.id);
    const Verdict& r = ev.related(Side::kTarget, a, prot, Side::kSource, s, func);
    auto real = ev.behavior(Side::kTarget, a, prot);
    auto ideal = ev.behavior(Side::kSource, s, func);
    DiffProfile prof = r.profile.adv.empty() ? diff_profile(*real, *ideal) : r.profile;
    v.profiles[a.id] = prof;
    v.detail += (v.detail.empty() ? "" : ";") + a.id + ":" + r.detail;
    if (r.holds) {
      v.witness[a.id] = s.id;
    } else if (v.holds) {
      v.holds = false;
      EmulationCounterexample c;
      c.attacker = a.id;
      c.simulator = s.id;
      c.env = r.counterexample->env;
      c.n = r.counterexample->n;
      c.real_p1 = real->exec(c.env, c.n).p1;
      c.ideal_p1 = ideal->exec(c.env, c.n).p1;
      c.advantage = abs_diff(c.real_p1, c.ideal_p1);
      v.counterexample = c;
    }
  }
  if (!v.holds) v.witness.clear();
  return v;
}

bool emul_set_membership(UniverseEval& ev, const NamedProgram& func, const NamedProgram& prot,
                         const std::vector<NamedProgram>& sim_space) {
  return emulates(ev, Side::kTarget, prot, func, sim_space);
}

bool hyp_membership(const Behavior& t, const HyperpropertySpec& h) {
  if (h.simulators.empty()) throw Error("hyperproperty needs a nonempty simulator space");
  for (const NamedProgram& s : h.simulators) {
    Behavior b(link(s.program, h.anchor.program), t.grid(), h.predicate, t.env_registry(), t.prims());
    if (!b.within_budget()) continue;
    if (equiv_check(t, b, h.equiv).holds) return true;
  }
  return false;
}

RcVerdict check_predRHC(UniverseEval& ev, const CompilerMap& cm) {
  const Universe& u = ev.universe();
  RcVerdict r;
  for (const NamedProgram& p : u.source_programs) {
    auto it = cm.find(p.id);
    if (it == cm.end()) throw Error("compiler is not defined on '" + p.id + "'");
    const NamedProgram& t = ev.target_program(it->second);
    for (const NamedProgram& ct : u.target_contexts) {
      if (!ev.predicate(Side::kTarget, ct, t)) continue;
      bool found = false;
      for (const NamedProgram& cs : u.source_contexts) {
        if (!ev.predicate(Side::kSource, cs, p)) continue;
        if (ev.related(Side::kTarget, ct, t, Side::kSource, cs, p).holds) {
          found = true;
          break;
        }
      }
      if (!found) {
        r.holds = false;
        r.program = p.id;
        r.context = ct.id;
        r.detail = "no source context matches " + ct.id + " ⋈ " + t.id;
        return r;
      }
    }
  }
  return r;
}

RcVerdict check_predRHP(UniverseEval& ev, const CompilerMap& cm,
                        const std::vector<std::string>& anchors) {
  const Universe& u = ev.universe();
  RcVerdict r;
  for (const std::string& fid : anchors) {
    const NamedProgram& f = ev.source_program(fid);
    for (const NamedProgram& p : u.source_programs) {
      auto it = cm.find(p.id);
      if (it == cm.end()) throw Error("compiler is not defined on '" + p.id + "'");
      const NamedProgram& t = ev.target_program(it->second);
      bool antecedent = true;
      for (const NamedProgram& cs : u.source_contexts)
        if (ev.predicate(Side::kSource, cs, p) && !in_hyp(ev, Side::kSource, cs, p, f)) {
          antecedent = false;
          break;
        }
      if (!antecedent) continue;
      for (const NamedProgram& ct : u.target_contexts)
        if (ev.predicate(Side::kTarget, ct, t) && !in_hyp(ev, Side::kTarget, ct, t, f)) {
          r.holds = false;
          r.program = p.id;
          r.context = ct.id;
          r.anchor = f.id;
          r.detail = ct.id + " ⋈ " + t.id + " leaves HypEq(" + f.id + ")";
          return r;
        }
    }
  }
  return r;
}

std::vector<std::pair<std::string, CompilerMap>> enumerate_compilers(const Universe& u) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < u.source_programs.size(); ++i)
    total = sat_mul(total, u.target_programs.size());
  if (total > u.ceilings.max_compilers)
    throw UniverseTooLarge(std::to_string(total) + " compilers exceed the ceiling " +
                           std::to_string(u.ceilings.max_compilers));
  std::vector<std::pair<std::string, CompilerMap>> out;
  if (u.target_programs.empty()) return out;
  int width = static_cast<int>(std::to_string(total - 1).size());
  std::vector<std::size_t> digit(u.source_programs.size(), 0);
  for (std::uint64_t k = 0; k < total; ++k) {
    CompilerMap cm;
    for (std::size_t i = 0; i < digit.size(); ++i)
      cm[u.source_programs[i].id] = u.target_programs[digit[i]].id;
    std::string num = std::to_string(k);
    out.emplace_back("c" + std::string(static_cast<std::size_t>(width) - num.size(), '0') + num, cm);
    for (std::size_t i = digit.size(); i-- > 0;) {
      if (++digit[i] < u.target_programs.size()) break;
      digit[i] = 0;
    }
  }
  return out;
}

std::string TheoremReport::format() const {
  std::string out;
  for (const std::string& l : lines) out += l + "\n";
  out += "check=summary status=" + std::string(ok() ? "pass" : "fail") +
         " detail=checks=" + std::to_string(checks) + ",disagreements=" + std::to_string(disagreements) +
         "\n";
  return out;
}

TheoremReport cross_check_theorems(UniverseEval& ev,
                                   const std::vector<std::pair<std::string, CompilerMap>>& compilers) {
  const Universe& u = ev.universe();
  TheoremReport rep;
  auto add = [&](const std::string& name, bool agree, const std::string& detail) {
    ++rep.checks;
    if (!agree) ++rep.disagreements;
    rep.lines.push_back("check=" + name + " status=" + (agree ? "pass" : "fail") + " detail=" + detail);
  };
  auto b = [](bool x) { return std::string(x ? "1" : "0"); };

  std::vector<std::string> anchors;
  for (const NamedProgram& p : u.source_programs) anchors.push_back(p.id);
  std::map<std::string, std::set<std::string>> emul_source, emul_target;
  for (const NamedProgram& p : u.source_programs) emul_source[p.id] = ev.emul_set(Side::kSource, p);
  for (const NamedProgram& t : u.target_programs) emul_target[t.id] = ev.emul_set(Side::kTarget, t);

  for (const auto& [cid, cm] : compilers) {
    bool rhc = check_predRHC(ev, cm).holds;
    bool rhp = check_predRHP(ev, cm, anchors).holds;
    add("thm4.1", rhc == rhp, "compiler=" + cid + ",rhc=" + b(rhc) + ",rhp=" + b(rhp));

    bool all_member = true;
    bool all_subset = true;
    for (const NamedProgram& p : u.source_programs) {
      const NamedProgram& t = ev.target_program(cm.at(p.id));
      all_member = all_member && emul_set_membership(ev, p, t, u.source_contexts);
      const auto& a = emul_source[p.id];
      const auto& c = emul_target[t.id];
      all_subset = all_subset && std::includes(c.begin(), c.end(), a.begin(), a.end());
    }
    add("lemma5.1", rhc == all_member, "compiler=" + cid + ",rhc=" + b(rhc) + ",emulates=" + b(all_member));
    add("lemma5.3", rhp == all_subset, "compiler=" + cid + ",rhp=" + b(rhp) + ",subset=" + b(all_subset));
  }

  for (const NamedProgram& f : u.source_programs)
    for (const NamedProgram& t : u.target_programs) {
      bool member = emul_set_membership(ev, f, t, u.source_contexts);
      const auto& a = emul_source[f.id];
      const auto& c = emul_target[t.id];
      bool subset = std::includes(c.begin(), c.end(), a.begin(), a.end());
      add("lemma5.4", member == subset,
          "functionality=" + f.id + ",target=" + t.id + ",member=" + b(member) + ",subset=" + b(subset));
    }
  return rep;
}

}  // namespace ucrc
