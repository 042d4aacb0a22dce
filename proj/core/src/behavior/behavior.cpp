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

#include "ucrc/behavior/behavior.hpp"

#include <algorithm>

#include "ucrc/common/error.hpp"
#include "ucrc/common/parallel.hpp"

namespace ucrc {

std::vector<int> BinaryDistFamily::grid() const {
  std::vector<int> g;
  for (const auto& [n, d] : at) g.push_back(n);
  return g;
}

struct Behavior::PerN {
  std::mutex mu;
  std::shared_ptr<const CompiledWorld> world;
  std::unique_ptr<Explorer> family;  // class keys, cached
  WalkMemo family_memo;
  std::unique_ptr<Explorer> exact;  // exact keys, cached
  std::map<std::string, BitMass> exec;
};

Behavior::Behavior(WholeProgram w, std::vector<int> grid, ResourceBudget budget,
                   std::shared_ptr<const EnvRegistry> envs, PrimitiveTable prims,
                   BehaviorOptions opts)
    : w_(std::move(w)),
      grid_(std::move(grid)),
      budget_(budget),
      envs_(std::move(envs)),
      prims_(std::move(prims)),
      opts_(opts) {
  if (grid_.empty()) throw GridMismatch("empty grid");
  if (!envs_) envs_ = std::make_shared<EnvRegistry>();
  for (int n : grid_) {
    if (n < 1) throw GridMismatch("security parameter must be positive");
    per_n_.emplace(n, std::make_unique<PerN>());
  }
}

Behavior::~Behavior() = default;

Behavior::PerN& Behavior::slot(int n) const {
  auto it = per_n_.find(n);
  if (it == per_n_.end()) throw GridMismatch("n=" + std::to_string(n) + " is not on the grid");
  return *it->second;
}

namespace {

std::shared_ptr<const CompiledWorld> world_of(std::shared_ptr<const CompiledWorld>& cw,
                                              const WholeProgram& w, int n,
                                              const PrimitiveTable& prims) {
  if (!cw) cw = compile(w, n, prims);
  return cw;
}

BitMass walk_fresh(std::shared_ptr<const CompiledWorld> cw, const ResourceBudget& b,
                   const Environment& z, std::size_t ceiling) {
  if (!z.root) throw ModelError("environment '" + z.id + "' is empty");
  Explorer ex(std::move(cw), b, KeyPolicy{}, false, ceiling);
  return walk_bits(ex, ex.root(), *z.root, nullptr);
}

TraceDist traces_with(Explorer& ex, const Environment& z, int n) {
  if (!z.root) throw ModelError("environment '" + z.id + "' is empty");
  TraceDist d;
  d.n = n;
  std::vector<Event> prefix;
  walk_traces(ex, ex.root(), *z.root, prefix, d.entries);
  return d;
}

BinaryDist to_dist(const BitMass& m) {
  return {m.p1.to_rational(), m.p0.to_rational(), m.pbot.to_rational()};
}

}  // namespace

BitMass Behavior::exec_mass(const std::string& env_id, int n) const {
  const Environment& z = envs_->get(env_id);
  PerN& s = slot(n);
  std::lock_guard<std::mutex> lock(s.mu);
  auto it = s.exec.find(env_id);
  if (it != s.exec.end()) return it->second;
  auto cw = world_of(s.world, w_, n, prims_);
  BitMass m;
  if (envs_->in_family(env_id)) {
    if (!s.family)
      s.family = std::make_unique<Explorer>(cw, budget_, envs_->family()->policy(), true,
                                            opts_.state_ceiling);
    m = walk_bits(*s.family, s.family->root(), *z.root, &s.family_memo);
  } else {
    m = walk_fresh(cw, budget_, z, opts_.state_ceiling);
  }
  s.exec.emplace(env_id, m);
  return m;
}

BinaryDist Behavior::exec(const std::string& env_id, int n) const {
  return to_dist(exec_mass(env_id, n));
}

BinaryDist Behavior::exec(const Environment& z, int n) const {
  PerN& s = slot(n);
  std::shared_ptr<const CompiledWorld> cw;
  {
    std::lock_guard<std::mutex> lock(s.mu);
    cw = world_of(s.world, w_, n, prims_);
  }
  return to_dist(walk_fresh(cw, budget_, z, opts_.state_ceiling));
}

std::uint64_t Behavior::max_steps(const std::string& env_id, int n) const {
  return exec_mass(env_id, n).max_steps;
}

TraceDist Behavior::trace_dist(const std::string& env_id, int n) const {
  const Environment& z = envs_->get(env_id);
  if (!envs_->in_family(env_id)) return trace_dist(z, n);
  PerN& s = slot(n);
  std::lock_guard<std::mutex> lock(s.mu);
  auto cw = world_of(s.world, w_, n, prims_);
  if (!s.exact)
    s.exact = std::make_unique<Explorer>(cw, budget_, KeyPolicy{}, true, opts_.state_ceiling);
  return traces_with(*s.exact, z, n);
}

TraceDist Behavior::trace_dist(const Environment& z, int n) const {
  PerN& s = slot(n);
  std::shared_ptr<const CompiledWorld> cw;
  {
    std::lock_guard<std::mutex> lock(s.mu);
    cw = world_of(s.world, w_, n, prims_);
  }
  Explorer ex(cw, budget_, KeyPolicy{}, false, opts_.state_ceiling);
  return traces_with(ex, z, n);
}

void Behavior::prepare(int threads) const {
  parallel_for(grid_.size(), threads, [&](std::size_t i) {
    for (const Environment& z : envs_->all()) exec_mass(z.id, grid_[i]);
  });
}

bool Behavior::within_budget() const {
  if (budget_.unbounded) return true;
  for (int n : grid_)
    for (const Environment& z : envs_->all())
      if (!exec_mass(z.id, n).pbot.is_zero()) return false;
  return true;
}

BinaryDistFamily restrict_with(const Behavior& b, const std::string& env_id,
                               const std::function<int(const std::string&)>& beta) {
  if (!b.envs().contains(env_id)) throw UnknownEnvironment("unknown environment '" + env_id + "'");
  BinaryDistFamily f;
  for (int n : b.grid()) {
    TraceDist d = b.trace_dist(env_id, n);
    BinaryDist r;
    for (const auto& [t, p] : d.entries) {
      int bit = beta(t);
      (bit == 1 ? r.p1 : bit == 0 ? r.p0 : r.pbot) += p;
    }
    f.at[n] = r;
  }
  return f;
}

BinaryDistFamily restrict(const Behavior& b, const std::string& env_id) {
  return restrict_with(b, env_id, [](const std::string& t) { return final_bit(t); });
}

BinaryDistFamily exec_family(const Behavior& b, const std::string& env_id) {
  BinaryDistFamily f;
  for (int n : b.grid()) f.at[n] = b.exec(env_id, n);
  return f;
}

std::map<std::string, TraceDist> behav_n(const WholeProgram& w, const std::vector<Environment>& envs,
                                         int n, const ResourceBudget& budget,
                                         const PrimitiveTable& prims) {
  std::map<std::string, TraceDist> out;
  if (envs.empty()) return out;
  auto reg = std::make_shared<EnvRegistry>();
  for (const Environment& z : envs) reg->add(z);
  Behavior b(w, {n}, budget, reg, prims);
  for (const Environment& z : envs) out[z.id] = b.trace_dist(z.id, n);
  return out;
}

BinaryDistFamily exec_dist(const Environment& z, const OracleProgram& ctx, const OracleProgram& prg,
                           const std::vector<int>& grid, const ResourceBudget& budget,
                           const PrimitiveTable& prims) {
  auto reg = std::make_shared<EnvRegistry>();
  reg->add(z);
  Behavior b(link(ctx, prg), grid, budget, reg, prims);
  return restrict(b, z.id);
}

std::vector<Event> strip_decide(const std::vector<Event>& mu) {
  std::vector<Event> out = mu;
  if (!out.empty() && out.back().kind == EventKind::kDecide) out.pop_back();
  return out;
}

Environment canonical_env(const TracePrefix& p, const std::string& id) {
  std::vector<Event> mu = strip_decide(p.mu);
  for (std::size_t i = 0; i < mu.size(); ++i) {
    EventKind k = mu[i].kind;
    bool last = i + 1 == mu.size();
    if ((k == EventKind::kDecide || k == EventKind::kTimeout) && !last)
      throw MalformedPrefix("decide or timeout before the end of the prefix");
    bool want_call = i % 2 == 0;
    if (want_call && k != EventKind::kCall && !(k == EventKind::kTimeout && last))
      throw MalformedPrefix("event " + std::to_string(i) + " should be an environment call");
    if (!want_call && k == EventKind::kCall)
      throw MalformedPrefix("event " + std::to_string(i) + " should be a response");
    if (!want_call && k == EventKind::kDecide)
      throw MalformedPrefix("decide in response position");
  }
  EnvFactory& f = global_env_factory();
  // Build from the end: after the last response decide 1.
  EnvPtr tail = f.decide(1);
  std::size_t pairs = (mu.size() + 1) / 2;
  for (std::size_t j = pairs; j-- > 0;) {
    const Event& call = mu[2 * j];
    if (call.kind != EventKind::kCall) continue;  // trailing timeout
    std::vector<ArgTemplate> args;
    for (const Bits& b : call.payload) args.push_back(ArgTemplate::literal(b));
    std::vector<std::pair<Matcher, EnvPtr>> br;
    if (2 * j + 1 < mu.size() && mu[2 * j + 1].kind != EventKind::kTimeout) {
      const Event& resp = mu[2 * j + 1];
      Matcher m;
      m.kind = Matcher::kEquals;
      m.value = resp.kind == EventKind::kYield ? Obs::yield() : Obs{false, resp.payload};
      br.emplace_back(m, tail);
    } else {
      br.emplace_back(Matcher{}, tail);
    }
    tail = f.call(call.oracle, std::move(args), std::move(br));
  }
  return Environment{id, tail};
}

Rational prefix_mass(const TraceDist& d, const std::vector<Event>& mu) {
  if (mu.empty()) return d.total();
  std::string pre = serialize_events(mu);
  Rational sum;
  for (auto it = d.entries.lower_bound(pre); it != d.entries.end(); ++it) {
    const std::string& t = it->first;
    if (t.compare(0, pre.size(), pre) != 0) break;
    if (t.size() == pre.size() || t[pre.size()] == ';') sum += it->second;
  }
  return sum;
}

}  // namespace ucrc
