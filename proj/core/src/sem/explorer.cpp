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

#include "ucrc/sem/explorer.hpp"

#include <algorithm>

#include "ucrc/common/error.hpp"

namespace ucrc {

Explorer::Explorer(std::shared_ptr<const CompiledWorld> world, ResourceBudget budget,
                   KeyPolicy policy, bool cache, std::size_t state_ceiling)
    : world_(std::move(world)),
      bound_(budget.bound(world_->n)),
      policy_(std::move(policy)),
      cache_(cache),
      ceiling_(state_ceiling) {
  root_.states.emplace_back(State::initial(*world_), Dyadic::one());
  root_.mass = Dyadic::one();
}

int Explorer::exported_id(const std::string& oracle) const {
  int id = world_->oracle_id(oracle);
  if (id < 0 || !world_->oracles[static_cast<std::size_t>(id)].exported)
    throw ModelError("oracle '" + oracle + "' is not exported by the world");
  return id;
}

const std::vector<int>& Explorer::exported_widths(const std::string& oracle) const {
  return world_->oracles[static_cast<std::size_t>(exported_id(oracle))].param_widths;
}

namespace {

struct Bucket {
  Obs obs;
  std::unordered_map<std::string, std::size_t> index;
  std::vector<std::pair<State, Dyadic>> states;
  Dyadic mass;
};

class BucketSink : public OutcomeSink {
 public:
  BucketSink(const KeyPolicy& policy, const std::string& oracle, int depth, int n,
             const std::vector<Obs>& hist, std::size_t ceiling)
      : policy_(policy), oracle_(oracle), depth_(depth), n_(n), hist_(hist), ceiling_(ceiling) {
    auto it = policy.classes.find(oracle);
    classes_ = it == policy.classes.end() ? nullptr : &it->second;
    exact_ = policy.exact() || !classes_ || policy.exact_depths.count(depth);
  }

  void outcome(Obs obs, State st, Dyadic mass) override {
    max_steps = std::max(max_steps, st.steps);
    std::string key;
    if (!policy_.exact() && classes_) {
      int cls = -1;
      for (std::size_t i = 0; i < classes_->size(); ++i)
        if ((*classes_)[i].matches(n_, hist_, obs)) {
          cls = static_cast<int>(i);
          break;
        }
      key = "c" + std::to_string(cls);
      if (exact_) key += "|" + obs.str();
    } else {
      key = obs.str();
    }
    auto [it, fresh] = buckets.try_emplace(std::move(key));
    Bucket& b = it->second;
    if (fresh) b.obs = std::move(obs);
    b.mass += mass;
    std::string sk = st.key();
    auto [si, sfresh] = b.index.try_emplace(std::move(sk), b.states.size());
    if (sfresh) {
      b.states.emplace_back(std::move(st), mass);
      if (++states_ > ceiling_)
        throw SpaceTooLarge("more than " + std::to_string(ceiling_) +
                            " distinct states after one call");
    } else {
      b.states[si->second].second += mass;
    }
  }

  void timeout(const State& st, Dyadic mass) override {
    max_steps = std::max(max_steps, st.steps);
    timeout_mass += mass;
  }

  std::map<std::string, Bucket> buckets;
  Dyadic timeout_mass;
  std::uint64_t max_steps = 0;

 private:
  const KeyPolicy& policy_;
  std::string oracle_;
  int depth_;
  int n_;
  const std::vector<Obs>& hist_;
  std::size_t ceiling_;
  const std::vector<Matcher>* classes_ = nullptr;
  bool exact_ = true;
  std::size_t states_ = 0;
};

}  // namespace

Explorer::Expansion Explorer::compute(const Node& node, const CallSpec& call) {
  int id = exported_id(call.oracle);
  BucketSink sink(policy_, call.oracle, node.depth, world_->n, node.hist, ceiling_);
  InterpOptions opt;
  opt.step_bound = bound_;
  opt.find_lint = lint();
  for (const auto& [st, m] : node.states) run_call(*world_, st, id, call.args, m, opt, sink);
  Expansion e;
  e.timeout = sink.timeout_mass;
  e.max_steps = sink.max_steps;
  for (auto& [key, b] : sink.buckets) {
    Child c;
    c.obs = b.obs;
    c.node = std::make_unique<Node>();
    c.node->depth = node.depth + 1;
    c.node->hist = node.hist;
    c.node->hist.push_back(b.obs);
    c.node->states = std::move(b.states);
    c.node->mass = b.mass;
    e.children.push_back(std::move(c));
  }
  return e;
}

const Explorer::Expansion& Explorer::expand(Node& node, const CallSpec& call) {
  auto it = node.cache.find(call);
  if (it != node.cache.end()) return *it->second;
  auto e = std::make_unique<Expansion>(compute(node, call));
  nodes_ += e->children.size();
  const Expansion& ref = *e;
  if (cache_) {
    node.cache.emplace(call, std::move(e));
    return ref;
  }
  // not caching: keep only the latest expansion alive for the caller
  node.cache.clear();
  node.cache.emplace(call, std::move(e));
  return ref;
}

Origin oracle_origin(const CompiledWorld& w, const std::string& oracle) {
  int id = w.oracle_id(oracle);
  return id < 0 ? Origin::kProgram : w.oracles[static_cast<std::size_t>(id)].origin;
}

namespace {

const EnvNode* branch_for(const EnvNode& env, int n, const std::vector<Obs>& hist,
                          const Obs& obs) {
  for (const auto& [m, child] : env.branches)
    if (m.matches(n, hist, obs)) return child.get();
  return nullptr;
}

}  // namespace

BitMass walk_bits(Explorer& ex, Explorer::Node& node, const EnvNode& env, WalkMemo* memo) {
  BitMass r;
  if (env.decide) {
    (env.bit ? r.p1 : r.p0) = node.mass;
    for (const auto& s : node.states) r.max_steps = std::max(r.max_steps, s.first.steps);
    return r;
  }
  std::pair<const void*, const void*> key{&node, &env};
  if (memo) {
    auto it = memo->find(key);
    if (it != memo->end()) return it->second;
  }
  CallSpec call;
  if (!resolve_call(env, node.hist, ex.exported_widths(env.oracle), call)) {
    r.p0 = node.mass;
  } else {
    auto run = [&](const Explorer::Expansion& e) {
      r.pbot += e.timeout;
      r.max_steps = std::max(r.max_steps, e.max_steps);
      for (const Explorer::Child& c : e.children) {
        const EnvNode* next = branch_for(env, ex.world().n, node.hist, c.obs);
        if (!next) {
          r.p0 += c.node->mass;
          continue;
        }
        BitMass sub = walk_bits(ex, *c.node, *next, memo);
        r.p1 += sub.p1;
        r.p0 += sub.p0;
        r.pbot += sub.pbot;
        r.max_steps = std::max(r.max_steps, sub.max_steps);
      }
    };
    if (ex.caching()) {
      run(ex.expand(node, call));
    } else {
      Explorer::Expansion e = ex.compute(node, call);
      run(e);
    }
  }
  if (memo) memo->emplace(key, r);
  return r;
}

void walk_traces(Explorer& ex, Explorer::Node& node, const EnvNode& env,
                 std::vector<Event>& prefix, std::map<std::string, Rational>& out) {
  auto finish = [&](Event last, const Dyadic& mass) {
    if (mass.is_zero()) return;
    prefix.push_back(std::move(last));
    out[serialize_events(prefix)] += mass.to_rational();
    prefix.pop_back();
  };
  Event decide;
  decide.kind = EventKind::kDecide;
  if (env.decide) {
    decide.bit = env.bit;
    finish(decide, node.mass);
    return;
  }
  CallSpec call;
  if (!resolve_call(env, node.hist, ex.exported_widths(env.oracle), call)) {
    decide.bit = 0;
    finish(decide, node.mass);
    return;
  }
  Event ce;
  ce.kind = EventKind::kCall;
  ce.oracle = call.oracle;
  ce.payload = call.args;
  prefix.push_back(ce);
  Origin answer = oracle_origin(ex.world(), call.oracle);
  auto run = [&](const Explorer::Expansion& e) {
    Event to;
    to.kind = EventKind::kTimeout;
    finish(to, e.timeout);
    for (const Explorer::Child& c : e.children) {
      Event re;
      re.origin = answer;
      re.kind = c.obs.yielded ? EventKind::kYield : EventKind::kReturn;
      re.payload = c.obs.vals;
      prefix.push_back(re);
      const EnvNode* next = branch_for(env, ex.world().n, node.hist, c.obs);
      if (!next) {
        Event d0;
        d0.kind = EventKind::kDecide;
        d0.bit = 0;
        finish(d0, c.node->mass);
      } else {
        walk_traces(ex, *c.node, *next, prefix, out);
      }
      prefix.pop_back();
    }
  };
  if (ex.caching()) {
    run(ex.expand(node, call));
  } else {
    Explorer::Expansion e = ex.compute(node, call);
    run(e);
  }
  prefix.pop_back();
}

}  // namespace ucrc
