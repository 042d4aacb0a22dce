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

#include "ucrc/sem/traces.hpp"

#include "ucrc/common/error.hpp"
#include "ucrc/sem/explorer.hpp"

namespace ucrc {

TraceDist enumerate_traces(const WholeProgram& w, const Environment& z, int n,
                           const ResourceBudget& budget, const PrimitiveTable& prims) {
  if (!z.root) throw ModelError("environment '" + z.id + "' is empty");
  Explorer ex(compile(w, n, prims), budget, KeyPolicy{}, false);
  TraceDist d;
  d.n = n;
  std::vector<Event> prefix;
  walk_traces(ex, ex.root(), *z.root, prefix, d.entries);
  return d;
}

namespace {

class PathSink : public OutcomeSink {
 public:
  void outcome(Obs obs, State st, Dyadic mass) override {
    outs.push_back({std::move(obs), std::move(st), mass});
  }
  void timeout(const State& st, Dyadic mass) override { timeouts.push_back({st.sampled, mass}); }
  std::vector<CallOutcome> outs;
  std::vector<std::pair<std::uint32_t, Dyadic>> timeouts;
};

struct PathWalker {
  const CompiledWorld& w;
  std::uint64_t bound;
  std::size_t max_paths;
  std::vector<PathTrace> out;

  void emit(std::vector<Event>& evs, Event last, std::uint32_t bits, const Dyadic& m) {
    evs.push_back(std::move(last));
    if (out.size() >= max_paths)
      throw SpaceTooLarge("more than " + std::to_string(max_paths) + " execution paths");
    out.push_back({serialize_events(evs), bits, m.to_rational()});
    evs.pop_back();
  }

  void walk(const State& st, const Dyadic& mass, std::vector<Obs>& hist, const EnvNode& env,
            std::vector<Event>& evs) {
    Event d;
    d.kind = EventKind::kDecide;
    if (env.decide) {
      d.bit = env.bit;
      emit(evs, d, st.sampled, mass);
      return;
    }
    int id = w.oracle_id(env.oracle);
    if (id < 0 || !w.oracles[static_cast<std::size_t>(id)].exported)
      throw ModelError("oracle '" + env.oracle + "' is not exported by the world");
    CallSpec call;
    if (!resolve_call(env, hist, w.oracles[static_cast<std::size_t>(id)].param_widths, call)) {
      emit(evs, d, st.sampled, mass);
      return;
    }
    Event ce;
    ce.kind = EventKind::kCall;
    ce.oracle = call.oracle;
    ce.payload = call.args;
    evs.push_back(ce);
    PathSink sink;
    InterpOptions opt;
    opt.step_bound = bound;
    run_call(w, st, id, call.args, mass, opt, sink);
    for (const auto& [bits, m] : sink.timeouts) {
      Event t;
      t.kind = EventKind::kTimeout;
      emit(evs, t, bits, m);
    }
    for (CallOutcome& o : sink.outs) {
      Event re;
      re.kind = o.obs.yielded ? EventKind::kYield : EventKind::kReturn;
      re.payload = o.obs.vals;
      evs.push_back(re);
      const EnvNode* next = nullptr;
      for (const auto& [mt, c] : env.branches)
        if (mt.matches(w.n, hist, o.obs)) {
          next = c.get();
          break;
        }
      if (!next) {
        emit(evs, d, o.state.sampled, o.mass);
      } else {
        hist.push_back(o.obs);
        walk(o.state, o.mass, hist, *next, evs);
        hist.pop_back();
      }
      evs.pop_back();
    }
    evs.pop_back();
  }
};

}  // namespace

std::vector<PathTrace> enumerate_paths(const WholeProgram& w, const Environment& z, int n,
                                       const ResourceBudget& budget, const PrimitiveTable& prims,
                                       std::size_t max_paths) {
  auto cw = compile(w, n, prims);
  PathWalker pw{*cw, budget.bound(n), max_paths, {}};
  std::vector<Obs> hist;
  std::vector<Event> evs;
  pw.walk(State::initial(*cw), Dyadic::one(), hist, *z.root, evs);
  return std::move(pw.out);
}

StepReport step_count(const WholeProgram& w, const Environment& z, const std::vector<int>& grid,
                      const ResourceBudget& budget, const PrimitiveTable& prims) {
  StepReport r;
  for (int n : grid) {
    Explorer ex(compile(w, n, prims), budget, KeyPolicy{}, false);
    BitMass b = walk_bits(ex, ex.root(), *z.root, nullptr);
    r.max_steps[n] = b.max_steps;
    r.hit_budget[n] = !b.pbot.is_zero();
  }
  return r;
}

bool check_predicate(const WholeProgram& w, const std::vector<Environment>& envs,
                     const std::vector<int>& grid, const ResourceBudget& budget,
                     const PrimitiveTable& prims) {
  if (budget.unbounded) return true;
  for (int n : grid) {
    Explorer ex(compile(w, n, prims), budget);
    WalkMemo memo;
    for (const Environment& z : envs) {
      BitMass b = walk_bits(ex, ex.root(), *z.root, &memo);
      if (!b.pbot.is_zero()) return false;
    }
  }
  return true;
}

std::set<std::string> find_lint(const WholeProgram& w, const std::vector<Environment>& envs,
                                const std::vector<int>& grid, const PrimitiveTable& prims) {
  std::set<std::string> out;
  for (int n : grid) {
    Explorer ex(compile(w, n, prims), ResourceBudget::none());
    ex.enable_lint();
    WalkMemo memo;
    for (const Environment& z : envs) walk_bits(ex, ex.root(), *z.root, &memo);
    out.insert(ex.lint()->begin(), ex.lint()->end());
  }
  return out;
}

}  // namespace ucrc
