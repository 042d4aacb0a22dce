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

#include <benchmark/benchmark.h>

#include "ucrc/behavior/envs.hpp"
#include "ucrc/cases/cases.hpp"
#include "ucrc/emul/emul.hpp"
#include "ucrc/lang/link.hpp"
#include "ucrc/sem/traces.hpp"

using namespace ucrc;

namespace {

const Scenario& scenario(const std::string& name) {
  static std::map<std::string, Scenario> cache;
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, load_scenario(name)).first;
  return it->second;
}

void BM_TracesCommitment(benchmark::State& st) {
  const Scenario& s = scenario("commitment");
  const auto& u = s.universe;
  WholeProgram w = link(u.target_contexts[0].program, u.target_programs[0].program);
  const auto& envs = u.envs->all();
  int n = static_cast<int>(st.range(0));
  for (auto _ : st)
    for (std::size_t i = 0; i < envs.size(); i += 16)
      benchmark::DoNotOptimize(enumerate_traces(w, envs[i], n, u.target_budget, u.prims));
}
BENCHMARK(BM_TracesCommitment)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_EnumerateEnvironments(benchmark::State& st) {
  const EnvClass& c = scenario("wg").env_class;
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_environments(c));
}
BENCHMARK(BM_EnumerateEnvironments)->Unit(benchmark::kMillisecond);

void BM_RecordLayerEmulation(benchmark::State& st) {
  for (auto _ : st) {
    ScenarioOverrides o;
    o.grid = std::vector<int>{1, 2, static_cast<int>(st.range(0))};
    Scenario s = load_scenario("wg", o);
    UniverseEval ev(s.universe);
    benchmark::DoNotOptimize(check_scenario(ev).holds);
  }
}
BENCHMARK(BM_RecordLayerEmulation)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_ToyTheorems(benchmark::State& st) {
  for (auto _ : st) {
    Scenario s = load_scenario("toy");
    UniverseEval ev(s.universe);
    benchmark::DoNotOptimize(cross_check_theorems(ev, enumerate_compilers(s.universe)).ok());
  }
}
BENCHMARK(BM_ToyTheorems)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
