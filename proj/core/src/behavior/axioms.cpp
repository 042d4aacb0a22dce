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

#include "ucrc/behavior/axioms.hpp"

#include <random>
#include <set>
#include <sstream>

#include "ucrc/common/error.hpp"

namespace ucrc {

std::string AxiomFinding::line() const {
  return "axiom=" + std::to_string(axiom) + " status=" + (pass ? "pass" : "fail") + " model=" + model +
         " detail=" + detail;
}

int AxiomReport::checked(int axiom) const {
  int c = 0;
  for (const auto& [k, v] : tally)
    if (k.first == axiom) c += v.first;
  return c;
}

std::string AxiomReport::format() const {
  std::string out = header;
  for (const auto& [k, v] : tally) {
    AxiomFinding f{k.first, v.second == 0, k.second,
                   "checked=" + std::to_string(v.first) + ",failed=" + std::to_string(v.second)};
    out += f.line() + "\n";
  }
  for (const AxiomFinding& f : failures) out += f.line() + "\n";
  return out;
}

namespace {

TraceDist dist_in(const Behavior& b, const Environment& z, int n) {
  if (b.envs().contains(z.id) && b.envs().get(z.id).root == z.root) return b.trace_dist(z.id, n);
  return b.trace_dist(z, n);
}

std::set<std::string> called(const std::vector<Event>& mu) {
  std::set<std::string> s;
  for (const Event& e : mu)
    if (e.kind == EventKind::kCall) s.insert(e.oracle);
  return s;
}

bool covers(const Behavior& b, const std::set<std::string>& oracles) {
  const auto& ex = b.world().exports;
  for (const std::string& o : oracles)
    if (!std::binary_search(ex.begin(), ex.end(), o)) return false;
  return true;
}

// Prefix lengths a trace may be cut at: after each response, and the whole
// trace.
std::vector<std::size_t> cuts(const std::vector<Event>& evs) {
  std::vector<std::size_t> c;
  for (std::size_t i = 0; i < evs.size(); ++i)
    if (evs[i].kind == EventKind::kReturn || evs[i].kind == EventKind::kYield) c.push_back(i + 1);
  if (c.empty() || c.back() != evs.size()) c.push_back(evs.size());
  return c;
}

}  // namespace

AxiomReport axiom_suite(const std::vector<AxiomModel>& models, const AxiomOptions& opts) {
  AxiomReport r;
  r.header =
      "# environments are deterministic decision trees; restricting to non-probabilistic\n"
      "# environments is a modeling assumption and is not tested separately\n";
  if (models.empty()) return r;
  auto beta = opts.beta ? opts.beta : [](const std::string& t) { return final_bit(t); };
  std::mt19937_64 rng(opts.seed);
  auto pick = [&](std::size_t k) { return static_cast<std::size_t>(rng() % k); };
  auto record = [&](int axiom, const std::string& model, bool pass, const std::string& detail) {
    auto& t = r.tally[{axiom, model}];
    ++t.first;
    if (!pass) {
      ++t.second;
      r.failures.push_back({axiom, false, model, detail});
    }
  };

  for (int s = 0; s < opts.samples; ++s) {
    const AxiomModel& m = models[static_cast<std::size_t>(s) % models.size()];
    const Behavior& b = *m.behavior;
    if (b.envs().size() == 0) continue;
    int n = b.grid()[pick(b.grid().size())];
    const Environment& z = b.envs().all()[pick(b.envs().size())];
    ++r.samples;

    // Axiom 4: Exec mass equals the summation over traces.
    BinaryDist direct = b.exec(z.id, n);
    BinaryDist summed = restrict_with(b, z.id, beta).at.at(n);
    {
      std::ostringstream d;
      d << "n=" << n << ",env=" << z.id << ",exec=" << to_string(direct.p1) << ":"
        << to_string(direct.p0) << ",sum=" << to_string(summed.p1) << ":" << to_string(summed.p0);
      record(4, m.id, direct == summed, d.str());
    }

    TraceDist td = b.trace_dist(z.id, n);
    auto it = td.entries.begin();
    std::advance(it, static_cast<long>(pick(td.entries.size())));
    std::vector<Event> evs = parse_events(it->first);
    std::vector<std::size_t> cs = cuts(evs);
    std::vector<Event> mu(evs.begin(), evs.begin() + static_cast<long>(cs[pick(cs.size())]));

    std::vector<std::vector<Event>> prefixes{mu};
    if (opts.mutate && !mu.empty() && mu.back().kind == EventKind::kReturn &&
        !mu.back().payload.empty() && mu.back().payload[0].width() > 0) {
      std::vector<Event> alt = mu;
      alt.back().payload[0] = alt.back().payload[0].flipped(0);
      prefixes.push_back(alt);
    }

    for (std::size_t pi = 0; pi < prefixes.size(); ++pi) {
      std::vector<Event> p = strip_decide(prefixes[pi]);
      TracePrefix tp{p, prefix_mass(td, p), n};
      Environment zp = canonical_env(tp);
      TraceDist replay = b.trace_dist(zp, n);
      Rational got = prefix_mass(replay, p);
      bool ok = got == tp.rho;
      if (pi == 0 && tp.rho == 0) ok = false;  // a sampled prefix must be reachable
      bool timed_out = !p.empty() && p.back().kind == EventKind::kTimeout;
      if (ok && !timed_out) {
        Rational d1;
        for (const auto& [t, q] : replay.entries)
          if (final_bit(t) == 1) d1 += q;
        ok = d1 == tp.rho;
      }
      std::string desc = "n=" + std::to_string(n) + ",env=" + z.id + ",prefix=" +
                         (p.empty() ? std::string("-") : serialize_events(p)) +
                         ",rho=" + to_string(tp.rho) + ",replay=" + to_string(got);
      record(1, m.id, ok, desc);

      // Axiom 2 across the other worlds that accept these calls.
      std::set<std::string> calls = called(p);
      for (const AxiomModel& o : models) {
        if (o.id == m.id || !covers(*o.behavior, calls)) continue;
        if (std::find(o.behavior->grid().begin(), o.behavior->grid().end(), n) ==
            o.behavior->grid().end())
          continue;
        Rational under_z = prefix_mass(dist_in(*o.behavior, z, n), p);
        Rational under_zp = prefix_mass(o.behavior->trace_dist(zp, n), p);
        record(2, o.id, under_z == under_zp,
               desc + ",from=" + m.id + ",z=" + to_string(under_z) + ",zp=" + to_string(under_zp));
      }
    }
  }
  return r;
}

void require_axioms(const AxiomReport& r) {
  if (r.ok()) return;
  const AxiomFinding& f = r.failures.front();
  throw AxiomViolation("axiom " + std::to_string(f.axiom) + " fails on model " + f.model + ": " +
                       f.detail);
}

}  // namespace ucrc
