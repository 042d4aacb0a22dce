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

// ucrc: command-line driver for model checks, behaviors, emulation and
// compiler criteria.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ucrc/behavior/axioms.hpp"
#include "ucrc/cases/bundled.hpp"
#include "ucrc/cases/cases.hpp"
#include "ucrc/cases/primitives.hpp"
#include "ucrc/common/error.hpp"
#include "ucrc/common/parallel.hpp"
#include "ucrc/lang/syntax.hpp"
#include "ucrc/lang/validate.hpp"

namespace fs = std::filesystem;
using namespace ucrc;

namespace {

enum Exit { kPass = 0, kFail = 1, kInvalid = 2, kIo = 3, kCeiling = 4 };

struct Common {
  std::string grid;
  std::string equiv;
  std::string out;
  std::string format = "text";
  int threads = 1;
  std::uint64_t max_envs = Ceilings{}.max_envs;
  std::uint64_t max_compilers = Ceilings{}.max_compilers;
  std::uint64_t max_cells = Ceilings{}.max_cells;
  int max_n = Ceilings{}.max_n;
  int max_sample_bits = Ceilings{}.max_sample_bits;
  bool no_budgets = false;

  void add(CLI::App* app) {
    app->add_option("--grid", grid, "security parameters, e.g. 1..3 or 1,2,4");
    app->add_option("--equiv", equiv, "perfect | stat:<schedule> | comp:c=<c>,N=<N> | refine");
    app->add_option("--out", out, "directory for report and data files");
    app->add_option("--format", format, "report format")->check(CLI::IsMember({"text", "lines"}));
    app->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
    app->add_option("--max-envs", max_envs, "environment ceiling")->check(CLI::PositiveNumber);
    app->add_option("--max-compilers", max_compilers, "compiler ceiling")->check(CLI::PositiveNumber);
    app->add_option("--max-cells", max_cells, "evaluation cell ceiling")->check(CLI::PositiveNumber);
    app->add_option("--max-n", max_n, "largest security parameter")->check(CLI::PositiveNumber);
    app->add_option("--max-sample-bits", max_sample_bits, "widest sampling statement")
        ->check(CLI::PositiveNumber);
    app->add_flag("--no-budgets", no_budgets, "disable resource budgets on both sides");
  }

  ScenarioOverrides overrides() const {
    ScenarioOverrides o;
    if (!grid.empty()) o.grid = parse_grid(grid);
    if (!equiv.empty()) o.equiv = EquivSpec::parse(equiv);
    Ceilings c;
    c.max_envs = max_envs;
    c.max_compilers = max_compilers;
    c.max_cells = max_cells;
    c.max_n = max_n;
    c.max_sample_bits = max_sample_bits;
    o.ceilings = c;
    o.disable_budgets = no_budgets;
    o.threads = threads;
    return o;
  }
};

void write_file(const std::string& dir, const std::string& name, const std::string& text) {
  if (dir.empty()) return;
  fs::create_directories(dir);
  std::ofstream f(fs::path(dir) / name, std::ios::binary);
  if (!f) throw IoError("cannot write " + (fs::path(dir) / name).string());
  f << text;
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (int x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

std::string header(const std::string& command, const Scenario& s) {
  const Universe& u = s.universe;
  std::size_t family = 0;
  for (const Environment& z : u.envs->all())
    if (u.envs->in_family(z.id)) ++family;
  std::string h = "# ucrc " + command + " scenario=" + s.name + "\n";
  h += "# environments: " + std::to_string(u.envs->size()) + " = " + std::to_string(family) +
       " decision trees of depth <= " + std::to_string(s.env_class.depth) + " over " +
       std::to_string(s.env_class.calls.size()) + " call templates + " +
       std::to_string(u.envs->size() - family) +
       " hand-written; a bounded deterministic subclass of PPT environments\n";
  h += "# grid=" + join(u.grid) + " equiv=" + u.equiv.str() + " budget.source=" +
       u.source_budget.str() + " budget.target=" + u.target_budget.str() + "\n";
  for (const std::string& n : s.notes) h += "# note: " + n + "\n";
  return h;
}

int finish(const Common& c, const std::string& hdr, const std::vector<std::string>& lines, bool ok,
           const std::string& summary) {
  std::string body = hdr;
  for (const std::string& l : lines) body += l + "\n";
  if (c.format == "text") body += std::string(ok ? "PASS: " : "FAIL: ") + summary + "\n";
  else body += "result status=" + std::string(ok ? "pass" : "fail") + "\n";
  std::cout << body;
  write_file(c.out, "report.txt", body);
  return ok ? kPass : kFail;
}

// --- check ---

int diagnose(const std::string& ref, const std::string& dir, bool& bad) {
  OracleProgram p;
  try {
    p = parse_program(read_model_text(ref, dir));
  } catch (const ParseError& e) {
    std::cerr << ref << ":" << e.line() << ":" << e.col() << ": error: " << e.detail() << "\n";
    bad = true;
    return 0;
  }
  auto ds = validate(p);
  for (const Diagnostic& d : ds) std::cerr << d.format(ref) << "\n";
  if (has_errors(ds)) bad = true;
  return 1;
}

int cmd_check(const std::vector<std::string>& refs, const Common& c) {
  bool bad = false;
  for (const std::string& ref : refs) {
    if (ref.size() > 4 && ref.substr(ref.size() - 4) == ".ocl") {
      if (!fs::is_regular_file(ref) && !bundled_files().count(ref))
        throw IoError("cannot read " + ref);
      fs::path fp(ref);
      diagnose(fp.filename().string(), fs::is_regular_file(ref) ? (fp.has_parent_path() ? fp.parent_path().string() : std::string(".")) : std::string(), bad);
      continue;
    }
    Manifest m = load_manifest(ref);
    for (const auto& [key, value] : m.kv) {
      if (key.find(".programs") == std::string::npos && key.find(".contexts") == std::string::npos)
        continue;
      std::stringstream ss(value);
      std::string item;
      while (std::getline(ss, item, ',')) {
        auto colon = item.find(':');
        std::string file = item.substr(colon == std::string::npos ? 0 : colon + 1);
        file.erase(0, file.find_first_not_of(' '));
        file.erase(file.find_last_not_of(' ') + 1);
        if (file.empty() || file == "empty") continue;
        if (!m.dir.empty() && !fs::is_regular_file(fs::path(m.dir) / file) &&
            !bundled_files().count(file))
          throw IoError("cannot read " + (fs::path(m.dir) / file).string());
        diagnose(file, m.dir, bad);
      }
    }
    if (bad) continue;
    Scenario s = load_scenario(ref, c.overrides());
    std::cout << "ok " << s.name << " mode=" << s.mode << " environments=" << s.universe.envs->size()
              << "\n";
  }
  return bad ? kInvalid : kPass;
}

// --- behav ---

const NamedProgram& pick(const std::vector<NamedProgram>& list, const std::string& id,
                         const std::string& what) {
  if (list.empty()) throw ModelError("scenario has no " + what);
  if (id.empty()) return list.front();
  for (const NamedProgram& p : list)
    if (p.id == id) return p;
  throw ModelError("no " + what + " named '" + id + "'");
}

int cmd_behav(const std::string& ref, const std::string& side_name, const std::string& prg,
              const std::string& ctx, const std::vector<std::string>& env_ids, const Common& c) {
  Scenario s = load_scenario(ref, c.overrides());
  UniverseEval ev(s.universe);
  const Universe& u = s.universe;
  Side side = side_name == "source" ? Side::kSource : Side::kTarget;
  const NamedProgram& p =
      pick(side == Side::kSource ? u.source_programs : u.target_programs, prg, "program");
  const NamedProgram& x =
      pick(side == Side::kSource ? u.source_contexts : u.target_contexts, ctx, "context");
  auto b = ev.behavior(side, x, p);
  std::vector<std::string> ids = env_ids;
  if (ids.empty())
    for (const Environment& z : u.envs->all()) ids.push_back(z.id);
  std::vector<std::string> lines;
  std::string exec_csv = "env,n,p1,p0,pbot\n";
  for (const std::string& id : ids)
    for (int n : u.grid) {
      lines.push_back("env " + id + " world=" + x.id + "+" + p.id);
      std::string td = b->trace_dist(id, n).format();
      std::stringstream ss(td);
      std::string l;
      while (std::getline(ss, l)) lines.push_back("  " + l);
      BinaryDist d = b->exec(id, n);
      exec_csv += id + "," + std::to_string(n) + "," + to_string(d.p1) + "," + to_string(d.p0) +
                  "," + to_string(d.pbot) + "\n";
    }
  write_file(c.out, "exec.csv", exec_csv);
  return finish(c, header("behav", s), lines, true,
                std::to_string(ids.size()) + " environments enumerated");
}

// --- counterexamples ---

struct CxRecord {
  std::string kind;
  std::string manifest;
  std::string equiv;
  bool budgets = true;
  std::string tctx, tprg, sctx, sprg;
  int n = 0;
  Rational real_p1, ideal_p1, advantage;
  std::string env_text;

  std::string str() const {
    std::string s = "# ucrc counterexample\n";
    s += "kind = " + kind + "\nmanifest = " + manifest + "\nequiv = " + equiv + "\n";
    s += std::string("budgets = ") + (budgets ? "enabled" : "disabled") + "\n";
    s += "target.context = " + tctx + "\ntarget.program = " + tprg + "\n";
    s += "source.context = " + sctx + "\nsource.program = " + sprg + "\n";
    s += "n = " + std::to_string(n) + "\n";
    s += "real.p1 = " + to_string(real_p1) + "\nideal.p1 = " + to_string(ideal_p1) + "\n";
    s += "advantage = " + to_string(advantage) + "\nenvironment:\n" + env_text;
    return s;
  }

  static CxRecord parse(const std::string& text) {
    auto cut = text.find("\nenvironment:\n");
    if (cut == std::string::npos) throw IoError("counterexample has no environment block");
    Manifest m = parse_manifest(text.substr(0, cut));
    CxRecord r;
    r.kind = m.get("kind");
    r.manifest = m.get("manifest");
    r.equiv = m.get("equiv");
    r.budgets = m.get("budgets") != "disabled";
    r.tctx = m.get("target.context");
    r.tprg = m.get("target.program");
    r.sctx = m.get("source.context");
    r.sprg = m.get("source.program");
    r.n = std::stoi(m.get("n"));
    r.real_p1 = parse_rational(m.get("real.p1"));
    r.ideal_p1 = parse_rational(m.get("ideal.p1"));
    r.advantage = parse_rational(m.get("advantage"));
    r.env_text = text.substr(cut + 14);
    return r;
  }
};

std::string manifest_ref(const std::string& ref) {
  if (fs::is_regular_file(ref)) return fs::absolute(ref).lexically_normal().string();
  return ref;
}

// Worst (env, n) between two behaviors, first in registry and grid order.
CxRecord worst_pair(UniverseEval& ev, const Scenario& s, const NamedProgram& tctx,
                    const NamedProgram& tprg, const NamedProgram& sctx, const NamedProgram& sprg) {
  auto real = ev.behavior(Side::kTarget, tctx, tprg);
  auto ideal = ev.behavior(Side::kSource, sctx, sprg);
  CxRecord r;
  r.tctx = tctx.id;
  r.tprg = tprg.id;
  r.sctx = sctx.id;
  r.sprg = sprg.id;
  bool first = true;
  for (const Environment& z : s.universe.envs->all())
    for (int n : s.universe.grid) {
      Rational a = real->exec(z.id, n).p1;
      Rational b = ideal->exec(z.id, n).p1;
      Rational d = abs_diff(a, b);
      if (first || d > r.advantage) {
        first = false;
        r.n = n;
        r.real_p1 = a;
        r.ideal_p1 = b;
        r.advantage = d;
        r.env_text = format_environment(z);
      }
    }
  return r;
}

// --- emulate ---

int cmd_emulate(const std::string& ref, const std::string& compiler, const Common& c) {
  ScenarioOverrides o = c.overrides();
  Scenario s = load_scenario(ref, o);
  UniverseEval ev(s.universe);
  const Universe& u = s.universe;
  std::vector<std::string> lines;
  CxRecord cx;
  cx.manifest = manifest_ref(ref);
  cx.equiv = u.equiv.str();
  cx.budgets = !(u.source_budget.unbounded && u.target_budget.unbounded);
  bool ok = true;
  std::string summary;

  std::string comp = compiler.empty() ? s.manifest.get_or("compiler", "") : compiler;
  if (s.mode == "universe") {
    if (comp.empty()) throw ModelError("universe scenario needs a compiler (--compiler or manifest)");
    CompilerMap cm;
    std::stringstream ss(comp);
    std::string item;
    while (std::getline(ss, item, ',')) {
      auto colon = item.find(':');
      if (colon == std::string::npos) throw ModelError("compiler entries are source:target");
      auto tr = [](std::string x) {
        x.erase(0, x.find_first_not_of(' '));
        x.erase(x.find_last_not_of(' ') + 1);
        return x;
      };
      cm[tr(item.substr(0, colon))] = tr(item.substr(colon + 1));
    }
    RcVerdict r = check_predRHC(ev, cm);
    ok = r.holds;
    std::string cms;
    for (const auto& [a, b] : cm) cms += (cms.empty() ? "" : ",") + a + ":" + b;
    lines.push_back("rhc status=" + std::string(ok ? "pass" : "fail") + " compiler=" + cms +
                    (ok ? "" : " program=" + r.program + " context=" + r.context));
    summary = ok ? "compiler is robustly hyperproperty-preserving on the universe"
                 : r.detail;
    if (!ok) {
      const NamedProgram& p = ev.source_program(r.program);
      const NamedProgram& t = ev.target_program(cm.at(r.program));
      const NamedProgram* ct = nullptr;
      for (const NamedProgram& x : u.target_contexts)
        if (x.id == r.context) ct = &x;
      const NamedProgram* cs = nullptr;
      for (const NamedProgram& x : u.source_contexts)
        if (ev.predicate(Side::kSource, x, p)) {
          cs = &x;
          break;
        }
      if (ct && cs) {
        CxRecord w = worst_pair(ev, s, *ct, t, *cs, p);
        w.kind = "rhc";
        w.manifest = cx.manifest;
        w.equiv = cx.equiv;
        w.budgets = cx.budgets;
        cx = w;
      }
    }
  } else {
    EmulationVerdict v = check_scenario(ev);
    ok = v.holds;
    std::string profiles;
    for (const auto& [att, prof] : v.profiles) {
      std::string curve;
      for (int n : u.grid)
        curve += (curve.empty() ? "" : ",") + std::to_string(n) + ":" +
                 to_string(prof.worst.count(n) ? prof.worst.at(n).second : Rational(0));
      lines.push_back("emulation attacker=" + att + " status=" +
                      (v.witness.count(att) || ok ? "pass" : "fail") + " worst=" + curve +
                      " non_increasing=" + (prof.non_increasing() ? "yes" : "no") +
                      " strictly_decreasing=" + (prof.strictly_decreasing() ? "yes" : "no"));
      profiles += prof.csv();
    }
    write_file(c.out, "profile.csv", "env,n,num,den\n" + profiles);
    summary = ok ? u.target_programs[0].id + " emulates " + u.source_programs[0].id
                 : "no simulator matches attacker " + v.counterexample->attacker;
    if (!ok) {
      const auto& e = *v.counterexample;
      cx.kind = "emulation";
      cx.tctx = e.attacker;
      cx.tprg = u.target_programs[0].id;
      cx.sctx = e.simulator;
      cx.sprg = u.source_programs[0].id;
      cx.n = e.n;
      cx.real_p1 = e.real_p1;
      cx.ideal_p1 = e.ideal_p1;
      cx.advantage = e.advantage;
      cx.env_text = format_environment(u.envs->get(e.env));
    }
    if (s.manifest.get_or("hops", "") == "wg") {
      GameChain chain = wg_game_chain(s.manifest);
      ChainReport cr = check_game_hops(chain, u.envs, u.grid, u.prims);
      for (const std::string& l : cr.lines) lines.push_back(l);
      ok = ok && cr.ok;
      if (!cr.ok) summary += "; game-hop chain fails";
    }
    if (s.manifest.has("replay.oracle")) {
      auto real = ev.behavior(Side::kTarget, u.target_contexts[0], u.target_programs[0]);
      auto ideal = ev.behavior(Side::kSource, u.source_contexts[0], u.source_programs[0]);
      int arg = std::stoi(s.manifest.get_or("replay.arg", "0"));
      const std::string& orc = s.manifest.get("replay.oracle");
      auto vr = replay_violations(*real, orc, arg);
      auto vi = replay_violations(*ideal, orc, arg);
      lines.push_back("replay_protection status=" + std::string(vr.empty() && vi.empty() ? "pass" : "fail") +
                      " real_violations=" + std::to_string(vr.size()) +
                      " ideal_violations=" + std::to_string(vi.size()));
      ok = ok && vr.empty() && vi.empty();
    }
  }
  std::string verdict = "status=" + std::string(ok ? "pass" : "fail") + "\nspec=" + u.equiv.str() + "\n";
  write_file(c.out, "verdict.txt", verdict);
  if (!cx.kind.empty()) {
    lines.push_back("counterexample env=" + cx.env_text.substr(4, cx.env_text.find(' ', 4) - 4) +
                    " n=" + std::to_string(cx.n) + " real.p1=" + to_string(cx.real_p1) +
                    " ideal.p1=" + to_string(cx.ideal_p1) + " advantage=" + to_string(cx.advantage));
    write_file(c.out, "counterexample.txt", cx.str());
    if (c.out.empty()) std::cout << cx.str();
  }
  return finish(c, header("emulate", s), lines, ok, summary);
}

// --- replay ---

int cmd_replay(const std::string& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw IoError("cannot read " + file);
  std::stringstream ss;
  ss << in.rdbuf();
  if (ss.str().empty()) throw IoError(file + " is empty");
  CxRecord r;
  Environment z;
  try {
    r = CxRecord::parse(ss.str());
    z = parse_environment(r.env_text);
  } catch (const IoError&) {
    throw;
  } catch (const std::exception& e) {
    throw IoError(file + ": " + e.what());
  }
  ScenarioOverrides o;
  o.grid = std::vector<int>{r.n};
  o.equiv = EquivSpec::parse(r.equiv);
  o.disable_budgets = !r.budgets;
  Scenario s = load_scenario(r.manifest, o);
  const Universe& u = s.universe;
  const NamedProgram& tc = pick(u.target_contexts, r.tctx, "target context");
  const NamedProgram& tp = pick(u.target_programs, r.tprg, "target program");
  const NamedProgram& sc = pick(u.source_contexts, r.sctx, "source context");
  const NamedProgram& sp = pick(u.source_programs, r.sprg, "source program");
  Rational real = exec_dist(z, tc.program, tp.program, u.grid, u.target_budget, u.prims).at.at(r.n).p1;
  Rational ideal = exec_dist(z, sc.program, sp.program, u.grid, u.source_budget, u.prims).at.at(r.n).p1;
  Rational adv = abs_diff(real, ideal);
  bool match = real == r.real_p1 && ideal == r.ideal_p1 && adv == r.advantage;
  std::cout << "replay env=" << z.id << " n=" << r.n << " real.p1=" << to_string(real)
            << " ideal.p1=" << to_string(ideal) << " advantage=" << to_string(adv)
            << " recorded=" << to_string(r.advantage) << " status=" << (match ? "match" : "mismatch")
            << "\n";
  return match ? kPass : kFail;
}

// --- compiler-check and theorems ---

int cmd_compiler_check(const std::string& ref, const Common& c) {
  Scenario s = load_scenario(ref, c.overrides());
  if (s.mode != "universe") throw ModelError("compiler-check needs a universe manifest");
  UniverseEval ev(s.universe);
  std::vector<std::string> anchors;
  for (const NamedProgram& p : s.universe.source_programs) anchors.push_back(p.id);
  std::vector<std::string> lines;
  int holds = 0;
  auto comps = enumerate_compilers(s.universe);
  for (const auto& [id, cm] : comps) {
    bool rhc = check_predRHC(ev, cm).holds;
    bool rhp = check_predRHP(ev, cm, anchors).holds;
    std::string m;
    for (const auto& [a, b] : cm) m += (m.empty() ? "" : ",") + a + ":" + b;
    lines.push_back("compiler=" + id + " map=" + m + " rhc=" + (rhc ? "pass" : "fail") +
                    " rhp=" + (rhp ? "pass" : "fail"));
    holds += rhc;
  }
  return finish(c, header("compiler-check", s), lines, true,
                std::to_string(holds) + " of " + std::to_string(comps.size()) +
                    " compilers satisfy the criterion");
}

int cmd_theorems(const std::string& ref, const Common& c) {
  Scenario s = load_scenario(ref, c.overrides());
  if (s.mode != "universe") throw ModelError("theorems needs a universe manifest");
  UniverseEval ev(s.universe);
  TheoremReport r = cross_check_theorems(ev, enumerate_compilers(s.universe));
  return finish(c, header("theorems", s), r.lines, r.ok(),
                std::to_string(r.checks) + " checks, " + std::to_string(r.disagreements) +
                    " disagreements");
}

// --- axioms ---

int cmd_axioms(const std::vector<std::string>& refs, int samples, const Common& c) {
  std::vector<AxiomModel> models;
  ScenarioOverrides o = c.overrides();
  if (!o.grid) o.grid = std::vector<int>{1, 2};
  std::string hdr;
  for (const std::string& ref : refs) {
    Scenario s = load_scenario(ref, o);
    UniverseEval ev(s.universe);
    const Universe& u = s.universe;
    for (const NamedProgram& x : u.target_contexts)
      for (const NamedProgram& p : u.target_programs)
        models.push_back({s.name + ":" + x.id + "+" + p.id, ev.behavior(Side::kTarget, x, p)});
    for (const NamedProgram& x : u.source_contexts)
      for (const NamedProgram& p : u.source_programs)
        models.push_back({s.name + ":" + x.id + "+" + p.id, ev.behavior(Side::kSource, x, p)});
    hdr += header("axioms", s);
  }
  AxiomOptions opts;
  opts.samples = samples;
  AxiomReport r = axiom_suite(models, opts);
  std::vector<std::string> lines;
  std::stringstream ss(r.format());
  std::string l;
  while (std::getline(ss, l)) lines.push_back(l);
  return finish(c, hdr, lines, r.ok(),
                std::to_string(r.samples) + " samples, " + std::to_string(r.failures.size()) +
                    " failures");
}

// --- primitives ---

int cmd_primitives(const std::string& grid, const std::string& out) {
  std::string all;
  for (int n : parse_grid(grid)) {
    if (n > kMaxPrimitiveN) throw SpaceTooLarge("primitive tables exist up to n=" + std::to_string(kMaxPrimitiveN));
    std::string hex = permutation_hex(n);
    write_file(out, "permutation_n" + std::to_string(n) + ".hex", hex);
    all += "n=" + std::to_string(n) + " image_fraction=" + to_string(prg_image_fraction(n)) +
           " prg_advantage=" + to_string(prg_advantage(n)) + " prf_advantage=" +
           to_string(prf_advantage(n)) + "\n";
  }
  std::cout << all;
  write_file(out, "primitives.txt", all);
  return kPass;
}

template <typename F>
int guarded(F&& f) {
  try {
    return f();
  } catch (const SpaceTooLarge& e) {
    std::cerr << "ceiling: " << e.what() << "\n";
    return kCeiling;
  } catch (const IoError& e) {
    std::cerr << "io: " << e.what() << "\n";
    return kIo;
  } catch (const ParseError& e) {
    std::cerr << "parse: " << e.what() << "\n";
    return kInvalid;
  } catch (const Error& e) {
    std::cerr << "invalid: " << e.what() << "\n";
    return kInvalid;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "io: " << e.what() << "\n";
    return kIo;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ucrc: exact checks of universal composability and robust compilation criteria"};
  app.require_subcommand(1);
  int code = kPass;

  Common check_c, behav_c, emul_c, comp_c, thm_c, ax_c;

  std::vector<std::string> check_refs;
  auto* check = app.add_subcommand("check", "parse and validate models or manifests");
  check->add_option("inputs", check_refs, "manifests or .ocl files")->required();
  check_c.add(check);
  check->callback([&] { code = guarded([&] { return cmd_check(check_refs, check_c); }); });

  std::string behav_ref, side = "target", prg, ctx;
  std::vector<std::string> envs;
  auto* behav = app.add_subcommand("behav", "enumerate trace distributions of one world");
  behav->add_option("manifest", behav_ref)->required();
  behav->add_option("--side", side)->check(CLI::IsMember({"source", "target"}));
  behav->add_option("--program", prg, "program id (default: first)");
  behav->add_option("--context", ctx, "context id (default: first)");
  behav->add_option("--env", envs, "environment ids (default: all)");
  behav_c.add(behav);
  behav->callback(
      [&] { code = guarded([&] { return cmd_behav(behav_ref, side, prg, ctx, envs, behav_c); }); });

  std::string emul_ref, compiler;
  auto* emul = app.add_subcommand("emulate", "verify emulation, or the criterion for one compiler");
  emul->add_option("manifest", emul_ref)->required();
  emul->add_option("--compiler", compiler, "source:target,... for universe manifests");
  emul_c.add(emul);
  emul->callback([&] { code = guarded([&] { return cmd_emulate(emul_ref, compiler, emul_c); }); });

  std::string comp_ref;
  auto* comp = app.add_subcommand("compiler-check", "predRHC and predRHP for every compiler");
  comp->add_option("manifest", comp_ref)->required();
  comp_c.add(comp);
  comp->callback([&] { code = guarded([&] { return cmd_compiler_check(comp_ref, comp_c); }); });

  std::string thm_ref;
  auto* thm = app.add_subcommand("theorems", "cross-check the characterization results");
  thm->add_option("manifest", thm_ref)->required();
  thm_c.add(thm);
  thm->callback([&] { code = guarded([&] { return cmd_theorems(thm_ref, thm_c); }); });

  std::string replay_file;
  auto* replay = app.add_subcommand("replay", "recompute a recorded counterexample");
  replay->add_option("file", replay_file)->required();
  replay->callback([&] { code = guarded([&] { return cmd_replay(replay_file); }); });

  std::vector<std::string> ax_refs;
  int samples = 1000;
  auto* ax = app.add_subcommand("axioms", "sample the semantic axioms on scenario worlds");
  ax->add_option("manifests", ax_refs)->required();
  ax->add_option("--samples", samples)->check(CLI::PositiveNumber);
  ax_c.add(ax);
  ax->callback([&] { code = guarded([&] { return cmd_axioms(ax_refs, samples, ax_c); }); });

  std::string prim_grid = "1..4", prim_out;
  auto* prim = app.add_subcommand("primitives", "dump toy primitive tables and advantages");
  prim->add_option("--grid", prim_grid);
  prim->add_option("--out", prim_out);
  prim->callback([&] { code = guarded([&] { return cmd_primitives(prim_grid, prim_out); }); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int r = app.exit(e);
    return r == 0 ? 0 : kInvalid;
  }
  return code;
}
