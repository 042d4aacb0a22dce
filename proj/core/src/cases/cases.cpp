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

#include "ucrc/cases/cases.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ucrc/cases/bundled.hpp"
#include "ucrc/cases/primitives.hpp"
#include "ucrc/common/error.hpp"
#include "ucrc/lang/syntax.hpp"
#include "ucrc/lang/validate.hpp"

namespace ucrc {

namespace fs = std::filesystem;

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::stringstream ss(s);
  while (std::getline(ss, cur, sep)) {
    cur = trim(cur);
    if (!cur.empty()) out.push_back(cur);
  }
  return out;
}

int to_int(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    long long x = std::stoll(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return static_cast<int>(x);
  } catch (const std::exception&) {
    throw ModelError("manifest key '" + key + "' expects an integer, got '" + v + "'");
  }
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw IoError("cannot read " + p.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

const std::string& Manifest::get(const std::string& key) const {
  auto it = kv.find(key);
  if (it == kv.end()) throw ModelError("manifest " + path + " has no '" + key + "'");
  return it->second;
}

std::string Manifest::get_or(const std::string& key, const std::string& def) const {
  auto it = kv.find(key);
  return it == kv.end() ? def : it->second;
}

Manifest parse_manifest(std::string_view text, const std::string& path) {
  Manifest m;
  m.path = path;
  std::stringstream ss{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    auto eq = t.find('=');
    if (eq == std::string::npos)
      throw ParseError(lineno, 1, "manifest line is not 'key = value'", {"="});
    std::string key = trim(t.substr(0, eq));
    if (key.empty()) throw ParseError(lineno, 1, "empty manifest key", {"key"});
    m.kv[key] = trim(t.substr(eq + 1));
  }
  return m;
}

Manifest load_manifest(const std::string& ref) {
  if (fs::is_regular_file(ref)) {
    Manifest m = parse_manifest(read_file(ref), ref);
    m.dir = fs::path(ref).parent_path().string();
    return m;
  }
  const auto& files = bundled_files();
  auto it = files.find(ref);
  if (it == files.end()) it = files.find(ref + ".manifest");
  if (it == files.end()) throw IoError("no manifest file or bundled manifest named '" + ref + "'");
  return parse_manifest(it->second, "bundled:" + it->first);
}

std::string read_model_text(const std::string& ref, const std::string& dir) {
  if (!dir.empty()) {
    fs::path p = fs::path(dir) / ref;
    if (fs::is_regular_file(p)) return read_file(p);
  } else if (fs::path(ref).is_absolute() && fs::is_regular_file(ref)) {
    return read_file(ref);
  }
  return bundled_file(ref);
}

OracleProgram load_program(const std::string& ref, const std::string& dir) {
  OracleProgram p;
  try {
    p = parse_program(read_model_text(ref, dir));
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.col(), ref + ": " + e.detail(), e.expected());
  }
  auto ds = validate(p);
  if (has_errors(ds)) {
    std::string msg;
    for (const Diagnostic& d : ds)
      if (d.severity == Severity::kError) msg += (msg.empty() ? "" : "; ") + d.format(ref);
    throw ModelError(msg);
  }
  return p;
}

std::vector<Environment> load_environments(const std::string& ref, const std::string& dir) {
  std::stringstream ss(read_model_text(ref, dir));
  std::vector<std::string> chunks;
  std::string line;
  while (std::getline(ss, line)) {
    std::string t = trim(line);
    if (!t.empty() && t[0] == '#') continue;
    if (t.rfind("env ", 0) == 0) chunks.emplace_back();
    if (t.empty()) continue;
    if (chunks.empty()) throw ModelError(ref + ": text before the first 'env' header");
    chunks.back() += line + "\n";
  }
  std::vector<Environment> out;
  for (const std::string& c : chunks) out.push_back(parse_environment(c));
  return out;
}

void apply_overrides(OracleProgram& p, const Manifest& m) {
  for (const auto& [key, value] : m.kv) {
    bool is_param = key.rfind("param.", 0) == 0;
    bool is_type = key.rfind("type.", 0) == 0;
    if (!is_param && !is_type) continue;
    std::string name = key.substr(key.find('.') + 1);
    Size s = Size::constant(to_int(key, value));
    if (is_param) {
      for (ParamDecl& d : p.params)
        if (d.name == name) d.value = s;
    } else {
      for (TypeDecl& d : p.types)
        if (d.name == name) d.width = s;
    }
  }
}

std::vector<int> parse_grid(const std::string& text) {
  std::vector<int> g;
  auto dots = text.find("..");
  if (dots != std::string::npos) {
    int lo = to_int("grid", trim(text.substr(0, dots)));
    int hi = to_int("grid", trim(text.substr(dots + 2)));
    for (int n = lo; n <= hi; ++n) g.push_back(n);
  } else {
    for (const std::string& s : split(text, ',')) g.push_back(to_int("grid", s));
  }
  if (g.empty()) throw GridMismatch("empty grid '" + text + "'");
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g[i] < 1 || (i && g[i] <= g[i - 1]))
      throw GridMismatch("grid must be increasing positive integers: '" + text + "'");
  return g;
}

namespace {

std::vector<NamedProgram> load_list(const Manifest& m, const std::string& key) {
  std::vector<NamedProgram> out;
  for (const std::string& item : split(m.get_or(key, ""), ',')) {
    auto colon = item.find(':');
    std::string id = colon == std::string::npos ? item : trim(item.substr(0, colon));
    std::string file = colon == std::string::npos ? item : trim(item.substr(colon + 1));
    NamedProgram np;
    np.id = id;
    if (file == "empty") {
      np.program = empty_context();
    } else {
      np.program = load_program(file, m.dir);
      apply_overrides(np.program, m);
    }
    for (const NamedProgram& o : out)
      if (o.id == id) throw ModelError("duplicate id '" + id + "' in " + key);
    out.push_back(std::move(np));
  }
  return out;
}

}  // namespace

namespace {

void sample_widths(const Stmt& st, const SizeEnv& env, int n, int& best) {
  if (st.kind == StmtKind::kSample)
    best = std::max(best, static_cast<int>(env.resolve_or_throw(st.size).at(n)));
  for (const Stmt& s : st.next) sample_widths(s, env, n, best);
}

}  // namespace

int max_sample_width(const OracleProgram& p, int n) {
  SizeEnv env(p);
  int best = 0;
  for (const Process& pr : p.processes)
    for (const OracleDecl& o : pr.oracles) sample_widths(o.body, env, n, best);
  return best;
}

Scenario load_scenario(const std::string& ref, const ScenarioOverrides& o) {
  return scenario_from_manifest(load_manifest(ref), o);
}

Scenario scenario_from_manifest(Manifest manifest, const ScenarioOverrides& o) {
  Scenario s;
  s.manifest = std::move(manifest);
  const Manifest& m = s.manifest;
  s.name = m.get_or("name", m.path);
  s.mode = m.get_or("mode", "emulation");
  if (s.mode != "emulation" && s.mode != "universe")
    throw ModelError("manifest mode must be 'emulation' or 'universe', got '" + s.mode + "'");

  Universe& u = s.universe;
  u.grid = o.grid ? *o.grid : parse_grid(m.get_or("grid", "1..3"));
  u.equiv = o.equiv ? *o.equiv : EquivSpec::parse(m.get_or("equiv", "perfect"));
  u.source_budget = ResourceBudget::parse(m.get_or("budget.source", "none"));
  u.target_budget = ResourceBudget::parse(m.get_or("budget.target", "none"));
  if (o.disable_budgets) u.source_budget = u.target_budget = ResourceBudget::none();
  if (o.ceilings) {
    u.ceilings = *o.ceilings;
  } else {
    if (m.has("ceiling.envs")) u.ceilings.max_envs = to_int("ceiling.envs", m.get("ceiling.envs"));
    if (m.has("ceiling.compilers"))
      u.ceilings.max_compilers = to_int("ceiling.compilers", m.get("ceiling.compilers"));
    if (m.has("ceiling.cells")) u.ceilings.max_cells = to_int("ceiling.cells", m.get("ceiling.cells"));
  }
  u.threads = o.threads;
  if (u.grid.back() > u.ceilings.max_n)
    throw SpaceTooLarge("grid point n=" + std::to_string(u.grid.back()) + " is above the ceiling " +
                        std::to_string(u.ceilings.max_n));
  std::string prims = m.get_or("primitives", "none");
  if (prims == "toy") {
    u.prims = toy_primitives();
    register_case_predicates();
  } else if (prims != "none") {
    throw ModelError("unknown primitive set '" + prims + "'");
  }

  EnvClass& c = s.env_class;
  c.depth = to_int("env.depth", m.get("env.depth"));
  for (const std::string& t : split(m.get("env.calls"), ';')) c.calls.push_back(CallTemplate::parse(t));
  for (const auto& [key, value] : m.kv) {
    if (key.rfind("env.classes.", 0) != 0) continue;
    std::vector<Matcher> ms;
    for (const std::string& t : split(value, '|')) ms.push_back(Matcher::parse(t));
    c.classes[key.substr(12)] = ms;
  }
  if (m.has("env.default_classes")) {
    c.default_classes.clear();
    for (const std::string& t : split(m.get("env.default_classes"), '|'))
      c.default_classes.push_back(Matcher::parse(t));
  }
  auto reg = EnvRegistry::from_class(c, u.ceilings.max_envs);
  for (const std::string& f : split(m.get_or("env.extra", ""), ','))
    for (Environment& z : load_environments(f, m.dir)) reg->add(std::move(z));
  if (m.has("env.unbounded")) {
    if (u.source_budget.unbounded && u.target_budget.unbounded) {
      for (Environment& z : load_environments(m.get("env.unbounded"), m.dir)) reg->add(std::move(z));
      s.notes.push_back("budgets disabled: unbounded environments from " + m.get("env.unbounded") +
                        " admitted");
    } else {
      s.notes.push_back("unbounded environments from " + m.get("env.unbounded") +
                        " skipped: budgets are enabled");
    }
  }
  u.envs = reg;

  u.source_programs = load_list(m, "source.programs");
  u.source_contexts = load_list(m, "source.contexts");
  u.target_programs = load_list(m, "target.programs");
  u.target_contexts = load_list(m, "target.contexts");
  for (const auto* list : {&u.source_programs, &u.source_contexts, &u.target_programs,
                           &u.target_contexts})
    for (const NamedProgram& p : *list) {
      int w = max_sample_width(p.program, u.grid.back());
      if (w > u.ceilings.max_sample_bits)
        throw SpaceTooLarge(p.id + " samples " + std::to_string(w) + " bits at n=" +
                            std::to_string(u.grid.back()) + ", above the ceiling " +
                            std::to_string(u.ceilings.max_sample_bits));
    }
  if (s.mode == "emulation") {
    if (u.target_programs.size() != 1 || u.source_programs.size() != 1)
      throw ModelError("emulation manifest needs exactly one target and one source program");
    if (u.source_contexts.empty() || u.target_contexts.empty())
      throw ModelError("emulation manifest needs simulators (source.contexts) and attackers "
                       "(target.contexts)");
  } else if (u.source_programs.empty() || u.target_programs.empty()) {
    throw ModelError("universe manifest needs source and target programs");
  }
  return s;
}

EmulationVerdict check_scenario(UniverseEval& ev) {
  const Universe& u = ev.universe();
  return verify_emulation(ev, u.target_programs.at(0), u.source_programs.at(0), u.source_contexts,
                          u.target_contexts);
}

CommitmentCase build_commitment(int n_max, bool disable_budgets) {
  ScenarioOverrides o;
  o.grid = parse_grid("1.." + std::to_string(n_max));
  o.disable_budgets = disable_budgets;
  CommitmentCase c{scenario_from_manifest(load_manifest("commitment.manifest"), o), {}};
  c.unbounded_env = load_environments("commit_unbounded.envs").at(0);
  return c;
}

WgCase build_wg_record(int n_max, int msg_width, int n_M) {
  if (msg_width < 2 || n_M < 1) throw ModelError("record layer needs msg_width >= 2 and n_M >= 1");
  Manifest m = load_manifest("wg.manifest");
  m.kv["grid"] = "1.." + std::to_string(n_max);
  m.kv["param.n_M"] = std::to_string(n_M);
  m.kv["type.msg_t"] = std::to_string(msg_width);
  // two distinct messages of the requested width: 0..01 and 10..0
  std::string m1 = "0b" + std::string(static_cast<std::size_t>(msg_width - 1), '0') + "1";
  std::string m2 = "0b1" + std::string(static_cast<std::size_t>(msg_width - 1), '0');
  m.kv["env.calls"] = "Oe2S(" + m1 + ",0b0); Oe2S(" + m2 +
                      ",0b1); Oe2aR(obs0.0,obs0.1,0b0); Oe2aR(flip(obs0.0,0),obs0.1,0b0); "
                      "Oe2aR(zeros,zeros,0b0); Oe2aR(zeros,zeros,0b1)";
  m.kv["env.classes.Oe2S"] = "bit(0," + std::to_string(msg_width - 1) + ")=1";
  if (msg_width != 2) m.kv.erase("env.extra");
  WgCase c{scenario_from_manifest(m), wg_game_chain(m)};
  return c;
}

GameChain wg_game_chain(const Manifest& m) {
  auto load = [&](const std::string& id, const std::string& ctx, const std::string& prg) {
    Game g;
    g.id = id;
    g.context.id = ctx.empty() ? "empty" : ctx;
    g.context.program = ctx.empty() ? empty_context() : load_program(ctx, m.dir);
    g.program.id = prg;
    g.program.program = load_program(prg, m.dir);
    apply_overrides(g.context.program, m);
    apply_overrides(g.program.program, m);
    return g;
  };
  GameChain c;
  c.games = {load("G0", "wg_dummy.ocl", "wg_core.ocl"), load("G1", "", "wg_real.ocl"),
             load("G2", "", "wg_ctxt.ocl"),             load("G3", "", "wg_cpa.ocl"),
             load("G4", "", "wg_memo.ocl"),             load("G5", "", "wg_find.ocl"),
             load("G6", "", "wg_inline.ocl"),           load("G7", "wg_sim.ocl", "wg_func.ocl")};
  int n_m = static_cast<int>(SizeEnv(c.games[1].program.program)
                                 .resolve_or_throw(Size::symbol("n_M"))
                                 .at(0));
  Schedule ctxt{Schedule::kExpHalf, Rational(n_m), 1};
  Schedule cpa{Schedule::kExpHalf, Rational(1), 1};
  c.hops = {
      {"dummy_elision", "G0", "G1", GameHop::kPerfect, "", {}},
      {"authenticate", "G1", "G2", GameHop::kBound, "IND-CTXT", ctxt},
      {"hide", "G2", "G3", GameHop::kBound, "IND-CPA", cpa},
      {"memoize", "G3", "G4", GameHop::kPerfect, "", {}},
      {"find_sender", "G4", "G5", GameHop::kPerfect, "", {}},
      {"inline_sim", "G5", "G6", GameHop::kPerfect, "", {}},
      {"split_sim", "G6", "G7", GameHop::kPerfect, "", {}},
  };
  return c;
}

namespace {

std::string curve_str(const std::map<int, Rational>& m) {
  std::string s;
  for (const auto& [n, q] : m) s += (s.empty() ? "" : ",") + std::to_string(n) + ":" + to_string(q);
  return s;
}

}  // namespace

ChainReport check_game_hops(const GameChain& chain, std::shared_ptr<const EnvRegistry> envs,
                            const std::vector<int>& grid, const PrimitiveTable& prims) {
  if (chain.hops.empty()) throw ChainBroken("chain has no hops");
  for (std::size_t i = 1; i < chain.hops.size(); ++i)
    if (chain.hops[i - 1].after != chain.hops[i].before)
      throw ChainBroken("hop " + chain.hops[i - 1].name + " ends at " + chain.hops[i - 1].after +
                        " but " + chain.hops[i].name + " starts at " + chain.hops[i].before);
  std::map<std::string, std::shared_ptr<Behavior>> games;
  for (const Game& g : chain.games)
    games[g.id] = std::make_shared<Behavior>(link(g.context.program, g.program.program), grid,
                                             ResourceBudget::none(), envs, prims);
  auto game = [&](const std::string& id) -> Behavior& {
    auto it = games.find(id);
    if (it == games.end()) throw ChainBroken("hop refers to unknown game " + id);
    return *it->second;
  };

  ChainReport r;
  r.ok = true;
  for (int n : grid) r.bound_sum[n] = 0;
  for (const GameHop& h : chain.hops) {
    HopResult hr;
    hr.hop = h;
    Behavior& a = game(h.before);
    Behavior& b = game(h.after);
    DiffProfile prof = diff_profile(a, b);
    for (int n : grid) hr.worst[n] = prof.worst.count(n) ? prof.worst.at(n).second : Rational(0);
    if (h.kind == GameHop::kPerfect) {
      Verdict v = equiv_check(a, b, EquivSpec::perfect());
      hr.holds = v.holds;
      hr.detail = v.detail;
      for (int n : grid) r.bound_sum[n] += hr.worst[n];
    } else {
      hr.holds = true;
      for (int n : grid) {
        if (hr.worst[n] > h.bound.at(n)) hr.holds = false;
        r.bound_sum[n] += h.bound.at(n);
      }
      hr.detail = "assumption=" + h.assumption + ",bound=" + h.bound.str();
    }
    r.ok = r.ok && hr.holds;
    r.lines.push_back("hop=" + h.name + " kind=" + (h.kind == GameHop::kPerfect ? "perfect" : "bound") +
                      " status=" + (hr.holds ? "pass" : "fail") + " from=" + h.before + " to=" +
                      h.after + " worst=" + curve_str(hr.worst) + " detail=" + hr.detail);
    r.hops.push_back(std::move(hr));
  }
  DiffProfile direct = diff_profile(game(chain.hops.front().before), game(chain.hops.back().after));
  bool within = true;
  for (int n : grid) {
    r.direct[n] = direct.worst.count(n) ? direct.worst.at(n).second : Rational(0);
    if (r.direct[n] > r.bound_sum[n]) within = false;
  }
  r.ok = r.ok && within;
  r.lines.push_back(std::string("chain status=") + (within ? "pass" : "fail") + " from=" +
                    chain.hops.front().before + " to=" + chain.hops.back().after +
                    " direct=" + curve_str(r.direct) + " bound=" + curve_str(r.bound_sum));
  return r;
}

std::vector<std::string> replay_violations(const Behavior& b, const std::string& oracle, int arg) {
  std::vector<std::string> out;
  for (const Environment& z : b.envs().all())
    for (int n : b.grid()) {
      TraceDist d = b.trace_dist(z.id, n);
      bool bad = false;
      for (const auto& [key, mass] : d.entries) {
        if (mass == 0) continue;
        std::vector<Event> evs = parse_events(key);
        std::set<std::string> seen;
        for (std::size_t i = 0; i + 1 < evs.size(); ++i) {
          const Event& e = evs[i];
          if (e.kind != EventKind::kCall || e.oracle != oracle) continue;
          if (evs[i + 1].kind != EventKind::kReturn) continue;
          if (static_cast<std::size_t>(arg) >= e.payload.size()) continue;
          if (!seen.insert(e.payload[static_cast<std::size_t>(arg)].str()).second) bad = true;
        }
        if (bad) break;
      }
      if (bad) out.push_back(z.id + "@" + std::to_string(n));
    }
  return out;
}

}  // namespace ucrc
