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

#include <cstring>

#include "ucrc/common/error.hpp"
#include "ucrc/sem/world.hpp"

namespace ucrc {

State State::initial(const CompiledWorld& w) {
  State s;
  s.pvals.assign(static_cast<std::size_t>(w.persist_slots), 0);
  s.pdef.assign(static_cast<std::size_t>(w.persist_slots), 0);
  s.tables.resize(w.tables.size());
  s.next_instance.assign(w.oracles.size(), 0);
  return s;
}

std::string State::key() const {
  std::string k;
  auto put = [&](const void* p, std::size_t n) { k.append(static_cast<const char*>(p), n); };
  k.reserve(pvals.size() * 9 + 64);
  put(&steps, sizeof steps);
  for (std::size_t i = 0; i < pvals.size(); ++i) {
    k.push_back(static_cast<char>(pdef[i]));
    if (pdef[i]) put(&pvals[i], sizeof(std::uint64_t));
  }
  for (std::uint32_t v : next_instance) put(&v, sizeof v);
  for (const auto& t : tables) {
    std::uint64_t sz = t.size();
    put(&sz, sizeof sz);
    if (!t.empty()) put(t.data(), t.size() * sizeof(std::uint64_t));
  }
  return k;
}

namespace {

struct Frame {
  std::vector<std::uint64_t> vals;
  int instance = 0;
  int oracle = -1;
};

class Interp {
 public:
  Interp(const CompiledWorld& w, const InterpOptions& opt, OutcomeSink& sink)
      : w_(w), opt_(opt), sink_(sink) {}

  void call(State st, int id, const std::vector<Bits>& args, Dyadic mass) {
    const COracle& o = w_.oracles[static_cast<std::size_t>(id)];
    if (args.size() != o.param_widths.size())
      throw ModelError("oracle " + o.name + " takes " + std::to_string(o.param_widths.size()) +
                       " arguments, got " + std::to_string(args.size()));
    for (std::size_t i = 0; i < args.size(); ++i)
      if (args[i].width() != o.param_widths[i])
        throw ModelError("argument " + std::to_string(i + 1) + " of " + o.name + " has width " +
                         std::to_string(args[i].width()) + ", expected " +
                         std::to_string(o.param_widths[i]));
    std::uint32_t inst = st.next_instance[static_cast<std::size_t>(id)];
    if (static_cast<int>(inst) >= o.instances) {
      sink_.outcome(Obs::yield(), std::move(st), mass);
      return;
    }
    st.next_instance[static_cast<std::size_t>(id)] = inst + 1;
    std::vector<std::uint64_t> vals;
    for (const Bits& a : args) vals.push_back(a.value());
    enter(id, static_cast<int>(inst), vals, st, mass);
  }

 private:
  void enter(int id, int instance, const std::vector<std::uint64_t>& args, State& st,
             Dyadic mass) {
    const COracle& o = w_.oracles[static_cast<std::size_t>(id)];
    Frame f;
    f.vals.assign(static_cast<std::size_t>(o.frame_size), 0);
    f.instance = instance;
    f.oracle = id;
    if (o.index_slot >= 0) f.vals[static_cast<std::size_t>(o.index_slot)] = static_cast<std::uint64_t>(instance);
    for (std::size_t i = 0; i < args.size(); ++i) {
      f.vals[static_cast<std::size_t>(o.param_slots[i])] = args[i];
      if (o.param_pids[i] >= 0) write(st, o.param_pids[i], instance, args[i]);
    }
    exec(o.body, f, st, mass);
  }

  bool tick(State& st, std::uint64_t k, const Dyadic& mass) {
    st.steps += k;
    if (st.steps > opt_.step_bound) {
      sink_.timeout(st, mass);
      return false;
    }
    return true;
  }

  void write(State& st, int pid, int instance, std::uint64_t v) {
    const CPersist& p = w_.persist[static_cast<std::size_t>(pid)];
    if (instance < 0 || instance >= p.instances)
      throw EvalError("instance " + std::to_string(instance) + " of " + p.owner + "." + p.var +
                      " out of range");
    std::size_t at = static_cast<std::size_t>(p.offset + instance);
    st.pvals[at] = v;
    st.pdef[at] = 1;
  }

  bool is_defined(const State& st, int pid, std::uint64_t instance) const {
    const CPersist& p = w_.persist[static_cast<std::size_t>(pid)];
    if (instance >= static_cast<std::uint64_t>(p.instances)) return false;
    return st.pdef[static_cast<std::size_t>(p.offset) + instance] != 0;
  }

  std::uint64_t read(const State& st, int pid, std::uint64_t instance) const {
    if (!is_defined(st, pid, instance)) {
      const CPersist& p = w_.persist[static_cast<std::size_t>(pid)];
      throw EvalError("read of undefined " + p.owner + "." + p.var + "[" +
                      std::to_string(instance + 1) + "]");
    }
    const CPersist& p = w_.persist[static_cast<std::size_t>(pid)];
    return st.pvals[static_cast<std::size_t>(p.offset) + instance];
  }

  std::uint64_t eval(const CExpr& e, const Frame& f, const State& st) const {
    switch (e.op) {
      case COp::kLocal: return f.vals[static_cast<std::size_t>(e.slot)];
      case COp::kPersist: return read(st, e.pid, static_cast<std::uint64_t>(f.instance));
      case COp::kIndexed: return read(st, e.pid, f.vals[static_cast<std::size_t>(e.slot)]);
      case COp::kLit: return e.lit;
      case COp::kXor: return eval(e.args[0], f, st) ^ eval(e.args[1], f, st);
      case COp::kConcat: {
        std::uint64_t a = eval(e.args[0], f, st), b = eval(e.args[1], f, st);
        int wb = e.args[1].width;
        return wb >= 64 ? b : (a << wb) | b;
      }
      case COp::kTrunc: {
        std::uint64_t a = eval(e.args[0], f, st);
        int shift = e.args[0].width - e.width;
        return shift >= 64 ? 0 : (a >> shift) & width_mask(e.width);
      }
      case COp::kEq: return eval(e.args[0], f, st) == eval(e.args[1], f, st);
      case COp::kNeq: return eval(e.args[0], f, st) != eval(e.args[1], f, st);
      case COp::kAnd: return eval(e.args[0], f, st) && eval(e.args[1], f, st);
      case COp::kNot: return !eval(e.args[0], f, st);
      case COp::kInc: return (eval(e.args[0], f, st) + 1) & width_mask(e.width);
      case COp::kDefined:
        for (const CExpr& a : e.args)
          if (!is_defined(st, a.pid, f.vals[static_cast<std::size_t>(a.slot)])) return 0;
        return 1;
      case COp::kApp: {
        std::vector<Bits> args;
        args.reserve(e.args.size());
        for (const CExpr& a : e.args) args.emplace_back(eval(a, f, st), a.width);
        const Primitive& p = w_.prims[static_cast<std::size_t>(e.fn)];
        Bits r = p.fn(w_.n, args);
        if (r.width() != e.width)
          throw EvalError("primitive " + p.name + " returned width " + std::to_string(r.width()));
        return r.value();
      }
    }
    return 0;
  }

  void assign(Frame& f, State& st, const CStmt& s, std::uint64_t v) {
    f.vals[static_cast<std::size_t>(s.slot)] = v;
    if (s.pid >= 0) write(st, s.pid, f.instance, v);
  }

  void lint_find(const CStmt& s, Frame& f, const State& st, int from) {
    for (int j = from + 1; j < s.bound; ++j) {
      f.vals[static_cast<std::size_t>(s.slot)] = static_cast<std::uint64_t>(j);
      if (eval(s.cond, f, st)) {
        opt_.find_lint->insert(w_.oracles[static_cast<std::size_t>(f.oracle)].name + ":" +
                               std::to_string(s.pos.line) + ":" + std::to_string(s.pos.col));
        return;
      }
    }
  }

  void exec(const CStmt& s, Frame& f, State& st, Dyadic mass) {
    if (!tick(st, 1, mass)) return;
    switch (s.kind) {
      case CStmtKind::kYield:
        sink_.outcome(Obs::yield(), std::move(st), mass);
        return;
      case CStmtKind::kReturn: {
        Obs o;
        for (const CExpr& e : s.exprs) o.vals.emplace_back(eval(e, f, st), e.width);
        sink_.outcome(std::move(o), std::move(st), mass);
        return;
      }
      case CStmtKind::kRun: {
        std::vector<std::uint64_t> args;
        for (const CExpr& e : s.exprs) args.push_back(eval(e, f, st));
        enter(s.target, f.instance, args, st, mass);
        return;
      }
      case CStmtKind::kSample: {
        if (!tick(st, static_cast<std::uint64_t>(s.width), mass)) return;
        std::uint64_t count = std::uint64_t{1} << s.width;
        Dyadic m = mass.scaled_down(static_cast<unsigned>(s.width));
        st.sampled += static_cast<std::uint32_t>(s.width);
        for (std::uint64_t v = 0; v < count; ++v) {
          if (v + 1 == count) {
            assign(f, st, s, v);
            exec(s.next[0], f, st, m);
          } else {
            Frame f2 = f;
            State st2 = st;
            assign(f2, st2, s, v);
            exec(s.next[0], f2, st2, m);
          }
        }
        return;
      }
      case CStmtKind::kAssign:
        assign(f, st, s, eval(s.cond, f, st));
        exec(s.next[0], f, st, mass);
        return;
      case CStmtKind::kInsert: {
        auto& t = st.tables[static_cast<std::size_t>(s.table)];
        std::vector<std::uint64_t> row;
        for (const CExpr& e : s.exprs) row.push_back(eval(e, f, st));
        t.insert(t.end(), row.begin(), row.end());
        exec(s.next[0], f, st, mass);
        return;
      }
      case CStmtKind::kGet: {
        std::size_t ncols = w_.tables[static_cast<std::size_t>(s.table)].widths.size();
        std::size_t rows = st.tables[static_cast<std::size_t>(s.table)].size() / ncols;
        for (std::size_t r = 0; r < rows; ++r) {
          if (!tick(st, 1, mass)) return;
          const auto& t = st.tables[static_cast<std::size_t>(s.table)];
          bool ok = true;
          for (std::size_t c = 0; c < ncols && ok; ++c) {
            std::uint64_t v = t[r * ncols + c];
            const CPattern& p = s.pats[c];
            switch (p.kind) {
              case CPattern::kBind: f.vals[static_cast<std::size_t>(p.slot)] = v; break;
              case CPattern::kMatchLocal: ok = f.vals[static_cast<std::size_t>(p.slot)] == v; break;
              case CPattern::kMatchPersist:
                ok = read(st, p.pid, static_cast<std::uint64_t>(f.instance)) == v;
                break;
              case CPattern::kExpr: ok = eval(p.expr, f, st) == v; break;
            }
          }
          if (ok && s.has_cond) ok = eval(s.cond, f, st) != 0;
          if (ok) {
            for (std::size_t c = 0; c < ncols; ++c)
              if (s.pats[c].kind == CPattern::kBind && s.pats[c].pid >= 0)
                write(st, s.pats[c].pid, f.instance, f.vals[static_cast<std::size_t>(s.pats[c].slot)]);
            exec(s.next[0], f, st, mass);
            return;
          }
        }
        exec(s.next[1], f, st, mass);
        return;
      }
      case CStmtKind::kFind: {
        for (int i = 0; i < s.bound; ++i) {
          if (!tick(st, 1, mass)) return;
          f.vals[static_cast<std::size_t>(s.slot)] = static_cast<std::uint64_t>(i);
          if (eval(s.cond, f, st)) {
            if (opt_.find_lint) {
              lint_find(s, f, st, i);
              f.vals[static_cast<std::size_t>(s.slot)] = static_cast<std::uint64_t>(i);
            }
            exec(s.next[0], f, st, mass);
            return;
          }
        }
        exec(s.next[1], f, st, mass);
        return;
      }
      case CStmtKind::kIf:
        exec(eval(s.cond, f, st) ? s.next[0] : s.next[1], f, st, mass);
        return;
    }
  }

  const CompiledWorld& w_;
  const InterpOptions& opt_;
  OutcomeSink& sink_;
};

}  // namespace

void run_call(const CompiledWorld& w, const State& st, int id, const std::vector<Bits>& args,
              Dyadic mass, const InterpOptions& opt, OutcomeSink& sink) {
  if (id < 0 || id >= static_cast<int>(w.oracles.size())) throw ModelError("unknown oracle id");
  Interp(w, opt, sink).call(st, id, args, mass);
}

}  // namespace ucrc
