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

#include <algorithm>
#include <map>

#include "ucrc/common/error.hpp"
#include "ucrc/lang/validate.hpp"
#include "ucrc/sem/world.hpp"

namespace ucrc {

int CompiledWorld::oracle_id(const std::string& name) const {
  auto it = oracle_ids.find(name);
  return it == oracle_ids.end() ? -1 : it->second;
}

namespace {

using VarKey = std::pair<std::string, std::string>;

class Compiler {
 public:
  Compiler(const WholeProgram& w, int n, const PrimitiveTable& prims)
      : w_(w), p_(w.merged), sizes_(w.merged), n_(n), prims_(prims) {}

  std::shared_ptr<CompiledWorld> run() {
    auto out = std::make_shared<CompiledWorld>();
    out->n = n_;
    out->exports = w_.exports;
    world_ = out.get();

    for (const TableDecl& t : p_.tables) {
      CTable ct{t.name, {}};
      for (const Size& c : t.columns) ct.widths.push_back(width(c));
      table_ids_[t.name] = static_cast<int>(out->tables.size());
      out->tables.push_back(std::move(ct));
    }
    for (const FunDecl& f : p_.funs) {
      auto it = prims_.find(f.name);
      if (it == prims_.end())
        throw ModelError("no implementation for primitive '" + f.name + "'");
      fun_ids_[f.name] = static_cast<int>(out->prims.size());
      out->prims.push_back(it->second);
      std::vector<int> sig;
      for (const Size& a : f.args) sig.push_back(width(a));
      fun_sig_[f.name] = {sig, width(f.result)};
    }

    int max_inst = 1;
    for (const Process& pr : p_.processes)
      if (pr.kind == ProcessKind::kReplicated) max_inst = std::max(max_inst, bound(pr.bound));

    for (const Process& pr : p_.processes) {
      for (const OracleDecl& o : pr.oracles) {
        COracle co;
        co.name = o.name;
        auto it = w_.origin.find(o.name);
        co.origin = it == w_.origin.end() ? Origin::kProgram : it->second;
        co.exported = p_.exports_name(o.name);
        co.continuation = pr.kind == ProcessKind::kContinuation;
        co.instances = pr.kind == ProcessKind::kReplicated ? bound(pr.bound)
                       : pr.kind == ProcessKind::kSingle   ? 1
                                                           : max_inst;
        out->oracle_ids[o.name] = static_cast<int>(out->oracles.size());
        out->oracles.push_back(std::move(co));
        owners_[o.name] = &pr;
      }
    }

    auto persistent = persistent_variables(p_);
    for (const auto& key : persistent) persistent_.insert(key);

    // pass 0 learns variable widths, pass 1 produces code
    for (pass_ = 0; pass_ < 2; ++pass_) {
      if (pass_ == 1) allocate_persistent(*out, persistent);
      for (const Process& pr : p_.processes)
        for (const OracleDecl& o : pr.oracles) oracle(pr, o);
    }
    return out;
  }

 private:
  int width(const Size& s) {
    Linear l = sizes_.resolve_or_throw(s);
    std::int64_t v = l.at(n_);
    if (v < 1) throw ModelError("width '" + std::to_string(v) + "' is not positive");
    if (v > kMaxBitWidth)
      throw SpaceTooLarge("width " + std::to_string(v) + " at n=" + std::to_string(n_) +
                          " exceeds 64 bits");
    return static_cast<int>(v);
  }
  int bound(const Size& s) {
    Linear l = sizes_.resolve_or_throw(s);
    std::int64_t v = l.at(n_);
    if (v < 1) throw ModelError("replication bound is not positive");
    if (v > 4096) throw SpaceTooLarge("replication bound " + std::to_string(v) + " too large");
    return static_cast<int>(v);
  }

  void allocate_persistent(CompiledWorld& out, const std::vector<VarKey>& keys) {
    for (const VarKey& k : keys) {
      auto wit = var_width_.find(k);
      if (wit == var_width_.end())
        throw ModelError("cannot infer the width of " + k.first + "." + k.second);
      CPersist cp;
      cp.owner = k.first;
      cp.var = k.second;
      cp.width = wit->second;
      cp.instances = out.oracles[static_cast<std::size_t>(out.oracle_id(k.first))].instances;
      cp.offset = out.persist_slots;
      out.persist_slots += cp.instances;
      pids_[k] = static_cast<int>(out.persist.size());
      out.persist.push_back(std::move(cp));
    }
  }

  int pid_of(const std::string& oracle, const std::string& var) const {
    auto it = pids_.find({oracle, var});
    return it == pids_.end() ? -1 : it->second;
  }

  // owner oracle of an indexed read
  std::string read_owner(const std::string& var) const {
    for (const ReadDecl& r : p_.reads)
      if (r.var == var) return resolve_read_owner(p_, r.owner, var);
    return {};
  }

  struct Frame {
    std::string oracle;
    std::map<std::string, int> slots;
    std::map<std::string, int> widths;
    int next = 0;
    int slot(const std::string& v) {
      auto it = slots.find(v);
      if (it != slots.end()) return it->second;
      slots[v] = next;
      return next++;
    }
  };

  void note_width(Frame& f, const std::string& var, int w) {
    f.widths[var] = w;
    if (w > 0) var_width_[{f.oracle, var}] = w;
  }

  CExpr expr(const Expr& e, Frame& f) {
    CExpr c;
    switch (e.kind) {
      case ExprKind::kVar: {
        int pid = pid_of(f.oracle, e.name);
        if (pass_ == 1 && pid >= 0) {
          c.op = COp::kPersist;
          c.pid = pid;
        } else {
          c.op = COp::kLocal;
          c.slot = f.slot(e.name);
        }
        auto it = f.widths.find(e.name);
        c.width = it == f.widths.end() ? 0 : it->second;
        return c;
      }
      case ExprKind::kIndex: {
        std::string owner = read_owner(e.name);
        c.op = COp::kIndexed;
        c.slot = f.slot(e.index);
        auto it = var_width_.find({owner, e.name});
        c.width = it == var_width_.end() ? 0 : it->second;
        if (pass_ == 1) {
          c.pid = pid_of(owner, e.name);
          if (c.pid < 0) throw ModelError("indexed read of non-persistent " + e.name);
        }
        return c;
      }
      case ExprKind::kLit:
        c.op = COp::kLit;
        c.lit = e.lit.value();
        c.width = e.lit.width();
        return c;
      case ExprKind::kZero:
        c.op = COp::kLit;
        c.width = width(e.size);
        return c;
      case ExprKind::kTrunc:
        c.op = COp::kTrunc;
        c.args.push_back(expr(e.args[0], f));
        c.width = width(e.size);
        return c;
      case ExprKind::kXor:
      case ExprKind::kConcat:
      case ExprKind::kEq:
      case ExprKind::kNeq:
      case ExprKind::kAnd: {
        c.op = e.kind == ExprKind::kXor      ? COp::kXor
               : e.kind == ExprKind::kConcat ? COp::kConcat
               : e.kind == ExprKind::kEq     ? COp::kEq
               : e.kind == ExprKind::kNeq    ? COp::kNeq
                                             : COp::kAnd;
        c.args.push_back(expr(e.args[0], f));
        c.args.push_back(expr(e.args[1], f));
        int a = c.args[0].width, b = c.args[1].width;
        if (c.op == COp::kXor) c.width = a ? a : b;
        else if (c.op == COp::kConcat) c.width = a && b ? a + b : 0;
        else c.width = 1;
        if (c.op == COp::kConcat && c.width > kMaxBitWidth)
          throw SpaceTooLarge("concatenation wider than 64 bits at n=" + std::to_string(n_));
        return c;
      }
      case ExprKind::kNot:
      case ExprKind::kInc:
        c.op = e.kind == ExprKind::kNot ? COp::kNot : COp::kInc;
        c.args.push_back(expr(e.args[0], f));
        c.width = e.kind == ExprKind::kNot ? 1 : c.args[0].width;
        return c;
      case ExprKind::kDefined:
        c.op = COp::kDefined;
        for (const Expr& a : e.args) c.args.push_back(expr(a, f));
        c.width = 1;
        return c;
      case ExprKind::kApp: {
        c.op = COp::kApp;
        auto it = fun_ids_.find(e.name);
        if (it == fun_ids_.end()) throw ModelError("unknown primitive '" + e.name + "'");
        c.fn = it->second;
        for (const Expr& a : e.args) c.args.push_back(expr(a, f));
        c.width = fun_sig_[e.name].second;
        return c;
      }
    }
    return c;
  }

  void target(CStmt& c, Frame& f, const std::string& var, int w) {
    c.slot = f.slot(var);
    note_width(f, var, w);
    if (pass_ == 1) c.pid = pid_of(f.oracle, var);
  }

  CStmt stmt(const Stmt& s, Frame& f) {
    CStmt c;
    c.pos = s.pos;
    switch (s.kind) {
      case StmtKind::kYield:
        c.kind = CStmtKind::kYield;
        return c;
      case StmtKind::kReturn:
        c.kind = CStmtKind::kReturn;
        for (const Expr& e : s.exprs) c.exprs.push_back(expr(e, f));
        return c;
      case StmtKind::kRun: {
        c.kind = CStmtKind::kRun;
        for (const Expr& e : s.exprs) c.exprs.push_back(expr(e, f));
        c.target = world_->oracle_id(s.name);
        if (c.target < 0) throw ModelError("run of unknown oracle '" + s.name + "'");
        return c;
      }
      case StmtKind::kSample:
        c.kind = CStmtKind::kSample;
        c.width = width(s.size);
        target(c, f, s.var, c.width);
        c.next.push_back(stmt(s.next[0], f));
        return c;
      case StmtKind::kLet: {
        c.kind = CStmtKind::kAssign;
        c.cond = expr(s.expr, f);
        target(c, f, s.var, c.cond.width);
        c.width = c.cond.width;
        c.next.push_back(stmt(s.next[0], f));
        return c;
      }
      case StmtKind::kInsert:
        c.kind = CStmtKind::kInsert;
        c.table = table_ids_.at(s.name);
        for (const Expr& e : s.exprs) c.exprs.push_back(expr(e, f));
        c.next.push_back(stmt(s.next[0], f));
        return c;
      case StmtKind::kGet: {
        c.kind = CStmtKind::kGet;
        c.table = table_ids_.at(s.name);
        const CTable& t = world_->tables[static_cast<std::size_t>(c.table)];
        Frame inner = f;
        for (std::size_t i = 0; i < s.pats.size(); ++i) {
          const Pattern& pt = s.pats[i];
          CPattern cp;
          if (pt.is_expr) {
            cp.kind = CPattern::kExpr;
            cp.expr = expr(pt.expr, f);
          } else if (f.widths.count(pt.name)) {
            int pid = pass_ == 1 ? pid_of(f.oracle, pt.name) : -1;
            cp.kind = pid >= 0 ? CPattern::kMatchPersist : CPattern::kMatchLocal;
            cp.pid = pid;
            cp.slot = f.slot(pt.name);
          } else {
            cp.kind = CPattern::kBind;
            cp.slot = inner.slot(pt.name);
            note_width(inner, pt.name, t.widths[i]);
            cp.pid = pass_ == 1 ? pid_of(f.oracle, pt.name) : -1;
          }
          c.pats.push_back(std::move(cp));
        }
        c.has_cond = s.has_cond;
        if (s.has_cond) c.cond = expr(s.expr, inner);
        c.next.push_back(stmt(s.next[0], inner));
        f.next = std::max(f.next, inner.next);
        merge_slots(f, inner);
        c.next.push_back(stmt(s.next[1], f));
        return c;
      }
      case StmtKind::kFind: {
        c.kind = CStmtKind::kFind;
        c.bound = bound(s.size);
        Frame inner = f;
        c.slot = inner.slot(s.var);
        inner.widths.erase(s.var);
        c.has_cond = true;
        c.cond = expr(s.expr, inner);
        c.next.push_back(stmt(s.next[0], inner));
        merge_slots(f, inner);
        c.next.push_back(stmt(s.next[1], f));
        return c;
      }
      case StmtKind::kIf: {
        c.kind = CStmtKind::kIf;
        c.has_cond = true;
        c.cond = expr(s.expr, f);
        Frame a = f;
        c.next.push_back(stmt(s.next[0], a));
        merge_slots(f, a);
        c.next.push_back(stmt(s.next[1], f));
        return c;
      }
    }
    return c;
  }

  // Keep slot numbers unique across sibling branches: a name first seen in a
  // branch keeps its slot for the whole oracle.
  static void merge_slots(Frame& f, const Frame& branch) {
    for (const auto& [name, slot] : branch.slots)
      if (!f.slots.count(name)) f.slots[name] = slot;
    f.next = std::max(f.next, branch.next);
  }

  void oracle(const Process& pr, const OracleDecl& o) {
    COracle& co = world_->oracles[static_cast<std::size_t>(world_->oracle_id(o.name))];
    Frame f;
    f.oracle = o.name;
    co.param_slots.clear();
    co.param_widths.clear();
    co.param_pids.clear();
    for (const Param& q : o.params) {
      int w = width(q.width);
      co.param_slots.push_back(f.slot(q.name));
      co.param_widths.push_back(w);
      note_width(f, q.name, w);
      co.param_pids.push_back(pass_ == 1 ? pid_of(o.name, q.name) : -1);
    }
    if (pr.kind == ProcessKind::kReplicated) co.index_slot = f.slot(pr.index);
    else co.index_slot = f.slot("'instance");
    co.body = stmt(o.body, f);
    co.frame_size = f.next;
  }

  const WholeProgram& w_;
  const OracleProgram& p_;
  SizeEnv sizes_;
  int n_;
  const PrimitiveTable& prims_;
  CompiledWorld* world_ = nullptr;
  int pass_ = 0;
  std::map<std::string, int> table_ids_;
  std::map<std::string, int> fun_ids_;
  std::map<std::string, std::pair<std::vector<int>, int>> fun_sig_;
  std::map<std::string, const Process*> owners_;
  std::set<VarKey> persistent_;
  std::map<VarKey, int> var_width_;
  std::map<VarKey, int> pids_;
};

}  // namespace

std::shared_ptr<const CompiledWorld> compile(const WholeProgram& w, int n,
                                             const PrimitiveTable& prims) {
  if (n < 1) throw ModelError("security parameter must be positive");
  return Compiler(w, n, prims).run();
}

}  // namespace ucrc
