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

#include "ucrc/lang/link.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "ucrc/common/error.hpp"
#include "ucrc/lang/validate.hpp"

namespace ucrc {

const char* origin_name(Origin o) {
  switch (o) {
    case Origin::kContext: return "context";
    case Origin::kProgram: return "program";
    case Origin::kEnvironment: return "environment";
  }
  return "?";
}

std::string qualify(Origin role, const std::string& name) {
  return std::string(role == Origin::kContext ? "ctx'" : "prg'") + name;
}

OracleProgram empty_context() {
  OracleProgram p;
  p.name = "empty";
  return p;
}

namespace {

struct Side {
  Origin role;
  const OracleProgram* self;
  const OracleProgram* partner;
  Origin partner_role;
};

// Merged name of an oracle declared by `p` under `role`.
std::string oracle_name(const OracleProgram& p, Origin role, const std::string& name) {
  return p.exports_name(name) ? name : qualify(role, name);
}

class Renamer {
 public:
  Renamer(const Side& side, std::map<std::string, std::string> var_owner_role)
      : s_(side), foreign_var_(std::move(var_owner_role)) {}

  Size size(Size z) const {
    for (SizeTerm& t : z.terms)
      if (!t.sym.empty() && t.sym != "n") t.sym = qualify(s_.role, t.sym);
    return z;
  }

  std::string var(const std::string& v) const { return qualify(s_.role, v); }

  std::string indexed(const std::string& v) const {
    auto it = foreign_var_.find(v);
    return it == foreign_var_.end() ? qualify(s_.role, v) : it->second;
  }

  std::string oracle(const std::string& nm) const {
    if (s_.self->find_oracle(nm).second) return oracle_name(*s_.self, s_.role, nm);
    if (s_.partner->find_oracle(nm).second) return oracle_name(*s_.partner, s_.partner_role, nm);
    return qualify(s_.role, nm);
  }

  Expr expr(Expr e) const {
    switch (e.kind) {
      case ExprKind::kVar: e.name = var(e.name); break;
      case ExprKind::kIndex:
        e.name = indexed(e.name);
        e.index = var(e.index);
        break;
      case ExprKind::kZero:
      case ExprKind::kTrunc: e.size = size(e.size); break;
      default: break;
    }
    for (Expr& a : e.args) a = expr(std::move(a));
    return e;
  }

  Stmt stmt(Stmt s) const {
    if (!s.var.empty()) s.var = var(s.var);
    switch (s.kind) {
      case StmtKind::kInsert:
      case StmtKind::kGet: s.name = qualify(s_.role, s.name); break;
      case StmtKind::kRun: s.name = oracle(s.name); break;
      default: break;
    }
    if (s.kind == StmtKind::kSample || s.kind == StmtKind::kFind) s.size = size(s.size);
    if (s.kind == StmtKind::kLet || s.has_cond) s.expr = expr(std::move(s.expr));
    for (Expr& e : s.exprs) e = expr(std::move(e));
    for (Pattern& p : s.pats) {
      if (p.is_expr) p.expr = expr(std::move(p.expr));
      else p.name = var(p.name);
    }
    for (Stmt& c : s.next) c = stmt(std::move(c));
    return s;
  }

 private:
  Side s_;
  std::map<std::string, std::string> foreign_var_;
};

void absorb(const Side& side, OracleProgram& out, std::map<std::string, Origin>& origin,
            std::vector<FunDecl>& funs) {
  const OracleProgram& p = *side.self;
  // reads: resolve each owner in this program first, then the partner
  std::map<std::string, std::string> var_map;
  for (const ReadDecl& r : p.reads) {
    Origin role = side.role;
    const OracleProgram* where = side.self;
    std::string owner = resolve_read_owner(p, r.owner, r.var);
    if (owner.empty() && !p.find_process(r.owner) && !p.find_oracle(r.owner).second) {
      owner = resolve_read_owner(*side.partner, r.owner, r.var);
      role = side.partner_role;
      where = side.partner;
    }
    if (owner.empty())
      throw LinkError("reads target " + r.owner + "." + r.var + " of " +
                      (p.name.empty() ? std::string(origin_name(side.role)) : p.name) +
                      " is absent");
    ReadDecl q = r;
    q.owner = oracle_name(*where, role, owner);
    q.var = qualify(role, r.var);
    var_map[r.var] = q.var;
    out.reads.push_back(std::move(q));
  }
  for (const NameRef& c : p.calls) {
    if (!side.partner->find_oracle(c.name).second)
      throw LinkError("calls target '" + c.name + "' of " + origin_name(side.role) +
                      " is absent");
  }
  Renamer rn(side, var_map);
  for (const ParamDecl& d : p.params)
    out.params.push_back({qualify(side.role, d.name), rn.size(d.value), d.pos});
  for (const TypeDecl& d : p.types)
    out.types.push_back({qualify(side.role, d.name), rn.size(d.width), d.pos});
  for (const TableDecl& d : p.tables) {
    TableDecl t{qualify(side.role, d.name), {}, d.pos};
    for (const Size& c : d.columns) t.columns.push_back(rn.size(c));
    out.tables.push_back(std::move(t));
  }
  for (const FunDecl& d : p.funs) {
    FunDecl f{d.name, {}, rn.size(d.result), d.pos};
    for (const Size& a : d.args) f.args.push_back(rn.size(a));
    funs.push_back(std::move(f));
  }
  for (const Process& pr : p.processes) {
    Process q;
    q.kind = pr.kind;
    q.pos = pr.pos;
    q.name = pr.kind == ProcessKind::kReplicated ? qualify(side.role, pr.name)
                                                 : oracle_name(p, side.role, pr.name);
    q.index = pr.index.empty() ? std::string() : rn.var(pr.index);
    q.bound = rn.size(pr.bound);
    for (const OracleDecl& o : pr.oracles) {
      OracleDecl d;
      d.name = oracle_name(p, side.role, o.name);
      d.pos = o.pos;
      for (const Param& prm : o.params) d.params.push_back({rn.var(prm.name), rn.size(prm.width), prm.pos});
      d.body = rn.stmt(o.body);
      origin[d.name] = side.role;
      q.oracles.push_back(std::move(d));
    }
    out.processes.push_back(std::move(q));
  }
  for (const NameRef& e : p.exports) out.exports.push_back(e);
}

std::string diag_text(const std::vector<Diagnostic>& ds) {
  std::string s;
  for (const Diagnostic& d : ds)
    if (d.severity == Severity::kError) s += (s.empty() ? "" : "; ") + d.format("<model>");
  return s;
}

}  // namespace

WholeProgram link(const OracleProgram& ctx, const OracleProgram& prg) {
  auto dc = validate(ctx);
  if (has_errors(dc)) throw ModelError("context does not validate: " + diag_text(dc));
  auto dp = validate(prg);
  if (has_errors(dp)) throw ModelError("program does not validate: " + diag_text(dp));

  for (const NameRef& e : ctx.exports)
    if (prg.exports_name(e.name))
      throw LinkError("export '" + e.name + "' collides between context and program");

  WholeProgram w;
  w.context = ctx;
  w.program = prg;
  w.merged.name = (ctx.name.empty() ? "ctx" : ctx.name) + "_" + (prg.name.empty() ? "prg" : prg.name);
  std::vector<FunDecl> funs;
  absorb({Origin::kContext, &ctx, &prg, Origin::kProgram}, w.merged, w.origin, funs);
  absorb({Origin::kProgram, &prg, &ctx, Origin::kContext}, w.merged, w.origin, funs);

  std::vector<ReadDecl> reads;
  for (const ReadDecl& r : w.merged.reads)
    if (std::none_of(reads.begin(), reads.end(), [&](const ReadDecl& q) {
          return q.owner == r.owner && q.var == r.var;
        }))
      reads.push_back(r);
  w.merged.reads = std::move(reads);

  // primitives are global: equal names must agree on their signature
  SizeEnv sizes(w.merged);
  for (const FunDecl& f : funs) {
    auto it = std::find_if(w.merged.funs.begin(), w.merged.funs.end(),
                           [&](const FunDecl& g) { return g.name == f.name; });
    if (it == w.merged.funs.end()) {
      w.merged.funs.push_back(f);
      continue;
    }
    bool same = it->args.size() == f.args.size() &&
                sizes.resolve(it->result) == sizes.resolve(f.result);
    for (std::size_t i = 0; same && i < f.args.size(); ++i)
      same = sizes.resolve(it->args[i]) == sizes.resolve(f.args[i]);
    if (!same) throw LinkError("primitive '" + f.name + "' declared with different signatures");
  }
  for (const NameRef& e : w.merged.exports) w.exports.push_back(e.name);
  std::sort(w.exports.begin(), w.exports.end());

  auto dm = validate(w.merged);
  if (has_errors(dm)) throw LinkError("linked program does not validate: " + diag_text(dm));
  return w;
}

}  // namespace ucrc
