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

#include "ucrc/lang/validate.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "ucrc/common/error.hpp"
#include "ucrc/lang/syntax.hpp"

namespace ucrc {

SizeEnv::SizeEnv(const OracleProgram& p) {
  for (const ParamDecl& d : p.params) defs_[d.name] = &d.value;
  for (const TypeDecl& d : p.types) defs_[d.name] = &d.width;
}

std::optional<Linear> SizeEnv::symbol(const std::string& name, std::string* err,
                                      int depth) const {
  if (name == "n") return Linear{1, 0};
  auto it = defs_.find(name);
  if (it == defs_.end()) {
    if (err) *err = "unknown size symbol '" + name + "'";
    return std::nullopt;
  }
  if (depth > 32) {
    if (err) *err = "cyclic size definition '" + name + "'";
    return std::nullopt;
  }
  return resolve_depth(*it->second, err, depth + 1);
}

std::optional<Linear> SizeEnv::resolve_depth(const Size& s, std::string* err, int depth) const {
  Linear out;
  for (const SizeTerm& t : s.terms) {
    if (t.sym.empty()) {
      out.b += t.coeff;
      continue;
    }
    auto v = symbol(t.sym, err, depth);
    if (!v) return std::nullopt;
    out.a += t.coeff * v->a;
    out.b += t.coeff * v->b;
  }
  return out;
}

std::optional<Linear> SizeEnv::resolve(const Size& s, std::string* err) const {
  return resolve_depth(s, err, 0);
}

Linear SizeEnv::resolve_or_throw(const Size& s) const {
  std::string err;
  auto v = resolve(s, &err);
  if (!v) throw ModelError(err);
  return *v;
}

std::string Diagnostic::format(const std::string& file) const {
  return file + ":" + std::to_string(pos.line) + ":" + std::to_string(pos.col) + ": " +
         (severity == Severity::kError ? "error" : "warning") + ": " + message;
}

bool has_errors(const std::vector<Diagnostic>& ds) {
  return std::any_of(ds.begin(), ds.end(),
                     [](const Diagnostic& d) { return d.severity == Severity::kError; });
}

namespace {

void collect_defs(const Stmt& s, std::vector<std::string>& out) {
  if (s.kind == StmtKind::kSample || s.kind == StmtKind::kLet) {
    if (std::find(out.begin(), out.end(), s.var) == out.end()) out.push_back(s.var);
  }
  for (const Stmt& c : s.next) collect_defs(c, out);
}

void walk_exprs(const Expr& e, const std::function<void(const Expr&)>& f) {
  f(e);
  for (const Expr& a : e.args) walk_exprs(a, f);
}

void walk_stmt_exprs(const Stmt& s, const std::function<void(const Expr&)>& f) {
  if (s.kind == StmtKind::kLet || s.has_cond) walk_exprs(s.expr, f);
  for (const Expr& e : s.exprs) walk_exprs(e, f);
  for (const Pattern& p : s.pats)
    if (p.is_expr) walk_exprs(p.expr, f);
  for (const Stmt& c : s.next) walk_stmt_exprs(c, f);
}

}  // namespace

std::vector<std::string> defined_variables(const OracleDecl& o) {
  std::vector<std::string> out;
  collect_defs(o.body, out);
  // get patterns bind too
  std::function<void(const Stmt&)> pats = [&](const Stmt& s) {
    for (const Pattern& p : s.pats)
      if (!p.is_expr && std::find(out.begin(), out.end(), p.name) == out.end()) {
        bool is_param = std::any_of(o.params.begin(), o.params.end(),
                                    [&](const Param& q) { return q.name == p.name; });
        if (!is_param) out.push_back(p.name);
      }
    for (const Stmt& c : s.next) pats(c);
  };
  pats(o.body);
  return out;
}

std::string resolve_read_owner(const OracleProgram& p, const std::string& owner,
                               const std::string& var) {
  std::vector<std::string> hits;
  for (const Process& pr : p.processes) {
    for (const OracleDecl& o : pr.oracles) {
      if (pr.name != owner && o.name != owner) continue;
      std::vector<std::string> defs = defined_variables(o);
      bool param = std::any_of(o.params.begin(), o.params.end(),
                               [&](const Param& q) { return q.name == var; });
      if (param || std::find(defs.begin(), defs.end(), var) != defs.end()) hits.push_back(o.name);
    }
  }
  return hits.size() == 1 ? hits.front() : std::string();
}

std::vector<std::pair<std::string, std::string>> persistent_variables(const OracleProgram& p) {
  std::set<std::pair<std::string, std::string>> out;
  std::set<std::string> referenced;
  for (const Process& pr : p.processes)
    for (const OracleDecl& o : pr.oracles)
      walk_stmt_exprs(o.body, [&](const Expr& e) {
        if (e.kind == ExprKind::kIndex) referenced.insert(e.name);
      });
  for (const ReadDecl& r : p.reads) {
    if (!referenced.count(r.var)) continue;
    std::string o = resolve_read_owner(p, r.owner, r.var);
    if (!o.empty()) out.insert({o, r.var});
  }
  return {out.begin(), out.end()};
}

namespace {

struct Ty {
  enum Kind { kBool, kBits, kUnknown } kind = kUnknown;
  Linear w;
  static Ty boolean() { return Ty{kBool, {}}; }
  static Ty bits(Linear l) { return Ty{kBits, l}; }
  static Ty unknown() { return Ty{kUnknown, {}}; }
};

std::string show(const Linear& l) {
  if (l.a == 0) return std::to_string(l.b);
  std::string s = (l.a == 1 ? "" : std::to_string(l.a)) + "n";
  if (l.b > 0) s += " + " + std::to_string(l.b);
  if (l.b < 0) s += " - " + std::to_string(-l.b);
  return s;
}

bool positive(const Linear& l) { return l.a >= 0 && l.at(1) >= 1; }
bool le(const Linear& x, const Linear& y) { return x.a <= y.a && x.at(1) <= y.at(1); }

class Checker {
 public:
  explicit Checker(const OracleProgram& p) : p_(p), sizes_(p) {}

  std::vector<Diagnostic> run() {
    declarations();
    // two passes: the first learns variable widths, the second reports
    for (int pass = 0; pass < 2; ++pass) {
      report_ = pass == 1;
      for (const Process& pr : p_.processes)
        for (const OracleDecl& o : pr.oracles) oracle(pr, o);
    }
    unused();
    return std::move(diags_);
  }

 private:
  void error(Pos pos, std::string msg) {
    if (report_) diags_.push_back({Severity::kError, pos, std::move(msg)});
  }
  void early_error(Pos pos, std::string msg) {
    diags_.push_back({Severity::kError, pos, std::move(msg)});
  }

  std::optional<Linear> size(const Size& s, Pos pos, bool early = false) {
    std::string err;
    auto v = sizes_.resolve(s, &err);
    if (!v) {
      if (early) early_error(pos, err);
      else error(pos, err);
      return std::nullopt;
    }
    if (!positive(*v)) {
      std::string msg = "size '" + print_size(s) + "' is not positive for every n";
      if (early) early_error(pos, msg);
      else error(pos, msg);
      return std::nullopt;
    }
    return v;
  }

  void declarations() {
    std::set<std::string> seen;
    auto unique = [&](const std::string& kind, const std::string& name, Pos pos) {
      if (!seen.insert(kind + ":" + name).second)
        early_error(pos, "duplicate " + kind + " '" + name + "'");
    };
    for (const ParamDecl& d : p_.params) {
      unique("size name", d.name, d.pos);
      if (d.name == "n") early_error(d.pos, "'n' is reserved for the security parameter");
    }
    for (const TypeDecl& d : p_.types) {
      unique("size name", d.name, d.pos);
      if (d.name == "n") early_error(d.pos, "'n' is reserved for the security parameter");
    }
    for (const ParamDecl& d : p_.params) size(d.value, d.pos, true);
    for (const TypeDecl& d : p_.types) size(d.width, d.pos, true);
    for (const FunDecl& d : p_.funs) {
      unique("function", d.name, d.pos);
      for (const Size& s : d.args) size(s, d.pos, true);
      size(d.result, d.pos, true);
    }
    for (const TableDecl& d : p_.tables) {
      unique("table", d.name, d.pos);
      for (const Size& s : d.columns) size(s, d.pos, true);
    }
    for (const Process& pr : p_.processes) {
      if (pr.kind == ProcessKind::kReplicated) {
        unique("process", pr.name, pr.pos);
        size(pr.bound, pr.pos, true);
      }
      for (const OracleDecl& o : pr.oracles) {
        unique("oracle", o.name, o.pos);
        std::set<std::string> ps;
        for (const Param& q : o.params) {
          if (!ps.insert(q.name).second)
            early_error(q.pos, "duplicate parameter '" + q.name + "' in oracle " + o.name);
          size(q.width, q.pos, true);
        }
      }
    }
    for (const Process& pr : p_.processes)
      if (pr.kind == ProcessKind::kReplicated)
        for (const OracleDecl& o : pr.oracles)
          if (seen.count("oracle:" + pr.name) || pr.name == o.name)
            early_error(pr.pos, "process name '" + pr.name + "' clashes with an oracle");
    std::set<std::string> ex;
    for (const NameRef& e : p_.exports) {
      if (!ex.insert(e.name).second) early_error(e.pos, "oracle '" + e.name + "' exported twice");
      auto [pr, o] = p_.find_oracle(e.name);
      if (!o) {
        early_error(e.pos, "exported oracle '" + e.name + "' is not declared");
      } else if (pr->kind == ProcessKind::kContinuation) {
        early_error(e.pos, "continuation '" + e.name + "' cannot be exported");
      }
    }
    for (const NameRef& c : p_.calls)
      if (p_.find_oracle(c.name).second)
        early_error(c.pos, "'calls " + c.name + "' names a local oracle");
    for (const ReadDecl& r : p_.reads) {
      bool local_owner = p_.find_process(r.owner) || p_.find_oracle(r.owner).second;
      if (local_owner && resolve_read_owner(p_, r.owner, r.var).empty())
        early_error(r.pos, "reads " + r.owner + "." + r.var +
                               ": no unique oracle of that name defines the variable");
    }
  }

  // Width learned for (owner oracle, var); unknown if foreign or untyped.
  Ty foreign(const std::string& var) {
    std::vector<const ReadDecl*> hits;
    for (const ReadDecl& r : p_.reads)
      if (r.var == var) hits.push_back(&r);
    if (hits.size() != 1) return Ty::unknown();
    std::string owner = resolve_read_owner(p_, hits[0]->owner, var);
    if (owner.empty()) return Ty::unknown();
    auto it = widths_.find({owner, var});
    if (it == widths_.end()) return Ty::unknown();
    return Ty::bits(it->second);
  }

  // Guess of the owner of an undeclared foreign read, for the diagnostic.
  std::string guess_owner(const std::string& var) {
    for (const Process& pr : p_.processes)
      for (const OracleDecl& o : pr.oracles) {
        std::vector<std::string> defs = defined_variables(o);
        for (const Param& q : o.params) defs.push_back(q.name);
        if (std::find(defs.begin(), defs.end(), var) != defs.end())
          return pr.kind == ProcessKind::kReplicated ? pr.name : o.name;
      }
    return "?";
  }

  struct Scope {
    std::map<std::string, Ty> vars;
    std::set<std::string> indices;
  };

  Ty expr(const Expr& e, const Scope& sc) {
    auto bits_of = [&](const Expr& x) {
      Ty t = expr(x, sc);
      if (t.kind == Ty::kBool) error(x.pos, "boolean used where a bitstring is expected");
      return t;
    };
    auto bool_of = [&](const Expr& x) {
      Ty t = expr(x, sc);
      if (t.kind == Ty::kBits) error(x.pos, "bitstring used where a condition is expected");
    };
    switch (e.kind) {
      case ExprKind::kVar: {
        used_.insert({cur_, e.name});
        auto it = sc.vars.find(e.name);
        if (it == sc.vars.end()) {
          if (sc.indices.count(e.name))
            error(e.pos, "index '" + e.name + "' used as a value");
          else
            error(e.pos, "variable '" + e.name + "' used before definition");
          return Ty::unknown();
        }
        return it->second;
      }
      case ExprKind::kIndex: {
        if (!sc.indices.count(e.index))
          error(e.pos, "'" + e.index + "' is not an index variable in scope");
        std::vector<const ReadDecl*> hits;
        for (const ReadDecl& r : p_.reads)
          if (r.var == e.name) hits.push_back(&r);
        if (hits.empty()) {
          // one diagnostic per variable
          if (report_ && undeclared_.insert(e.name).second)
            error(e.pos, "undeclared foreign read of (" + guess_owner(e.name) + ", " + e.name +
                             ")");
          return Ty::unknown();
        }
        if (hits.size() > 1) {
          error(e.pos, "ambiguous foreign read of '" + e.name + "' (declared for several owners)");
          return Ty::unknown();
        }
        return foreign(e.name);
      }
      case ExprKind::kLit:
        if (e.lit.width() == 0) error(e.pos, "empty bitstring literal");
        return Ty::bits(Linear{0, e.lit.width()});
      case ExprKind::kZero: {
        auto w = size(e.size, e.pos);
        return w ? Ty::bits(*w) : Ty::unknown();
      }
      case ExprKind::kXor: {
        Ty a = bits_of(e.args[0]), b = bits_of(e.args[1]);
        if (a.kind == Ty::kBits && b.kind == Ty::kBits) {
          if (!(a.w == b.w)) {
            error(e.pos, "xor of widths " + show(a.w) + " and " + show(b.w));
            return Ty::unknown();
          }
          return a;
        }
        return a.kind == Ty::kBits ? a : b;
      }
      case ExprKind::kConcat: {
        Ty a = bits_of(e.args[0]), b = bits_of(e.args[1]);
        if (a.kind == Ty::kBits && b.kind == Ty::kBits)
          return Ty::bits(Linear{a.w.a + b.w.a, a.w.b + b.w.b});
        return Ty::unknown();
      }
      case ExprKind::kTrunc: {
        Ty a = bits_of(e.args[0]);
        auto w = size(e.size, e.pos);
        if (!w) return Ty::unknown();
        if (a.kind == Ty::kBits && !le(*w, a.w))
          error(e.pos, "trunc to " + show(*w) + " exceeds width " + show(a.w));
        return Ty::bits(*w);
      }
      case ExprKind::kEq:
      case ExprKind::kNeq: {
        Ty a = bits_of(e.args[0]), b = bits_of(e.args[1]);
        if (a.kind == Ty::kBits && b.kind == Ty::kBits && !(a.w == b.w))
          error(e.pos, "comparison of widths " + show(a.w) + " and " + show(b.w));
        return Ty::boolean();
      }
      case ExprKind::kAnd:
        bool_of(e.args[0]);
        bool_of(e.args[1]);
        return Ty::boolean();
      case ExprKind::kNot:
        bool_of(e.args[0]);
        return Ty::boolean();
      case ExprKind::kInc:
        return bits_of(e.args[0]);
      case ExprKind::kDefined:
        for (const Expr& a : e.args) {
          if (a.kind != ExprKind::kIndex) error(a.pos, "defined() takes indexed references");
          else expr(a, sc);
        }
        return Ty::boolean();
      case ExprKind::kApp: {
        const FunDecl* f = nullptr;
        for (const FunDecl& d : p_.funs)
          if (d.name == e.name) f = &d;
        if (!f) {
          error(e.pos, "unknown function '" + e.name + "'");
          for (const Expr& a : e.args) expr(a, sc);
          return Ty::unknown();
        }
        if (f->args.size() != e.args.size()) {
          error(e.pos, "function '" + e.name + "' takes " + std::to_string(f->args.size()) +
                           " arguments");
        } else {
          for (std::size_t i = 0; i < e.args.size(); ++i) {
            Ty t = bits_of(e.args[i]);
            auto w = sizes_.resolve(f->args[i]);
            if (t.kind == Ty::kBits && w && !(t.w == *w))
              error(e.args[i].pos, "argument " + std::to_string(i + 1) + " of '" + e.name +
                                       "' has width " + show(t.w) + ", expected " + show(*w));
          }
        }
        auto r = sizes_.resolve(f->result);
        return r ? Ty::bits(*r) : Ty::unknown();
      }
    }
    return Ty::unknown();
  }

  void define(Scope& sc, const std::string& var, Ty t, Pos pos) {
    if (sc.indices.count(var)) error(pos, "'" + var + "' shadows an index variable");
    if (t.kind == Ty::kBool) {
      error(pos, "variable '" + var + "' bound to a condition");
      t = Ty::unknown();
    }
    if (t.kind == Ty::kBits) {
      auto key = std::make_pair(cur_, var);
      auto it = widths_.find(key);
      if (it == widths_.end()) {
        widths_[key] = t.w;
      } else if (!(it->second == t.w)) {
        error(pos, "variable '" + var + "' redefined with width " + show(t.w) + " (was " +
                       show(it->second) + ")");
      }
    }
    sc.vars[var] = t;
    defs_seen_.insert({cur_, var});
    def_pos_[{cur_, var}] = pos;
  }

  const TableDecl* table(const std::string& name, Pos pos) {
    for (const TableDecl& d : p_.tables)
      if (d.name == name) return &d;
    error(pos, "unknown table '" + name + "'");
    return nullptr;
  }

  void stmt(const Stmt& s, Scope sc) {
    switch (s.kind) {
      case StmtKind::kYield:
        return;
      case StmtKind::kReturn:
        for (const Expr& e : s.exprs) {
          Ty t = expr(e, sc);
          if (t.kind == Ty::kBool) error(e.pos, "return of a condition");
        }
        return;
      case StmtKind::kRun: {
        std::vector<Ty> args;
        for (const Expr& e : s.exprs) args.push_back(expr(e, sc));
        auto [pr, o] = p_.find_oracle(s.name);
        if (!o) {
          bool declared = std::any_of(p_.calls.begin(), p_.calls.end(),
                                      [&](const NameRef& r) { return r.name == s.name; });
          if (!declared) error(s.pos, "run of undeclared oracle '" + s.name + "'");
          return;
        }
        if (o->params.size() != args.size()) {
          error(s.pos, "run " + s.name + " with " + std::to_string(args.size()) +
                           " arguments, expected " + std::to_string(o->params.size()));
          return;
        }
        for (std::size_t i = 0; i < args.size(); ++i) {
          auto w = sizes_.resolve(o->params[i].width);
          if (args[i].kind == Ty::kBits && w && !(args[i].w == *w))
            error(s.exprs[i].pos, "argument width " + show(args[i].w) + ", expected " + show(*w));
        }
        return;
      }
      case StmtKind::kSample: {
        auto w = size(s.size, s.pos);
        define(sc, s.var, w ? Ty::bits(*w) : Ty::unknown(), s.pos);
        stmt(s.next[0], sc);
        return;
      }
      case StmtKind::kLet: {
        Ty t = expr(s.expr, sc);
        define(sc, s.var, t, s.pos);
        stmt(s.next[0], sc);
        return;
      }
      case StmtKind::kInsert: {
        const TableDecl* t = table(s.name, s.pos);
        std::vector<Ty> vals;
        for (const Expr& e : s.exprs) vals.push_back(expr(e, sc));
        if (t) {
          if (t->columns.size() != vals.size()) {
            error(s.pos, "insert into '" + s.name + "' with " + std::to_string(vals.size()) +
                             " columns, expected " + std::to_string(t->columns.size()));
          } else {
            for (std::size_t i = 0; i < vals.size(); ++i) {
              auto w = sizes_.resolve(t->columns[i]);
              if (vals[i].kind == Ty::kBool) error(s.exprs[i].pos, "condition inserted");
              if (vals[i].kind == Ty::kBits && w && !(vals[i].w == *w))
                error(s.exprs[i].pos, "column " + std::to_string(i + 1) + " has width " +
                                          show(*w) + ", got " + show(vals[i].w));
            }
          }
        }
        stmt(s.next[0], sc);
        return;
      }
      case StmtKind::kGet: {
        const TableDecl* t = table(s.name, s.pos);
        Scope inner = sc;
        if (t && t->columns.size() != s.pats.size())
          error(s.pos, "get from '" + s.name + "' with " + std::to_string(s.pats.size()) +
                           " patterns, expected " + std::to_string(t->columns.size()));
        std::set<std::string> bound;
        for (std::size_t i = 0; i < s.pats.size(); ++i) {
          const Pattern& pt = s.pats[i];
          std::optional<Linear> w;
          if (t && i < t->columns.size()) w = sizes_.resolve(t->columns[i]);
          if (pt.is_expr) {
            Ty et = expr(pt.expr, sc);
            if (et.kind == Ty::kBits && w && !(et.w == *w))
              error(pt.pos, "pattern width " + show(et.w) + ", column has " + show(*w));
          } else if (sc.vars.count(pt.name)) {
            used_.insert({cur_, pt.name});
            Ty et = sc.vars.at(pt.name);
            if (et.kind == Ty::kBits && w && !(et.w == *w))
              error(pt.pos, "pattern width " + show(et.w) + ", column has " + show(*w));
          } else {
            if (!bound.insert(pt.name).second)
              error(pt.pos, "pattern variable '" + pt.name + "' bound twice");
            define(inner, pt.name, w ? Ty::bits(*w) : Ty::unknown(), pt.pos);
          }
        }
        if (s.has_cond) {
          Ty c = expr(s.expr, inner);
          if (c.kind == Ty::kBits) error(s.expr.pos, "suchthat needs a condition");
        }
        stmt(s.next[0], inner);
        stmt(s.next[1], sc);
        return;
      }
      case StmtKind::kFind: {
        size(s.size, s.pos);
        Scope inner = sc;
        if (sc.vars.count(s.var)) error(s.pos, "index '" + s.var + "' shadows a variable");
        inner.indices.insert(s.var);
        Ty c = expr(s.expr, inner);
        if (c.kind == Ty::kBits) error(s.expr.pos, "suchthat needs a condition");
        stmt(s.next[0], inner);
        stmt(s.next[1], sc);
        return;
      }
      case StmtKind::kIf: {
        Ty c = expr(s.expr, sc);
        if (c.kind == Ty::kBits) error(s.expr.pos, "if needs a condition");
        stmt(s.next[0], sc);
        stmt(s.next[1], sc);
        return;
      }
    }
  }

  void oracle(const Process& pr, const OracleDecl& o) {
    cur_ = o.name;
    Scope sc;
    if (pr.kind == ProcessKind::kReplicated) sc.indices.insert(pr.index);
    for (const Param& q : o.params) {
      auto w = sizes_.resolve(q.width);
      Ty t = w ? Ty::bits(*w) : Ty::unknown();
      sc.vars[q.name] = t;
      if (w) widths_[{o.name, q.name}] = *w;
      if (pr.kind == ProcessKind::kReplicated && q.name == pr.index)
        error(q.pos, "parameter '" + q.name + "' shadows the replication index");
    }
    stmt(o.body, sc);
  }

  void unused() {
    std::set<std::string> read_vars;
    for (const ReadDecl& r : p_.reads) read_vars.insert(r.var);
    for (const auto& key : defs_seen_) {
      if (used_.count(key) || read_vars.count(key.second)) continue;
      if (!key.second.empty() && key.second[0] == '_') continue;
      diags_.push_back({Severity::kWarning, def_pos_[key],
                        "variable '" + key.second + "' in oracle " + key.first + " is never used"});
    }
  }

  const OracleProgram& p_;
  SizeEnv sizes_;
  bool report_ = false;
  std::string cur_;
  std::map<std::pair<std::string, std::string>, Linear> widths_;
  std::set<std::string> undeclared_;
  std::set<std::pair<std::string, std::string>> used_;
  std::set<std::pair<std::string, std::string>> defs_seen_;
  std::map<std::pair<std::string, std::string>, Pos> def_pos_;
  std::vector<Diagnostic> diags_;
};

}  // namespace

std::vector<Diagnostic> validate(const OracleProgram& p) {
  std::vector<Diagnostic> d = Checker(p).run();
  std::stable_sort(d.begin(), d.end(), [](const Diagnostic& x, const Diagnostic& y) {
    if (x.pos.line != y.pos.line) return x.pos.line < y.pos.line;
    return x.pos.col < y.pos.col;
  });
  return d;
}

const Process* OracleProgram::find_process(const std::string& nm) const {
  for (const Process& pr : processes)
    if (pr.name == nm) return &pr;
  return nullptr;
}

std::pair<const Process*, const OracleDecl*> OracleProgram::find_oracle(
    const std::string& nm) const {
  for (const Process& pr : processes)
    for (const OracleDecl& o : pr.oracles)
      if (o.name == nm) return {&pr, &o};
  return {nullptr, nullptr};
}

bool OracleProgram::exports_name(const std::string& nm) const {
  return std::any_of(exports.begin(), exports.end(),
                     [&](const NameRef& r) { return r.name == nm; });
}

}  // namespace ucrc
