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

#include <string>

#include "ucrc/lang/syntax.hpp"

namespace ucrc {

namespace {

int prec(ExprKind k) {
  switch (k) {
    case ExprKind::kAnd: return 1;
    case ExprKind::kEq:
    case ExprKind::kNeq: return 2;
    case ExprKind::kXor: return 3;
    case ExprKind::kConcat: return 4;
    default: return 5;
  }
}

std::string join_exprs(const std::vector<Expr>& es) {
  std::string s;
  for (std::size_t i = 0; i < es.size(); ++i) {
    if (i) s += ", ";
    s += print_expr(es[i]);
  }
  return s;
}

std::string wrap(const Expr& e, bool paren) {
  std::string s = print_expr(e);
  return paren ? "(" + s + ")" : s;
}

std::string pad(int indent) { return std::string(static_cast<std::size_t>(indent), ' '); }

bool terminal(const Stmt& s) {
  return s.kind == StmtKind::kReturn || s.kind == StmtKind::kYield || s.kind == StmtKind::kRun;
}

std::string params_text(const std::vector<Param>& ps) {
  std::string s = "(";
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (i) s += ", ";
    s += ps[i].name + ": " + print_size(ps[i].width);
  }
  return s + ")";
}

void print_into(std::string& out, const Stmt& s, int indent);

// Branch that is followed by an explicit else must not swallow it.
void branch(std::string& out, const Stmt& s, int indent, bool guard) {
  if (guard && !terminal(s)) {
    out += pad(indent) + "(\n";
    print_into(out, s, indent + 2);
    out += "\n" + pad(indent) + ")";
  } else {
    print_into(out, s, indent);
  }
}

void tail(std::string& out, const Stmt& s, int indent) {
  out += "\n";
  branch(out, s.next[0], indent + 2, s.explicit_else);
  if (s.explicit_else) {
    out += "\n" + pad(indent) + "else\n";
    branch(out, s.next[1], indent + 2, false);
  }
}

void print_into(std::string& out, const Stmt& s, int indent) {
  out += pad(indent);
  switch (s.kind) {
    case StmtKind::kYield:
      out += "yield";
      return;
    case StmtKind::kReturn:
      out += "return(" + join_exprs(s.exprs) + ")";
      return;
    case StmtKind::kRun:
      out += "run " + s.name + "(" + join_exprs(s.exprs) + ")";
      return;
    case StmtKind::kSample:
      out += s.var + " <-R " + print_size(s.size) + ";\n";
      print_into(out, s.next[0], indent);
      return;
    case StmtKind::kLet:
      out += "let " + s.var + " = " + print_expr(s.expr) + " in\n";
      print_into(out, s.next[0], indent);
      return;
    case StmtKind::kInsert:
      out += "insert " + s.name + "(" + join_exprs(s.exprs) + ");\n";
      print_into(out, s.next[0], indent);
      return;
    case StmtKind::kGet: {
      out += "get " + s.name + "(";
      for (std::size_t i = 0; i < s.pats.size(); ++i) {
        if (i) out += ", ";
        out += s.pats[i].is_expr ? "=" + print_expr(s.pats[i].expr) : s.pats[i].name;
      }
      out += ")";
      if (s.has_cond) out += " suchthat " + print_expr(s.expr);
      out += " in";
      tail(out, s, indent);
      return;
    }
    case StmtKind::kFind:
      out += "find " + s.var + " <= " + print_size(s.size) + " suchthat " +
             print_expr(s.expr) + " then";
      tail(out, s, indent);
      return;
    case StmtKind::kIf:
      out += "if " + print_expr(s.expr) + " then";
      tail(out, s, indent);
      return;
  }
}

}  // namespace

std::string print_size(const Size& s) {
  std::string out;
  for (std::size_t i = 0; i < s.terms.size(); ++i) {
    if (i) out += " + ";
    const SizeTerm& t = s.terms[i];
    if (t.sym.empty()) {
      out += std::to_string(t.coeff);
    } else if (t.coeff == 1) {
      out += t.sym;
    } else {
      out += std::to_string(t.coeff) + t.sym;
    }
  }
  return out;
}

std::string print_expr(const Expr& e) {
  switch (e.kind) {
    case ExprKind::kVar: return e.name;
    case ExprKind::kIndex: return e.name + "[" + e.index + "]";
    case ExprKind::kLit: return "0b" + e.lit.str();
    case ExprKind::kZero: return "zero(" + print_size(e.size) + ")";
    case ExprKind::kTrunc: return "trunc(" + print_expr(e.args[0]) + ", " + print_size(e.size) + ")";
    case ExprKind::kNot: return "not(" + print_expr(e.args[0]) + ")";
    case ExprKind::kInc: return "inc(" + print_expr(e.args[0]) + ")";
    case ExprKind::kDefined: return "defined(" + join_exprs(e.args) + ")";
    case ExprKind::kApp: return e.name + "(" + join_exprs(e.args) + ")";
    case ExprKind::kAnd:
    case ExprKind::kEq:
    case ExprKind::kNeq:
    case ExprKind::kXor:
    case ExprKind::kConcat: {
      static const char* ops[] = {"", "&&", "=", "^", "++"};
      int p = prec(e.kind);
      const char* op = e.kind == ExprKind::kNeq ? "<>" : ops[p];
      // Left-associative chains; = and <> do not chain at all.
      bool eq = p == 2;
      bool lp = prec(e.args[0].kind) < p || (eq && prec(e.args[0].kind) == p);
      bool rp = prec(e.args[1].kind) <= p;
      return wrap(e.args[0], lp) + " " + op + " " + wrap(e.args[1], rp);
    }
  }
  return {};
}

std::string print_stmt(const Stmt& s, int indent) {
  std::string out;
  print_into(out, s, indent);
  return out;
}

std::string print_program(const OracleProgram& p) {
  std::string out;
  if (!p.name.empty()) out += "program " + p.name + ".\n\n";
  for (const ParamDecl& d : p.params) out += "param " + d.name + " = " + print_size(d.value) + ".\n";
  for (const TypeDecl& d : p.types) out += "type " + d.name + " = " + print_size(d.width) + ".\n";
  for (const FunDecl& d : p.funs) {
    out += "fun " + d.name + "(";
    for (std::size_t i = 0; i < d.args.size(); ++i) {
      if (i) out += ", ";
      out += print_size(d.args[i]);
    }
    out += "): " + print_size(d.result) + ".\n";
  }
  for (const TableDecl& d : p.tables) {
    out += "table " + d.name + "(";
    for (std::size_t i = 0; i < d.columns.size(); ++i) {
      if (i) out += ", ";
      out += print_size(d.columns[i]);
    }
    out += ").\n";
  }
  auto names = [&](const char* kw, const std::vector<NameRef>& v) {
    if (v.empty()) return;
    out += kw;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : " ") + v[i].name;
    out += ".\n";
  };
  if (!p.reads.empty()) {
    out += "reads";
    for (std::size_t i = 0; i < p.reads.size(); ++i)
      out += (i ? ", " : " ") + p.reads[i].owner + "." + p.reads[i].var;
    out += ".\n";
  }
  names("calls", p.calls);
  names("export", p.exports);
  for (const Process& pr : p.processes) {
    out += "\n";
    switch (pr.kind) {
      case ProcessKind::kReplicated:
        out += "let " + pr.name + "() =\n  foreach " + pr.index + " <= " + print_size(pr.bound) +
               " do (\n";
        for (std::size_t i = 0; i < pr.oracles.size(); ++i) {
          const OracleDecl& o = pr.oracles[i];
          if (i) out += "\n  |\n";
          out += "    " + o.name + params_text(o.params) + " :=\n";
          print_into(out, o.body, 6);
        }
        out += "\n  ).\n";
        break;
      case ProcessKind::kSingle:
      case ProcessKind::kContinuation: {
        const OracleDecl& o = pr.oracles.front();
        out += "let " + o.name + params_text(o.params) +
               (pr.kind == ProcessKind::kSingle ? " :=\n" : " =\n");
        print_into(out, o.body, 2);
        out += ".\n";
        break;
      }
    }
  }
  return out;
}

}  // namespace ucrc
