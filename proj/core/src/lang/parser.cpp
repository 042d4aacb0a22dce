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

#include <cctype>
#include <set>
#include <string>
#include <vector>

#include "ucrc/common/error.hpp"
#include "ucrc/lang/syntax.hpp"

namespace ucrc {

namespace {

enum class Tok { kIdent, kInt, kBits, kPunct, kEnd };

struct Token {
  Tok kind = Tok::kEnd;
  std::string text;
  int line = 1;
  int col = 1;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t k) {
    for (std::size_t j = 0; j < k; ++j) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  static const char* const kPuncts[] = {":=", "<-R", "<=", "<>", "&&", "++", "(", ")", ",",
                                        ".",  ";",   ":",  "=",  "^",  "|",  "[", "]", "+"};
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '(' && i + 1 < src.size() && src[i + 1] == '*') {
      int sl = line, sc = col;
      advance(2);
      int depth = 1;
      while (depth > 0) {
        if (i >= src.size()) throw ParseError(sl, sc, "unterminated comment");
        if (src.compare(i, 2, "(*") == 0) {
          ++depth;
          advance(2);
        } else if (src.compare(i, 2, "*)") == 0) {
          --depth;
          advance(2);
        } else {
          advance(1);
        }
      }
      continue;
    }
    Token t;
    t.line = line;
    t.col = col;
    if (c == '0' && i + 2 < src.size() && src[i + 1] == 'b' &&
        (src[i + 2] == '0' || src[i + 2] == '1')) {
      std::size_t j = i + 2;
      while (j < src.size() && (src[j] == '0' || src[j] == '1')) ++j;
      if (j < src.size() && ident_char(src[j]))
        throw ParseError(line, col + static_cast<int>(j - i), "bad bitstring literal");
      t.kind = Tok::kBits;
      t.text = std::string(src.substr(i, j - i));
      advance(j - i);
      out.push_back(t);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      t.kind = Tok::kInt;
      t.text = std::string(src.substr(i, j - i));
      advance(j - i);
      out.push_back(t);
      continue;
    }
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < src.size() && ident_char(src[j])) ++j;
      t.kind = Tok::kIdent;
      t.text = std::string(src.substr(i, j - i));
      advance(j - i);
      out.push_back(t);
      continue;
    }
    bool matched = false;
    for (const char* p : kPuncts) {
      std::string_view pv(p);
      if (src.substr(i, pv.size()) == pv) {
        t.kind = Tok::kPunct;
        t.text = std::string(pv);
        advance(pv.size());
        out.push_back(t);
        matched = true;
        break;
      }
    }
    if (!matched)
      throw ParseError(line, col, std::string("unexpected character '") + c + "'");
  }
  Token end;
  end.kind = Tok::kEnd;
  end.line = line;
  end.col = col;
  out.push_back(end);
  return out;
}

const std::set<std::string>& keywords() {
  static const std::set<std::string> k = {
      "program", "param", "type",  "fun",      "table",  "reads",   "calls",
      "export",  "let",   "foreach", "do",     "in",     "else",    "get",
      "insert",  "suchthat", "find", "then",   "if",     "return",  "yield",
      "run",     "defined", "zero", "trunc",   "inc",    "not"};
  return k;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  OracleProgram program() {
    OracleProgram p;
    if (is_kw("program")) {
      next();
      p.name = ident("program name");
      punct(".");
    }
    while (peek().kind != Tok::kEnd) {
      if (is_kw("param")) {
        ParamDecl d;
        d.pos = here();
        next();
        d.name = ident("parameter name");
        punct("=");
        d.value = size();
        punct(".");
        p.params.push_back(std::move(d));
      } else if (is_kw("type")) {
        TypeDecl d;
        d.pos = here();
        next();
        d.name = ident("type name");
        punct("=");
        d.width = size();
        punct(".");
        p.types.push_back(std::move(d));
      } else if (is_kw("fun")) {
        FunDecl d;
        d.pos = here();
        next();
        d.name = ident("function name");
        punct("(");
        if (!is_punct(")")) {
          d.args.push_back(size());
          while (accept(",")) d.args.push_back(size());
        }
        punct(")");
        punct(":");
        d.result = size();
        punct(".");
        p.funs.push_back(std::move(d));
      } else if (is_kw("table")) {
        TableDecl d;
        d.pos = here();
        next();
        d.name = ident("table name");
        punct("(");
        d.columns.push_back(size());
        while (accept(",")) d.columns.push_back(size());
        punct(")");
        punct(".");
        p.tables.push_back(std::move(d));
      } else if (is_kw("reads")) {
        next();
        do {
          ReadDecl r;
          r.pos = here();
          r.owner = ident("oracle or process name");
          punct(".");
          r.var = ident("variable name");
          p.reads.push_back(std::move(r));
        } while (accept(","));
        punct(".");
      } else if (is_kw("calls") || is_kw("export")) {
        bool exp = is_kw("export");
        next();
        do {
          NameRef r;
          r.pos = here();
          r.name = ident("oracle name");
          (exp ? p.exports : p.calls).push_back(std::move(r));
        } while (accept(","));
        punct(".");
      } else if (is_kw("let")) {
        p.processes.push_back(process());
      } else {
        fail({"program", "param", "type", "fun", "table", "reads", "calls", "export", "let"});
      }
    }
    return p;
  }

 private:
  const Token& peek(std::size_t k = 0) const {
    std::size_t j = pos_ + k;
    return j < toks_.size() ? toks_[j] : toks_.back();
  }
  void next() {
    if (pos_ + 1 < toks_.size()) ++pos_;
  }
  Pos here() const { return Pos{peek().line, peek().col}; }
  bool is_kw(const char* kw) const { return peek().kind == Tok::kIdent && peek().text == kw; }
  bool is_punct(const char* p) const { return peek().kind == Tok::kPunct && peek().text == p; }
  bool accept(const char* p) {
    if (!is_punct(p)) return false;
    next();
    return true;
  }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    const Token& t = peek();
    std::string found = t.kind == Tok::kEnd ? "end of input" : "'" + t.text + "'";
    throw ParseError(t.line, t.col, "unexpected " + found, std::move(expected));
  }

  void punct(const char* p) {
    if (!accept(p)) fail({std::string("'") + p + "'"});
  }
  void keyword(const char* kw) {
    if (!is_kw(kw)) fail({kw});
    next();
  }
  std::string ident(const char* what) {
    if (peek().kind != Tok::kIdent || keywords().count(peek().text)) fail({what});
    std::string s = peek().text;
    next();
    return s;
  }
  std::int64_t integer() {
    if (peek().kind != Tok::kInt) fail({"integer"});
    std::int64_t v = 0;
    for (char c : peek().text) {
      v = v * 10 + (c - '0');
      if (v > (std::int64_t{1} << 40)) throw ParseError(peek().line, peek().col, "integer too large");
    }
    next();
    return v;
  }

  Size size() {
    Size s;
    do {
      SizeTerm t;
      if (peek().kind == Tok::kInt) {
        t.coeff = integer();
        if (peek().kind == Tok::kIdent && !keywords().count(peek().text)) t.sym = ident("size symbol");
      } else if (peek().kind == Tok::kIdent && !keywords().count(peek().text)) {
        t.coeff = 1;
        t.sym = ident("size symbol");
      } else {
        fail({"integer", "size symbol"});
      }
      s.terms.push_back(std::move(t));
    } while (accept("+"));
    return s;
  }

  std::vector<Param> params() {
    std::vector<Param> out;
    punct("(");
    if (!is_punct(")")) {
      do {
        Param prm;
        prm.pos = here();
        prm.name = ident("parameter name");
        punct(":");
        prm.width = size();
        out.push_back(std::move(prm));
      } while (accept(","));
    }
    punct(")");
    return out;
  }

  OracleDecl oracle() {
    OracleDecl o;
    o.pos = here();
    o.name = ident("oracle name");
    o.params = params();
    punct(":=");
    o.body = stmt();
    return o;
  }

  Process process() {
    Process pr;
    pr.pos = here();
    keyword("let");
    Pos name_pos = here();
    pr.name = ident("process name");
    std::vector<Param> ps = params();
    if (accept(":=")) {
      pr.kind = ProcessKind::kSingle;
      OracleDecl o;
      o.pos = name_pos;
      o.name = pr.name;
      o.params = std::move(ps);
      o.body = stmt();
      pr.oracles.push_back(std::move(o));
    } else if (accept("=")) {
      if (is_kw("foreach")) {
        if (!ps.empty())
          throw ParseError(name_pos.line, name_pos.col, "replicated process takes no parameters");
        next();
        pr.kind = ProcessKind::kReplicated;
        pr.index = ident("index variable");
        punct("<=");
        pr.bound = size();
        keyword("do");
        punct("(");
        pr.oracles.push_back(oracle());
        while (accept("|")) pr.oracles.push_back(oracle());
        punct(")");
      } else {
        pr.kind = ProcessKind::kContinuation;
        OracleDecl o;
        o.pos = name_pos;
        o.name = pr.name;
        o.params = std::move(ps);
        o.body = stmt();
        pr.oracles.push_back(std::move(o));
      }
    } else {
      fail({"':='", "'='"});
    }
    punct(".");
    return pr;
  }

  std::vector<Expr> expr_list() {
    std::vector<Expr> out;
    punct("(");
    if (!is_punct(")")) {
      out.push_back(expr());
      while (accept(",")) out.push_back(expr());
    }
    punct(")");
    return out;
  }

  void else_branch(Stmt& s) {
    if (is_kw("else")) {
      next();
      s.explicit_else = true;
      s.next.push_back(stmt());
    } else {
      Stmt y;
      y.kind = StmtKind::kYield;
      y.pos = s.pos;
      s.next.push_back(std::move(y));
    }
  }

  Stmt stmt() {
    Stmt s;
    s.pos = here();
    if (accept("(")) {
      Stmt inner = stmt();
      punct(")");
      return inner;
    }
    if (is_kw("yield")) {
      next();
      s.kind = StmtKind::kYield;
    } else if (is_kw("return")) {
      next();
      s.kind = StmtKind::kReturn;
      s.exprs = expr_list();
    } else if (is_kw("run")) {
      next();
      s.kind = StmtKind::kRun;
      s.name = ident("oracle name");
      s.exprs = expr_list();
    } else if (is_kw("let")) {
      next();
      s.kind = StmtKind::kLet;
      s.var = ident("variable name");
      punct("=");
      s.expr = expr();
      keyword("in");
      s.next.push_back(stmt());
    } else if (is_kw("insert")) {
      next();
      s.kind = StmtKind::kInsert;
      s.name = ident("table name");
      s.exprs = expr_list();
      punct(";");
      s.next.push_back(stmt());
    } else if (is_kw("get")) {
      next();
      s.kind = StmtKind::kGet;
      s.name = ident("table name");
      punct("(");
      do {
        Pattern pt;
        pt.pos = here();
        if (accept("=")) {
          pt.is_expr = true;
          pt.expr = expr();
        } else {
          pt.name = ident("pattern variable");
        }
        s.pats.push_back(std::move(pt));
      } while (accept(","));
      punct(")");
      if (is_kw("suchthat")) {
        next();
        s.has_cond = true;
        s.expr = expr();
      }
      keyword("in");
      s.next.push_back(stmt());
      else_branch(s);
    } else if (is_kw("find")) {
      next();
      s.kind = StmtKind::kFind;
      s.var = ident("index variable");
      punct("<=");
      s.size = size();
      keyword("suchthat");
      s.has_cond = true;
      s.expr = expr();
      keyword("then");
      s.next.push_back(stmt());
      else_branch(s);
    } else if (is_kw("if")) {
      next();
      s.kind = StmtKind::kIf;
      s.has_cond = true;
      s.expr = expr();
      keyword("then");
      s.next.push_back(stmt());
      else_branch(s);
    } else if (peek().kind == Tok::kIdent && !keywords().count(peek().text) &&
               peek(1).kind == Tok::kPunct && peek(1).text == "<-R") {
      s.kind = StmtKind::kSample;
      s.var = ident("variable name");
      punct("<-R");
      s.size = size();
      punct(";");
      s.next.push_back(stmt());
    } else {
      fail({"'('", "yield", "return", "run", "let", "insert", "get", "find", "if",
            "sampling 'x <-R w'"});
    }
    return s;
  }

  static Expr binary(ExprKind k, Expr a, Expr b, Pos pos) {
    Expr e;
    e.kind = k;
    e.pos = pos;
    e.args.push_back(std::move(a));
    e.args.push_back(std::move(b));
    return e;
  }

  Expr expr() {
    Expr e = eq_expr();
    while (is_punct("&&")) {
      Pos p = here();
      next();
      e = binary(ExprKind::kAnd, std::move(e), eq_expr(), p);
    }
    return e;
  }
  Expr eq_expr() {
    Expr e = xor_expr();
    if (is_punct("=") || is_punct("<>")) {
      Pos p = here();
      ExprKind k = is_punct("=") ? ExprKind::kEq : ExprKind::kNeq;
      next();
      e = binary(k, std::move(e), xor_expr(), p);
    }
    return e;
  }
  Expr xor_expr() {
    Expr e = cat_expr();
    while (is_punct("^")) {
      Pos p = here();
      next();
      e = binary(ExprKind::kXor, std::move(e), cat_expr(), p);
    }
    return e;
  }
  Expr cat_expr() {
    Expr e = primary();
    while (is_punct("++")) {
      Pos p = here();
      next();
      e = binary(ExprKind::kConcat, std::move(e), primary(), p);
    }
    return e;
  }

  Expr index_ref() {
    Expr e;
    e.pos = here();
    e.kind = ExprKind::kIndex;
    e.name = ident("variable name");
    punct("[");
    e.index = ident("index variable");
    punct("]");
    return e;
  }

  Expr primary() {
    Expr e;
    e.pos = here();
    if (peek().kind == Tok::kBits) {
      e.kind = ExprKind::kLit;
      e.lit = Bits::parse(peek().text);
      next();
      return e;
    }
    if (accept("(")) {
      Expr inner = expr();
      punct(")");
      return inner;
    }
    if (is_kw("defined")) {
      next();
      e.kind = ExprKind::kDefined;
      punct("(");
      e.args.push_back(index_ref());
      while (accept(",")) e.args.push_back(index_ref());
      punct(")");
      return e;
    }
    if (is_kw("zero")) {
      next();
      e.kind = ExprKind::kZero;
      punct("(");
      e.size = size();
      punct(")");
      return e;
    }
    if (is_kw("trunc")) {
      next();
      e.kind = ExprKind::kTrunc;
      punct("(");
      e.args.push_back(expr());
      punct(",");
      e.size = size();
      punct(")");
      return e;
    }
    if (is_kw("inc") || is_kw("not")) {
      e.kind = is_kw("inc") ? ExprKind::kInc : ExprKind::kNot;
      next();
      punct("(");
      e.args.push_back(expr());
      punct(")");
      return e;
    }
    if (peek().kind == Tok::kIdent && !keywords().count(peek().text)) {
      e.name = ident("variable name");
      if (accept("[")) {
        e.kind = ExprKind::kIndex;
        e.index = ident("index variable");
        punct("]");
      } else if (is_punct("(")) {
        e.kind = ExprKind::kApp;
        e.args = expr_list();
      } else {
        e.kind = ExprKind::kVar;
      }
      return e;
    }
    fail({"bitstring literal", "variable", "'('", "defined", "zero", "trunc", "inc", "not"});
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

OracleProgram parse_program(std::string_view source) {
  Parser p(lex(source));
  return p.program();
}

}  // namespace ucrc
