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

#ifndef UCRC_LANG_AST_HPP_
#define UCRC_LANG_AST_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ucrc/common/bits.hpp"

namespace ucrc {

// Source position. Compares equal to every other position so that defaulted
// AST equality is structural.
struct Pos {
  int line = 0;
  int col = 0;
  friend bool operator==(const Pos&, const Pos&) { return true; }
};

// Symbolic size: sum of terms coeff * sym, where sym is empty (a constant),
// "n", a param name or a type alias. Widths and replication bounds use it.
struct SizeTerm {
  std::int64_t coeff = 0;
  std::string sym;
  bool operator==(const SizeTerm&) const = default;
};

struct Size {
  std::vector<SizeTerm> terms;
  bool operator==(const Size&) const = default;

  static Size constant(std::int64_t c) { return Size{{SizeTerm{c, ""}}}; }
  static Size symbol(std::string s) { return Size{{SizeTerm{1, std::move(s)}}}; }
};

enum class ExprKind {
  kVar,       // name
  kIndex,     // name[index]
  kLit,       // bits
  kZero,      // zero(size)
  kXor,       // args[0] ^ args[1]
  kConcat,    // args[0] ++ args[1]
  kTrunc,     // trunc(args[0], size)
  kEq,        // args[0] = args[1]
  kNeq,       // args[0] <> args[1]
  kAnd,       // args[0] && args[1]
  kNot,       // not(args[0])
  kInc,       // inc(args[0])
  kDefined,   // defined(args...), each a kIndex
  kApp,       // name(args...)
};

struct Expr {
  ExprKind kind = ExprKind::kLit;
  Pos pos;
  std::string name;
  std::string index;
  Bits lit;
  Size size;
  std::vector<Expr> args;
  bool operator==(const Expr&) const = default;
};

// Pattern inside `get T(...)`. A bare identifier matches when it names a
// variable in scope and binds otherwise; `=e` always matches.
struct Pattern {
  bool is_expr = false;
  std::string name;
  Expr expr;
  Pos pos;
  bool operator==(const Pattern&) const = default;
};

enum class StmtKind {
  kSample,   // var <-R size; next[0]
  kLet,      // let var = expr in next[0]
  kInsert,   // insert name(exprs); next[0]
  kGet,      // get name(pats) [suchthat expr] in next[0] else next[1]
  kFind,     // find var <= size suchthat expr then next[0] else next[1]
  kIf,       // if expr then next[0] else next[1]
  kReturn,   // return(exprs)
  kYield,
  kRun,      // run name(exprs)
};

struct Stmt {
  StmtKind kind = StmtKind::kYield;
  Pos pos;
  std::string var;
  std::string name;
  Size size;
  Expr expr;
  bool has_cond = false;
  bool explicit_else = false;
  std::vector<Expr> exprs;
  std::vector<Pattern> pats;
  std::vector<Stmt> next;
  bool operator==(const Stmt&) const = default;
};

struct Param {
  std::string name;
  Size width;
  Pos pos;
  bool operator==(const Param&) const = default;
};

struct OracleDecl {
  std::string name;
  std::vector<Param> params;
  Stmt body;
  Pos pos;
  bool operator==(const OracleDecl&) const = default;
};

// One top-level `let`. Three shapes:
//   let G() = foreach i <= B do (O1(..) := P | O2(..) := Q).   replicated
//   let O(..) := P.                                           single instance
//   let K(..) = P.                                            continuation
enum class ProcessKind { kReplicated, kSingle, kContinuation };

struct Process {
  ProcessKind kind = ProcessKind::kSingle;
  std::string name;
  std::string index;
  Size bound;
  std::vector<OracleDecl> oracles;
  Pos pos;
  bool operator==(const Process&) const = default;
};

struct ParamDecl {
  std::string name;
  Size value;
  Pos pos;
  bool operator==(const ParamDecl&) const = default;
};

struct TypeDecl {
  std::string name;
  Size width;
  Pos pos;
  bool operator==(const TypeDecl&) const = default;
};

struct FunDecl {
  std::string name;
  std::vector<Size> args;
  Size result;
  Pos pos;
  bool operator==(const FunDecl&) const = default;
};

struct TableDecl {
  std::string name;
  std::vector<Size> columns;
  Pos pos;
  bool operator==(const TableDecl&) const = default;
};

struct ReadDecl {
  std::string owner;
  std::string var;
  Pos pos;
  bool operator==(const ReadDecl&) const = default;
};

struct NameRef {
  std::string name;
  Pos pos;
  bool operator==(const NameRef&) const = default;
};

struct OracleProgram {
  std::string name;
  std::vector<ParamDecl> params;
  std::vector<TypeDecl> types;
  std::vector<FunDecl> funs;
  std::vector<TableDecl> tables;
  std::vector<ReadDecl> reads;
  std::vector<NameRef> calls;
  std::vector<NameRef> exports;
  std::vector<Process> processes;
  bool operator==(const OracleProgram&) const = default;

  const Process* find_process(const std::string& name) const;
  // Oracle plus the process that declares it, or nulls.
  std::pair<const Process*, const OracleDecl*> find_oracle(const std::string& name) const;
  bool exports_name(const std::string& name) const;
};

}  // namespace ucrc

#endif  // UCRC_LANG_AST_HPP_
