// Copyright 2026 The qlint Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Syntax tree for the restricted Python subset that qlint understands.
//
// Nodes are regular values: copying a statement deep-copies its subtree.
// Constructs outside the supported subset (classes, exception handlers,
// comprehensions, lambdas, ...) are kept as opaque nodes that still expose
// their sub-expressions and nested statements, so later stages can see
// which names they touch.

#ifndef QLINT_FRONTEND_AST_H_
#define QLINT_FRONTEND_AST_H_

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "qlint/common/source_span.h"
#include "qlint/common/strong_id.h"

namespace qlint::frontend {

// Owning pointer with value semantics.
template <typename T>
class Box {
 public:
  Box(T value) : ptr_(std::make_unique<T>(std::move(value))) {}  // NOLINT
  Box(const Box& other) : ptr_(std::make_unique<T>(*other.ptr_)) {}
  Box(Box&&) noexcept = default;
  Box& operator=(const Box& other) {
    if (this != &other) ptr_ = std::make_unique<T>(*other.ptr_);
    return *this;
  }
  Box& operator=(Box&&) noexcept = default;
  ~Box() = default;

  T& operator*() { return *ptr_; }
  const T& operator*() const { return *ptr_; }
  T* operator->() { return ptr_.get(); }
  const T* operator->() const { return ptr_.get(); }
  T& get() { return *ptr_; }
  const T& get() const { return *ptr_; }

 private:
  std::unique_ptr<T> ptr_;
};

struct Expr;
struct Stmt;

enum class BinaryOperator {
  kAdd, kSub, kMul, kDiv, kFloorDiv, kMod, kPow, kMatMul,
  kLShift, kRShift, kBitOr, kBitXor, kBitAnd,
};
enum class UnaryOperator { kPlus, kMinus, kInvert, kNot };
enum class CompareOperator { kEq, kNotEq, kLt, kLtE, kGt, kGtE, kIs, kIsNot, kIn, kNotIn };

const char* to_string(BinaryOperator op);

// --- expressions -----------------------------------------------------------

struct Name {
  std::string id;
};
struct IntLiteral {
  std::optional<std::int64_t> value;  // nullopt when it does not fit 64 bits
  std::string text;
};
struct FloatLiteral {
  std::string text;  // also covers imaginary literals such as 1j
};
struct StringLiteral {
  std::string value;
};
struct BoolLiteral {
  bool value = false;
};
struct NoneLiteral {};
struct EllipsisLiteral {};
struct Attribute {
  Box<Expr> value;
  std::string attr;
};

struct Argument {
  enum class Kind { kPositional, kKeyword, kStar, kDoubleStar };
  Kind kind = Kind::kPositional;
  std::string keyword;  // only for kKeyword
  Box<Expr> value;
};

struct Call {
  Box<Expr> func;
  std::vector<Argument> args;
};
struct Subscript {
  Box<Expr> value;
  Box<Expr> index;
};
struct Slice {
  std::optional<Box<Expr>> lower;
  std::optional<Box<Expr>> upper;
  std::optional<Box<Expr>> step;
};
struct BinaryOp {
  BinaryOperator op;
  Box<Expr> left;
  Box<Expr> right;
};
struct UnaryOp {
  UnaryOperator op;
  Box<Expr> operand;
};
struct BoolOp {
  bool is_and = true;
  std::vector<Expr> values;
};
struct Compare {
  Box<Expr> left;
  std::vector<CompareOperator> ops;
  std::vector<Expr> comparators;
};
struct Conditional {
  Box<Expr> test;
  Box<Expr> body;
  Box<Expr> orelse;
};
struct Tuple {
  std::vector<Expr> elts;
};
struct List {
  std::vector<Expr> elts;
};
struct Set {
  std::vector<Expr> elts;
};
struct Dict {
  std::vector<Expr> items;  // keys and values interleaved
};
struct Starred {
  Box<Expr> value;
};
// lambda, comprehensions, generator expressions, `:=`, await, yield.
struct OpaqueExpr {
  std::string kind;
  std::vector<Expr> children;
  std::vector<std::string> bound_names;
};

using ExprNode =
    std::variant<Name, IntLiteral, FloatLiteral, StringLiteral, BoolLiteral,
                 NoneLiteral, EllipsisLiteral, Attribute, Call, Subscript, Slice,
                 BinaryOp, UnaryOp, BoolOp, Compare, Conditional, Tuple, List,
                 Set, Dict, Starred, OpaqueExpr>;

struct Expr {
  SourceSpan span;
  ExprNode node;

  template <typename T>
  bool is() const { return std::holds_alternative<T>(node); }
  template <typename T>
  const T* as() const { return std::get_if<T>(&node); }
  template <typename T>
  T* as() { return std::get_if<T>(&node); }
};

// --- statements ------------------------------------------------------------

using StmtId = StrongId<struct StmtTag>;

struct ExprStmt {
  Expr value;
};
struct Assign {
  std::vector<Expr> targets;  // `a = b = v` has two targets
  Expr value;
};
struct AugAssign {
  Expr target;
  BinaryOperator op;
  Expr value;
};
struct AnnAssign {
  Expr target;
  Expr annotation;
  std::optional<Expr> value;
};
struct For {
  Expr target;
  Expr iter;
  std::vector<Stmt> body;
  std::vector<Stmt> orelse;
  // Set by the unroller for loops it had to keep.
  bool non_unrollable = false;
};
struct While {
  Expr test;
  std::vector<Stmt> body;
  std::vector<Stmt> orelse;
};
struct If {
  Expr test;
  std::vector<Stmt> body;
  std::vector<Stmt> orelse;
};
struct WithItem {
  Expr context;
  std::optional<Expr> target;
};
struct With {
  std::vector<WithItem> items;
  std::vector<Stmt> body;
};
struct Parameter {
  enum class Kind { kNormal, kVarArgs, kKwArgs };
  std::string name;
  Kind kind = Kind::kNormal;
  std::optional<Expr> default_value;
  std::optional<Expr> annotation;
};
struct FunctionDef {
  std::string name;
  std::vector<Parameter> params;
  std::vector<Expr> decorators;
  std::optional<Expr> returns;
  std::vector<Stmt> body;
};
struct Return {
  std::optional<Expr> value;
};
struct Pass {};
struct Break {};
struct Continue {};
struct Import {
  std::string module;
  std::vector<std::string> bound_names;
};
struct Scoping {
  bool is_nonlocal = false;
  std::vector<std::string> names;
};
// del / assert / raise: evaluated for effect only.
struct OtherSimple {
  std::string keyword;
  std::vector<Expr> exprs;
};
// class, try, async compound statements.
struct OpaqueStmt {
  std::string keyword;
  std::vector<Expr> exprs;
  std::vector<std::vector<Stmt>> bodies;
  std::vector<std::string> bound_names;
};

using StmtNode =
    std::variant<ExprStmt, Assign, AugAssign, AnnAssign, For, While, If, With,
                 FunctionDef, Return, Pass, Break, Continue, Import, Scoping,
                 OtherSimple, OpaqueStmt>;

struct Stmt {
  StmtId id;
  SourceSpan span;
  // Inserted by the unroller (loop-variable bindings).
  bool synthetic = false;
  StmtNode node;

  template <typename T>
  bool is() const { return std::holds_alternative<T>(node); }
  template <typename T>
  const T* as() const { return std::get_if<T>(&node); }
  template <typename T>
  T* as() { return std::get_if<T>(&node); }
};

struct Comment {
  int line = 0;
  int column = 0;
  std::string text;  // without the leading '#'
};

struct ModuleAst {
  std::shared_ptr<const std::string> file;
  std::vector<Stmt> body;
  std::vector<Comment> comments;
  std::uint32_t stmt_count = 0;  // ids are dense in [0, stmt_count)
};

// Assigns preorder ids to every statement, including nested and opaque ones.
void number_statements(ModuleAst& module);

// Preorder walk over every statement in `body`, descending into nested
// bodies (including function and opaque bodies).
void for_each_stmt(const std::vector<Stmt>& body,
                   const std::function<void(const Stmt&)>& fn);

// Direct sub-expressions of a node, in evaluation order.
void for_each_child(const Expr& expr, const std::function<void(const Expr&)>& fn);

// Preorder walk over `expr` and all of its sub-expressions.
void walk_expr(const Expr& expr, const std::function<void(const Expr&)>& fn);

// Expressions directly owned by a statement (not by its nested statements).
void for_each_stmt_expr(const Stmt& stmt,
                        const std::function<void(const Expr&)>& fn);

// Names bound by an assignment target (`a`, `a, b`, `*rest`); attribute and
// subscript targets bind nothing.
void collect_target_names(const Expr& target, std::vector<std::string>& out);

// Names a statement (and its nested statements) may rebind in the enclosing
// scope. Function bodies are not entered, only the function name is bound.
void collect_assigned_names(const Stmt& stmt, std::vector<std::string>& out);

// Dotted name of a callee expression: `a.b.c` -> "a.b.c"; empty otherwise.
std::string dotted_name(const Expr& expr);

}  // namespace qlint::frontend

#endif  // QLINT_FRONTEND_AST_H_
