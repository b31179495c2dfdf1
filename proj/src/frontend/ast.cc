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

#include "qlint/frontend/ast.h"

namespace qlint::frontend {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

const char* to_string(BinaryOperator op) {
  switch (op) {
    case BinaryOperator::kAdd: return "+";
    case BinaryOperator::kSub: return "-";
    case BinaryOperator::kMul: return "*";
    case BinaryOperator::kDiv: return "/";
    case BinaryOperator::kFloorDiv: return "//";
    case BinaryOperator::kMod: return "%";
    case BinaryOperator::kPow: return "**";
    case BinaryOperator::kMatMul: return "@";
    case BinaryOperator::kLShift: return "<<";
    case BinaryOperator::kRShift: return ">>";
    case BinaryOperator::kBitOr: return "|";
    case BinaryOperator::kBitXor: return "^";
    case BinaryOperator::kBitAnd: return "&";
  }
  return "?";
}

namespace {

void number_body(std::vector<Stmt>& body, std::uint32_t& next);

void number_stmt(Stmt& stmt, std::uint32_t& next) {
  stmt.id = StmtId(next++);
  std::visit(Overloaded{
                 [&](For& s) {
                   number_body(s.body, next);
                   number_body(s.orelse, next);
                 },
                 [&](While& s) {
                   number_body(s.body, next);
                   number_body(s.orelse, next);
                 },
                 [&](If& s) {
                   number_body(s.body, next);
                   number_body(s.orelse, next);
                 },
                 [&](With& s) { number_body(s.body, next); },
                 [&](FunctionDef& s) { number_body(s.body, next); },
                 [&](OpaqueStmt& s) {
                   for (auto& b : s.bodies) number_body(b, next);
                 },
                 [](auto&) {},
             },
             stmt.node);
}

void number_body(std::vector<Stmt>& body, std::uint32_t& next) {
  for (auto& s : body) number_stmt(s, next);
}

}  // namespace

void number_statements(ModuleAst& module) {
  std::uint32_t next = 0;
  number_body(module.body, next);
  module.stmt_count = next;
}

void for_each_stmt(const std::vector<Stmt>& body,
                   const std::function<void(const Stmt&)>& fn) {
  for (const auto& stmt : body) {
    fn(stmt);
    std::visit(Overloaded{
                   [&](const For& s) {
                     for_each_stmt(s.body, fn);
                     for_each_stmt(s.orelse, fn);
                   },
                   [&](const While& s) {
                     for_each_stmt(s.body, fn);
                     for_each_stmt(s.orelse, fn);
                   },
                   [&](const If& s) {
                     for_each_stmt(s.body, fn);
                     for_each_stmt(s.orelse, fn);
                   },
                   [&](const With& s) { for_each_stmt(s.body, fn); },
                   [&](const FunctionDef& s) { for_each_stmt(s.body, fn); },
                   [&](const OpaqueStmt& s) {
                     for (const auto& b : s.bodies) for_each_stmt(b, fn);
                   },
                   [](const auto&) {},
               },
               stmt.node);
  }
}

void for_each_child(const Expr& expr,
                    const std::function<void(const Expr&)>& fn) {
  std::visit(
      Overloaded{
          [&](const Attribute& e) { fn(*e.value); },
          [&](const Call& e) {
            fn(*e.func);
            for (const auto& a : e.args) fn(*a.value);
          },
          [&](const Subscript& e) {
            fn(*e.value);
            fn(*e.index);
          },
          [&](const Slice& e) {
            if (e.lower) fn(**e.lower);
            if (e.upper) fn(**e.upper);
            if (e.step) fn(**e.step);
          },
          [&](const BinaryOp& e) {
            fn(*e.left);
            fn(*e.right);
          },
          [&](const UnaryOp& e) { fn(*e.operand); },
          [&](const BoolOp& e) {
            for (const auto& v : e.values) fn(v);
          },
          [&](const Compare& e) {
            fn(*e.left);
            for (const auto& v : e.comparators) fn(v);
          },
          [&](const Conditional& e) {
            fn(*e.test);
            fn(*e.body);
            fn(*e.orelse);
          },
          [&](const Tuple& e) {
            for (const auto& v : e.elts) fn(v);
          },
          [&](const List& e) {
            for (const auto& v : e.elts) fn(v);
          },
          [&](const Set& e) {
            for (const auto& v : e.elts) fn(v);
          },
          [&](const Dict& e) {
            for (const auto& v : e.items) fn(v);
          },
          [&](const Starred& e) { fn(*e.value); },
          [&](const OpaqueExpr& e) {
            for (const auto& v : e.children) fn(v);
          },
          [](const auto&) {},
      },
      expr.node);
}

void walk_expr(const Expr& expr, const std::function<void(const Expr&)>& fn) {
  fn(expr);
  for_each_child(expr, [&](const Expr& child) { walk_expr(child, fn); });
}

void for_each_stmt_expr(const Stmt& stmt,
                        const std::function<void(const Expr&)>& fn) {
  std::visit(Overloaded{
                 [&](const ExprStmt& s) { fn(s.value); },
                 [&](const Assign& s) {
                   fn(s.value);
                   for (const auto& t : s.targets) fn(t);
                 },
                 [&](const AugAssign& s) {
                   fn(s.target);
                   fn(s.value);
                 },
                 [&](const AnnAssign& s) {
                   if (s.value) fn(*s.value);
                   fn(s.target);
                 },
                 [&](const For& s) {
                   fn(s.iter);
                   fn(s.target);
                 },
                 [&](const While& s) { fn(s.test); },
                 [&](const If& s) { fn(s.test); },
                 [&](const With& s) {
                   for (const auto& item : s.items) {
                     fn(item.context);
                     if (item.target) fn(*item.target);
                   }
                 },
                 [&](const FunctionDef& s) {
                   for (const auto& d : s.decorators) fn(d);
                   for (const auto& p : s.params)
                     if (p.default_value) fn(*p.default_value);
                 },
                 [&](const Return& s) {
                   if (s.value) fn(*s.value);
                 },
                 [&](const OtherSimple& s) {
                   for (const auto& e : s.exprs) fn(e);
                 },
                 [&](const OpaqueStmt& s) {
                   for (const auto& e : s.exprs) fn(e);
                 },
                 [](const auto&) {},
             },
             stmt.node);
}

void collect_target_names(const Expr& target, std::vector<std::string>& out) {
  if (const auto* n = target.as<Name>()) {
    out.push_back(n->id);
  } else if (const auto* t = target.as<Tuple>()) {
    for (const auto& e : t->elts) collect_target_names(e, out);
  } else if (const auto* l = target.as<List>()) {
    for (const auto& e : l->elts) collect_target_names(e, out);
  } else if (const auto* s = target.as<Starred>()) {
    collect_target_names(*s->value, out);
  }
}

namespace {

void collect_walrus_names(const Expr& expr, std::vector<std::string>& out) {
  walk_expr(expr, [&](const Expr& e) {
    if (const auto* o = e.as<OpaqueExpr>(); o && o->kind == "walrus") {
      out.insert(out.end(), o->bound_names.begin(), o->bound_names.end());
    }
  });
}

void collect_body(const std::vector<Stmt>& body, std::vector<std::string>& out) {
  for (const auto& s : body) collect_assigned_names(s, out);
}

}  // namespace

void collect_assigned_names(const Stmt& stmt, std::vector<std::string>& out) {
  if (!stmt.is<FunctionDef>()) {
    for_each_stmt_expr(stmt, [&](const Expr& e) { collect_walrus_names(e, out); });
  }
  std::visit(Overloaded{
                 [&](const Assign& s) {
                   for (const auto& t : s.targets) collect_target_names(t, out);
                 },
                 [&](const AugAssign& s) { collect_target_names(s.target, out); },
                 [&](const AnnAssign& s) {
                   if (s.value) collect_target_names(s.target, out);
                 },
                 [&](const For& s) {
                   collect_target_names(s.target, out);
                   collect_body(s.body, out);
                   collect_body(s.orelse, out);
                 },
                 [&](const While& s) {
                   collect_body(s.body, out);
                   collect_body(s.orelse, out);
                 },
                 [&](const If& s) {
                   collect_body(s.body, out);
                   collect_body(s.orelse, out);
                 },
                 [&](const With& s) {
                   for (const auto& item : s.items)
                     if (item.target) collect_target_names(*item.target, out);
                   collect_body(s.body, out);
                 },
                 [&](const FunctionDef& s) { out.push_back(s.name); },
                 [&](const Import& s) {
                   out.insert(out.end(), s.bound_names.begin(),
                              s.bound_names.end());
                 },
                 [&](const OtherSimple& s) {
                   if (s.keyword == "del")
                     for (const auto& e : s.exprs) collect_target_names(e, out);
                 },
                 [&](const OpaqueStmt& s) {
                   out.insert(out.end(), s.bound_names.begin(),
                              s.bound_names.end());
                   if (s.keyword != "class")
                     for (const auto& b : s.bodies) collect_body(b, out);
                 },
                 [](const auto&) {},
             },
             stmt.node);
}

std::string dotted_name(const Expr& expr) {
  if (const auto* n = expr.as<Name>()) return n->id;
  if (const auto* a = expr.as<Attribute>()) {
    std::string base = dotted_name(*a->value);
    if (base.empty()) return {};
    return base + "." + a->attr;
  }
  return {};
}

}  // namespace qlint::frontend
