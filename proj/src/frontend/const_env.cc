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

#include "qlint/frontend/const_env.h"

#include <string>
#include <vector>

#include "flow_state.h"

namespace qlint::frontend {

ConstValue lookup(const Bindings& bindings, std::string_view name) {
  auto it = bindings.find(name);
  return it == bindings.end() ? ConstValue() : it->second;
}

ConstValue eval_const(const Expr& expr, const Bindings& bindings) {
  if (const auto* lit = expr.as<IntLiteral>()) {
    return lit->value ? ConstValue::known(*lit->value) : ConstValue();
  }
  if (const auto* name = expr.as<Name>()) return lookup(bindings, name->id);
  if (const auto* un = expr.as<UnaryOp>()) {
    const ConstValue v = eval_const(*un->operand, bindings);
    if (un->op == UnaryOperator::kMinus) return -v;
    if (un->op == UnaryOperator::kPlus) return v;
    return {};
  }
  if (const auto* bin = expr.as<BinaryOp>()) {
    switch (bin->op) {
      case BinaryOperator::kAdd:
      case BinaryOperator::kSub:
      case BinaryOperator::kMul:
      case BinaryOperator::kFloorDiv:
        break;
      default:
        return {};
    }
    const ConstValue l = eval_const(*bin->left, bindings);
    if (!l.is_known()) return {};
    const ConstValue r = eval_const(*bin->right, bindings);
    switch (bin->op) {
      case BinaryOperator::kAdd: return l + r;
      case BinaryOperator::kSub: return l - r;
      case BinaryOperator::kMul: return l * r;
      default: return ConstValue::floor_div(l, r);
    }
  }
  return {};
}

const Bindings& ConstEnv::before(StmtId stmt) const {
  static const Bindings kEmpty;
  if (stmt.index() >= before_.size() || !before_[stmt.index()]) return kEmpty;
  return *before_[stmt.index()];
}

ConstValue ConstEnv::lookup(StmtId stmt, std::string_view name) const {
  return frontend::lookup(before(stmt), name);
}

ConstValue ConstEnv::eval(const Expr& expr, StmtId at) const {
  return eval_const(expr, before(at));
}

void ConstEnv::record(StmtId stmt, const Bindings& bindings) {
  if (stmt.index() >= before_.size()) before_.resize(stmt.index() + 1);
  before_[stmt.index()] = bindings;
}

namespace internal {

FlowState join(const FlowState& a, const FlowState& b) {
  if (!a.reachable) return b;
  if (!b.reachable) return a;
  FlowState out;
  for (const auto& [name, value] : a.vars) {
    auto it = b.vars.find(name);
    if (it != b.vars.end() && it->second == value && value.is_known()) {
      out.vars.emplace(name, value);
    }
  }
  return out;
}

void forget(FlowState& state, const std::vector<std::string>& names) {
  for (const auto& n : names) state.vars.erase(n);
}

namespace {

void collect_walrus(const Expr& e, std::vector<std::string>& out) {
  walk_expr(e, [&](const Expr& sub) {
    if (const auto* o = sub.as<OpaqueExpr>(); o && o->kind == "walrus")
      out.insert(out.end(), o->bound_names.begin(), o->bound_names.end());
  });
}

void bind_target(const Expr& target, const Expr* value, FlowState& state) {
  if (const auto* name = target.as<Name>()) {
    const ConstValue v = value ? eval_const(*value, state.vars) : ConstValue();
    if (v.is_known()) {
      state.vars[name->id] = v;
    } else {
      state.vars.erase(name->id);
    }
    return;
  }
  const std::vector<Expr>* targets = nullptr;
  if (const auto* t = target.as<Tuple>()) targets = &t->elts;
  if (const auto* l = target.as<List>()) targets = &l->elts;
  const std::vector<Expr>* values = nullptr;
  if (value) {
    if (const auto* t = value->as<Tuple>()) values = &t->elts;
    if (const auto* l = value->as<List>()) values = &l->elts;
  }
  if (targets && values && targets->size() == values->size()) {
    // `a, b = 1, 2`: evaluate all right-hand sides before binding.
    std::vector<ConstValue> evaluated;
    for (const auto& v : *values) evaluated.push_back(eval_const(v, state.vars));
    for (std::size_t i = 0; i < targets->size(); ++i) {
      std::vector<std::string> names;
      collect_target_names((*targets)[i], names);
      forget(state, names);
      if (const auto* n = (*targets)[i].as<Name>(); n && evaluated[i].is_known())
        state.vars[n->id] = evaluated[i];
    }
    return;
  }
  std::vector<std::string> names;
  collect_target_names(target, names);
  forget(state, names);
}

}  // namespace

void apply_simple(const Stmt& stmt, FlowState& state) {
  if (!state.reachable) return;
  std::vector<std::string> walrus;
  for_each_stmt_expr(stmt, [&](const Expr& e) { collect_walrus(e, walrus); });
  if (const auto* a = stmt.as<Assign>()) {
    // All targets receive the same value, evaluated once beforehand.
    FlowState before = state;
    forget(state, walrus);
    for (const auto& t : a->targets) {
      FlowState scratch = before;
      forget(scratch, walrus);
      bind_target(t, &a->value, scratch);
      std::vector<std::string> names;
      collect_target_names(t, names);
      for (const auto& n : names) {
        auto it = scratch.vars.find(n);
        if (it == scratch.vars.end()) {
          state.vars.erase(n);
        } else {
          state.vars[n] = it->second;
        }
      }
    }
    return;
  }
  if (const auto* a = stmt.as<AugAssign>()) {
    if (const auto* name = a->target.as<Name>()) {
      const ConstValue cur = lookup(state.vars, name->id);
      const ConstValue rhs = eval_const(a->value, state.vars);
      ConstValue result;
      switch (a->op) {
        case BinaryOperator::kAdd: result = cur + rhs; break;
        case BinaryOperator::kSub: result = cur - rhs; break;
        case BinaryOperator::kMul: result = cur * rhs; break;
        case BinaryOperator::kFloorDiv: result = ConstValue::floor_div(cur, rhs); break;
        default: break;
      }
      forget(state, walrus);
      if (result.is_known()) {
        state.vars[name->id] = result;
      } else {
        state.vars.erase(name->id);
      }
    } else {
      forget(state, walrus);
    }
    return;
  }
  if (const auto* a = stmt.as<AnnAssign>()) {
    forget(state, walrus);
    if (a->value) bind_target(a->target, &*a->value, state);
    return;
  }
  forget(state, walrus);
  if (const auto* s = stmt.as<Scoping>()) {
    forget(state, s->names);
    return;
  }
  std::vector<std::string> names;
  collect_assigned_names(stmt, names);
  forget(state, names);
}

void forget_assigned(const Stmt& stmt, FlowState& state) {
  std::vector<std::string> names;
  collect_assigned_names(stmt, names);
  forget(state, names);
}

bool has_loop_control(const std::vector<Stmt>& body) {
  for (const auto& s : body) {
    if (s.is<Break>() || s.is<Continue>()) return true;
    if (const auto* i = s.as<If>()) {
      if (has_loop_control(i->body) || has_loop_control(i->orelse)) return true;
    } else if (const auto* w = s.as<With>()) {
      if (has_loop_control(w->body)) return true;
    } else if (const auto* o = s.as<OpaqueStmt>()) {
      if (o->keyword == "try")
        for (const auto& b : o->bodies)
          if (has_loop_control(b)) return true;
    } else if (const auto* f = s.as<For>()) {
      if (has_loop_control(f->orelse)) return true;
    } else if (const auto* w2 = s.as<While>()) {
      if (has_loop_control(w2->orelse)) return true;
    }
  }
  return false;
}

}  // namespace internal

namespace {

using internal::FlowState;
using internal::LoopExits;

class Propagator {
 public:
  explicit Propagator(std::size_t n) : env_(n) {}

  ConstEnv take() { return std::move(env_); }

  void walk(const std::vector<Stmt>& body, FlowState& state) {
    for (const auto& s : body) visit(s, state);
  }

 private:
  void record(const Stmt& s, const FlowState& state) {
    if (recording_) env_.record(s.id, state.reachable ? state.vars : Bindings{});
  }

  // Records Unknown-everything for statements nested in opaque regions.
  void record_all_unknown(const std::vector<Stmt>& body) {
    if (!recording_) return;
    for_each_stmt(body, [&](const Stmt& s) { env_.record(s.id, Bindings{}); });
  }

  void visit(const Stmt& s, FlowState& state) {
    record(s, state);
    if (const auto* i = s.as<If>()) {
      apply_simple(Stmt{s.id, s.span, false, ExprStmt{i->test}}, state);
      FlowState then_state = state;
      FlowState else_state = state;
      walk(i->body, then_state);
      walk(i->orelse, else_state);
      state = internal::join(then_state, else_state);
    } else if (const auto* f = s.as<For>()) {
      std::vector<std::string> targets;
      collect_target_names(f->target, targets);
      loop(state, targets, f->body, f->orelse);
    } else if (const auto* w = s.as<While>()) {
      loop(state, {}, w->body, w->orelse);
    } else if (const auto* w = s.as<With>()) {
      for (const auto& item : w->items) {
        if (!item.target) continue;
        std::vector<std::string> names;
        collect_target_names(*item.target, names);
        internal::forget(state, names);
      }
      walk(w->body, state);
    } else if (const auto* f = s.as<FunctionDef>()) {
      FlowState inner;
      const bool saved = recording_;
      std::vector<LoopExits> saved_loops;
      std::swap(saved_loops, loops_);
      walk(f->body, inner);
      std::swap(saved_loops, loops_);
      recording_ = saved;
      internal::forget(state, {f->name});
    } else if (const auto* o = s.as<OpaqueStmt>()) {
      for (const auto& b : o->bodies) record_all_unknown(b);
      internal::forget_assigned(s, state);
    } else if (s.is<Return>()) {
      state = FlowState::unreachable();
    } else if (s.is<Break>()) {
      if (!loops_.empty()) loops_.back().breaks.push_back(state);
      state = FlowState::unreachable();
    } else if (s.is<Continue>()) {
      if (!loops_.empty()) loops_.back().continues.push_back(state);
      state = FlowState::unreachable();
    } else {
      internal::apply_simple(s, state);
    }
  }

  LoopExits run_body(const FlowState& head, const std::vector<std::string>& targets,
                     const std::vector<Stmt>& body, FlowState& out) {
    out = head;
    internal::forget(out, targets);
    loops_.emplace_back();
    walk(body, out);
    LoopExits exits = std::move(loops_.back());
    loops_.pop_back();
    return exits;
  }

  void loop(FlowState& state, const std::vector<std::string>& targets,
            const std::vector<Stmt>& body, const std::vector<Stmt>& orelse) {
    FlowState head = state;
    const bool saved = recording_;
    recording_ = false;
    while (true) {
      FlowState end;
      LoopExits exits = run_body(head, targets, body, end);
      FlowState next = internal::join(state, end);
      for (const auto& c : exits.continues) next = internal::join(next, c);
      if (next == head) break;
      head = std::move(next);
    }
    recording_ = saved;
    FlowState end;
    LoopExits exits = run_body(head, targets, body, end);
    FlowState exit = head;
    internal::forget(exit, targets);
    walk(orelse, exit);
    for (const auto& b : exits.breaks) exit = internal::join(exit, b);
    state = std::move(exit);
  }

  ConstEnv env_;
  bool recording_ = true;
  std::vector<LoopExits> loops_;
};

}  // namespace

ConstEnv propagate_constants(const ModuleAst& ast) {
  Propagator p(ast.stmt_count);
  internal::FlowState state;
  p.walk(ast.body, state);
  return p.take();
}

}  // namespace qlint::frontend
