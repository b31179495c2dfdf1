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

#include "qlint/frontend/unroll.h"

#include <string>
#include <utility>
#include <vector>

#include "flow_state.h"

namespace qlint::frontend {

std::optional<std::vector<std::int64_t>> range_values(const Expr& iter,
                                                      const Bindings& bindings,
                                                      std::int64_t limit) {
  const auto* call = iter.as<Call>();
  if (!call || dotted_name(*call->func) != "range") return std::nullopt;
  if (call->args.empty() || call->args.size() > 3) return std::nullopt;
  std::vector<std::int64_t> args;
  for (const auto& a : call->args) {
    if (a.kind != Argument::Kind::kPositional) return std::nullopt;
    const ConstValue v = eval_const(*a.value, bindings);
    if (!v.is_known()) return std::nullopt;
    args.push_back(v.value());
  }
  __int128 start = 0;
  __int128 stop = 0;
  __int128 step = 1;
  if (args.size() == 1) {
    stop = args[0];
  } else {
    start = args[0];
    stop = args[1];
    if (args.size() == 3) step = args[2];
  }
  if (step == 0) return std::nullopt;
  __int128 trip = 0;
  if (step > 0 && stop > start) trip = (stop - start + step - 1) / step;
  if (step < 0 && stop < start) trip = (start - stop - step - 1) / -step;
  if (trip > limit) return std::nullopt;
  std::vector<std::int64_t> out;
  for (__int128 k = 0; k < trip; ++k) {
    out.push_back(static_cast<std::int64_t>(start + k * step));
  }
  return out;
}

namespace {

using internal::FlowState;
using internal::LoopExits;

// `i = k` in front of each unrolled copy of the body.
Stmt loop_binding(const Expr& target, std::int64_t value) {
  Expr literal{target.span, IntLiteral{value, std::to_string(value)}};
  return Stmt{StmtId{}, target.span, true, Assign{{target}, std::move(literal)}};
}

class Unroller {
 public:
  explicit Unroller(int max_iterations) : max_(max_iterations) {}

  std::vector<Stmt> rewrite(const std::vector<Stmt>& body, FlowState& state) {
    std::vector<Stmt> out;
    for (const auto& s : body) rewrite_stmt(s, state, out);
    return out;
  }

 private:
  void rewrite_stmt(const Stmt& s, FlowState& state, std::vector<Stmt>& out) {
    if (const auto* f = s.as<For>()) {
      rewrite_for(s, *f, state, out);
      return;
    }
    Stmt copy = s;
    if (auto* i = copy.as<If>()) {
      internal::apply_simple(Stmt{s.id, s.span, false, ExprStmt{i->test}}, state);
      FlowState then_state = state;
      FlowState else_state = state;
      i->body = rewrite(i->body, then_state);
      i->orelse = rewrite(i->orelse, else_state);
      state = internal::join(then_state, else_state);
    } else if (auto* w = copy.as<While>()) {
      const FlowState head = loop_head(state, {}, w->body);
      FlowState inner = head;
      loops_.emplace_back();
      w->body = rewrite(w->body, inner);
      LoopExits exits = std::move(loops_.back());
      loops_.pop_back();
      FlowState exit = head;
      w->orelse = rewrite(w->orelse, exit);
      for (const auto& b : exits.breaks) exit = internal::join(exit, b);
      state = std::move(exit);
    } else if (auto* w = copy.as<With>()) {
      for (const auto& item : w->items) {
        if (!item.target) continue;
        std::vector<std::string> names;
        collect_target_names(*item.target, names);
        internal::forget(state, names);
      }
      w->body = rewrite(w->body, state);
    } else if (auto* f = copy.as<FunctionDef>()) {
      FlowState inner;
      std::vector<LoopExits> saved;
      std::swap(saved, loops_);
      f->body = rewrite(f->body, inner);
      std::swap(saved, loops_);
      internal::forget(state, {f->name});
    } else if (copy.is<OpaqueStmt>()) {
      internal::forget_assigned(copy, state);
    } else if (copy.is<Return>()) {
      state = FlowState::unreachable();
    } else if (copy.is<Break>()) {
      if (!loops_.empty()) loops_.back().breaks.push_back(state);
      state = FlowState::unreachable();
    } else if (copy.is<Continue>()) {
      if (!loops_.empty()) loops_.back().continues.push_back(state);
      state = FlowState::unreachable();
    } else {
      internal::apply_simple(copy, state);
    }
    out.push_back(std::move(copy));
  }

  void rewrite_for(const Stmt& s, const For& loop, FlowState& state,
                   std::vector<Stmt>& out) {
    std::optional<std::vector<std::int64_t>> values;
    if (loop.target.is<Name>() && state.reachable &&
        !internal::has_loop_control(loop.body)) {
      values = range_values(loop.iter, state.vars, max_);
    }
    if (values) {
      for (const std::int64_t v : *values) {
        Stmt bind = loop_binding(loop.target, v);
        internal::apply_simple(bind, state);
        out.push_back(std::move(bind));
        for (auto& copy : rewrite(loop.body, state)) out.push_back(std::move(copy));
      }
      for (auto& copy : rewrite(loop.orelse, state)) out.push_back(std::move(copy));
      return;
    }
    Stmt copy = s;
    auto* f = copy.as<For>();
    f->non_unrollable = true;
    std::vector<std::string> targets;
    collect_target_names(loop.target, targets);
    const FlowState head = loop_head(state, targets, loop.body);
    FlowState inner = head;
    internal::forget(inner, targets);
    loops_.emplace_back();
    f->body = rewrite(loop.body, inner);
    LoopExits exits = std::move(loops_.back());
    loops_.pop_back();
    FlowState exit = head;
    internal::forget(exit, targets);
    f->orelse = rewrite(loop.orelse, exit);
    for (const auto& b : exits.breaks) exit = internal::join(exit, b);
    state = std::move(exit);
    out.push_back(std::move(copy));
  }

  // State at the loop head once every iteration count has been accounted for.
  FlowState loop_head(const FlowState& entry, const std::vector<std::string>& targets,
                      const std::vector<Stmt>& body) {
    FlowState head = entry;
    while (true) {
      FlowState inner = head;
      internal::forget(inner, targets);
      loops_.emplace_back();
      rewrite(body, inner);
      LoopExits exits = std::move(loops_.back());
      loops_.pop_back();
      FlowState next = internal::join(entry, inner);
      for (const auto& c : exits.continues) next = internal::join(next, c);
      if (next == head) return head;
      head = std::move(next);
    }
  }

  int max_;
  std::vector<LoopExits> loops_;
};

}  // namespace

ModuleAst unroll_loops(const ModuleAst& ast, int max_iterations) {
  ModuleAst out;
  out.file = ast.file;
  out.comments = ast.comments;
  Unroller unroller(max_iterations < 1 ? 1 : max_iterations);
  FlowState state;
  out.body = unroller.rewrite(ast.body, state);
  number_statements(out);
  return out;
}

}  // namespace qlint::frontend
