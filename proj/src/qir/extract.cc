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

#include "qlint/qir/extract.h"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <fmt/format.h>

#include "qlint/frontend/unroll.h"

namespace qlint::qir {
namespace {

using frontend::Argument;
using frontend::Call;
using frontend::Expr;
using frontend::Stmt;
using frontend::StmtId;

// Upper bound for `range(...)` used directly as a qubit list.
constexpr std::int64_t kMaxRangeOperand = 4096;

// What a variable is known to hold.
struct Value {
  enum class Kind { kNone, kRegister, kCircuit, kInstructions, kGateOf, kFunction };
  Kind kind = Kind::kNone;
  RegisterId reg;
  CircuitId circuit;
  std::vector<EventId> events;
  std::size_t function = 0;
  // Reached through an enclosing scope: operators on it belong to another
  // ordering domain and are not recorded here.
  bool foreign = false;

  static Value of_register(RegisterId r) {
    Value v;
    v.kind = Kind::kRegister;
    v.reg = r;
    return v;
  }
  static Value of_circuit(CircuitId c, Kind k = Kind::kCircuit) {
    Value v;
    v.kind = k;
    v.circuit = c;
    return v;
  }
  bool is(Kind k) const { return kind == k; }
  bool is_local_circuit() const { return kind == Kind::kCircuit && !foreign; }

  friend bool operator==(const Value& a, const Value& b) {
    if (a.kind != b.kind || a.foreign != b.foreign) return false;
    switch (a.kind) {
      case Kind::kNone: return true;
      case Kind::kRegister: return a.reg == b.reg;
      case Kind::kCircuit:
      case Kind::kGateOf: return a.circuit == b.circuit;
      case Kind::kInstructions: return a.events == b.events;
      case Kind::kFunction: return a.function == b.function;
    }
    return false;
  }
};

using Vars = std::map<std::string, Value, std::less<>>;

struct FunctionInfo {
  bool returns_circuit = false;
  // Enclosing-scope names whose methods the body calls.
  std::set<std::string> free_receivers;
};

struct Frame {
  Vars vars;
  std::set<std::string, std::less<>> locals;
  std::set<std::string, std::less<>> lifted_names;  // receivers of to_gate & co.
  Frame* parent = nullptr;
  std::optional<std::size_t> function;
};

// Operands produced by one argument expression. `exact` is false when the
// number of operands is not known (e.g. an unresolved name that may be a list).
struct Expansion {
  std::vector<QubitRef> refs;
  bool exact = true;

  static Expansion unknown() { return Expansion{{std::nullopt}, false}; }
  void append(const Expansion& other) {
    refs.insert(refs.end(), other.refs.begin(), other.refs.end());
    exact = exact && other.exact;
  }
};

const Expr* find_arg(const Call& call, int position, std::string_view keyword) {
  int index = 0;
  for (const auto& a : call.args) {
    if (a.kind == Argument::Kind::kPositional) {
      if (index == position) return &*a.value;
      ++index;
    } else if (a.kind == Argument::Kind::kKeyword && !keyword.empty() &&
               a.keyword == keyword) {
      return &*a.value;
    }
  }
  return nullptr;
}

const Expr* find_keyword(const Call& call, std::string_view keyword) {
  for (const auto& a : call.args) {
    if (a.kind == Argument::Kind::kKeyword && a.keyword == keyword) return &*a.value;
  }
  return nullptr;
}

bool has_star_args(const Call& call) {
  return std::any_of(call.args.begin(), call.args.end(), [](const Argument& a) {
    return a.kind == Argument::Kind::kStar || a.kind == Argument::Kind::kDoubleStar;
  });
}

bool is_true_literal(const Expr* e) {
  if (!e) return false;
  const auto* b = e->as<frontend::BoolLiteral>();
  return b && b->value;
}

std::string last_component(const std::string& dotted) {
  const auto dot = dotted.rfind('.');
  return dot == std::string::npos ? dotted : dotted.substr(dot + 1);
}

class Extractor {
 public:
  Extractor(const frontend::ModuleAst& ast, const frontend::ConstEnv& env,
            const frontend::Cfg& cfg, const GateTable& gates)
      : ast_(ast), env_(env), cfg_(cfg), gates_(gates) {}

  QuantumIR run() {
    Frame module;
    prescan(ast_.body, module);
    frame_ = &module;
    walk(ast_.body);
    finalize();
    return std::move(ir_);
  }

 private:
  // --- scopes and bindings ---------------------------------------------------

  static void prescan(const std::vector<Stmt>& body, Frame& frame) {
    for (const auto& s : body) {
      std::vector<std::string> names;
      frontend::collect_assigned_names(s, names);
      frame.locals.insert(names.begin(), names.end());
    }
    frontend::for_each_stmt(body, [&](const Stmt& s) {
      frontend::for_each_stmt_expr(s, [&](const Expr& root) {
        frontend::walk_expr(root, [&](const Expr& e) {
          const auto* call = e.as<Call>();
          if (!call) return;
          const auto* attr = call->func->as<frontend::Attribute>();
          if (!attr) return;
          if (attr->attr != "to_gate" && attr->attr != "to_instruction" &&
              attr->attr != "assign_parameters") {
            return;
          }
          if (const auto* n = attr->value->as<frontend::Name>()) frame.lifted_names.insert(n->id);
        });
      });
    });
  }

  Value lookup(std::string_view name) const {
    bool foreign = false;
    for (const Frame* f = frame_; f; f = f->parent) {
      if (auto it = f->vars.find(name); it != f->vars.end()) {
        Value v = it->second;
        v.foreign = v.foreign || foreign;
        return v;
      }
      if (f->locals.count(name)) return Value{};
      foreign = true;
    }
    return Value{};
  }

  void bind(const std::string& name, Value v) {
    if (v.is(Value::Kind::kCircuit) && !v.foreign) {
      auto& decl = ir_.circuits[v.circuit.index()];
      if (decl.name.empty()) decl.name = name;
    }
    if (v.is(Value::Kind::kRegister)) {
      auto& decl = ir_.registers[v.reg.index()];
      if (decl.name.empty()) decl.name = name;
    }
    frame_->vars[name] = std::move(v);
  }

  void bind_target(const Expr& target, const Value& v) {
    if (const auto* n = target.as<frontend::Name>()) {
      bind(n->id, v);
      return;
    }
    std::vector<std::string> names;
    frontend::collect_target_names(target, names);
    for (const auto& n : names) bind(n, Value{});
  }

  void forget_assigned(const Stmt& s) {
    std::vector<std::string> names;
    frontend::collect_assigned_names(s, names);
    for (const auto& n : names) bind(n, Value{});
  }

  // Bindings that differ between the two states become unknown.
  static Vars join(const Vars& a, const Vars& b) {
    Vars out;
    for (const auto& [name, v] : a) {
      auto it = b.find(name);
      out[name] = (it != b.end() && it->second == v) ? v : Value{};
    }
    for (const auto& [name, v] : b) {
      if (!a.count(name)) out[name] = Value{};
    }
    return out;
  }

  // --- IR construction ---------------------------------------------------------

  RegisterId add_register(RegisterKind kind, ConstValue size, const SourceSpan& span,
                          bool implicit) {
    RegisterDecl r;
    r.id = RegisterId(static_cast<std::uint32_t>(ir_.registers.size()));
    r.kind = kind;
    r.size = size;
    r.span = span;
    r.implicit = implicit;
    if (size.is_known() && size.value() < 0) {
      diagnose(span, fmt::format("register size {} is negative", size.value()));
      r.size = ConstValue();
    }
    ir_.registers.push_back(std::move(r));
    return ir_.registers.back().id;
  }

  CircuitId add_circuit(CircuitKind kind, const SourceSpan& span) {
    CircuitDecl c;
    c.id = CircuitId(static_cast<std::uint32_t>(ir_.circuits.size()));
    c.kind = kind;
    c.span = span;
    c.scope = cfg_.scope_of(stmt_->id);
    ir_.circuits.push_back(std::move(c));
    layout_unknown_.push_back(false);
    return ir_.circuits.back().id;
  }

  void associate(CircuitId c, RegisterId r) {
    auto& regs = ir_.circuits[c.index()].registers;
    if (std::find(regs.begin(), regs.end(), r) != regs.end()) return;
    regs.push_back(r);
    ir_.registers[r.index()].owner_circuits.push_back(c);
  }

  // Circuits whose layout is not visible get one register of each kind with
  // an unknown size, so plain integer indices still resolve.
  void add_opaque_layout(CircuitId c, const SourceSpan& span) {
    associate(c, add_register(RegisterKind::kQuantum, ConstValue(), span, true));
    associate(c, add_register(RegisterKind::kClassical, ConstValue(), span, true));
  }

  void diagnose(const SourceSpan& span, std::string message) {
    ir_.diagnostics.push_back(ExtractionDiagnostic{span, std::move(message)});
  }

  void mark(std::optional<CircuitId> parent, CircuitId child, CompositionMechanism m,
            const SourceSpan& span) {
    if (parent && *parent == child) return;
    for (const auto& e : ir_.edges) {
      if (e.parent == parent && e.child == child && e.mechanism == m) return;
    }
    ir_.edges.push_back(CompositionEdge{parent, child, m, span});
  }

  EventId emit(CircuitId c, EventKind kind, std::string method, std::vector<QubitRef> qubits,
               std::vector<ClbitRef> clbits, const SourceSpan& span) {
    if (auto* g = std::get_if<GateOp>(&kind)) {
      if (conditional_depth_ > 0) g->is_conditional = true;
    }
    OperatorEvent e;
    e.id = EventId(static_cast<std::uint32_t>(ir_.events.size()));
    e.circuit = c;
    e.kind = std::move(kind);
    e.method = std::move(method);
    e.qubits = std::move(qubits);
    e.clbits = std::move(clbits);
    e.seq = static_cast<std::uint32_t>(ir_.events.size());
    e.stmt = stmt_->id;
    e.block = cfg_.block_of(stmt_->id);
    e.scope = cfg_.scope_of(stmt_->id);
    e.span = span;
    ir_.events.push_back(std::move(e));
    return ir_.events.back().id;
  }

  EventId emit_unknown(CircuitId c, UnknownCause cause, std::string method,
                       const SourceSpan& span, std::vector<QubitRef> qubits = {}) {
    return emit(c, UnknownOp{cause}, std::move(method), std::move(qubits), {}, span);
  }

  // --- qubit resolution ----------------------------------------------------------

  std::vector<RegisterId> registers_of(CircuitId c, RegisterKind kind) const {
    std::vector<RegisterId> out;
    for (const RegisterId r : ir_.circuits[c.index()].registers) {
      if (ir_.registers[r.index()].kind == kind) out.push_back(r);
    }
    return out;
  }

  ConstValue width(CircuitId c, RegisterKind kind) const {
    if (layout_unknown_[c.index()]) return ConstValue();
    ConstValue total = ConstValue::known(0);
    for (const RegisterId r : registers_of(c, kind)) total = total + ir_.registers[r.index()].size;
    return total;
  }

  // Bit `index` counted over all registers of `kind` in association order.
  QubitRef resolve_absolute(CircuitId c, RegisterKind kind, std::int64_t index,
                            const SourceSpan& span) {
    const std::vector<RegisterId> regs = registers_of(c, kind);
    const char* what = kind == RegisterKind::kQuantum ? "qubit" : "clbit";
    if (index < 0) {
      const ConstValue total = width(c, kind);
      if (!total.is_known()) return std::nullopt;
      index += total.value();
      if (index < 0) {
        diagnose(span, fmt::format("{} index {} is out of range for circuit '{}' with {} {}s",
                                   what, index - total.value(), circuit_name(c),
                                   total.value(), what));
        return std::nullopt;
      }
    }
    std::int64_t offset = 0;
    for (std::size_t i = 0; i < regs.size(); ++i) {
      const ConstValue size = ir_.registers[regs[i].index()].size;
      if (!size.is_known()) {
        // Only the last register may have an unknown size and still resolve.
        if (i + 1 == regs.size() && !layout_unknown_[c.index()]) {
          return ResolvedBit{regs[i], index - offset};
        }
        return std::nullopt;
      }
      if (index < offset + size.value()) return ResolvedBit{regs[i], index - offset};
      offset += size.value();
    }
    if (layout_unknown_[c.index()]) return std::nullopt;
    diagnose(span, fmt::format("{} index {} is out of range for circuit '{}' with {} {}s", what,
                               index, circuit_name(c), offset, what));
    return std::nullopt;
  }

  QubitRef resolve_in_register(CircuitId c, RegisterId r, std::int64_t index,
                               const SourceSpan& span) {
    const auto& reg = ir_.registers[r.index()];
    const auto& owners = reg.owner_circuits;
    if (std::find(owners.begin(), owners.end(), c) == owners.end()) {
      diagnose(span, fmt::format("register '{}' is not part of circuit '{}'", reg.name,
                                 circuit_name(c)));
      return std::nullopt;
    }
    if (index < 0 && reg.size.is_known()) index += reg.size.value();
    if (index < 0 || (reg.size.is_known() && index >= reg.size.value())) {
      diagnose(span, fmt::format("index {} is out of range for register '{}' of size {}", index,
                                 reg.name, reg.size.to_string()));
      return std::nullopt;
    }
    return ResolvedBit{r, index};
  }

  Expansion whole_register(CircuitId c, RegisterId r, const SourceSpan& span) {
    const ConstValue size = ir_.registers[r.index()].size;
    if (!size.is_known()) return Expansion::unknown();
    Expansion out;
    for (std::int64_t i = 0; i < size.value(); ++i) {
      out.refs.push_back(resolve_in_register(c, r, i, span));
    }
    return out;
  }

  Expansion all_bits(CircuitId c, RegisterKind kind, const SourceSpan& span) {
    const ConstValue total = width(c, kind);
    if (!total.is_known()) return Expansion::unknown();
    Expansion out;
    for (std::int64_t i = 0; i < total.value(); ++i) {
      out.refs.push_back(resolve_absolute(c, kind, i, span));
    }
    return out;
  }

  std::optional<std::int64_t> known_int(const Expr& e) const {
    return env_.eval(e, stmt_->id).get();
  }

  // `bits[a:b:c]` over a sequence of known length.
  std::optional<std::vector<std::int64_t>> slice_indices(const frontend::Slice& s,
                                                         std::int64_t length) const {
    auto bound = [&](const std::optional<frontend::Box<Expr>>& b) -> std::optional<ConstValue> {
      if (!b) return std::nullopt;
      return env_.eval(**b, stmt_->id);
    };
    std::int64_t step = 1;
    if (auto v = bound(s.step)) {
      if (!v->is_known() || v->value() == 0) return std::nullopt;
      step = v->value();
    }
    auto clamp = [&](std::int64_t v) {
      if (v < 0) v += length;
      if (step > 0) return std::clamp<std::int64_t>(v, 0, length);
      return std::clamp<std::int64_t>(v, -1, length - 1);
    };
    std::int64_t start = step > 0 ? 0 : length - 1;
    std::int64_t stop = step > 0 ? length : -1;
    if (auto v = bound(s.lower)) {
      if (!v->is_known()) return std::nullopt;
      start = clamp(v->value());
    }
    if (auto v = bound(s.upper)) {
      if (!v->is_known()) return std::nullopt;
      stop = clamp(v->value());
    }
    std::vector<std::int64_t> out;
    for (std::int64_t i = start; step > 0 ? i < stop : i > stop; i += step) out.push_back(i);
    return out;
  }

  // Operands denoted by an argument expression on circuit `c`.
  Expansion expand(const Expr& e, CircuitId c, RegisterKind kind) {
    if (const auto* list = e.as<frontend::List>()) return expand_all(list->elts, c, kind);
    if (const auto* tuple = e.as<frontend::Tuple>()) return expand_all(tuple->elts, c, kind);
    if (const auto* call = e.as<Call>()) {
      if (frontend::dotted_name(*call->func) == "range") {
        const auto values =
            frontend::range_values(e, env_.before(stmt_->id), kMaxRangeOperand);
        if (!values) return Expansion::unknown();
        Expansion out;
        for (const auto v : *values) out.refs.push_back(resolve_absolute(c, kind, v, e.span));
        return out;
      }
      return Expansion::unknown();
    }
    if (const auto* name = e.as<frontend::Name>()) {
      const Value v = lookup(name->id);
      if (v.is(Value::Kind::kRegister)) {
        if (ir_.registers[v.reg.index()].kind != kind) return Expansion::unknown();
        return whole_register(c, v.reg, e.span);
      }
    }
    if (is_bits_attribute(e, c, kind)) return all_bits(c, kind, e.span);
    if (const auto* sub = e.as<frontend::Subscript>()) {
      return expand_subscript(*sub, e.span, c, kind);
    }
    if (const auto index = known_int(e)) {
      return Expansion{{resolve_absolute(c, kind, *index, e.span)}, true};
    }
    // A scalar expression we cannot evaluate, or a list held in a variable.
    const bool scalar = e.is<frontend::BinaryOp>() || e.is<frontend::UnaryOp>() ||
                        e.is<frontend::IntLiteral>();
    return Expansion{{std::nullopt}, scalar};
  }

  Expansion expand_all(const std::vector<Expr>& elts, CircuitId c, RegisterKind kind) {
    Expansion out;
    for (const auto& el : elts) out.append(expand(el, c, kind));
    return out;
  }

  // `qc.qubits` / `qc.clbits` on the circuit being operated on.
  bool is_bits_attribute(const Expr& e, CircuitId c, RegisterKind kind) const {
    const auto* attr = e.as<frontend::Attribute>();
    if (!attr) return false;
    const char* wanted = kind == RegisterKind::kQuantum ? "qubits" : "clbits";
    if (attr->attr != wanted) return false;
    const Value owner = peek(*attr->value);
    return owner.is_local_circuit() && owner.circuit == c;
  }

  Expansion expand_subscript(const frontend::Subscript& sub, const SourceSpan& span,
                             CircuitId c, RegisterKind kind) {
    const Expr& base = *sub.value;
    const Expr& index = *sub.index;
    std::optional<RegisterId> reg;
    if (const auto* name = base.as<frontend::Name>()) {
      const Value v = lookup(name->id);
      if (v.is(Value::Kind::kRegister) && ir_.registers[v.reg.index()].kind == kind) reg = v.reg;
    }
    const bool bits_attr = is_bits_attribute(base, c, kind);
    if (!reg && !bits_attr) return Expansion::unknown();
    ConstValue length = reg ? ir_.registers[reg->index()].size : width(c, kind);
    auto at = [&](std::int64_t i) -> QubitRef {
      return reg ? resolve_in_register(c, *reg, i, span) : resolve_absolute(c, kind, i, span);
    };
    if (const auto* slice = index.as<frontend::Slice>()) {
      if (!length.is_known()) return Expansion::unknown();
      const auto indices = slice_indices(*slice, length.value());
      if (!indices) return Expansion::unknown();
      Expansion out;
      for (const auto i : *indices) out.refs.push_back(at(i));
      return out;
    }
    if (const auto i = known_int(index)) return Expansion{{at(*i)}, true};
    return Expansion{{std::nullopt}, true};
  }

  // --- expression evaluation -----------------------------------------------------

  // Value of an expression without side effects (names and attributes only).
  Value peek(const Expr& e) const {
    if (const auto* n = e.as<frontend::Name>()) return lookup(n->id);
    return Value{};
  }

  Value eval(const Expr& e, bool discarded = false) {
    if (const auto* n = e.as<frontend::Name>()) return lookup(n->id);
    if (const auto* call = e.as<Call>()) return eval_call(*call, e, discarded);
    if (const auto* op = e.as<frontend::OpaqueExpr>()) {
      taint_opaque(e, e.span);
      (void)op;
      return Value{};
    }
    frontend::for_each_child(e, [&](const Expr& child) { eval(child); });
    return Value{};
  }

  // Circuits referenced inside constructs we do not model get an unknown operator.
  void taint_opaque(const Expr& root, const SourceSpan& span) {
    std::set<CircuitId> seen;
    frontend::walk_expr(root, [&](const Expr& e) {
      const auto* n = e.as<frontend::Name>();
      if (!n) return;
      const Value v = lookup(n->id);
      if (v.is_local_circuit() && seen.insert(v.circuit).second) {
        emit_unknown(v.circuit, UnknownCause::kOpaqueContext, "", span);
      }
    });
  }

  Value eval_call(const Call& call, const Expr& whole, bool discarded) {
    if (const auto* attr = call.func->as<frontend::Attribute>()) {
      const Value receiver = eval(*attr->value);
      if (receiver.is_local_circuit()) {
        return circuit_method(receiver.circuit, attr->attr, call, whole, discarded);
      }
      if (receiver.is(Value::Kind::kCircuit)) {
        eval_args(call);
        return Value{};
      }
      if (receiver.is(Value::Kind::kInstructions)) {
        eval_args(call);
        const GateSpec* spec = gates_.find(attr->attr);
        if (spec && spec->category == GateCategory::kConditionalMarker) {
          for (const EventId id : receiver.events) {
            if (auto* g = std::get_if<GateOp>(&ir_.events[id.index()].kind)) {
              g->is_conditional = true;
            }
          }
          return receiver;
        }
        return Value{};
      }
      if (receiver.is(Value::Kind::kRegister) || receiver.is(Value::Kind::kGateOf)) {
        eval_args(call);
        return Value{};
      }
      const std::string name = attr->attr;
      return free_call(name, call, whole);
    }
    if (const auto* n = call.func->as<frontend::Name>()) {
      const Value callee = lookup(n->id);
      if (callee.is(Value::Kind::kFunction)) return user_call(callee.function, call, whole);
      if (callee.is(Value::Kind::kNone)) return free_call(n->id, call, whole);
      eval_args(call);
      return Value{};
    }
    eval(*call.func);
    return free_call("", call, whole);
  }

  std::vector<Value> eval_args(const Call& call) {
    std::vector<Value> out;
    for (const auto& a : call.args) out.push_back(eval(*a.value));
    return out;
  }

  // Circuits passed to a call, including inside list/tuple displays.
  std::vector<CircuitId> circuit_args(const Call& call, const std::vector<Value>& values) {
    std::vector<CircuitId> out;
    auto add = [&](const Value& v) {
      if (v.is_local_circuit() && std::find(out.begin(), out.end(), v.circuit) == out.end()) {
        out.push_back(v.circuit);
      }
    };
    for (std::size_t i = 0; i < call.args.size(); ++i) {
      add(values[i]);
      const Expr& e = *call.args[i].value;
      const std::vector<Expr>* elts = nullptr;
      if (const auto* l = e.as<frontend::List>()) elts = &l->elts;
      if (const auto* t = e.as<frontend::Tuple>()) elts = &t->elts;
      if (elts) {
        for (const auto& el : *elts) add(peek(el));
      }
    }
    return out;
  }

  // Calls to something that is not a known circuit method.
  Value free_call(const std::string& dotted, const Call& call, const Expr& whole) {
    const std::string name = last_component(dotted);
    if (name == "QuantumCircuit") return construct_circuit(call, whole);
    if (name == "QuantumRegister" || name == "AncillaRegister" ||
        name == "ClassicalRegister") {
      return construct_register(name == "ClassicalRegister" ? RegisterKind::kClassical
                                                            : RegisterKind::kQuantum,
                                call, whole);
    }
    if (name == "transpile") return construct_transpiled(call, whole);
    const GateSpec* spec = gates_.find(name);
    if (spec && spec->category == GateCategory::kBuiltinCircuit) {
      eval_args(call);
      const CircuitId c = add_circuit(CircuitKind::kBuiltinParametrized, whole.span);
      ConstValue size;
      if (!spec->qubits.empty()) {
        if (const Expr* arg = find_arg(call, spec->qubits[0].position, spec->qubits[0].keyword)) {
          size = env_.eval(*arg, stmt_->id);
        }
      }
      associate(c, add_register(RegisterKind::kQuantum, size, whole.span, true));
      return Value::of_circuit(c);
    }
    const std::vector<Value> values = eval_args(call);
    if (spec && spec->category == GateCategory::kPureCall) return Value{};
    for (const CircuitId c : circuit_args(call, values)) {
      emit_unknown(c, UnknownCause::kUnknownCalleeWithCircuitArg, name, whole.span);
    }
    return Value{};
  }

  Value user_call(std::size_t fn, const Call& call, const Expr& whole) {
    const std::vector<Value> values = eval_args(call);
    for (const CircuitId c : circuit_args(call, values)) {
      emit_unknown(c, UnknownCause::kUnknownCalleeWithCircuitArg,
                   frontend::dotted_name(*call.func), whole.span);
    }
    const FunctionInfo& info = functions_[fn];
    for (const auto& name : info.free_receivers) {
      const Value v = lookup(name);
      if (v.is_local_circuit()) {
        emit_unknown(v.circuit, UnknownCause::kGlobalCircuitMutation,
                     frontend::dotted_name(*call.func), whole.span);
      }
    }
    if (!info.returns_circuit) return Value{};
    const CircuitId c = add_circuit(CircuitKind::kUserFunctionReturn, whole.span);
    add_opaque_layout(c, whole.span);
    return Value::of_circuit(c);
  }

  Value construct_register(RegisterKind kind, const Call& call, const Expr& whole) {
    eval_args(call);
    ConstValue size;
    if (has_star_args(call)) {
      size = ConstValue();
    } else if (const Expr* arg = find_arg(call, 0, "size")) {
      size = env_.eval(*arg, stmt_->id);
    }
    return Value::of_register(add_register(kind, size, whole.span, false));
  }

  Value construct_circuit(const Call& call, const Expr& whole) {
    const std::vector<Value> values = eval_args(call);
    const CircuitId c = add_circuit(CircuitKind::kConstructor, whole.span);
    int positional = 0;
    bool saw_register = false;
    for (std::size_t i = 0; i < call.args.size(); ++i) {
      const Argument& a = call.args[i];
      if (a.kind == Argument::Kind::kKeyword) continue;  // name=, global_phase=, metadata=
      if (a.kind != Argument::Kind::kPositional) {
        layout_unknown_[c.index()] = true;
        continue;
      }
      const Value& v = values[i];
      if (v.is(Value::Kind::kRegister)) {
        associate(c, v.reg);
        saw_register = true;
      } else if (const auto* list = a.value->as<frontend::List>()) {
        // QuantumCircuit([qr, cr]) style register lists.
        for (const auto& el : list->elts) {
          const Value ev = peek(el);
          if (ev.is(Value::Kind::kRegister)) {
            associate(c, ev.reg);
          } else {
            layout_unknown_[c.index()] = true;
          }
        }
        saw_register = true;
      } else if (!saw_register && positional < 2) {
        const RegisterKind kind = positional == 0 ? RegisterKind::kQuantum : RegisterKind::kClassical;
        associate(c, add_register(kind, env_.eval(*a.value, stmt_->id), a.value->span, true));
      } else {
        layout_unknown_[c.index()] = true;
      }
      ++positional;
    }
    return Value::of_circuit(c);
  }

  Value construct_transpiled(const Call& call, const Expr& whole) {
    const std::vector<Value> values = eval_args(call);
    const CircuitId c = add_circuit(CircuitKind::kTranspiled, whole.span);
    if (!values.empty() && call.args[0].kind == Argument::Kind::kPositional &&
        values[0].is(Value::Kind::kCircuit)) {
      ir_.circuits[c.index()].source = values[0].circuit;
    }
    if (const Expr* level = find_keyword(call, "optimization_level")) {
      ir_.circuits[c.index()].transpile_opt_level = env_.eval(*level, stmt_->id);
    }
    add_opaque_layout(c, whole.span);
    return Value::of_circuit(c);
  }

  Value copy_of(CircuitId source, const SourceSpan& span) {
    const CircuitId c = add_circuit(CircuitKind::kCopy, span);
    ir_.circuits[c.index()].source = source;
    const std::vector<RegisterId> regs = ir_.circuits[source.index()].registers;
    for (const RegisterId r : regs) associate(c, r);
    layout_unknown_[c.index()] = layout_unknown_[source.index()];
    return Value::of_circuit(c);
  }

  Value circuit_method(CircuitId c, const std::string& method, const Call& call,
                       const Expr& whole, bool discarded) {
    const GateSpec* spec = gates_.find(method);
    if (!spec) {
      eval_args(call);
      emit_unknown(c, UnknownCause::kUnknownCalleeWithCircuitArg, method, whole.span);
      return Value{};
    }
    switch (spec->category) {
      case GateCategory::kReversibleGate:
      case GateCategory::kMeasurement:
      case GateCategory::kReset:
      case GateCategory::kInitialize:
      case GateCategory::kBarrier:
        return operators(c, *spec, call, whole);
      case GateCategory::kMeasureAll: {
        eval_args(call);
        Value v;
        v.kind = Value::Kind::kInstructions;
        v.events.push_back(emit(c, classify_measure_all(call), method, {}, {}, whole.span));
        return v;
      }
      case GateCategory::kCompose:
        return compose(c, *spec, call, whole, discarded);
      case GateCategory::kAppend:
        return append(c, *spec, call, whole);
      case GateCategory::kAddRegister: {
        const std::vector<Value> values = eval_args(call);
        for (std::size_t i = 0; i < values.size(); ++i) {
          if (values[i].is(Value::Kind::kRegister)) {
            associate(c, values[i].reg);
          } else {
            layout_unknown_[c.index()] = true;
          }
        }
        return Value{};
      }
      case GateCategory::kToGate:
        eval_args(call);
        mark(std::nullopt, c, CompositionMechanism::kToGateOrInstruction, whole.span);
        return Value::of_circuit(c, Value::Kind::kGateOf);
      case GateCategory::kCircuitCopy:
        eval_args(call);
        if (is_true_literal(find_keyword(call, "inplace"))) return Value{};
        return copy_of(c, whole.span);
      case GateCategory::kInertMethod:
        eval_args(call);
        return Value{};
      case GateCategory::kConditionalMarker:
      case GateCategory::kBuiltinCircuit:
      case GateCategory::kPureCall:
        break;
    }
    eval_args(call);
    emit_unknown(c, UnknownCause::kUnknownCalleeWithCircuitArg, method, whole.span);
    return Value{};
  }

  EventKind kind_for(const GateSpec& spec) const {
    switch (spec.category) {
      case GateCategory::kMeasurement: return MeasurementOp{};
      case GateCategory::kReset: return ResetOp{};
      case GateCategory::kInitialize: return InitializeOp{};
      case GateCategory::kBarrier: return BarrierOp{};
      default: return GateOp{spec.method, false};
    }
  }

  // Gate-like calls: resolves operands per the table and broadcasts lists.
  Value operators(CircuitId c, const GateSpec& spec, const Call& call, const Expr& whole) {
    eval_args(call);
    Value result;
    result.kind = Value::Kind::kInstructions;
    const SourceSpan& span = whole.span;
    if (spec.category == GateCategory::kBarrier) {
      Expansion all;
      if (spec.all_args_are_qubits) {
        if (call.args.empty()) {
          all = all_bits(c, RegisterKind::kQuantum, span);
        } else {
          for (const auto& a : call.args) {
            if (a.kind == Argument::Kind::kPositional) {
              all.append(expand(*a.value, c, RegisterKind::kQuantum));
            }
          }
        }
      } else {
        for (const auto& slot : spec.qubits) {
          if (const Expr* e = find_arg(call, slot.position, slot.keyword)) {
            all.append(expand(*e, c, RegisterKind::kQuantum));
          }
        }
      }
      std::vector<QubitRef> resolved;
      for (const auto& r : all.refs) {
        if (r) resolved.push_back(r);
      }
      result.events.push_back(emit(c, BarrierOp{}, spec.method, std::move(resolved), {}, span));
      return result;
    }

    bool unresolvable = has_star_args(call);
    std::vector<Expansion> scalar_slots;  // broadcast across
    std::vector<Expansion> list_slots;    // consumed whole by every operator
    std::vector<bool> slot_is_clbit;
    auto collect = [&](const std::vector<ArgSlot>& slots, RegisterKind kind) {
      for (const auto& slot : slots) {
        const Expr* e = find_arg(call, slot.position, slot.keyword);
        Expansion x;
        if (e) {
          x = expand(*e, c, kind);
        } else if (spec.category == GateCategory::kInitialize && kind == RegisterKind::kQuantum) {
          x = all_bits(c, kind, span);
        } else {
          x = Expansion::unknown();
          if (kind == RegisterKind::kQuantum) unresolvable = true;
        }
        if (slot.is_list) {
          if (kind == RegisterKind::kQuantum) list_slots.push_back(std::move(x));
        } else {
          scalar_slots.push_back(std::move(x));
          slot_is_clbit.push_back(kind == RegisterKind::kClassical);
        }
      }
    };
    collect(spec.qubits, RegisterKind::kQuantum);
    collect(spec.clbits, RegisterKind::kClassical);

    std::size_t count = 1;
    for (std::size_t i = 0; i < scalar_slots.size(); ++i) {
      const auto& x = scalar_slots[i];
      if (!x.exact) {
        if (!slot_is_clbit[i]) unresolvable = true;
        continue;
      }
      if (x.refs.size() == 1) continue;
      if (count == 1) {
        count = x.refs.size();
      } else if (count != x.refs.size()) {
        diagnose(span, fmt::format("cannot broadcast operands of '{}'", spec.method));
        unresolvable = true;
      }
    }
    std::vector<QubitRef> list_refs;
    for (const auto& x : list_slots) {
      if (!x.exact) unresolvable = true;
      list_refs.insert(list_refs.end(), x.refs.begin(), x.refs.end());
    }

    if (unresolvable) {
      std::vector<QubitRef> refs;
      for (std::size_t i = 0; i < scalar_slots.size(); ++i) {
        if (slot_is_clbit[i]) continue;
        refs.insert(refs.end(), scalar_slots[i].refs.begin(), scalar_slots[i].refs.end());
      }
      refs.insert(refs.end(), list_refs.begin(), list_refs.end());
      result.events.push_back(emit_unknown(c, UnknownCause::kUnresolvedQubit, spec.method, span,
                                           std::move(refs)));
      return result;
    }
    for (std::size_t k = 0; k < count; ++k) {
      std::vector<QubitRef> qubits;
      std::vector<ClbitRef> clbits;
      for (std::size_t i = 0; i < scalar_slots.size(); ++i) {
        const auto& x = scalar_slots[i];
        const QubitRef r = x.refs.size() == 1 ? x.refs[0] : x.refs[k];
        (slot_is_clbit[i] ? clbits : qubits).push_back(r);
      }
      qubits.insert(qubits.end(), list_refs.begin(), list_refs.end());
      const bool any_unknown =
          qubits.empty() ||
          std::any_of(qubits.begin(), qubits.end(), [](const QubitRef& r) { return !r; });
      if (any_unknown) {
        result.events.push_back(emit_unknown(c, UnknownCause::kUnresolvedQubit, spec.method, span,
                                             std::move(qubits)));
      } else {
        result.events.push_back(
            emit(c, kind_for(spec), spec.method, std::move(qubits), std::move(clbits), span));
      }
    }
    return result;
  }

  // Operands of compose/append: an explicit qubit list, or the whole circuit.
  void composite_event(CircuitId c, const GateSpec& spec, const Call& call, const SourceSpan& span) {
    Expansion x;
    const Expr* e = spec.qubits.empty()
                        ? nullptr
                        : find_arg(call, spec.qubits[0].position, spec.qubits[0].keyword);
    if (e) {
      x = expand(*e, c, RegisterKind::kQuantum);
    } else {
      x = all_bits(c, RegisterKind::kQuantum, span);
    }
    const bool ok = x.exact && !x.refs.empty() &&
                    std::all_of(x.refs.begin(), x.refs.end(), [](const QubitRef& r) { return r.has_value(); });
    if (ok) {
      emit(c, GateOp{spec.method, false}, spec.method, std::move(x.refs), {}, span);
    } else {
      emit_unknown(c, UnknownCause::kUnresolvedQubit, spec.method, span, std::move(x.refs));
    }
  }

  std::optional<CircuitId> child_circuit(const Value& v) const {
    if ((v.is(Value::Kind::kCircuit) || v.is(Value::Kind::kGateOf)) && !v.foreign) {
      return v.circuit;
    }
    return std::nullopt;
  }

  Value compose(CircuitId c, const GateSpec& spec, const Call& call, const Expr& whole,
                bool discarded) {
    std::optional<CircuitId> child;
    if (const auto& arg = find_arg(call, 0, "other")) child = child_circuit(eval(*arg));
    for (const auto& a : call.args) {
      if (&*a.value != find_arg(call, 0, "other")) eval(*a.value);
    }
    if (child) mark(c, *child, CompositionMechanism::kCompose, whole.span);
    const bool inplace = is_true_literal(find_keyword(call, "inplace"));
    ir_.compose_sites.push_back(ComposeSite{c, child, whole.span, discarded, inplace});
    if (inplace) {
      composite_event(c, spec, call, whole.span);
      return Value{};
    }
    Value result = copy_of(c, whole.span);
    composite_event(result.circuit, spec, call, whole.span);
    return result;
  }

  Value append(CircuitId c, const GateSpec& spec, const Call& call, const Expr& whole) {
    std::optional<CircuitId> child;
    const Expr* instruction = find_arg(call, 0, "instruction");
    if (instruction) child = child_circuit(eval(*instruction));
    for (const auto& a : call.args) {
      if (&*a.value != instruction) eval(*a.value);
    }
    if (child) mark(c, *child, CompositionMechanism::kAppend, whole.span);
    composite_event(c, spec, call, whole.span);
    return Value{};
  }

  std::string circuit_name(CircuitId c) const {
    const auto& name = ir_.circuits[c.index()].name;
    return name.empty() ? fmt::format("<circuit@{}>", ir_.circuits[c.index()].span.line()) : name;
  }

  // --- statements ------------------------------------------------------------

  void walk(const std::vector<Stmt>& body) {
    for (const auto& s : body) visit(s);
  }

  void visit(const Stmt& s) {
    const Stmt* saved = stmt_;
    stmt_ = &s;
    visit_inner(s);
    stmt_ = saved;
  }

  void visit_inner(const Stmt& s) {
    using namespace frontend;
    if (const auto* e = s.as<ExprStmt>()) {
      eval(e->value, /*discarded=*/true);
    } else if (const auto* a = s.as<Assign>()) {
      assign(a->targets, a->value);
    } else if (const auto* a = s.as<AugAssign>()) {
      eval(a->value);
      bind_target(a->target, Value{});
    } else if (const auto* a = s.as<AnnAssign>()) {
      if (a->value) {
        assign({a->target}, *a->value);
      }
    } else if (const auto* i = s.as<If>()) {
      eval(i->test);
      const Vars before = frame_->vars;
      walk(i->body);
      Vars then_vars = std::move(frame_->vars);
      frame_->vars = before;
      walk(i->orelse);
      frame_->vars = join(then_vars, frame_->vars);
    } else if (const auto* f = s.as<For>()) {
      eval(f->iter);
      loop([&] {
        bind_target(f->target, Value{});
        walk(f->body);
      });
      walk(f->orelse);
    } else if (const auto* w = s.as<While>()) {
      eval(w->test);
      loop([&] { walk(w->body); });
      walk(w->orelse);
    } else if (const auto* w = s.as<With>()) {
      int conditional = 0;
      for (const auto& item : w->items) {
        const Value v = eval_with_context(item.context, conditional);
        if (item.target) bind_target(*item.target, v);
      }
      conditional_depth_ += conditional;
      walk(w->body);
      conditional_depth_ -= conditional;
    } else if (const auto* f = s.as<FunctionDef>()) {
      function_def(s, *f);
    } else if (const auto* r = s.as<Return>()) {
      if (r->value) {
        const Value v = eval(*r->value);
        if (v.is_local_circuit() && frame_->function) {
          functions_[*frame_->function].returns_circuit = true;
          mark(std::nullopt, v.circuit, CompositionMechanism::kReturnedFromFunction, s.span);
        }
      }
    } else if (const auto* imp = s.as<Import>()) {
      for (const auto& n : imp->bound_names) bind(n, Value{});
    } else if (const auto* sc = s.as<Scoping>()) {
      for (const auto& n : sc->names) {
        frame_->locals.erase(n);
        frame_->vars.erase(n);
      }
    } else if (const auto* o = s.as<OtherSimple>()) {
      for (const auto& e : o->exprs) eval(e);
      if (o->keyword == "del") forget_assigned(s);
    } else if (const auto* o = s.as<OpaqueStmt>()) {
      opaque(s, *o);
    }
  }

  void assign(const std::vector<Expr>& targets, const Expr& value) {
    // Element-wise tuple assignment: `qr, cr = QuantumRegister(2), ClassicalRegister(2)`.
    const auto* vt = value.as<frontend::Tuple>();
    if (vt && targets.size() == 1) {
      const auto* tt = targets[0].as<frontend::Tuple>();
      if (tt && tt->elts.size() == vt->elts.size()) {
        std::vector<Value> values;
        for (const auto& el : vt->elts) values.push_back(eval(el));
        for (std::size_t i = 0; i < values.size(); ++i) bind_target(tt->elts[i], values[i]);
        return;
      }
    }
    Value v = eval(value);
    if (v.is(Value::Kind::kNone) && value.is<Call>()) {
      // An object produced by an external call that is later used like a circuit.
      for (const auto& t : targets) {
        const auto* n = t.as<frontend::Name>();
        if (n && frame_->lifted_names.count(n->id)) {
          const CircuitId c = add_circuit(CircuitKind::kUnknownWithCircuitMethods, value.span);
          add_opaque_layout(c, value.span);
          v = Value::of_circuit(c);
          break;
        }
      }
    }
    for (const auto& t : targets) {
      if (!t.is<frontend::Name>()) eval_target_parts(t);
      bind_target(t, v);
    }
  }

  // Sub-expressions of `a[i].b = ...` targets are evaluated for their effects.
  void eval_target_parts(const Expr& t) {
    frontend::for_each_child(t, [&](const Expr& child) {
      if (!child.is<frontend::Name>()) eval(child);
    });
  }

  Value eval_with_context(const Expr& context, int& conditional) {
    if (const auto* call = context.as<Call>()) {
      if (const auto* attr = call->func->as<frontend::Attribute>()) {
        const Value receiver = eval(*attr->value);
        if (receiver.is_local_circuit() &&
            (attr->attr == "if_test" || attr->attr == "while_loop")) {
          eval_args(*call);
          ++conditional;
          return Value{};
        }
        if (receiver.is_local_circuit()) {
          return circuit_method(receiver.circuit, attr->attr, *call, context, false);
        }
      }
    }
    return eval(context);
  }

  // Walks a loop body once; names rebound inside become unknown afterwards.
  template <typename Body>
  void loop(Body body) {
    const Vars before = frame_->vars;
    body();
    frame_->vars = join(before, frame_->vars);
  }

  void function_def(const Stmt& s, const frontend::FunctionDef& f) {
    for (const auto& d : f.decorators) eval(d);
    for (const auto& p : f.params) {
      if (p.default_value) eval(*p.default_value);
    }
    const std::size_t index = functions_.size();
    functions_.emplace_back();
    Value fv;
    fv.kind = Value::Kind::kFunction;
    fv.function = index;
    bind(f.name, fv);

    Frame inner;
    inner.parent = frame_;
    inner.function = index;
    prescan(f.body, inner);
    for (const auto& p : f.params) {
      inner.locals.insert(p.name);
      inner.vars[p.name] = Value{};
    }
    // Scoping statements make a name refer to the enclosing binding.
    frontend::for_each_stmt(f.body, [&](const Stmt& st) {
      if (const auto* sc = st.as<frontend::Scoping>()) {
        for (const auto& n : sc->names) inner.locals.erase(n);
      }
    });
    std::set<std::string> free;
    frontend::for_each_stmt(f.body, [&](const Stmt& st) {
      frontend::for_each_stmt_expr(st, [&](const Expr& root) {
        frontend::walk_expr(root, [&](const Expr& e) {
          const auto* call = e.as<Call>();
          if (!call) return;
          const auto* attr = call->func->as<frontend::Attribute>();
          if (!attr) return;
          const auto* n = attr->value->as<frontend::Name>();
          if (n && !inner.locals.count(n->id)) free.insert(n->id);
        });
      });
    });
    functions_[index].free_receivers = std::move(free);

    Frame* saved = frame_;
    const int saved_conditional = conditional_depth_;
    conditional_depth_ = 0;
    frame_ = &inner;
    walk(f.body);
    frame_ = saved;
    conditional_depth_ = saved_conditional;
    (void)s;
  }

  void opaque(const Stmt& s, const frontend::OpaqueStmt& o) {
    std::set<CircuitId> seen;
    auto taint = [&](const Expr& root) {
      frontend::walk_expr(root, [&](const Expr& e) {
        const auto* n = e.as<frontend::Name>();
        if (!n) return;
        const Value v = lookup(n->id);
        if (v.is_local_circuit() && seen.insert(v.circuit).second) {
          emit_unknown(v.circuit, UnknownCause::kOpaqueContext, o.keyword, s.span);
        }
      });
    };
    for (const auto& e : o.exprs) taint(e);
    for (const auto& body : o.bodies) {
      frontend::for_each_stmt(body, [&](const Stmt& inner) {
        frontend::for_each_stmt_expr(inner, taint);
      });
    }
    forget_assigned(s);
  }

  void finalize() {
    for (auto& c : ir_.circuits) {
      c.num_qubits = width(c.id, RegisterKind::kQuantum);
      c.num_clbits = width(c.id, RegisterKind::kClassical);
    }
  }

  const frontend::ModuleAst& ast_;
  const frontend::ConstEnv& env_;
  const frontend::Cfg& cfg_;
  const GateTable& gates_;

  QuantumIR ir_;
  std::vector<bool> layout_unknown_;
  std::vector<FunctionInfo> functions_;
  Frame* frame_ = nullptr;
  const Stmt* stmt_ = nullptr;
  int conditional_depth_ = 0;
};

}  // namespace

QuantumIR extract(const frontend::ModuleAst& ast, const frontend::ConstEnv& env,
                  const frontend::Cfg& cfg, const GateTable& gates) {
  return Extractor(ast, env, cfg, gates).run();
}

}  // namespace qlint::qir
