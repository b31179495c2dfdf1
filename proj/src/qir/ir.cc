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

#include "qlint/qir/ir.h"

#include <algorithm>
#include <stdexcept>

namespace qlint::qir {

const char* to_string(CircuitKind k) {
  switch (k) {
    case CircuitKind::kConstructor: return "constructor";
    case CircuitKind::kUserFunctionReturn: return "user_function_return";
    case CircuitKind::kBuiltinParametrized: return "builtin_parametrized";
    case CircuitKind::kUnknownWithCircuitMethods: return "unknown_with_circuit_methods";
    case CircuitKind::kCopy: return "copy";
    case CircuitKind::kTranspiled: return "transpiled";
  }
  return "?";
}

const char* to_string(CompositionMechanism m) {
  switch (m) {
    case CompositionMechanism::kAppend: return "append";
    case CompositionMechanism::kCompose: return "compose";
    case CompositionMechanism::kReturnedFromFunction: return "returned_from_function";
    case CompositionMechanism::kToGateOrInstruction: return "to_gate_or_instruction";
  }
  return "?";
}

const char* to_string(UnknownCause c) {
  switch (c) {
    case UnknownCause::kUnresolvedQubit: return "unresolved_qubit";
    case UnknownCause::kUnknownCalleeWithCircuitArg: return "unknown_callee_with_circuit_arg";
    case UnknownCause::kGlobalCircuitMutation: return "global_circuit_mutation";
    case UnknownCause::kOpaqueContext: return "opaque_context";
  }
  return "?";
}

std::string kind_name(const OperatorEvent& e) {
  struct Namer {
    const OperatorEvent& e;
    std::string operator()(const GateOp& g) const { return g.name; }
    std::string operator()(const MeasurementOp&) const { return "measure"; }
    std::string operator()(const MeasurementAllOp&) const { return "measure_all"; }
    std::string operator()(const ResetOp&) const { return "reset"; }
    std::string operator()(const InitializeOp&) const { return e.method; }
    std::string operator()(const BarrierOp&) const { return e.method; }
    std::string operator()(const UnknownOp& u) const {
      return std::string("unknown(") + to_string(u.cause) + ")";
    }
  };
  return std::visit(Namer{e}, e.kind);
}

bool QuantumIR::is_subcircuit(CircuitId c) const {
  for (const auto& e : edges) {
    if (e.child == c) return true;
  }
  return false;
}

bool QuantumIR::has_subcircuits(CircuitId c) const {
  for (const auto& e : edges) {
    if (e.parent == c) return true;
  }
  return false;
}

bool QuantumIR::in_composition(CircuitId c) const {
  for (const auto& e : edges) {
    if (e.child == c || e.parent == c) return true;
  }
  return false;
}

bool QuantumIR::has_unknown_operator(CircuitId c) const {
  for (const auto& e : events) {
    if (e.circuit == c && e.is_unknown()) return true;
  }
  return false;
}

ConstValue absolute_index(const QuantumIR& ir, const ResolvedBit& ref, CircuitId circuit) {
  const RegisterKind kind = ir.reg(ref.reg).kind;
  ConstValue offset = ConstValue::known(0);
  for (const RegisterId r : ir.circuit(circuit).registers) {
    if (r == ref.reg) return offset + ConstValue::known(ref.index);
    if (ir.reg(r).kind == kind) offset = offset + ir.reg(r).size;
  }
  throw std::invalid_argument("register is not associated with the circuit");
}

std::vector<CompositionEdge> detect_composition(const QuantumIR& ir) {
  std::vector<CompositionEdge> out = ir.edges;
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.span.begin() < b.span.begin();
  });
  return out;
}

MeasurementAllOp classify_measure_all(const frontend::Call& call) {
  for (const auto& arg : call.args) {
    if (arg.kind != frontend::Argument::Kind::kKeyword || arg.keyword != "add_bits") continue;
    if (const auto* b = arg.value->as<frontend::BoolLiteral>(); b && !b->value) {
      return MeasurementAllOp{false};
    }
  }
  return MeasurementAllOp{true};
}

}  // namespace qlint::qir
