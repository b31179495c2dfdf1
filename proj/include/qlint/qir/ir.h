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

// The quantum IR for one source file: registers, circuits, compositions and
// the operator events appended to circuits, in program order.

#ifndef QLINT_QIR_IR_H_
#define QLINT_QIR_IR_H_

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qlint/common/const_value.h"
#include "qlint/common/source_span.h"
#include "qlint/common/strong_id.h"
#include "qlint/frontend/ast.h"
#include "qlint/frontend/cfg.h"

namespace qlint::qir {

using RegisterId = StrongId<struct RegisterTag>;
using CircuitId = StrongId<struct CircuitTag>;
using EventId = StrongId<struct EventTag>;

enum class RegisterKind { kQuantum, kClassical };

struct RegisterDecl {
  RegisterId id;
  RegisterKind kind = RegisterKind::kQuantum;
  ConstValue size;
  SourceSpan span;
  std::vector<CircuitId> owner_circuits;
  bool implicit = false;  // created by QuantumCircuit(n, m) and similar
  std::string name;       // variable name at the allocation site, if any
};

enum class CircuitKind {
  kConstructor,
  kUserFunctionReturn,
  kBuiltinParametrized,
  kUnknownWithCircuitMethods,
  kCopy,
  kTranspiled,
};

const char* to_string(CircuitKind k);

struct CircuitDecl {
  CircuitId id;
  CircuitKind kind = CircuitKind::kConstructor;
  ConstValue num_qubits;
  ConstValue num_clbits;
  std::vector<RegisterId> registers;  // association order
  ConstValue transpile_opt_level;     // kTranspiled only
  std::optional<CircuitId> source;    // copied or transpiled from
  SourceSpan span;
  std::string name;
  frontend::ScopeId scope;
};

enum class CompositionMechanism { kAppend, kCompose, kReturnedFromFunction, kToGateOrInstruction };

const char* to_string(CompositionMechanism m);

// Append/compose edges have a parent; the two "likely subcircuit" marks
// (returned from a function, converted to a gate) do not.
struct CompositionEdge {
  std::optional<CircuitId> parent;
  CircuitId child;
  CompositionMechanism mechanism = CompositionMechanism::kAppend;
  SourceSpan span;
};

struct ResolvedBit {
  RegisterId reg;
  std::int64_t index = 0;

  friend auto operator<=>(const ResolvedBit&, const ResolvedBit&) = default;
};

using QubitRef = std::optional<ResolvedBit>;
using ClbitRef = std::optional<ResolvedBit>;

struct GateOp {
  std::string name;
  bool is_conditional = false;
};
struct MeasurementOp {};
struct MeasurementAllOp {
  bool creates_new_register = true;
};
struct ResetOp {};
struct InitializeOp {};
struct BarrierOp {};

enum class UnknownCause {
  kUnresolvedQubit,
  kUnknownCalleeWithCircuitArg,
  kGlobalCircuitMutation,
  kOpaqueContext,  // circuit used inside a lambda, comprehension, class or try
};

const char* to_string(UnknownCause c);

struct UnknownOp {
  UnknownCause cause = UnknownCause::kUnresolvedQubit;
};

using EventKind = std::variant<GateOp, MeasurementOp, MeasurementAllOp, ResetOp,
                               InitializeOp, BarrierOp, UnknownOp>;

struct OperatorEvent {
  EventId id;
  CircuitId circuit;
  EventKind kind;
  std::string method;  // the called method, e.g. "cx" or "measure"
  std::vector<QubitRef> qubits;
  std::vector<ClbitRef> clbits;
  std::uint32_t seq = 0;
  frontend::StmtId stmt;
  frontend::BlockId block;
  frontend::ScopeId scope;
  SourceSpan span;

  template <typename T>
  bool is() const { return std::holds_alternative<T>(kind); }
  template <typename T>
  const T* as() const { return std::get_if<T>(&kind); }
  bool is_unknown() const { return is<UnknownOp>(); }
};

std::string kind_name(const OperatorEvent& e);

// A compose() call on a known circuit.
struct ComposeSite {
  CircuitId receiver;
  std::optional<CircuitId> child;
  SourceSpan span;
  bool result_discarded = false;
  bool inplace = false;
};

struct ExtractionDiagnostic {
  SourceSpan span;
  std::string message;
};

struct QuantumIR {
  std::vector<RegisterDecl> registers;
  std::vector<CircuitDecl> circuits;
  std::vector<CompositionEdge> edges;
  std::vector<OperatorEvent> events;  // ordered by seq
  std::vector<ComposeSite> compose_sites;
  std::vector<ExtractionDiagnostic> diagnostics;

  const RegisterDecl& reg(RegisterId id) const { return registers[id.index()]; }
  const CircuitDecl& circuit(CircuitId id) const { return circuits[id.index()]; }
  const OperatorEvent& event(EventId id) const { return events[id.index()]; }

  // Circuit has a parent through append/compose or carries a subcircuit mark.
  bool is_subcircuit(CircuitId c) const;
  // Circuit is the parent of some append/compose edge.
  bool has_subcircuits(CircuitId c) const;
  // Circuit takes part in any edge or mark.
  bool in_composition(CircuitId c) const;
  bool has_unknown_operator(CircuitId c) const;
};

// Position of a resolved qubit in the whole circuit: its index shifted by the
// sizes of the quantum registers associated before its register.
// Throws std::invalid_argument if the register is not part of the circuit.
ConstValue absolute_index(const QuantumIR& ir, const ResolvedBit& ref, CircuitId circuit);

// Append/compose edges plus likely-subcircuit marks, in source order.
std::vector<CompositionEdge> detect_composition(const QuantumIR& ir);

// MeasurementAll for a measure_all(...) call: a new register is created unless
// the add_bits keyword is the literal False.
MeasurementAllOp classify_measure_all(const frontend::Call& call);

}  // namespace qlint::qir

#endif  // QLINT_QIR_IR_H_
