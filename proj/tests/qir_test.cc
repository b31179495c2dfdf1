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

#include <gtest/gtest.h>

#include <string>

#include "qlint/frontend/parser.h"
#include "qlint/qir/extract.h"
#include "support/test_util.h"

namespace qlint::qir {
namespace {

using testing::analyze_text;

const CircuitDecl* circuit_named(const QuantumIR& ir, const std::string& name) {
  for (const auto& c : ir.circuits) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

template <typename Kind>
int count_kind(const QuantumIR& ir, std::string_view method = {}) {
  int n = 0;
  for (const auto& e : ir.events) {
    if (e.is<Kind>() && (method.empty() || e.method == method)) ++n;
  }
  return n;
}

TEST(Extract, MotivatingProgram) {
  auto a = analyze_text(testing::read_text(testing::corpus_dir() + "/samples/motivating.py"));
  const auto& ir = a.ir;
  ASSERT_EQ(ir.registers.size(), 4u);  // two declared, two from the transpiled layout
  EXPECT_EQ(ir.registers[0].kind, RegisterKind::kQuantum);
  EXPECT_EQ(ir.registers[0].size, ConstValue::known(4));
  EXPECT_EQ(ir.registers[1].kind, RegisterKind::kClassical);
  EXPECT_EQ(ir.registers[1].size, ConstValue::known(3));

  const auto* circ = circuit_named(ir, "circ");
  ASSERT_NE(circ, nullptr);
  EXPECT_EQ(circ->kind, CircuitKind::kConstructor);
  EXPECT_EQ(circ->num_qubits, ConstValue::known(4));
  EXPECT_EQ(circ->num_clbits, ConstValue::known(3));
  EXPECT_EQ(count_kind<GateOp>(ir, "h"), 3);
  EXPECT_EQ(count_kind<GateOp>(ir, "ry"), 1);
  EXPECT_EQ(count_kind<MeasurementOp>(ir), 4);

  int transpiled = 0;
  for (const auto& c : ir.circuits) {
    if (c.kind == CircuitKind::kTranspiled) {
      ++transpiled;
      EXPECT_EQ(c.source, circ->id);
      EXPECT_FALSE(c.transpile_opt_level.is_known());
    }
  }
  EXPECT_EQ(transpiled, 1);
}

TEST(Extract, ImplicitRegisters) {
  auto a = analyze_text("qc = QuantumCircuit(2, 3)\nqc.h(1)\nqc.measure(1, 2)\n");
  const auto* qc = circuit_named(a.ir, "qc");
  ASSERT_NE(qc, nullptr);
  ASSERT_EQ(qc->registers.size(), 2u);
  EXPECT_TRUE(a.ir.reg(qc->registers[0]).implicit);
  EXPECT_EQ(a.ir.reg(qc->registers[0]).kind, RegisterKind::kQuantum);
  EXPECT_EQ(a.ir.reg(qc->registers[1]).size, ConstValue::known(3));
  EXPECT_EQ(qc->num_qubits, ConstValue::known(2));
  const auto& m = a.ir.events.back();
  ASSERT_TRUE(m.is<MeasurementOp>());
  ASSERT_TRUE(m.qubits[0] && m.clbits[0]);
  EXPECT_EQ(m.qubits[0]->index, 1);
  EXPECT_EQ(m.clbits[0]->index, 2);
}

TEST(Extract, SizesThroughConstants) {
  auto a = analyze_text("n = 3\nm = n * 2 - 1\nqc = QuantumCircuit(n, m)\n");
  const auto* qc = circuit_named(a.ir, "qc");
  EXPECT_EQ(qc->num_qubits, ConstValue::known(3));
  EXPECT_EQ(qc->num_clbits, ConstValue::known(5));

  auto b = analyze_text("def f(n):\n    qc = QuantumCircuit(n)\n    qc.h(0)\n");
  EXPECT_FALSE(circuit_named(b.ir, "qc")->num_qubits.is_known());
}

TEST(Extract, UnknownCalleeReceivingCircuit) {
  auto a = analyze_text("qc = QuantumCircuit(2)\nhelper(qc)\nqc.h(0)\n");
  ASSERT_EQ(a.ir.events.size(), 2u);
  ASSERT_TRUE(a.ir.events[0].is_unknown());
  EXPECT_EQ(a.ir.events[0].as<UnknownOp>()->cause, UnknownCause::kUnknownCalleeWithCircuitArg);
  EXPECT_TRUE(a.ir.has_unknown_operator(a.ir.events[0].circuit));
}

TEST(Extract, PureCallsAreNotUnknown) {
  auto a = analyze_text("qc = QuantumCircuit(2)\nqc.h(0)\nprint(qc)\nqc.draw()\nlen(qc)\n");
  EXPECT_EQ(a.ir.events.size(), 1u);
}

TEST(Extract, RegisterSubscriptAndNegativeIndex) {
  auto a = analyze_text(
      "qr = QuantumRegister(3)\ncr = ClassicalRegister(3)\nqc = QuantumCircuit(qr, cr)\n"
      "qc.measure(qr[0], cr[-1])\nqc.x(qr[-1])\n");
  const auto& m = a.ir.events[0];
  EXPECT_EQ(m.qubits[0]->index, 0);
  EXPECT_EQ(m.clbits[0]->index, 2);
  EXPECT_EQ(a.ir.events[1].qubits[0]->index, 2);
}

TEST(Extract, UnresolvedIndexBecomesUnknown) {
  auto a = analyze_text("def f(k):\n    qc = QuantumCircuit(3)\n    qc.h(k)\n");
  ASSERT_EQ(a.ir.events.size(), 1u);
  EXPECT_EQ(a.ir.events[0].as<UnknownOp>()->cause, UnknownCause::kUnresolvedQubit);
}

TEST(Extract, LoopVariableIndexAfterUnrolling) {
  auto a = analyze_text("qc = QuantumCircuit(3)\nfor i in range(2):\n    qc.cx(0, i + 1)\n");
  ASSERT_EQ(a.ir.events.size(), 2u);
  EXPECT_EQ(a.ir.events[0].qubits[1]->index, 1);
  EXPECT_EQ(a.ir.events[1].qubits[1]->index, 2);
  EXPECT_LT(a.ir.events[0].seq, a.ir.events[1].seq);
}

TEST(Extract, OutOfRangeIndexIsDiagnostic) {
  auto a = analyze_text("qc = QuantumCircuit(2)\nqc.h(5)\n");
  EXPECT_EQ(a.ir.diagnostics.size(), 1u);
  ASSERT_EQ(a.ir.events.size(), 1u);
  EXPECT_TRUE(a.ir.events[0].is_unknown());
}

TEST(Extract, ListFormMeasureBroadcasts) {
  auto a = analyze_text("qc = QuantumCircuit(3, 3)\nqc.measure([0, 1, 2], [0, 1, 2])\n");
  ASSERT_EQ(a.ir.events.size(), 3u);
  for (int k = 0; k < 3; ++k) {
    EXPECT_EQ(a.ir.events[k].qubits[0]->index, k);
    EXPECT_EQ(a.ir.events[k].clbits[0]->index, k);
  }
}

TEST(Extract, ListSlotIsOneOperator) {
  auto a = analyze_text("qc = QuantumCircuit(4)\nqc.mcx([0, 1, 2], 3)\n");
  ASSERT_EQ(a.ir.events.size(), 1u);
  EXPECT_EQ(a.ir.events[0].qubits.size(), 4u);
}

TEST(Extract, AbsoluteIndexAcrossRegisters) {
  auto a = analyze_text(
      "a = QuantumRegister(2)\nb = QuantumRegister(3)\nqc = QuantumCircuit(a, b)\n"
      "qc.h(a[1])\nqc.h(b[1])\nqc.h(3)\n");
  const auto c = a.ir.circuits[0].id;
  EXPECT_EQ(absolute_index(a.ir, *a.ir.events[0].qubits[0], c), ConstValue::known(1));
  EXPECT_EQ(absolute_index(a.ir, *a.ir.events[1].qubits[0], c), ConstValue::known(3));
  EXPECT_EQ(*a.ir.events[2].qubits[0], *a.ir.events[1].qubits[0]);

  auto other = analyze_text("x = QuantumRegister(1)\nqc = QuantumCircuit(2)\n");
  EXPECT_THROW(absolute_index(other.ir, ResolvedBit{other.ir.registers[0].id, 0},
                              other.ir.circuits[0].id),
               std::invalid_argument);
}

TEST(Extract, CompositionEdgesAndMarks) {
  auto a = analyze_text(
      "sub = QuantumCircuit(2)\nsub.h(0)\nmain = QuantumCircuit(3)\n"
      "main.append(sub.to_gate(), [0, 1])\nmain.compose(sub, inplace=True)\n"
      "def make():\n    c = QuantumCircuit(1)\n    return c\n");
  auto edges = detect_composition(a.ir);
  int appends = 0, composes = 0, to_gate = 0, returned = 0;
  for (const auto& e : edges) {
    switch (e.mechanism) {
      case CompositionMechanism::kAppend: ++appends; break;
      case CompositionMechanism::kCompose: ++composes; break;
      case CompositionMechanism::kToGateOrInstruction: ++to_gate; break;
      case CompositionMechanism::kReturnedFromFunction: ++returned; break;
    }
  }
  EXPECT_EQ(appends, 1);
  EXPECT_EQ(composes, 1);
  EXPECT_EQ(to_gate, 1);
  EXPECT_EQ(returned, 1);
  const auto* sub = circuit_named(a.ir, "sub");
  const auto* main = circuit_named(a.ir, "main");
  EXPECT_TRUE(a.ir.is_subcircuit(sub->id));
  EXPECT_TRUE(a.ir.has_subcircuits(main->id));
  EXPECT_FALSE(a.ir.is_subcircuit(main->id));
  ASSERT_EQ(a.ir.compose_sites.size(), 1u);
  EXPECT_TRUE(a.ir.compose_sites[0].inplace);
}

TEST(Extract, ComposeResultUse) {
  auto a = analyze_text(
      "a = QuantumCircuit(2)\nb = QuantumCircuit(2)\na.compose(b)\nc = a.compose(b)\n"
      "print(a.compose(b))\n");
  ASSERT_EQ(a.ir.compose_sites.size(), 3u);
  EXPECT_TRUE(a.ir.compose_sites[0].result_discarded);
  EXPECT_FALSE(a.ir.compose_sites[1].result_discarded);
  EXPECT_FALSE(a.ir.compose_sites[2].result_discarded);
}

TEST(Extract, MeasureAllClassification) {
  auto call_of = [](const std::string& src) {
    static std::vector<frontend::ModuleAst> keep;
    keep.push_back(frontend::parse_file(src, "t.py"));
    return keep.back().body[0].as<frontend::ExprStmt>()->value.as<frontend::Call>();
  };
  EXPECT_TRUE(classify_measure_all(*call_of("qc.measure_all()\n")).creates_new_register);
  EXPECT_FALSE(classify_measure_all(*call_of("qc.measure_all(add_bits=False)\n")).creates_new_register);
  EXPECT_TRUE(classify_measure_all(*call_of("qc.measure_all(add_bits=flag)\n")).creates_new_register);
  EXPECT_TRUE(classify_measure_all(*call_of("qc.measure_all(add_bits=True)\n")).creates_new_register);
}

TEST(Extract, ConditionalGates) {
  auto a = analyze_text(
      "qc = QuantumCircuit(1, 1)\nqc.x(0).c_if(0, 1)\nwith qc.if_test((qc.clbits[0], 1)):\n"
      "    qc.h(0)\nqc.z(0)\n");
  ASSERT_EQ(a.ir.events.size(), 3u);
  EXPECT_TRUE(a.ir.events[0].as<GateOp>()->is_conditional);
  EXPECT_TRUE(a.ir.events[1].as<GateOp>()->is_conditional);
  EXPECT_FALSE(a.ir.events[2].as<GateOp>()->is_conditional);
}

TEST(Extract, TranspileLevelAndCopies) {
  auto a = analyze_text(
      "qc = QuantumCircuit(2)\ntc = transpile(qc, be, optimization_level=3)\n"
      "cp = qc.copy()\ncp.h(1)\n");
  const auto* tc = circuit_named(a.ir, "tc");
  ASSERT_NE(tc, nullptr);
  EXPECT_EQ(tc->kind, CircuitKind::kTranspiled);
  EXPECT_EQ(tc->transpile_opt_level, ConstValue::known(3));
  const auto* cp = circuit_named(a.ir, "cp");
  ASSERT_NE(cp, nullptr);
  EXPECT_EQ(cp->kind, CircuitKind::kCopy);
  EXPECT_EQ(cp->registers, circuit_named(a.ir, "qc")->registers);
}

TEST(Extract, BuiltinCircuitSize) {
  auto a = analyze_text("from qiskit.circuit.library import QFT\nqft = QFT(4)\n");
  ASSERT_EQ(a.ir.circuits.size(), 1u);
  EXPECT_EQ(a.ir.circuits[0].kind, CircuitKind::kBuiltinParametrized);
  EXPECT_EQ(a.ir.circuits[0].num_qubits, ConstValue::known(4));
}

TEST(Extract, FunctionMutatingGlobalCircuit) {
  auto a = analyze_text(
      "qc = QuantumCircuit(2)\ndef add():\n    qc.h(0)\nadd()\nqc.measure_all()\n");
  bool global = false;
  for (const auto& e : a.ir.events) {
    if (auto* u = e.as<UnknownOp>()) global = global || u->cause == UnknownCause::kGlobalCircuitMutation;
  }
  EXPECT_TRUE(global);
}

TEST(Extract, IdenOnlyOnCircuits) {
  auto a = analyze_text("qc = QuantumCircuit(1)\nqc.iden(0)\nobj.identify(0)\nobj.iden(0)\n");
  ASSERT_EQ(a.ir.events.size(), 1u);
  EXPECT_EQ(a.ir.events[0].method, "iden");
}

TEST(GateTable, ParseErrors) {
  EXPECT_THROW(GateTable::parse("h reversible_gate 0=qubit -\n", "t"), GateSpecError);
  EXPECT_THROW(GateTable::parse("h nonsense 0=qubit - -\n", "t"), GateSpecError);
  EXPECT_THROW(GateTable::parse("h reversible_gate 0=a,0=b - -\n", "t"), GateSpecError);
  EXPECT_THROW(GateTable::parse("h reversible_gate 0 - -\nh reversible_gate 0 - -\n", "t"),
               GateSpecError);
  auto t = GateTable::parse("# comment\nfoo reversible_gate 1=q - 0=theta\n", "t");
  ASSERT_NE(t.find("foo"), nullptr);
  EXPECT_EQ(t.find("foo")->qubits[0].position, 1);
  EXPECT_EQ(t.find("foo")->qubits[0].keyword, "q");
}

// Every bundled reversible gate, called with positional arguments, yields one
// resolved gate event on distinct qubits.
TEST(GateTable, EveryGateExtracts) {
  for (const auto& g : GateTable::builtin().entries()) {
    if (g.category != GateCategory::kReversibleGate) continue;
    int arity = 0;
    for (const auto* slots : {&g.qubits, &g.clbits, &g.params}) {
      for (const auto& s : *slots) arity = std::max(arity, s.position + 1);
    }
    std::vector<std::string> args(arity, "0.5");
    int next = 0;
    for (const auto& s : g.qubits) {
      args[s.position] = s.is_list ? "[" + std::to_string(next++) + "]" : std::to_string(next++);
    }
    std::string src = "qc = QuantumCircuit(8)\nqc." + g.method + "(";
    for (int k = 0; k < arity; ++k) src += (k ? ", " : "") + args[k];
    src += ")\n";
    auto a = analyze_text(src);
    ASSERT_EQ(a.ir.events.size(), 1u) << src;
    EXPECT_TRUE(a.ir.events[0].is<GateOp>()) << src;
    EXPECT_EQ(a.ir.events[0].qubits.size(), g.qubits.size()) << src;
  }
}

}  // namespace
}  // namespace qlint::qir
