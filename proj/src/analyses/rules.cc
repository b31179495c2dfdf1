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

#include "qlint/analyses/rules.h"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

#include <fmt/format.h>
#include <fmt/ranges.h>

namespace qlint::analyses {
namespace {

using qir::CircuitDecl;
using qir::CircuitId;
using qir::CircuitKind;
using qir::OperatorEvent;
using qflow::QubitKey;

Warning make(RuleId rule, const SourceSpan& span, std::string message,
             std::optional<CircuitId> circuit) {
  Warning w;
  w.rule = rule;
  w.span = span;
  w.message = std::move(message);
  w.circuit = circuit;
  return w;
}

std::string circuit_label(const CircuitDecl& c) {
  return c.name.empty() ? fmt::format("#{}", c.id.index()) : c.name;
}

bool is_measure(const OperatorEvent& e) { return e.is<qir::MeasurementOp>(); }

bool prepares(const OperatorEvent& e) {
  return e.is<qir::GateOp>() || e.is<qir::ResetOp>() || e.is<qir::InitializeOp>();
}

// The circuit itself plus every circuit it was copied or transpiled from.
bool derives_from(const QuantumIR& ir, CircuitId c, CircuitId ancestor) {
  for (std::optional<CircuitId> cur = c; cur; cur = ir.circuit(*cur).source) {
    if (*cur == ancestor) return true;
  }
  return false;
}

// Absolute qubit indices of `c` touched by events of `c` or its derivatives.
// Returns nullopt when one of them has an unknown operator.
std::optional<std::set<std::int64_t>> used_qubits(const QuantumIR& ir, CircuitId c) {
  std::set<std::int64_t> used;
  for (const auto& e : ir.events) {
    if (!derives_from(ir, e.circuit, c)) continue;
    if (e.is_unknown()) return std::nullopt;
    for (const auto& key : qflow::touched_qubits(e)) {
      try {
        auto idx = qir::absolute_index(ir, {key.reg, key.index}, c);
        if (!idx.is_known()) return std::nullopt;
        used.insert(idx.value());
      } catch (const std::invalid_argument&) {
        // register only reachable through the derived circuit
      }
    }
  }
  return used;
}

bool creates_measure_register(const QuantumIR& ir, CircuitId c) {
  return std::any_of(ir.events.begin(), ir.events.end(), [&](const OperatorEvent& e) {
    auto* m = e.as<qir::MeasurementAllOp>();
    return e.circuit == c && m && m->creates_new_register;
  });
}

}  // namespace

bool warning_less(const Warning& a, const Warning& b) {
  auto key = [](const Warning& w) {
    return std::make_tuple(std::cref(w.span.file()), w.span.line(), w.span.column(),
                           rule_name(w.rule));
  };
  if (key(a) != key(b)) return key(a) < key(b);
  return std::tie(a.span, a.message) < std::tie(b.span, b.message);
}

std::vector<Warning> run_double_meas(const QuantumIR& ir, const FlowRelation& flow) {
  std::vector<Warning> out;
  for (const auto& edge : flow.may_follow_directly()) {
    const auto& a = ir.event(edge.earlier);
    const auto& b = ir.event(edge.later);
    if (!is_measure(a) || !is_measure(b)) continue;
    out.push_back(make(RuleId::kDoubleMeas, b.span,
                       fmt::format("qubit {} is measured again without any operation in between",
                                   qflow::qubit_name(ir, edge.qubit)),
                       b.circuit));
  }
  return out;
}

std::vector<Warning> run_op_after_meas(const QuantumIR& ir, const FlowRelation& flow) {
  std::vector<Warning> out;
  for (const auto& edge : flow.may_follow_directly()) {
    const auto& m = ir.event(edge.earlier);
    const auto& g = ir.event(edge.later);
    auto* gate = g.as<qir::GateOp>();
    if (!is_measure(m) || !gate || gate->is_conditional) continue;
    out.push_back(make(RuleId::kOpAfterMeas, g.span,
                       fmt::format("gate {} acts on qubit {} after it was measured", gate->name,
                                   qflow::qubit_name(ir, edge.qubit)),
                       g.circuit));
  }
  return out;
}

std::vector<Warning> run_meas_all_abuse(const QuantumIR& ir) {
  std::vector<Warning> out;
  for (const auto& e : ir.events) {
    auto* m = e.as<qir::MeasurementAllOp>();
    if (!m || !m->creates_new_register) continue;
    const auto& c = ir.circuit(e.circuit);
    if (!c.num_clbits.is_known() || c.num_clbits.value() <= 0) continue;
    out.push_back(make(RuleId::kMeasAllAbuse, e.span,
                       fmt::format("measure_all() adds a new classical register although circuit "
                                   "{} already has {} classical bits; use measure() or "
                                   "measure_all(add_bits=False)",
                                   circuit_label(c), c.num_clbits.value()),
                       e.circuit));
  }
  return out;
}

std::vector<Warning> run_cond_wo_meas(const QuantumIR& ir, const FlowRelation&) {
  std::vector<Warning> out;
  for (const auto& g : ir.events) {
    auto* gate = g.as<qir::GateOp>();
    if (!gate || !gate->is_conditional) continue;
    bool composed = false;
    for (std::optional<CircuitId> c = g.circuit; c; c = ir.circuit(*c).source) {
      composed = composed || ir.in_composition(*c);
    }
    if (composed) continue;
    bool measured = std::any_of(ir.events.begin(), ir.events.end(), [&](const OperatorEvent& m) {
      return m.seq < g.seq && (m.is<qir::MeasurementOp>() || m.is<qir::MeasurementAllOp>()) &&
             derives_from(ir, g.circuit, m.circuit);
    });
    if (measured) continue;
    out.push_back(make(RuleId::kCondWoMeas, g.span,
                       fmt::format("conditional gate {} runs before circuit {} measures anything",
                                   gate->name, circuit_label(ir.circuit(g.circuit))),
                       g.circuit));
  }
  return out;
}

std::vector<Warning> run_const_clas_bit(const QuantumIR& ir, const FlowRelation& flow) {
  std::set<std::pair<qir::EventId, QubitKey>> prepared;
  for (const auto& edge : flow.may_follow()) {
    if (prepares(ir.event(edge.earlier))) prepared.emplace(edge.later, edge.qubit);
  }
  std::vector<Warning> out;
  for (const auto& m : ir.events) {
    if (!is_measure(m)) continue;
    const auto& c = ir.circuit(m.circuit);
    if (c.kind != CircuitKind::kConstructor || ir.has_subcircuits(c.id) ||
        ir.has_unknown_operator(c.id)) {
      continue;
    }
    for (const auto& q : qflow::touched_qubits(m)) {
      if (prepared.count({m.id, q})) continue;
      out.push_back(make(RuleId::kConstClasBit, m.span,
                         fmt::format("qubit {} is measured before any operation acts on it, so "
                                     "the result is always 0",
                                     qflow::qubit_name(ir, q)),
                         m.circuit));
    }
  }
  return out;
}

std::vector<Warning> run_insuff_clas_reg(const QuantumIR& ir) {
  std::vector<Warning> out;
  for (const auto& c : ir.circuits) {
    if (c.kind != CircuitKind::kConstructor || ir.is_subcircuit(c.id)) continue;
    if (!c.num_qubits.is_known() || !c.num_clbits.is_known()) continue;
    if (creates_measure_register(ir, c.id)) continue;
    std::int64_t qubits = c.num_qubits.value();
    bool any_event = std::any_of(ir.events.begin(), ir.events.end(),
                                 [&](const OperatorEvent& e) { return e.circuit == c.id; });
    if (any_event) {
      if (auto used = used_qubits(ir, c.id)) qubits = static_cast<std::int64_t>(used->size());
    }
    if (qubits <= c.num_clbits.value()) continue;
    out.push_back(make(RuleId::kInsuffClasReg, c.span,
                       fmt::format("circuit {} uses {} qubits but has only {} classical bits",
                                   circuit_label(c), qubits, c.num_clbits.value()),
                       c.id));
  }
  return out;
}

std::vector<Warning> run_oversized_circuit(const QuantumIR& ir) {
  std::vector<Warning> out;
  for (const auto& c : ir.circuits) {
    if (c.kind != CircuitKind::kConstructor) continue;
    if (!c.num_qubits.is_known() || c.num_qubits.value() <= 0) continue;
    if (ir.has_subcircuits(c.id)) continue;
    bool all_known = std::all_of(c.registers.begin(), c.registers.end(),
                                 [&](qir::RegisterId r) { return ir.reg(r).size.is_known(); });
    if (!all_known) continue;
    bool initialized = std::any_of(ir.events.begin(), ir.events.end(), [&](const OperatorEvent& e) {
      return e.is<qir::InitializeOp>() && derives_from(ir, e.circuit, c.id);
    });
    if (initialized) continue;
    auto used = used_qubits(ir, c.id);
    if (!used) continue;
    std::vector<std::string> unused;
    for (std::int64_t i = 0; i < c.num_qubits.value(); ++i) {
      if (!used->count(i)) unused.push_back(std::to_string(i));
    }
    if (unused.empty()) continue;
    out.push_back(make(RuleId::kOversizedCircuit, c.span,
                       fmt::format("circuit {} allocates {} qubits but never uses qubit {}",
                                   circuit_label(c), c.num_qubits.value(),
                                   fmt::join(unused, ", ")),
                       c.id));
  }
  return out;
}

std::vector<Warning> run_ghost_compose(const QuantumIR& ir) {
  std::vector<Warning> out;
  for (const auto& site : ir.compose_sites) {
    if (!site.result_discarded || site.inplace) continue;
    out.push_back(make(RuleId::kGhostCompose, site.span,
                       "result of compose() is discarded; assign it or pass inplace=True",
                       site.receiver));
  }
  return out;
}

std::vector<Warning> run_op_after_transp(const QuantumIR& ir, const FlowRelation&) {
  std::vector<Warning> out;
  for (const auto& e : ir.events) {
    const auto& c = ir.circuit(e.circuit);
    if (c.kind != CircuitKind::kTranspiled || c.transpile_opt_level != ConstValue::known(3)) {
      continue;
    }
    auto* unknown = e.as<qir::UnknownOp>();
    bool relevant = e.is<qir::GateOp>() || e.is<qir::MeasurementOp>() ||
                    e.is<qir::MeasurementAllOp>() || e.is<qir::ResetOp>() ||
                    e.is<qir::InitializeOp>() ||
                    (unknown && unknown->cause == qir::UnknownCause::kUnresolvedQubit);
    if (!relevant) continue;
    out.push_back(make(RuleId::kOpAfterTransp, e.span,
                       fmt::format("{} is added to circuit {} after it was transpiled with "
                                   "optimization_level=3",
                                   e.method, circuit_label(c)),
                       e.circuit));
  }
  return out;
}

std::vector<Warning> run_old_iden_gate(const QuantumIR& ir) {
  std::vector<Warning> out;
  for (const auto& e : ir.events) {
    if (e.method != "iden") continue;
    out.push_back(make(RuleId::kOldIdenGate, e.span,
                       "iden() was removed from Qiskit; use id() or i()", e.circuit));
  }
  return out;
}

std::vector<Warning> run_rule(RuleId rule, const QuantumIR& ir, const FlowRelation& flow) {
  switch (rule) {
    case RuleId::kDoubleMeas: return run_double_meas(ir, flow);
    case RuleId::kOpAfterMeas: return run_op_after_meas(ir, flow);
    case RuleId::kMeasAllAbuse: return run_meas_all_abuse(ir);
    case RuleId::kCondWoMeas: return run_cond_wo_meas(ir, flow);
    case RuleId::kConstClasBit: return run_const_clas_bit(ir, flow);
    case RuleId::kInsuffClasReg: return run_insuff_clas_reg(ir);
    case RuleId::kOversizedCircuit: return run_oversized_circuit(ir);
    case RuleId::kGhostCompose: return run_ghost_compose(ir);
    case RuleId::kOpAfterTransp: return run_op_after_transp(ir, flow);
    case RuleId::kOldIdenGate: return run_old_iden_gate(ir);
  }
  return {};
}

std::vector<Warning> run_all(const QuantumIR& ir, const FlowRelation& flow,
                             const RuleSet& enabled) {
  std::vector<Warning> all;
  for (RuleId rule : enabled) {
    auto ws = run_rule(rule, ir, flow);
    all.insert(all.end(), std::make_move_iterator(ws.begin()), std::make_move_iterator(ws.end()));
  }
  std::stable_sort(all.begin(), all.end(), warning_less);
  std::set<std::pair<RuleId, SourceSpan>> seen;
  std::vector<Warning> out;
  for (auto& w : all) {
    if (seen.emplace(w.rule, w.span).second) out.push_back(std::move(w));
  }
  return out;
}

}  // namespace qlint::analyses
