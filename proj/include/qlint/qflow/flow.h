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

// Quantum data flow: a per-qubit "may happen before" order over the operator
// events of one file.

#ifndef QLINT_QFLOW_FLOW_H_
#define QLINT_QFLOW_FLOW_H_

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "qlint/frontend/cfg.h"
#include "qlint/qir/ir.h"

namespace qlint::qflow {

using qir::CircuitId;
using qir::EventId;
using qir::RegisterId;

struct QubitKey {
  CircuitId circuit;
  RegisterId reg;
  std::int64_t index = 0;

  friend auto operator<=>(const QubitKey&, const QubitKey&) = default;
};

struct QubitTimeline {
  QubitKey key;
  std::vector<EventId> events;  // ordered by seq
};

struct FlowEdge {
  EventId earlier;
  EventId later;
  QubitKey qubit;

  friend auto operator<=>(const FlowEdge&, const FlowEdge&) = default;
};

class FlowRelation {
 public:
  const std::vector<QubitTimeline>& timelines() const { return timelines_; }
  // Sorted; pairs of the same event occur only through loop back edges.
  const std::vector<FlowEdge>& may_follow() const { return may_follow_; }
  const std::vector<FlowEdge>& may_follow_directly() const { return directly_; }

  // Shared qubit when `b` may run after `a` on it.
  std::optional<QubitKey> may_follow(EventId a, EventId b) const;
  // Shared qubit when `b` may run right after `a` with nothing on that qubit
  // in between. Unknown operators block directness and never relate.
  std::optional<QubitKey> may_follow_directly(EventId a, EventId b) const;
  bool sorted_in_order(EventId a, EventId b, EventId c) const;

  bool unknown_taint(CircuitId c) const;

  // One line per qubit: "circuit:reg[i]: name@line:col ...".
  std::string dump(const qir::QuantumIR& ir) const;

 private:
  friend class FlowBuilder;

  std::vector<QubitTimeline> timelines_;
  std::vector<FlowEdge> may_follow_;
  std::vector<FlowEdge> directly_;
  std::vector<bool> taint_;
};

FlowRelation build_flow(const qir::QuantumIR& ir, const frontend::Cfg& cfg);

// Qubits an event acts on for ordering purposes: resolved operands of gates,
// measurements, resets and initializations (barriers and unknown operators
// have none).
std::vector<QubitKey> touched_qubits(const qir::OperatorEvent& e);

std::string qubit_name(const qir::QuantumIR& ir, const QubitKey& key);

}  // namespace qlint::qflow

#endif  // QLINT_QFLOW_FLOW_H_
