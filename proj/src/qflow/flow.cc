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

#include "qlint/qflow/flow.h"

#include <algorithm>
#include <map>
#include <set>

#include <fmt/format.h>

namespace qlint::qflow {

std::vector<QubitKey> touched_qubits(const qir::OperatorEvent& e) {
  std::vector<QubitKey> out;
  if (e.is_unknown() || e.is<qir::BarrierOp>()) return out;
  for (const auto& q : e.qubits) {
    if (!q) continue;
    const QubitKey key{e.circuit, q->reg, q->index};
    if (std::find(out.begin(), out.end(), key) == out.end()) out.push_back(key);
  }
  return out;
}

std::string qubit_name(const qir::QuantumIR& ir, const QubitKey& key) {
  const auto& circuit = ir.circuit(key.circuit);
  const auto& reg = ir.reg(key.reg);
  std::string reg_name = reg.name;
  if (reg_name.empty()) reg_name = reg.implicit ? "q" : fmt::format("reg{}", reg.id.value);
  const std::string circ_name =
      circuit.name.empty() ? fmt::format("<circuit@{}>", circuit.span.line()) : circuit.name;
  return fmt::format("{}:{}[{}]", circ_name, reg_name, key.index);
}

namespace {

bool touches(const qir::OperatorEvent& e, const QubitKey& key) {
  if (e.circuit != key.circuit || e.is_unknown() || e.is<qir::BarrierOp>()) return false;
  return std::any_of(e.qubits.begin(), e.qubits.end(), [&](const qir::QubitRef& q) {
    return q && q->reg == key.reg && q->index == key.index;
  });
}

}  // namespace

class FlowBuilder {
 public:
  FlowBuilder(const qir::QuantumIR& ir, const frontend::Cfg& cfg) : ir_(ir), cfg_(cfg) {
    for (const auto& e : ir.events) by_block_[e.block].push_back(e.id);
  }

  FlowRelation build() {
    FlowRelation out;
    out.taint_.assign(ir_.circuits.size(), false);
    std::map<QubitKey, std::vector<EventId>> lines;
    for (const auto& e : ir_.events) {
      if (e.is_unknown()) out.taint_[e.circuit.index()] = true;
      for (const auto& key : touched_qubits(e)) lines[key].push_back(e.id);
    }
    for (auto& [key, events] : lines) {
      for (const EventId a : events) {
        for (const EventId b : events) {
          if (may_run_before(a, b)) out.may_follow_.push_back(FlowEdge{a, b, key});
        }
        for (const EventId b : direct_successors(a, key)) {
          out.directly_.push_back(FlowEdge{a, b, key});
        }
      }
      out.timelines_.push_back(QubitTimeline{key, events});
    }
    std::sort(out.may_follow_.begin(), out.may_follow_.end());
    std::sort(out.directly_.begin(), out.directly_.end());
    out.directly_.erase(std::unique(out.directly_.begin(), out.directly_.end()),
                        out.directly_.end());
    return out;
  }

 private:
  // Some control-flow path executes `a` and later `b`.
  bool may_run_before(EventId a, EventId b) const {
    const auto& ea = ir_.event(a);
    const auto& eb = ir_.event(b);
    if (ea.block == eb.block && ea.seq < eb.seq) return true;
    return cfg_.reaches(ea.block, eb.block);
  }

  // First events on `key` reachable from `a` along each path, stopping at
  // any unknown operator of the same circuit.
  std::vector<EventId> direct_successors(EventId a, const QubitKey& key) const {
    std::vector<EventId> hits;
    const auto& ea = ir_.event(a);
    // Returns true when the path stops inside this block.
    auto scan = [&](frontend::BlockId block, std::uint32_t after_seq, bool from_start) {
      auto it = by_block_.find(block);
      if (it == by_block_.end()) return false;
      for (const EventId id : it->second) {
        const auto& e = ir_.event(id);
        if (!from_start && e.seq <= after_seq) continue;
        if (e.circuit != key.circuit) continue;
        if (e.is_unknown()) return true;
        if (touches(e, key)) {
          hits.push_back(id);
          return true;
        }
      }
      return false;
    };
    if (scan(ea.block, ea.seq, false)) return hits;
    std::set<frontend::BlockId> visited;
    std::vector<frontend::BlockId> work(cfg_.block(ea.block).succs.begin(),
                                        cfg_.block(ea.block).succs.end());
    while (!work.empty()) {
      const frontend::BlockId b = work.back();
      work.pop_back();
      if (!visited.insert(b).second) continue;
      if (scan(b, 0, true)) continue;
      for (const auto s : cfg_.block(b).succs) work.push_back(s);
    }
    std::sort(hits.begin(), hits.end());
    hits.erase(std::unique(hits.begin(), hits.end()), hits.end());
    return hits;
  }

  const qir::QuantumIR& ir_;
  const frontend::Cfg& cfg_;
  std::map<frontend::BlockId, std::vector<EventId>> by_block_;
};

namespace {

std::optional<QubitKey> find_pair(const std::vector<FlowEdge>& edges, EventId a, EventId b) {
  auto it = std::lower_bound(edges.begin(), edges.end(), FlowEdge{a, b, QubitKey{}});
  if (it != edges.end() && it->earlier == a && it->later == b) return it->qubit;
  return std::nullopt;
}

}  // namespace

std::optional<QubitKey> FlowRelation::may_follow(EventId a, EventId b) const {
  return find_pair(may_follow_, a, b);
}

std::optional<QubitKey> FlowRelation::may_follow_directly(EventId a, EventId b) const {
  return find_pair(directly_, a, b);
}

bool FlowRelation::sorted_in_order(EventId a, EventId b, EventId c) const {
  return may_follow(a, b).has_value() && may_follow(b, c).has_value();
}

bool FlowRelation::unknown_taint(CircuitId c) const {
  return c.index() < taint_.size() && taint_[c.index()];
}

std::string FlowRelation::dump(const qir::QuantumIR& ir) const {
  std::string out;
  for (const auto& t : timelines_) {
    out += qubit_name(ir, t.key) + ":";
    for (const EventId id : t.events) {
      const auto& e = ir.event(id);
      out += fmt::format(" {}@{}:{}", qir::kind_name(e), e.span.line(), e.span.column());
    }
    out += "\n";
  }
  return out;
}

FlowRelation build_flow(const qir::QuantumIR& ir, const frontend::Cfg& cfg) {
  return FlowBuilder(ir, cfg).build();
}

}  // namespace qlint::qflow
