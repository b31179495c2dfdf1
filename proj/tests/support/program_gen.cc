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

#include "program_gen.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include <fmt/format.h>

namespace qlint::testing {
namespace {

int pick(std::mt19937& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

bool chance(std::mt19937& rng, double p) { return std::bernoulli_distribution(p)(rng); }

int num_clbits(const GenProgram& p) {
  int n = 0;
  for (const auto& r : p.registers) n += r.quantum ? 0 : r.size;
  return n;
}

Operand qubit_operand(std::mt19937& rng, const GenProgram& p, int absolute) {
  auto [reg, idx] = p.locate_qubit(absolute);
  Operand o;
  o.reg = reg;
  o.index = idx;
  o.absolute = p.implicit || chance(rng, 0.2);
  return o;
}

Operand clbit_operand(std::mt19937& rng, const GenProgram& p) {
  int absolute = pick(rng, 0, num_clbits(p) - 1);
  auto [reg, idx] = p.locate_clbit(absolute);
  Operand o;
  o.reg = reg;
  o.index = idx;
  o.absolute = p.implicit || chance(rng, 0.2);
  return o;
}

int slot_arity(const qir::GateSpec& spec) {
  int arity = 0;
  for (const auto* slots : {&spec.qubits, &spec.clbits, &spec.params}) {
    for (const auto& s : *slots) arity = std::max(arity, s.position + 1);
  }
  return arity;
}

GenOp make_gate(std::mt19937& rng, const GenProgram& p, const std::vector<const qir::GateSpec*>& gates) {
  const int n = p.num_qubits();
  std::vector<const qir::GateSpec*> fitting;
  for (const auto* g : gates) {
    if (static_cast<int>(g->qubits.size()) <= n) fitting.push_back(g);
  }
  const auto& spec = *fitting[pick(rng, 0, static_cast<int>(fitting.size()) - 1)];
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);

  GenOp op;
  op.kind = OpKind::kGate;
  op.method = spec.method;
  op.arity = slot_arity(spec);
  int used = 0;
  int spare = n - static_cast<int>(spec.qubits.size());
  for (const auto& slot : spec.qubits) {
    int take = 1;
    if (slot.is_list && spare > 0) {
      int extra = pick(rng, 0, std::min(spare, 2));
      take += extra;
      spare -= extra;
    }
    std::vector<Operand> operands;
    for (int k = 0; k < take; ++k) operands.push_back(qubit_operand(rng, p, order[used++]));
    op.qubit_args.emplace_back(slot.position, std::move(operands));
  }
  // A list slot rendered as one element stays a list.
  return op;
}

std::string operand_text(const GenProgram& p, const Operand& o, bool quantum,
                         std::optional<int> iter) {
  if (o.loop_var) {
    std::string idx = iter ? std::to_string(*iter) : "i";
    if (o.absolute) return idx;
    return fmt::format("{}[{}]", p.registers[o.reg].name, idx);
  }
  if (o.absolute) {
    if (!quantum) {
      int base = 0;
      for (int r = 0; r < o.reg; ++r) base += p.registers[r].quantum ? 0 : p.registers[r].size;
      return std::to_string(base + o.index);
    }
    return std::to_string(p.absolute(o.reg, o.index));
  }
  return fmt::format("{}[{}]", p.registers[o.reg].name, o.index);
}

bool is_list_slot(const GenProgram&, const GenOp& op, int position,
                  const qir::GateTable& gates) {
  if (op.kind != OpKind::kGate) return false;
  const auto* spec = gates.find(op.method);
  if (!spec) return false;
  for (const auto& s : spec->qubits) {
    if (s.position == position) return s.is_list;
  }
  return false;
}

}  // namespace

int GenProgram::num_qubits() const {
  int n = 0;
  for (const auto& r : registers) n += r.quantum ? r.size : 0;
  return n;
}

int GenProgram::absolute(int reg, int index) const {
  int base = 0;
  for (int r = 0; r < reg; ++r) base += registers[r].quantum ? registers[r].size : 0;
  return base + index;
}

std::pair<int, int> GenProgram::locate_qubit(int absolute) const {
  for (int r = 0; r < static_cast<int>(registers.size()); ++r) {
    if (!registers[r].quantum) continue;
    if (absolute < registers[r].size) return {r, absolute};
    absolute -= registers[r].size;
  }
  throw std::out_of_range("qubit index");
}

std::pair<int, int> GenProgram::locate_clbit(int absolute) const {
  for (int r = 0; r < static_cast<int>(registers.size()); ++r) {
    if (registers[r].quantum) continue;
    if (absolute < registers[r].size) return {r, absolute};
    absolute -= registers[r].size;
  }
  throw std::out_of_range("clbit index");
}

std::pair<int, int> GenProgram::resolve(const Operand& o, bool quantum,
                                        std::optional<int> iter) const {
  if (!o.loop_var) return {o.reg, o.index};
  if (o.absolute) return quantum ? locate_qubit(*iter) : locate_clbit(*iter);
  return {o.reg, *iter};
}

GenProgram generate_program(std::mt19937& rng, const qir::GateTable& gates,
                            const GenOptions& options) {
  GenProgram p;
  p.implicit = chance(rng, 0.25);
  if (p.implicit) {
    p.registers.push_back({"q", true, pick(rng, 1, 4)});
    int m = pick(rng, 0, 4);
    if (m > 0) p.registers.push_back({"c", false, m});
  } else {
    int nq = pick(rng, 1, std::min(3, options.max_registers));
    int nc = pick(rng, 0, std::min(2, options.max_registers - nq));
    for (int i = 0; i < nq; ++i) {
      p.registers.push_back({fmt::format("qr{}", i), true, pick(rng, 1, options.max_register_size)});
    }
    for (int i = 0; i < nc; ++i) {
      p.registers.push_back({fmt::format("cr{}", i), false, pick(rng, 1, options.max_register_size)});
    }
  }

  std::vector<const qir::GateSpec*> reversible;
  for (const auto& g : gates.entries()) {
    if (g.category == qir::GateCategory::kReversibleGate) reversible.push_back(&g);
  }
  const bool has_clbits = num_clbits(p) > 0;
  int count = pick(rng, 1, options.max_ops);
  for (int k = 0; k < count; ++k) {
    int roll = pick(rng, 0, 99);
    GenOp op;
    if (roll < 30 && has_clbits) {
      op.kind = OpKind::kMeasure;
      op.method = "measure";
      op.arity = 2;
      op.qubit_args.emplace_back(0, std::vector<Operand>{qubit_operand(rng, p, pick(rng, 0, p.num_qubits() - 1))});
      op.clbit_args.emplace_back(1, clbit_operand(rng, p));
    } else if (roll < 38) {
      op.kind = OpKind::kReset;
      op.method = "reset";
      op.arity = 1;
      op.qubit_args.emplace_back(0, std::vector<Operand>{qubit_operand(rng, p, pick(rng, 0, p.num_qubits() - 1))});
    } else if (roll < 45 && options.allow_barrier) {
      op.kind = OpKind::kBarrier;
      op.method = "barrier";
      int n = chance(rng, 0.5) ? 0 : pick(rng, 1, p.num_qubits());
      std::vector<int> order(p.num_qubits());
      std::iota(order.begin(), order.end(), 0);
      std::shuffle(order.begin(), order.end(), rng);
      for (int i = 0; i < n; ++i) {
        op.qubit_args.emplace_back(i, std::vector<Operand>{qubit_operand(rng, p, order[i])});
      }
      op.arity = n;
    } else {
      op = make_gate(rng, p, reversible);
    }
    p.ops.push_back(std::move(op));
  }
  return p;
}

std::vector<std::string> render_header(const GenProgram& p) {
  std::vector<std::string> lines{"from qiskit import QuantumCircuit, QuantumRegister, ClassicalRegister"};
  if (p.implicit) {
    int m = 0;
    for (const auto& r : p.registers) m += r.quantum ? 0 : r.size;
    lines.push_back(m > 0 ? fmt::format("qc = QuantumCircuit({}, {})", p.num_qubits(), m)
                          : fmt::format("qc = QuantumCircuit({})", p.num_qubits()));
    return lines;
  }
  std::vector<std::string> names;
  for (const auto& r : p.registers) {
    lines.push_back(fmt::format("{} = {}({}, \"{}\")", r.name,
                                r.quantum ? "QuantumRegister" : "ClassicalRegister", r.size, r.name));
    names.push_back(r.name);
  }
  lines.push_back(fmt::format("qc = QuantumCircuit({})", fmt::join(names, ", ")));
  return lines;
}

std::string render_op(const GenProgram& p, const GenOp& op, std::optional<int> iter) {
  static const qir::GateTable& gates = qir::GateTable::builtin();
  std::vector<std::string> args(op.arity, "0.5");
  for (const auto& [pos, operands] : op.qubit_args) {
    std::vector<std::string> texts;
    for (const auto& o : operands) texts.push_back(operand_text(p, o, true, iter));
    if (is_list_slot(p, op, pos, gates)) {
      args[pos] = fmt::format("[{}]", fmt::join(texts, ", "));
    } else {
      args[pos] = texts.front();
    }
  }
  for (const auto& [pos, o] : op.clbit_args) args[pos] = operand_text(p, o, false, iter);
  return fmt::format("qc.{}({})", op.method, fmt::join(args, ", "));
}

RenderedProgram render(const GenProgram& p) {
  RenderedProgram out;
  auto lines = render_header(p);
  for (const auto& op : p.ops) {
    lines.push_back(render_op(p, op, std::nullopt));
    out.op_line.push_back(static_cast<int>(lines.size()));
  }
  for (const auto& l : lines) out.source += l + "\n";
  return out;
}

LoopPair wrap_in_loop(std::mt19937& rng, const GenProgram& program, int max_trips) {
  GenProgram p = program;
  const int n = static_cast<int>(p.ops.size());
  const int begin = pick(rng, 0, n - 1);
  const int end = pick(rng, begin + 1, n);
  LoopPair out;
  out.trips = pick(rng, 1, max_trips);

  // Single-operand ops inside the body may index with the loop counter.
  for (int k = begin; k < end; ++k) {
    auto& op = p.ops[k];
    if (op.kind == OpKind::kBarrier || op.qubit_args.size() != 1 ||
        op.qubit_args[0].second.size() != 1 || !chance(rng, 0.4)) {
      continue;
    }
    auto& o = op.qubit_args[0].second[0];
    int limit = o.absolute ? p.num_qubits() : p.registers[o.reg].size;
    if (out.trips <= limit) o.loop_var = true;
  }

  auto header = render_header(p);
  std::vector<std::string> looped = header;
  std::vector<std::string> expanded = header;
  out.line_origin.assign(header.size() + 1, 0);
  for (int l = 1; l <= static_cast<int>(header.size()); ++l) out.line_origin[l] = l;
  auto emit_plain = [&](const GenOp& op) {
    looped.push_back(render_op(p, op, std::nullopt));
    expanded.push_back(looped.back());
    out.line_origin.push_back(static_cast<int>(looped.size()));
  };
  for (int k = 0; k < begin; ++k) emit_plain(p.ops[k]);
  looped.push_back(fmt::format("for i in range({}):", out.trips));
  const int body_first = static_cast<int>(looped.size()) + 1;
  for (int k = begin; k < end; ++k) looped.push_back("    " + render_op(p, p.ops[k], std::nullopt));
  for (int t = 0; t < out.trips; ++t) {
    for (int k = begin; k < end; ++k) {
      expanded.push_back(render_op(p, p.ops[k], t));
      out.line_origin.push_back(body_first + (k - begin));
    }
  }
  for (int k = end; k < n; ++k) emit_plain(p.ops[k]);
  for (const auto& l : looped) out.looped += l + "\n";
  for (const auto& l : expanded) out.expanded += l + "\n";
  return out;
}

}  // namespace qlint::testing
