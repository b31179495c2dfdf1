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

#ifndef QLINT_ANALYSES_RULES_H_
#define QLINT_ANALYSES_RULES_H_

#include <optional>
#include <string>
#include <vector>

#include "qlint/analyses/rule_id.h"
#include "qlint/common/source_span.h"
#include "qlint/qflow/flow.h"
#include "qlint/qir/ir.h"

namespace qlint::analyses {

enum class Severity { kWarning };

struct Warning {
  RuleId rule = RuleId::kDoubleMeas;
  SourceSpan span;
  std::string message;
  std::optional<qir::CircuitId> circuit;
  Severity severity = Severity::kWarning;

  friend bool operator==(const Warning& a, const Warning& b) {
    return a.rule == b.rule && a.span == b.span && a.message == b.message &&
           a.circuit == b.circuit && a.severity == b.severity;
  }
};

// (file, line, column, rule name) ordering used for every output.
bool warning_less(const Warning& a, const Warning& b);

using qflow::FlowRelation;
using qir::QuantumIR;

std::vector<Warning> run_double_meas(const QuantumIR& ir, const FlowRelation& flow);
std::vector<Warning> run_op_after_meas(const QuantumIR& ir, const FlowRelation& flow);
std::vector<Warning> run_meas_all_abuse(const QuantumIR& ir);
std::vector<Warning> run_cond_wo_meas(const QuantumIR& ir, const FlowRelation& flow);
std::vector<Warning> run_const_clas_bit(const QuantumIR& ir, const FlowRelation& flow);
std::vector<Warning> run_insuff_clas_reg(const QuantumIR& ir);
std::vector<Warning> run_oversized_circuit(const QuantumIR& ir);
std::vector<Warning> run_ghost_compose(const QuantumIR& ir);
std::vector<Warning> run_op_after_transp(const QuantumIR& ir, const FlowRelation& flow);
std::vector<Warning> run_old_iden_gate(const QuantumIR& ir);

std::vector<Warning> run_rule(RuleId rule, const QuantumIR& ir, const FlowRelation& flow);

// Enabled rules' warnings, deduplicated by (rule, span) and sorted.
std::vector<Warning> run_all(const QuantumIR& ir, const FlowRelation& flow,
                             const RuleSet& enabled);

}  // namespace qlint::analyses

#endif  // QLINT_ANALYSES_RULES_H_
