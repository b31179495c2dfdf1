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

#include "qlint/analyses/rule_id.h"

namespace qlint::analyses {
namespace {

struct RuleInfo {
  RuleId id;
  std::string_view name;
  std::string_view summary;
  bool default_on;
};

constexpr RuleInfo kRules[] = {
    {RuleId::kDoubleMeas, "double-meas",
     "A qubit is measured twice with no operation on it in between.", true},
    {RuleId::kOpAfterMeas, "op-after-meas",
     "An unconditional gate acts on a qubit that was already measured.", true},
    {RuleId::kMeasAllAbuse, "meas-all-abuse",
     "measure_all() adds a second classical register to a circuit that already has classical bits.",
     true},
    {RuleId::kCondWoMeas, "cond-wo-meas",
     "A conditional gate runs before the circuit has measured anything.", true},
    {RuleId::kConstClasBit, "const-clas-bit",
     "A qubit is measured before any operation acts on it, so the classical bit is constant.",
     false},
    {RuleId::kInsuffClasReg, "insuff-clas-reg",
     "The circuit uses more qubits than it has classical bits to measure them into.", false},
    {RuleId::kOversizedCircuit, "oversized-circuit",
     "The circuit allocates qubits that no operation ever uses.", false},
    {RuleId::kGhostCompose, "ghost-compose",
     "The circuit returned by compose() is discarded, so the composition has no effect.", true},
    {RuleId::kOpAfterTransp, "op-after-transp",
     "An operation is added to a circuit after it was transpiled with optimization level 3.",
     true},
    {RuleId::kOldIdenGate, "old-iden-gate",
     "The removed iden() gate is called on a circuit.", false},
};

const RuleInfo& info(RuleId id) { return kRules[static_cast<int>(id)]; }

}  // namespace

std::string_view rule_name(RuleId id) { return info(id).name; }
std::string_view rule_summary(RuleId id) { return info(id).summary; }
bool in_default_profile(RuleId id) { return info(id).default_on; }

std::optional<RuleId> parse_rule(std::string_view name) {
  for (const auto& r : kRules) {
    if (r.name == name) return r.id;
  }
  return std::nullopt;
}

RuleSet default_rules() {
  RuleSet out;
  for (const auto& r : kRules) {
    if (r.default_on) out.insert(r.id);
  }
  return out;
}

RuleSet all_rules() { return RuleSet(kAllRules.begin(), kAllRules.end()); }

}  // namespace qlint::analyses
