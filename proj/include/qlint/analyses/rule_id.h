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

#ifndef QLINT_ANALYSES_RULE_ID_H_
#define QLINT_ANALYSES_RULE_ID_H_

#include <array>
#include <optional>
#include <set>
#include <string_view>

namespace qlint::analyses {

enum class RuleId {
  kDoubleMeas,
  kOpAfterMeas,
  kMeasAllAbuse,
  kCondWoMeas,
  kConstClasBit,
  kInsuffClasReg,
  kOversizedCircuit,
  kGhostCompose,
  kOpAfterTransp,
  kOldIdenGate,
};

inline constexpr std::array<RuleId, 10> kAllRules = {
    RuleId::kDoubleMeas,     RuleId::kOpAfterMeas,      RuleId::kMeasAllAbuse,
    RuleId::kCondWoMeas,     RuleId::kConstClasBit,     RuleId::kInsuffClasReg,
    RuleId::kOversizedCircuit, RuleId::kGhostCompose,   RuleId::kOpAfterTransp,
    RuleId::kOldIdenGate,
};

using RuleSet = std::set<RuleId>;

std::string_view rule_name(RuleId id);
std::optional<RuleId> parse_rule(std::string_view name);
// One-line description used by `qlint rules` and SARIF descriptors.
std::string_view rule_summary(RuleId id);

// Rules that are precise enough to be on by default.
bool in_default_profile(RuleId id);
RuleSet default_rules();
RuleSet all_rules();

}  // namespace qlint::analyses

#endif  // QLINT_ANALYSES_RULE_ID_H_
