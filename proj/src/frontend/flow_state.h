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

// Shared abstract state for the constant-propagation walkers.

#ifndef QLINT_SRC_FRONTEND_FLOW_STATE_H_
#define QLINT_SRC_FRONTEND_FLOW_STATE_H_

#include <string>
#include <vector>

#include "qlint/frontend/ast.h"
#include "qlint/frontend/const_env.h"

namespace qlint::frontend::internal {

struct FlowState {
  Bindings vars;
  bool reachable = true;

  static FlowState unreachable() { return FlowState{{}, false}; }
  friend bool operator==(const FlowState&, const FlowState&) = default;
};

FlowState join(const FlowState& a, const FlowState& b);

void forget(FlowState& state, const std::vector<std::string>& names);

// Transfer function for statements that do not contain nested statements.
void apply_simple(const Stmt& stmt, FlowState& state);

// Binds every name assigned by a compound statement to Unknown.
void forget_assigned(const Stmt& stmt, FlowState& state);

// True when `body` contains a break/continue that targets the loop owning
// `body` (nested loops and functions are not searched).
bool has_loop_control(const std::vector<Stmt>& body);

struct LoopExits {
  std::vector<FlowState> breaks;
  std::vector<FlowState> continues;
};

}  // namespace qlint::frontend::internal

#endif  // QLINT_SRC_FRONTEND_FLOW_STATE_H_
