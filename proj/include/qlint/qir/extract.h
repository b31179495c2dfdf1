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

#ifndef QLINT_QIR_EXTRACT_H_
#define QLINT_QIR_EXTRACT_H_

#include "qlint/frontend/ast.h"
#include "qlint/frontend/cfg.h"
#include "qlint/frontend/const_env.h"
#include "qlint/qir/gate_spec.h"
#include "qlint/qir/ir.h"

namespace qlint::qir {

// Lifts an unrolled module into the quantum IR. `env` and `cfg` must have been
// computed on the same tree.
QuantumIR extract(const frontend::ModuleAst& ast, const frontend::ConstEnv& env,
                  const frontend::Cfg& cfg,
                  const GateTable& gates = GateTable::builtin());

}  // namespace qlint::qir

#endif  // QLINT_QIR_EXTRACT_H_
