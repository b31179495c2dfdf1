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

#ifndef QLINT_CLI_PIPELINE_H_
#define QLINT_CLI_PIPELINE_H_

#include <string>
#include <string_view>
#include <vector>

#include "qlint/analyses/rules.h"
#include "qlint/frontend/ast.h"
#include "qlint/frontend/cfg.h"
#include "qlint/frontend/const_env.h"
#include "qlint/frontend/unroll.h"
#include "qlint/qflow/flow.h"
#include "qlint/qir/gate_spec.h"
#include "qlint/qir/ir.h"

namespace qlint::cli {

struct AnalysisOptions {
  int max_unroll = frontend::kDefaultMaxUnroll;
  const qir::GateTable* gates = nullptr;  // builtin table when null
};

// Every intermediate product for one file.
struct Analysis {
  frontend::ModuleAst ast;  // after loop unrolling
  frontend::ConstEnv env;
  frontend::Cfg cfg;
  qir::QuantumIR ir;
  qflow::FlowRelation flow;
};

// Throws frontend::SyntaxError for unparseable input.
Analysis analyze(std::string_view source, const std::string& path,
                 const AnalysisOptions& options = {});

// Drops warnings on lines carrying "# qlint: ignore" or
// "# qlint: ignore[rule-a, rule-b]" naming the warning's rule.
std::vector<analyses::Warning> apply_suppressions(std::vector<analyses::Warning> warnings,
                                                  const std::vector<frontend::Comment>& comments);

// analyze + run_all + apply_suppressions.
std::vector<analyses::Warning> lint_source(std::string_view source, const std::string& path,
                                           const analyses::RuleSet& rules,
                                           const AnalysisOptions& options = {});

}  // namespace qlint::cli

#endif  // QLINT_CLI_PIPELINE_H_
