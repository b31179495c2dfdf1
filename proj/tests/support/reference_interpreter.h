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

// Executes generated programs concretely and derives the per-qubit ordering
// relations from the resulting traces.

#ifndef QLINT_TESTS_SUPPORT_REFERENCE_INTERPRETER_H_
#define QLINT_TESTS_SUPPORT_REFERENCE_INTERPRETER_H_

#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "program_gen.h"
#include "qlint/cli/pipeline.h"

namespace qlint::testing {

// (earlier line, later line, qubit name as printed by qflow::qubit_name)
using Relation = std::set<std::tuple<int, int, std::string>>;

struct Relations {
  Relation may_follow;
  Relation directly;
};

// Qubit name -> lines of the operators that act on it, in execution order.
// Barriers move no data and are left out.
std::map<std::string, std::vector<int>> reference_traces(const GenProgram& p);

Relations reference_relations(const GenProgram& p);
Relations qflow_relations(const cli::Analysis& a);

}  // namespace qlint::testing

#endif  // QLINT_TESTS_SUPPORT_REFERENCE_INTERPRETER_H_
