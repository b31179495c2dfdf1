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

#ifndef QLINT_FRONTEND_UNROLL_H_
#define QLINT_FRONTEND_UNROLL_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "qlint/frontend/ast.h"
#include "qlint/frontend/const_env.h"

namespace qlint::frontend {

inline constexpr int kDefaultMaxUnroll = 10;

// Values produced by `range(...)` when all 1-3 positional arguments are Known.
// Returns nullopt for other iterables or when the trip count exceeds `limit`.
std::optional<std::vector<std::int64_t>> range_values(const Expr& iter,
                                                      const Bindings& bindings,
                                                      std::int64_t limit);

// Replaces every `for <name> in range(...)` with a Known trip count of at most
// `max_iterations` by that many copies of its body, each preceded by a
// synthetic assignment of the loop variable. Loops that cannot be expanded
// are kept and flagged `non_unrollable`. The result is renumbered.
ModuleAst unroll_loops(const ModuleAst& ast, int max_iterations = kDefaultMaxUnroll);

}  // namespace qlint::frontend

#endif  // QLINT_FRONTEND_UNROLL_H_
