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

#ifndef QLINT_FRONTEND_CONST_ENV_H_
#define QLINT_FRONTEND_CONST_ENV_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qlint/common/const_value.h"
#include "qlint/frontend/ast.h"

namespace qlint::frontend {

// Integer-valued variables of one scope at one program point. A name that is
// absent is Unknown.
using Bindings = std::map<std::string, ConstValue, std::less<>>;

ConstValue lookup(const Bindings& bindings, std::string_view name);

// Folds literals, names and + - * // over Known operands; anything else is
// Unknown.
ConstValue eval_const(const Expr& expr, const Bindings& bindings);

// Flow-sensitive constant facts for every statement of a module: the
// bindings in effect immediately before the statement runs. Function bodies
// are separate scopes whose parameters and free variables are Unknown.
class ConstEnv {
 public:
  ConstEnv() = default;
  explicit ConstEnv(std::size_t stmt_count) : before_(stmt_count) {}

  // Bindings before `stmt`; an empty map when the statement was unreachable.
  const Bindings& before(StmtId stmt) const;
  ConstValue lookup(StmtId stmt, std::string_view name) const;
  ConstValue eval(const Expr& expr, StmtId at) const;

  void record(StmtId stmt, const Bindings& bindings);
  std::size_t size() const { return before_.size(); }

 private:
  std::vector<std::optional<Bindings>> before_;
};

ConstEnv propagate_constants(const ModuleAst& ast);

}  // namespace qlint::frontend

#endif  // QLINT_FRONTEND_CONST_ENV_H_
