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

#ifndef QLINT_FRONTEND_CFG_H_
#define QLINT_FRONTEND_CFG_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qlint/common/strong_id.h"
#include "qlint/frontend/ast.h"

namespace qlint::frontend {

using BlockId = StrongId<struct BlockTag>;
using ScopeId = StrongId<struct ScopeTag>;

struct BasicBlock {
  BlockId id;
  ScopeId scope;
  std::vector<StmtId> stmts;  // source order
  std::vector<BlockId> succs;
  std::vector<BlockId> preds;
};

// The module top level or one function body.
struct CfgScope {
  ScopeId id;
  std::string name;               // "<module>" or the function name
  std::optional<StmtId> def;      // the `def` statement, if any
  BlockId entry;
  std::vector<BlockId> exits;     // blocks that leave the scope
};

class Cfg {
 public:
  const std::vector<BasicBlock>& blocks() const { return blocks_; }
  const std::vector<CfgScope>& scopes() const { return scopes_; }
  const BasicBlock& block(BlockId id) const { return blocks_[id.index()]; }

  BlockId block_of(StmtId stmt) const { return block_of_[stmt.index()]; }
  ScopeId scope_of(StmtId stmt) const { return block(block_of(stmt)).scope; }

  // True when a path of at least one edge leads from `from` to `to`.
  bool reaches(BlockId from, BlockId to) const;

  std::size_t edge_count() const;

 private:
  friend class CfgBuilder;

  std::vector<BasicBlock> blocks_;
  std::vector<CfgScope> scopes_;
  std::vector<BlockId> block_of_;
  std::vector<std::vector<bool>> reach_;
};

// Expects an already unrolled tree: surviving loops keep their back edge.
Cfg build_cfg(const ModuleAst& ast);

}  // namespace qlint::frontend

#endif  // QLINT_FRONTEND_CFG_H_
