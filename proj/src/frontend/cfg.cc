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

#include "qlint/frontend/cfg.h"

#include <algorithm>
#include <deque>
#include <utility>

namespace qlint::frontend {

bool Cfg::reaches(BlockId from, BlockId to) const {
  return reach_[from.index()][to.index()];
}

std::size_t Cfg::edge_count() const {
  std::size_t n = 0;
  for (const auto& b : blocks_) n += b.succs.size();
  return n;
}

class CfgBuilder {
 public:
  explicit CfgBuilder(const ModuleAst& ast) { cfg_.block_of_.resize(ast.stmt_count); }

  Cfg build(const ModuleAst& ast) {
    scope(ast.body, "<module>", std::nullopt);
    close_reachability();
    return std::move(cfg_);
  }

 private:
  struct LoopCtx {
    BlockId header;
    std::vector<BlockId> breaks;
  };

  BlockId new_block() {
    BasicBlock b;
    b.id = BlockId(static_cast<std::uint32_t>(cfg_.blocks_.size()));
    b.scope = scope_;
    cfg_.blocks_.push_back(std::move(b));
    return cfg_.blocks_.back().id;
  }

  void edge(BlockId from, BlockId to) {
    auto& succs = cfg_.blocks_[from.index()].succs;
    if (std::find(succs.begin(), succs.end(), to) != succs.end()) return;
    succs.push_back(to);
    cfg_.blocks_[to.index()].preds.push_back(from);
  }

  // Current block, created on demand after return/break/continue.
  BlockId current() {
    if (!cur_) cur_ = new_block();
    return *cur_;
  }

  void place(const Stmt& s) {
    const BlockId b = current();
    cfg_.blocks_[b.index()].stmts.push_back(s.id);
    cfg_.block_of_[s.id.index()] = b;
  }

  void scope(const std::vector<Stmt>& body, std::string name,
             std::optional<StmtId> def) {
    const ScopeId saved_scope = scope_;
    const auto saved_cur = cur_;
    auto saved_loops = std::move(loops_);
    loops_.clear();
    scope_ = ScopeId(static_cast<std::uint32_t>(cfg_.scopes_.size()));
    cfg_.scopes_.push_back(CfgScope{scope_, std::move(name), def, BlockId{}, {}});
    cur_.reset();
    const BlockId entry = current();
    cfg_.scopes_[scope_.index()].entry = entry;
    walk(body);
    if (cur_) exits().push_back(*cur_);
    scope_ = saved_scope;
    cur_ = saved_cur;
    loops_ = std::move(saved_loops);
  }

  std::vector<BlockId>& exits() { return cfg_.scopes_[scope_.index()].exits; }

  void walk(const std::vector<Stmt>& body) {
    for (const auto& s : body) visit(s);
  }

  void visit(const Stmt& s) {
    if (const auto* i = s.as<If>()) {
      place(s);
      const BlockId pre = *cur_;
      const BlockId then_block = new_block();
      edge(pre, then_block);
      cur_ = then_block;
      walk(i->body);
      const auto then_end = cur_;
      const BlockId else_block = new_block();
      edge(pre, else_block);
      cur_ = else_block;
      walk(i->orelse);
      const auto else_end = cur_;
      const BlockId join = new_block();
      if (then_end) edge(*then_end, join);
      if (else_end) edge(*else_end, join);
      cur_ = join;
    } else if (const auto* f = s.as<For>()) {
      loop(s, f->body, f->orelse);
    } else if (const auto* w = s.as<While>()) {
      loop(s, w->body, w->orelse);
    } else if (const auto* w = s.as<With>()) {
      place(s);
      walk(w->body);
    } else if (const auto* f = s.as<FunctionDef>()) {
      place(s);
      scope(f->body, f->name, s.id);
    } else if (const auto* o = s.as<OpaqueStmt>()) {
      place(s);
      const BlockId b = *cur_;
      for (const auto& body : o->bodies) {
        for_each_stmt(body, [&](const Stmt& inner) {
          cfg_.blocks_[b.index()].stmts.push_back(inner.id);
          cfg_.block_of_[inner.id.index()] = b;
        });
      }
    } else if (s.is<Return>()) {
      place(s);
      exits().push_back(*cur_);
      cur_.reset();
    } else if (s.is<Break>()) {
      place(s);
      if (!loops_.empty()) loops_.back().breaks.push_back(*cur_);
      cur_.reset();
    } else if (s.is<Continue>()) {
      place(s);
      if (!loops_.empty()) edge(*cur_, loops_.back().header);
      cur_.reset();
    } else {
      place(s);
    }
  }

  void loop(const Stmt& s, const std::vector<Stmt>& body,
            const std::vector<Stmt>& orelse) {
    const auto before = cur_;
    const BlockId header = new_block();
    if (before) edge(*before, header);
    cur_ = header;
    place(s);
    const BlockId body_block = new_block();
    edge(header, body_block);
    cur_ = body_block;
    loops_.push_back(LoopCtx{header, {}});
    walk(body);
    if (cur_) edge(*cur_, header);
    LoopCtx ctx = std::move(loops_.back());
    loops_.pop_back();
    BlockId exit_from = header;
    if (!orelse.empty()) {
      const BlockId else_block = new_block();
      edge(header, else_block);
      cur_ = else_block;
      walk(orelse);
      const auto else_end = cur_;
      const BlockId after = new_block();
      if (else_end) edge(*else_end, after);
      for (const BlockId b : ctx.breaks) edge(b, after);
      cur_ = after;
      return;
    }
    const BlockId after = new_block();
    edge(exit_from, after);
    for (const BlockId b : ctx.breaks) edge(b, after);
    cur_ = after;
  }

  void close_reachability() {
    const std::size_t n = cfg_.blocks_.size();
    cfg_.reach_.assign(n, std::vector<bool>(n, false));
    for (std::size_t start = 0; start < n; ++start) {
      auto& row = cfg_.reach_[start];
      std::deque<std::size_t> work;
      for (const BlockId s : cfg_.blocks_[start].succs) work.push_back(s.index());
      while (!work.empty()) {
        const std::size_t b = work.front();
        work.pop_front();
        if (row[b]) continue;
        row[b] = true;
        for (const BlockId s : cfg_.blocks_[b].succs) work.push_back(s.index());
      }
    }
  }

  Cfg cfg_;
  ScopeId scope_;
  std::optional<BlockId> cur_;
  std::vector<LoopCtx> loops_;
};

Cfg build_cfg(const ModuleAst& ast) { return CfgBuilder(ast).build(ast); }

}  // namespace qlint::frontend
