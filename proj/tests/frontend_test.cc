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

#include <gtest/gtest.h>

#include <algorithm>
#include <string>

#include "qlint/frontend/cfg.h"
#include "qlint/frontend/const_env.h"
#include "qlint/frontend/parser.h"
#include "qlint/frontend/unroll.h"

namespace qlint::frontend {
namespace {

ModuleAst parse(const std::string& src) { return parse_file(src, "t.py"); }

const Stmt* find_line(const ModuleAst& m, int line) {
  const Stmt* found = nullptr;
  for_each_stmt(m.body, [&](const Stmt& s) {
    if (!found && s.span.line() == line) found = &s;
  });
  return found;
}

TEST(Parser, AssignmentWithConstructorCall) {
  const ModuleAst m = parse("qreg = QuantumRegister(4)\n");
  ASSERT_EQ(m.body.size(), 1u);
  const auto* a = m.body[0].as<Assign>();
  ASSERT_NE(a, nullptr);
  const auto* call = a->value.as<Call>();
  ASSERT_NE(call, nullptr);
  EXPECT_EQ(dotted_name(*call->func), "QuantumRegister");
  ASSERT_EQ(call->args.size(), 1u);
  EXPECT_EQ(call->args[0].value->as<IntLiteral>()->value, 4);
}

TEST(Parser, MalformedDefIsSyntaxError) {
  EXPECT_THROW(parse("def f(:\n  pass\n"), SyntaxError);
  try {
    parse("x = 1\ndef f(:\n");
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_EQ(e.file(), "t.py");
  }
}

TEST(Parser, UnsupportedConstructsBecomeOpaque) {
  const ModuleAst m = parse(
      "class A:\n  def f(self):\n    return 1\n"
      "try:\n  x = 1\nexcept ValueError:\n  x = 2\n"
      "ys = [i for i in range(3)]\n");
  ASSERT_EQ(m.body.size(), 3u);
  EXPECT_TRUE(m.body[0].is<OpaqueStmt>());
  EXPECT_TRUE(m.body[1].is<OpaqueStmt>());
  EXPECT_TRUE(m.body[2].as<Assign>()->value.is<OpaqueExpr>());
}

TEST(Parser, MatchIsSoftKeyword) {
  const ModuleAst m = parse(
      "match cmd.split():\n  case [\"go\", where] if where:\n    n = 1\n"
      "  case Point(x=0) | {\"k\": v}:\n    pass\n  case _:\n    pass\n"
      "match = 3\nmatch(x)\n");
  ASSERT_EQ(m.body.size(), 3u);
  const auto* s = m.body[0].as<OpaqueStmt>();
  ASSERT_NE(s, nullptr);
  EXPECT_EQ(s->keyword, "match");
  EXPECT_EQ(s->bodies.size(), 3u);
  EXPECT_EQ(s->exprs.size(), 2u);  // subject and guard
  EXPECT_NE(std::find(s->bound_names.begin(), s->bound_names.end(), "where"), s->bound_names.end());
  EXPECT_TRUE(m.body[1].is<Assign>());
  EXPECT_TRUE(m.body[2].is<ExprStmt>());
  EXPECT_THROW(parse("match x:\n  y = 1\n"), SyntaxError);
}

TEST(Parser, SpansAndComments) {
  const ModuleAst m = parse("# head\nqc.h(0)  # qlint: ignore\n");
  ASSERT_EQ(m.comments.size(), 2u);
  EXPECT_EQ(m.comments[1].line, 2);
  EXPECT_EQ(m.body[0].span.line(), 2);
  EXPECT_EQ(m.body[0].span.column(), 1);
  EXPECT_EQ(m.body[0].span.end_column(), 8);
}

TEST(Parser, BracketsSpanLines) {
  const ModuleAst m = parse("qc.measure([0,\n   1], creg)\nif x:\n    y = 1\n");
  ASSERT_EQ(m.body.size(), 2u);
  EXPECT_TRUE(m.body[1].is<If>());
}

TEST(ConstEnv, ReassignmentAndArithmetic) {
  const ModuleAst m = parse("a = 2\na = a + 1\nuse(a)\nb = a * 4 // 3\nuse(b)\n");
  const ConstEnv env = propagate_constants(m);
  EXPECT_EQ(env.lookup(m.body[2].id, "a"), ConstValue::known(3));
  EXPECT_EQ(env.lookup(m.body[4].id, "b"), ConstValue::known(4));
}

TEST(ConstEnv, RegisterSizeThroughVariable) {
  const ModuleAst m = parse("n = 3\ncreg = ClassicalRegister(n)\n");
  const ConstEnv env = propagate_constants(m);
  const auto& call = *m.body[1].as<Assign>()->value.as<Call>();
  EXPECT_EQ(env.eval(*call.args[0].value, m.body[1].id), ConstValue::known(3));
}

TEST(ConstEnv, DynamicValuesAreUnknown) {
  const ModuleAst m = parse("n = input()\nuse(n)\nm = int('3')\nuse(m)\n");
  const ConstEnv env = propagate_constants(m);
  EXPECT_FALSE(env.lookup(m.body[1].id, "n").is_known());
  EXPECT_FALSE(env.lookup(m.body[3].id, "m").is_known());
}

TEST(ConstEnv, OneSidedBranchIsUnknownAfterJoin) {
  const ModuleAst m = parse(
      "a = 1\nb = 5\nif c:\n    a = 2\nelse:\n    b = 5\nuse(a, b)\n");
  const ConstEnv env = propagate_constants(m);
  const Stmt* use = find_line(m, 7);
  EXPECT_FALSE(env.lookup(use->id, "a").is_known());
  EXPECT_EQ(env.lookup(use->id, "b"), ConstValue::known(5));
}

TEST(ConstEnv, LoopCarriedValuesAreUnknown) {
  const ModuleAst m = parse("k = 0\nwhile k < 3:\n    use(k)\n    k = k + 1\nuse(k)\n");
  const ConstEnv env = propagate_constants(m);
  EXPECT_FALSE(env.lookup(find_line(m, 3)->id, "k").is_known());
  EXPECT_FALSE(env.lookup(find_line(m, 5)->id, "k").is_known());
}

TEST(ConstEnv, FunctionParametersAndGlobalsAreUnknown) {
  const ModuleAst m = parse("n = 3\ndef f(n):\n    use(n)\ndef g():\n    use(n)\nuse(n)\n");
  const ConstEnv env = propagate_constants(m);
  EXPECT_FALSE(env.lookup(find_line(m, 3)->id, "n").is_known());
  EXPECT_FALSE(env.lookup(find_line(m, 5)->id, "n").is_known());
  EXPECT_EQ(env.lookup(find_line(m, 6)->id, "n"), ConstValue::known(3));
}

TEST(ConstEnv, OverflowBecomesUnknown) {
  const ModuleAst m = parse("a = 9223372036854775807\nb = a + 1\nuse(b)\n");
  const ConstEnv env = propagate_constants(m);
  EXPECT_FALSE(env.lookup(m.body[2].id, "b").is_known());
}

TEST(Range, TripCounts) {
  const Bindings none;
  auto values = [&](const std::string& src) {
    const ModuleAst m = parse("x = " + src + "\n");
    return range_values(m.body[0].as<Assign>()->value, none, 10);
  };
  EXPECT_EQ(values("range(3)"), (std::vector<std::int64_t>{0, 1, 2}));
  EXPECT_EQ(values("range(2, 5)"), (std::vector<std::int64_t>{2, 3, 4}));
  EXPECT_EQ(values("range(5, 0, -2)"), (std::vector<std::int64_t>{5, 3, 1}));
  EXPECT_EQ(values("range(4, 2)"), std::vector<std::int64_t>{});
  EXPECT_FALSE(values("range(20)"));
  EXPECT_FALSE(values("range(1, 2, 0)"));
  EXPECT_FALSE(values("range(n)"));
  EXPECT_FALSE(values("list(3)"));
}

TEST(Unroll, KnownTripCountIsExpanded) {
  const ModuleAst m = unroll_loops(parse("for i in range(3):\n    circ.h(i)\n"));
  ASSERT_EQ(m.body.size(), 6u);
  EXPECT_TRUE(m.body[0].synthetic);
  const ConstEnv env = propagate_constants(m);
  for (int k = 0; k < 3; ++k) {
    const Stmt& call = m.body[2 * k + 1];
    EXPECT_EQ(call.span.line(), 2);
    EXPECT_EQ(env.lookup(call.id, "i"), ConstValue::known(k));
  }
}

TEST(Unroll, LongOrUnknownLoopsAreFlagged) {
  for (const char* src : {"for i in range(20):\n    circ.h(i)\n",
                          "for i in range(n):\n    circ.h(i)\n",
                          "for i in range(3):\n    if x:\n        break\n"}) {
    const ModuleAst m = unroll_loops(parse(src));
    ASSERT_EQ(m.body.size(), 1u) << src;
    EXPECT_TRUE(m.body[0].as<For>()->non_unrollable) << src;
  }
  const ModuleAst big = unroll_loops(parse("for i in range(20):\n    circ.h(i)\n"), 20);
  EXPECT_EQ(big.body.size(), 40u);
}

TEST(Unroll, NestedBoundsUseOuterValue) {
  const ModuleAst m =
      unroll_loops(parse("for i in range(3):\n    for j in range(i):\n        qc.cx(i, j)\n"));
  int calls = 0;
  for_each_stmt(m.body, [&](const Stmt& s) {
    if (s.is<ExprStmt>()) ++calls;
    EXPECT_FALSE(s.is<For>());
  });
  EXPECT_EQ(calls, 3);
}

TEST(Unroll, BoundComputedBeforeLoop) {
  const ModuleAst m = unroll_loops(parse("n = 2\nn = n * 2\nfor i in range(n):\n    qc.h(i)\n"));
  EXPECT_EQ(m.body.size(), 2u + 8u);
}

TEST(Cfg, StraightLineIsOneBlock) {
  const ModuleAst m = parse("a = 1\nb = 2\nc = 3\n");
  const Cfg cfg = build_cfg(m);
  EXPECT_EQ(cfg.blocks().size(), 1u);
  EXPECT_EQ(cfg.edge_count(), 0u);
  EXPECT_EQ(cfg.block(BlockId(0)).stmts.size(), 3u);
}

TEST(Cfg, IfElseIsDiamond) {
  const ModuleAst m = parse("a = 1\nif a:\n    b = 2\nelse:\n    b = 3\nc = 4\n");
  const Cfg cfg = build_cfg(m);
  ASSERT_EQ(cfg.blocks().size(), 4u);
  const BlockId then_b = cfg.block_of(find_line(m, 3)->id);
  const BlockId else_b = cfg.block_of(find_line(m, 5)->id);
  const BlockId join_b = cfg.block_of(find_line(m, 6)->id);
  EXPECT_FALSE(cfg.reaches(then_b, else_b));
  EXPECT_FALSE(cfg.reaches(else_b, then_b));
  EXPECT_TRUE(cfg.reaches(then_b, join_b));
  EXPECT_TRUE(cfg.reaches(else_b, join_b));
  EXPECT_EQ(cfg.block_of(m.body[0].id), cfg.block_of(m.body[1].id));
}

TEST(Cfg, SurvivingLoopKeepsBackEdge) {
  const ModuleAst m = unroll_loops(parse("for i in range(n):\n    qc.h(i)\nqc.x(0)\n"));
  const Cfg cfg = build_cfg(m);
  const BlockId body = cfg.block_of(find_line(m, 2)->id);
  EXPECT_TRUE(cfg.reaches(body, body));
  EXPECT_FALSE(cfg.reaches(cfg.block_of(find_line(m, 3)->id), body));
}

TEST(Cfg, UnrolledLoopIsStraightLine) {
  const ModuleAst m = unroll_loops(parse(
      "qreg = QuantumRegister(4)\ncirc = QuantumCircuit(qreg)\n"
      "for i in range(3):\n    circ.h(i)\ncirc.measure(qreg[0], 0)\n"));
  const Cfg cfg = build_cfg(m);
  EXPECT_EQ(cfg.blocks().size(), 1u);
}

TEST(Cfg, FunctionBodiesAreSeparateScopes) {
  const ModuleAst m = parse("def f():\n    qc.h(0)\n    return qc\nqc.x(0)\n");
  const Cfg cfg = build_cfg(m);
  ASSERT_EQ(cfg.scopes().size(), 2u);
  EXPECT_NE(cfg.scope_of(find_line(m, 2)->id), cfg.scope_of(find_line(m, 4)->id));
  EXPECT_EQ(cfg.scopes()[1].name, "f");
}

}  // namespace
}  // namespace qlint::frontend
