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

#include "qlint/frontend/parser.h"

#include <algorithm>
#include <array>
#include <charconv>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qlint::frontend {
namespace {

constexpr std::array<std::string_view, 35> kKeywords = {
    "False",  "None",   "True",    "and",      "as",       "assert", "async",
    "await",  "break",  "class",   "continue", "def",      "del",    "elif",
    "else",   "except", "finally", "for",      "from",     "global", "if",
    "import", "in",     "is",      "lambda",   "nonlocal", "not",    "or",
    "pass",   "raise",  "return",  "try",      "while",    "with",   "yield"};

bool is_keyword(std::string_view word) {
  return std::find(kKeywords.begin(), kKeywords.end(), word) != kKeywords.end();
}

std::optional<BinaryOperator> augmented_operator(std::string_view op) {
  static constexpr std::array<std::pair<std::string_view, BinaryOperator>, 13>
      kOps = {{{"+=", BinaryOperator::kAdd},
               {"-=", BinaryOperator::kSub},
               {"*=", BinaryOperator::kMul},
               {"/=", BinaryOperator::kDiv},
               {"//=", BinaryOperator::kFloorDiv},
               {"%=", BinaryOperator::kMod},
               {"**=", BinaryOperator::kPow},
               {"@=", BinaryOperator::kMatMul},
               {"<<=", BinaryOperator::kLShift},
               {">>=", BinaryOperator::kRShift},
               {"|=", BinaryOperator::kBitOr},
               {"^=", BinaryOperator::kBitXor},
               {"&=", BinaryOperator::kBitAnd}}};
  for (const auto& [text, op_kind] : kOps)
    if (text == op) return op_kind;
  return std::nullopt;
}

Expr parse_number_literal(const std::string& text, const SourceSpan& span) {
  const bool hex_like = text.size() > 1 && text[0] == '0' &&
                        std::string_view("xXoObB").find(text[1]) != std::string_view::npos;
  const bool is_float =
      !hex_like && text.find_first_of(".eEjJ") != std::string::npos;
  if (is_float) return Expr{span, FloatLiteral{text}};
  std::string digits;
  for (char c : text)
    if (c != '_') digits.push_back(c);
  int base = 10;
  std::size_t offset = 0;
  if (hex_like) {
    const char b = static_cast<char>(std::tolower(static_cast<unsigned char>(digits[1])));
    base = b == 'x' ? 16 : (b == 'o' ? 8 : 2);
    offset = 2;
  }
  std::int64_t value = 0;
  const char* first = digits.data() + offset;
  const char* last = digits.data() + digits.size();
  auto [ptr, ec] = std::from_chars(first, last, value, base);
  IntLiteral lit{std::nullopt, text};
  if (ec == std::errc() && ptr == last && first != last) lit.value = value;
  return Expr{span, std::move(lit)};
}

class Parser {
 public:
  Parser(TokenStream stream, std::shared_ptr<const std::string> file)
      : tokens_(std::move(stream.tokens)),
        comments_(std::move(stream.comments)),
        file_(std::move(file)) {}

  ModuleAst parse_module() {
    ModuleAst module;
    module.file = file_;
    while (!at(TokenKind::kEnd)) {
      if (at(TokenKind::kNewline)) {
        next();
        continue;
      }
      parse_statement(module.body);
    }
    module.comments = std::move(comments_);
    number_statements(module);
    return module;
  }

 private:
  // --- token helpers -------------------------------------------------------

  const Token& peek(std::size_t k = 0) const {
    return tokens_[std::min(pos_ + k, tokens_.size() - 1)];
  }
  bool at(TokenKind kind) const { return peek().kind == kind; }
  bool at_op(std::string_view op, std::size_t k = 0) const {
    return peek(k).kind == TokenKind::kOp && peek(k).text == op;
  }
  bool at_name(std::string_view word, std::size_t k = 0) const {
    return peek(k).kind == TokenKind::kName && peek(k).text == word;
  }
  Token next() {
    Token t = peek();
    if (pos_ < tokens_.size() - 1) ++pos_;
    last_end_ = t.end;
    return t;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw SyntaxError(*file_, peek().begin.line, peek().begin.column, msg);
  }
  [[noreturn]] void fail_unexpected() const {
    const Token& t = peek();
    switch (t.kind) {
      case TokenKind::kNewline: fail("invalid syntax: unexpected end of line");
      case TokenKind::kIndent: fail("unexpected indent");
      case TokenKind::kDedent: fail("unexpected unindent");
      case TokenKind::kEnd: fail("unexpected end of file");
      default: fail("invalid syntax near '" + t.text + "'");
    }
  }
  void expect_op(std::string_view op) {
    if (!at_op(op)) fail("expected '" + std::string(op) + "'");
    next();
  }
  void expect_name(std::string_view word) {
    if (!at_name(word)) fail("expected '" + std::string(word) + "'");
    next();
  }
  std::string expect_identifier() {
    if (!at(TokenKind::kName) || is_keyword(peek().text)) fail("expected identifier");
    return next().text;
  }
  void expect_newline() {
    if (at(TokenKind::kEnd)) return;
    if (!at(TokenKind::kNewline)) fail_unexpected();
    next();
  }

  SourceSpan span_from(Position begin) const {
    return SourceSpan(file_, begin, last_end_);
  }

  Stmt make_stmt(Position begin, StmtNode node) const {
    return Stmt{StmtId{}, span_from(begin), false, std::move(node)};
  }

  bool at_simple_end() const {
    return at(TokenKind::kNewline) || at(TokenKind::kEnd) || at_op(";");
  }

  bool can_start_expression() const {
    const Token& t = peek();
    switch (t.kind) {
      case TokenKind::kNumber:
      case TokenKind::kString:
        return true;
      case TokenKind::kName:
        return !is_keyword(t.text) || t.text == "not" || t.text == "lambda" ||
               t.text == "await" || t.text == "None" || t.text == "True" ||
               t.text == "False" || t.text == "yield";
      case TokenKind::kOp:
        return t.text == "(" || t.text == "[" || t.text == "{" || t.text == "-" ||
               t.text == "+" || t.text == "~" || t.text == "*" || t.text == "...";
      default:
        return false;
    }
  }

  // --- statements ----------------------------------------------------------

  void parse_statement(std::vector<Stmt>& out) {
    const Token& t = peek();
    if (t.kind == TokenKind::kIndent) fail("unexpected indent");
    if (t.kind == TokenKind::kOp && t.text == "@") {
      out.push_back(parse_decorated());
      return;
    }
    if (t.kind == TokenKind::kName) {
      if (t.text == "if") return out.push_back(parse_if());
      if (t.text == "while") return out.push_back(parse_while());
      if (t.text == "for") return out.push_back(parse_for());
      if (t.text == "try") return out.push_back(parse_try());
      if (t.text == "with") return out.push_back(parse_with());
      if (t.text == "def") return out.push_back(parse_def({}));
      if (t.text == "class") return out.push_back(parse_class({}));
      if (t.text == "async") return out.push_back(parse_async());
      if (t.text == "match" && starts_match_block()) return out.push_back(parse_match());
    }
    parse_simple_statements(out);
  }

  void parse_simple_statements(std::vector<Stmt>& out) {
    out.push_back(parse_small_statement());
    while (at_op(";")) {
      next();
      if (at_simple_end()) break;
      out.push_back(parse_small_statement());
    }
    expect_newline();
  }

  std::vector<Stmt> parse_block() {
    expect_op(":");
    std::vector<Stmt> body;
    if (at(TokenKind::kNewline)) {
      next();
      if (!at(TokenKind::kIndent)) fail("expected an indented block");
      next();
      while (!at(TokenKind::kDedent) && !at(TokenKind::kEnd)) {
        if (at(TokenKind::kNewline)) {
          next();
          continue;
        }
        parse_statement(body);
      }
      if (at(TokenKind::kDedent)) next();
    } else {
      parse_simple_statements(body);
    }
    return body;
  }

  Stmt parse_small_statement() {
    const Position begin = peek().begin;
    if (at(TokenKind::kName)) {
      const std::string& w = peek().text;
      if (w == "pass") {
        next();
        return make_stmt(begin, Pass{});
      }
      if (w == "break") {
        next();
        return make_stmt(begin, Break{});
      }
      if (w == "continue") {
        next();
        return make_stmt(begin, Continue{});
      }
      if (w == "return") {
        next();
        Return r;
        if (!at_simple_end()) r.value = parse_testlist_star_expr();
        return make_stmt(begin, std::move(r));
      }
      if (w == "import") return parse_import(begin);
      if (w == "from") return parse_from_import(begin);
      if (w == "global" || w == "nonlocal") {
        Scoping s;
        s.is_nonlocal = next().text == "nonlocal";
        s.names.push_back(expect_identifier());
        while (at_op(",")) {
          next();
          s.names.push_back(expect_identifier());
        }
        return make_stmt(begin, std::move(s));
      }
      if (w == "del") {
        next();
        OtherSimple s{"del", {}};
        s.exprs.push_back(parse_exprlist());
        if (auto* t = s.exprs.back().as<Tuple>()) {
          std::vector<Expr> elts = std::move(t->elts);
          s.exprs = std::move(elts);
        }
        return make_stmt(begin, std::move(s));
      }
      if (w == "assert") {
        next();
        OtherSimple s{"assert", {}};
        s.exprs.push_back(parse_test());
        if (at_op(",")) {
          next();
          s.exprs.push_back(parse_test());
        }
        return make_stmt(begin, std::move(s));
      }
      if (w == "raise") {
        next();
        OtherSimple s{"raise", {}};
        if (!at_simple_end()) {
          s.exprs.push_back(parse_test());
          if (at_name("from")) {
            next();
            s.exprs.push_back(parse_test());
          }
        }
        return make_stmt(begin, std::move(s));
      }
    }
    return parse_expression_statement(begin);
  }

  std::string parse_dotted_name() {
    std::string name = expect_identifier();
    while (at_op(".")) {
      next();
      name += "." + expect_identifier();
    }
    return name;
  }

  Stmt parse_import(Position begin) {
    next();
    Import imp;
    while (true) {
      std::string dotted = parse_dotted_name();
      if (imp.module.empty()) imp.module = dotted;
      if (at_name("as")) {
        next();
        imp.bound_names.push_back(expect_identifier());
      } else {
        imp.bound_names.push_back(dotted.substr(0, dotted.find('.')));
      }
      if (!at_op(",")) break;
      next();
    }
    return make_stmt(begin, std::move(imp));
  }

  Stmt parse_from_import(Position begin) {
    next();
    Import imp;
    while (at_op(".") || at_op("...")) imp.module += next().text;
    if (!at_name("import")) imp.module += parse_dotted_name();
    expect_name("import");
    if (at_op("*")) {
      next();
      return make_stmt(begin, std::move(imp));
    }
    const bool parens = at_op("(");
    if (parens) next();
    while (true) {
      std::string name = expect_identifier();
      if (at_name("as")) {
        next();
        name = expect_identifier();
      }
      imp.bound_names.push_back(name);
      if (!at_op(",")) break;
      next();
      if (parens && at_op(")")) break;
    }
    if (parens) expect_op(")");
    return make_stmt(begin, std::move(imp));
  }

  Expr parse_assignment_value() {
    if (at_name("yield")) return parse_yield();
    return parse_testlist_star_expr();
  }

  Stmt parse_expression_statement(Position begin) {
    Expr first = parse_testlist_star_expr();
    if (at_op(":")) {
      next();
      Expr annotation = parse_test();
      std::optional<Expr> value;
      if (at_op("=")) {
        next();
        value = parse_assignment_value();
      }
      return make_stmt(begin, AnnAssign{std::move(first), std::move(annotation),
                                        std::move(value)});
    }
    if (peek().kind == TokenKind::kOp) {
      if (auto op = augmented_operator(peek().text)) {
        next();
        Expr value = parse_assignment_value();
        return make_stmt(begin, AugAssign{std::move(first), *op, std::move(value)});
      }
    }
    if (at_op("=")) {
      std::vector<Expr> targets;
      targets.push_back(std::move(first));
      Expr value = first_placeholder();
      while (at_op("=")) {
        next();
        Expr e = parse_assignment_value();
        if (at_op("=")) {
          targets.push_back(std::move(e));
        } else {
          value = std::move(e);
        }
      }
      return make_stmt(begin, Assign{std::move(targets), std::move(value)});
    }
    return make_stmt(begin, ExprStmt{std::move(first)});
  }

  static Expr first_placeholder() { return Expr{SourceSpan(), NoneLiteral{}}; }

  Stmt parse_if() {
    const Position begin = next().begin;  // 'if' or 'elif'
    Expr test = parse_namedexpr_test();
    std::vector<Stmt> body = parse_block();
    std::vector<Stmt> orelse;
    if (at_name("elif")) {
      orelse.push_back(parse_if());
    } else if (at_name("else")) {
      next();
      orelse = parse_block();
    }
    return make_stmt(begin, If{std::move(test), std::move(body), std::move(orelse)});
  }

  Stmt parse_while() {
    const Position begin = next().begin;
    Expr test = parse_namedexpr_test();
    std::vector<Stmt> body = parse_block();
    std::vector<Stmt> orelse;
    if (at_name("else")) {
      next();
      orelse = parse_block();
    }
    return make_stmt(begin,
                     While{std::move(test), std::move(body), std::move(orelse)});
  }

  Stmt parse_for() {
    const Position begin = next().begin;
    Expr target = parse_exprlist();
    expect_name("in");
    Expr iter = parse_testlist();
    std::vector<Stmt> body = parse_block();
    std::vector<Stmt> orelse;
    if (at_name("else")) {
      next();
      orelse = parse_block();
    }
    return make_stmt(begin, For{std::move(target), std::move(iter), std::move(body),
                                std::move(orelse), false});
  }

  Stmt parse_try() {
    const Position begin = next().begin;
    OpaqueStmt s{"try", {}, {}, {}};
    s.bodies.push_back(parse_block());
    bool has_handler = false;
    while (at_name("except")) {
      has_handler = true;
      next();
      if (at_op("*")) next();
      if (!at_op(":")) {
        s.exprs.push_back(parse_test());
        if (at_name("as")) {
          next();
          s.bound_names.push_back(expect_identifier());
        } else if (at_op(",")) {
          fail("invalid syntax: use 'except E as name'");
        }
      }
      s.bodies.push_back(parse_block());
    }
    if (at_name("else")) {
      next();
      s.bodies.push_back(parse_block());
    }
    if (at_name("finally")) {
      has_handler = true;
      next();
      s.bodies.push_back(parse_block());
    }
    if (!has_handler) fail("expected 'except' or 'finally' block");
    return make_stmt(begin, std::move(s));
  }

  Stmt parse_with() {
    const Position begin = next().begin;
    With w;
    while (true) {
      WithItem item{parse_test(), std::nullopt};
      if (at_name("as")) {
        next();
        item.target = parse_bitor_or_star();
      }
      w.items.push_back(std::move(item));
      if (!at_op(",")) break;
      next();
    }
    w.body = parse_block();
    return make_stmt(begin, std::move(w));
  }

  std::vector<Parameter> parse_parameters(std::string_view closer,
                                          bool annotations) {
    std::vector<Parameter> params;
    while (!at_op(closer)) {
      Parameter p;
      if (at_op("/")) {
        next();
      } else if (at_op("*") || at_op("**")) {
        const bool kw = next().text == "**";
        if (at(TokenKind::kName)) {
          p.kind = kw ? Parameter::Kind::kKwArgs : Parameter::Kind::kVarArgs;
          p.name = expect_identifier();
          if (annotations && at_op(":")) {
            next();
            p.annotation = parse_test();
          }
          params.push_back(std::move(p));
        }
      } else {
        p.name = expect_identifier();
        if (annotations && at_op(":")) {
          next();
          p.annotation = parse_test();
        }
        if (at_op("=")) {
          next();
          p.default_value = parse_test();
        }
        params.push_back(std::move(p));
      }
      if (!at_op(",")) break;
      next();
    }
    return params;
  }

  Stmt parse_def(std::vector<Expr> decorators, Position begin = {}) {
    const Position def_begin = next().begin;
    if (begin == Position{}) begin = def_begin;
    FunctionDef f;
    f.decorators = std::move(decorators);
    f.name = expect_identifier();
    expect_op("(");
    f.params = parse_parameters(")", true);
    expect_op(")");
    if (at_op("->")) {
      next();
      f.returns = parse_test();
    }
    f.body = parse_block();
    return make_stmt(begin, std::move(f));
  }

  Stmt parse_class(std::vector<Expr> decorators, Position begin = {}) {
    const Position class_begin = next().begin;
    if (begin == Position{}) begin = class_begin;
    OpaqueStmt s{"class", std::move(decorators), {}, {}};
    s.bound_names.push_back(expect_identifier());
    if (at_op("(")) {
      next();
      for (auto& arg : parse_arguments()) s.exprs.push_back(std::move(*arg.value));
      expect_op(")");
    }
    s.bodies.push_back(parse_block());
    return make_stmt(begin, std::move(s));
  }

  Stmt parse_decorated() {
    const Position begin = peek().begin;
    std::vector<Expr> decorators;
    while (at_op("@")) {
      next();
      decorators.push_back(parse_namedexpr_test());
      expect_newline();
    }
    if (at_name("def")) return parse_def(std::move(decorators), begin);
    if (at_name("class")) return parse_class(std::move(decorators), begin);
    if (at_name("async")) return parse_async();
    fail("expected 'def' or 'class' after decorator");
  }

  Stmt parse_async() {
    const Position begin = next().begin;
    Stmt inner = [&] {
      if (at_name("def")) return parse_def({});
      if (at_name("for")) return parse_for();
      if (at_name("with")) return parse_with();
      fail("expected 'def', 'for' or 'with' after 'async'");
    }();
    OpaqueStmt s{"async", {}, {}, {}};
    if (const auto* f = inner.as<FunctionDef>()) s.bound_names.push_back(f->name);
    s.bodies.push_back({});
    s.bodies.back().push_back(std::move(inner));
    return make_stmt(begin, std::move(s));
  }

  // `match` is a soft keyword: only "match <subject>:" followed by an
  // indented "case" opens a match statement.
  bool starts_match_block() const {
    for (std::size_t k = 1; peek(k).kind != TokenKind::kEnd; ++k) {
      if (peek(k).kind == TokenKind::kNewline) {
        return k > 1 && at_op(":", k - 1) && peek(k + 1).kind == TokenKind::kIndent &&
               at_name("case", k + 2);
      }
    }
    return false;
  }

  // Case patterns are skipped token by token; every identifier in them counts
  // as bound.
  Stmt parse_match() {
    const Position begin = next().begin;
    OpaqueStmt s{"match", {}, {}, {}};
    s.exprs.push_back(parse_testlist());
    expect_op(":");
    if (!at(TokenKind::kNewline)) fail_unexpected();
    next();
    if (!at(TokenKind::kIndent)) fail("expected an indented block");
    next();
    while (at_name("case")) {
      next();
      int depth = 0;
      while (depth > 0 || !at_op(":")) {
        const Token& t = peek();
        if (t.kind == TokenKind::kNewline || t.kind == TokenKind::kEnd) fail_unexpected();
        if (t.kind == TokenKind::kOp && (t.text == "(" || t.text == "[" || t.text == "{")) ++depth;
        if (t.kind == TokenKind::kOp && (t.text == ")" || t.text == "]" || t.text == "}")) --depth;
        if (t.kind == TokenKind::kName && t.text == "if" && depth == 0) {
          next();
          s.exprs.push_back(parse_test());
          continue;
        }
        if (t.kind == TokenKind::kName && !is_keyword(t.text) && t.text != "_") {
          s.bound_names.push_back(t.text);
        }
        next();
      }
      s.bodies.push_back(parse_block());
      while (at(TokenKind::kNewline)) next();
    }
    if (!at(TokenKind::kDedent)) fail("expected 'case' block");
    next();
    return make_stmt(begin, std::move(s));
  }

  // --- expressions ---------------------------------------------------------

  // Comma-separated list that becomes a Tuple when a comma is present.
  template <typename ParseItem>
  Expr parse_list_of(ParseItem parse_item) {
    const Position begin = peek().begin;
    Expr first = parse_item();
    if (!at_op(",")) return first;
    std::vector<Expr> elts;
    elts.push_back(std::move(first));
    while (at_op(",")) {
      next();
      if (!can_start_expression()) break;
      elts.push_back(parse_item());
    }
    return Expr{span_from(begin), Tuple{std::move(elts)}};
  }

  Expr parse_testlist_star_expr() {
    if (at_name("yield")) return parse_yield();
    return parse_list_of([&] { return parse_star_or_namedexpr(); });
  }
  Expr parse_testlist() {
    return parse_list_of([&] { return parse_star_or_namedexpr(); });
  }
  Expr parse_exprlist() {
    return parse_list_of([&] { return parse_bitor_or_star(); });
  }

  Expr parse_star_or_namedexpr() {
    if (at_op("*")) {
      const Position begin = next().begin;
      Expr value = parse_bitor();
      return Expr{span_from(begin), Starred{std::move(value)}};
    }
    return parse_namedexpr_test();
  }

  Expr parse_bitor_or_star() {
    if (at_op("*")) {
      const Position begin = next().begin;
      Expr value = parse_bitor();
      return Expr{span_from(begin), Starred{std::move(value)}};
    }
    return parse_bitor();
  }

  Expr parse_yield() {
    const Position begin = next().begin;
    OpaqueExpr o{"yield", {}, {}};
    if (at_name("from")) {
      next();
      o.children.push_back(parse_test());
    } else if (can_start_expression()) {
      o.children.push_back(parse_testlist_star_expr());
    }
    return Expr{span_from(begin), std::move(o)};
  }

  Expr parse_namedexpr_test() {
    const Position begin = peek().begin;
    Expr e = parse_test();
    if (at_op(":=")) {
      const auto* name = e.as<Name>();
      if (name == nullptr) fail("cannot use assignment expression here");
      next();
      OpaqueExpr o{"walrus", {}, {name->id}};
      o.children.push_back(parse_test());
      return Expr{span_from(begin), std::move(o)};
    }
    return e;
  }

  Expr parse_test() {
    if (at_name("lambda")) return parse_lambda();
    const Position begin = peek().begin;
    Expr e = parse_or_test();
    if (at_name("if")) {
      next();
      Expr test = parse_or_test();
      expect_name("else");
      Expr orelse = parse_test();
      return Expr{span_from(begin),
                  Conditional{std::move(test), std::move(e), std::move(orelse)}};
    }
    return e;
  }

  Expr parse_test_nocond() {
    if (at_name("lambda")) return parse_lambda();
    return parse_or_test();
  }

  Expr parse_lambda() {
    const Position begin = next().begin;
    OpaqueExpr o{"lambda", {}, {}};
    for (auto& p : parse_parameters(":", false))
      if (p.default_value) o.children.push_back(std::move(*p.default_value));
    expect_op(":");
    o.children.push_back(parse_test());
    return Expr{span_from(begin), std::move(o)};
  }

  Expr parse_or_test() {
    const Position begin = peek().begin;
    Expr e = parse_and_test();
    if (!at_name("or")) return e;
    BoolOp op{false, {}};
    op.values.push_back(std::move(e));
    while (at_name("or")) {
      next();
      op.values.push_back(parse_and_test());
    }
    return Expr{span_from(begin), std::move(op)};
  }

  Expr parse_and_test() {
    const Position begin = peek().begin;
    Expr e = parse_not_test();
    if (!at_name("and")) return e;
    BoolOp op{true, {}};
    op.values.push_back(std::move(e));
    while (at_name("and")) {
      next();
      op.values.push_back(parse_not_test());
    }
    return Expr{span_from(begin), std::move(op)};
  }

  Expr parse_not_test() {
    if (at_name("not")) {
      const Position begin = next().begin;
      Expr operand = parse_not_test();
      return Expr{span_from(begin), UnaryOp{UnaryOperator::kNot, std::move(operand)}};
    }
    return parse_comparison();
  }

  std::optional<CompareOperator> compare_operator() {
    const Token& t = peek();
    if (t.kind == TokenKind::kOp) {
      if (t.text == "<") return CompareOperator::kLt;
      if (t.text == ">") return CompareOperator::kGt;
      if (t.text == "==") return CompareOperator::kEq;
      if (t.text == ">=") return CompareOperator::kGtE;
      if (t.text == "<=") return CompareOperator::kLtE;
      if (t.text == "!=") return CompareOperator::kNotEq;
    } else if (t.kind == TokenKind::kName) {
      if (t.text == "in") return CompareOperator::kIn;
      if (t.text == "is") return at_name("not", 1) ? CompareOperator::kIsNot
                                                  : CompareOperator::kIs;
      if (t.text == "not" && at_name("in", 1)) return CompareOperator::kNotIn;
    }
    return std::nullopt;
  }

  Expr parse_comparison() {
    const Position begin = peek().begin;
    Expr left = parse_bitor();
    auto op = compare_operator();
    if (!op) return left;
    Compare cmp{std::move(left), {}, {}};
    while (op) {
      next();
      if (*op == CompareOperator::kIsNot || *op == CompareOperator::kNotIn) next();
      cmp.ops.push_back(*op);
      cmp.comparators.push_back(parse_bitor());
      op = compare_operator();
    }
    return Expr{span_from(begin), std::move(cmp)};
  }

  template <typename Next>
  Expr parse_binary_level(
      std::initializer_list<std::pair<std::string_view, BinaryOperator>> ops,
      Next parse_next) {
    const Position begin = peek().begin;
    Expr left = parse_next();
    while (true) {
      std::optional<BinaryOperator> found;
      for (const auto& [text, op] : ops)
        if (at_op(text)) found = op;
      if (!found) return left;
      next();
      Expr right = parse_next();
      left = Expr{span_from(begin), BinaryOp{*found, std::move(left), std::move(right)}};
    }
  }

  Expr parse_bitor() {
    return parse_binary_level({{"|", BinaryOperator::kBitOr}},
                              [&] { return parse_bitxor(); });
  }
  Expr parse_bitxor() {
    return parse_binary_level({{"^", BinaryOperator::kBitXor}},
                              [&] { return parse_bitand(); });
  }
  Expr parse_bitand() {
    return parse_binary_level({{"&", BinaryOperator::kBitAnd}},
                              [&] { return parse_shift(); });
  }
  Expr parse_shift() {
    return parse_binary_level(
        {{"<<", BinaryOperator::kLShift}, {">>", BinaryOperator::kRShift}},
        [&] { return parse_arith(); });
  }
  Expr parse_arith() {
    return parse_binary_level(
        {{"+", BinaryOperator::kAdd}, {"-", BinaryOperator::kSub}},
        [&] { return parse_term(); });
  }
  Expr parse_term() {
    return parse_binary_level({{"*", BinaryOperator::kMul},
                               {"/", BinaryOperator::kDiv},
                               {"//", BinaryOperator::kFloorDiv},
                               {"%", BinaryOperator::kMod},
                               {"@", BinaryOperator::kMatMul}},
                              [&] { return parse_factor(); });
  }

  Expr parse_factor() {
    if (at_op("+") || at_op("-") || at_op("~")) {
      const Token t = next();
      const UnaryOperator op = t.text == "+"   ? UnaryOperator::kPlus
                               : t.text == "-" ? UnaryOperator::kMinus
                                               : UnaryOperator::kInvert;
      Expr operand = parse_factor();
      return Expr{span_from(t.begin), UnaryOp{op, std::move(operand)}};
    }
    return parse_power();
  }

  Expr parse_power() {
    const Position begin = peek().begin;
    Expr base = parse_await_primary();
    if (at_op("**")) {
      next();
      Expr exponent = parse_factor();
      return Expr{span_from(begin),
                  BinaryOp{BinaryOperator::kPow, std::move(base), std::move(exponent)}};
    }
    return base;
  }

  Expr parse_await_primary() {
    if (at_name("await")) {
      const Position begin = next().begin;
      OpaqueExpr o{"await", {}, {}};
      o.children.push_back(parse_primary());
      return Expr{span_from(begin), std::move(o)};
    }
    return parse_primary();
  }

  Expr parse_primary() {
    const Position begin = peek().begin;
    Expr e = parse_atom();
    while (true) {
      if (at_op("(")) {
        next();
        std::vector<Argument> args = parse_arguments();
        expect_op(")");
        e = Expr{span_from(begin), Call{std::move(e), std::move(args)}};
      } else if (at_op("[")) {
        next();
        Expr index = parse_subscripts();
        expect_op("]");
        e = Expr{span_from(begin), Subscript{std::move(e), std::move(index)}};
      } else if (at_op(".")) {
        next();
        std::string attr = expect_identifier();
        e = Expr{span_from(begin), Attribute{std::move(e), std::move(attr)}};
      } else {
        return e;
      }
    }
  }

  std::vector<Argument> parse_arguments() {
    std::vector<Argument> args;
    while (!at_op(")")) {
      const Position begin = peek().begin;
      if (at_op("*") || at_op("**")) {
        const bool dstar = next().text == "**";
        args.push_back(Argument{dstar ? Argument::Kind::kDoubleStar
                                      : Argument::Kind::kStar,
                                "", parse_test()});
      } else if (at(TokenKind::kName) && at_op("=", 1) && !is_keyword(peek().text)) {
        std::string keyword = next().text;
        next();
        args.push_back(Argument{Argument::Kind::kKeyword, std::move(keyword),
                                parse_test()});
      } else {
        Expr value = parse_namedexpr_test();
        if (at_name("for") || at_name("async")) {
          value = parse_comprehension(begin, "generator", std::move(value));
        }
        args.push_back(Argument{Argument::Kind::kPositional, "", std::move(value)});
      }
      if (!at_op(",")) break;
      next();
    }
    return args;
  }

  Expr parse_subscript_item() {
    const Position begin = peek().begin;
    std::optional<Box<Expr>> lower;
    if (!at_op(":")) {
      Expr e = parse_star_or_namedexpr();
      if (!at_op(":")) return e;
      lower = Box<Expr>(std::move(e));
    }
    next();  // ':'
    Slice s{std::move(lower), std::nullopt, std::nullopt};
    if (!at_op(":") && !at_op("]") && !at_op(",")) s.upper = Box<Expr>(parse_test());
    if (at_op(":")) {
      next();
      if (!at_op("]") && !at_op(",")) s.step = Box<Expr>(parse_test());
    }
    return Expr{span_from(begin), std::move(s)};
  }

  Expr parse_subscripts() {
    const Position begin = peek().begin;
    Expr first = parse_subscript_item();
    if (!at_op(",")) return first;
    std::vector<Expr> elts;
    elts.push_back(std::move(first));
    while (at_op(",")) {
      next();
      if (at_op("]")) break;
      elts.push_back(parse_subscript_item());
    }
    return Expr{span_from(begin), Tuple{std::move(elts)}};
  }

  Expr parse_comprehension(Position begin, const char* kind, Expr element) {
    OpaqueExpr o{kind, {}, {}};
    o.children.push_back(std::move(element));
    while (at_name("for") || at_name("async")) {
      if (at_name("async")) next();
      expect_name("for");
      o.children.push_back(parse_exprlist());
      expect_name("in");
      o.children.push_back(parse_or_test());
      while (at_name("if")) {
        next();
        o.children.push_back(parse_test_nocond());
      }
    }
    return Expr{span_from(begin), std::move(o)};
  }

  Expr parse_atom() {
    const Token& t = peek();
    const Position begin = t.begin;
    switch (t.kind) {
      case TokenKind::kNumber: {
        const Token tok = next();
        return parse_number_literal(tok.text, span_from(begin));
      }
      case TokenKind::kString: {
        std::string value;
        while (at(TokenKind::kString)) value += next().text;
        return Expr{span_from(begin), StringLiteral{std::move(value)}};
      }
      case TokenKind::kName: {
        const std::string word = t.text;
        if (word == "True" || word == "False") {
          next();
          return Expr{span_from(begin), BoolLiteral{word == "True"}};
        }
        if (word == "None") {
          next();
          return Expr{span_from(begin), NoneLiteral{}};
        }
        if (is_keyword(word)) fail_unexpected();
        next();
        return Expr{span_from(begin), Name{word}};
      }
      case TokenKind::kOp:
        if (t.text == "(") return parse_paren();
        if (t.text == "[") return parse_list_display();
        if (t.text == "{") return parse_brace_display();
        if (t.text == "...") {
          next();
          return Expr{span_from(begin), EllipsisLiteral{}};
        }
        [[fallthrough]];
      default:
        fail_unexpected();
    }
  }

  Expr parse_paren() {
    const Position begin = next().begin;
    if (at_op(")")) {
      next();
      return Expr{span_from(begin), Tuple{}};
    }
    if (at_name("yield")) {
      Expr y = parse_yield();
      expect_op(")");
      return y;
    }
    Expr first = parse_star_or_namedexpr();
    if (at_name("for") || at_name("async")) {
      Expr gen = parse_comprehension(begin, "generator", std::move(first));
      expect_op(")");
      gen.span = span_from(begin);
      return gen;
    }
    if (!at_op(",")) {
      expect_op(")");
      return first;
    }
    std::vector<Expr> elts;
    elts.push_back(std::move(first));
    while (at_op(",")) {
      next();
      if (at_op(")")) break;
      elts.push_back(parse_star_or_namedexpr());
    }
    expect_op(")");
    return Expr{span_from(begin), Tuple{std::move(elts)}};
  }

  Expr parse_list_display() {
    const Position begin = next().begin;
    std::vector<Expr> elts;
    if (!at_op("]")) {
      Expr first = parse_star_or_namedexpr();
      if (at_name("for") || at_name("async")) {
        Expr comp = parse_comprehension(begin, "list comprehension", std::move(first));
        expect_op("]");
        comp.span = span_from(begin);
        return comp;
      }
      elts.push_back(std::move(first));
      while (at_op(",")) {
        next();
        if (at_op("]")) break;
        elts.push_back(parse_star_or_namedexpr());
      }
    }
    expect_op("]");
    return Expr{span_from(begin), List{std::move(elts)}};
  }

  Expr parse_brace_display() {
    const Position begin = next().begin;
    if (at_op("}")) {
      next();
      return Expr{span_from(begin), Dict{}};
    }
    auto parse_dict_item = [&](std::vector<Expr>& items) {
      if (at_op("**")) {
        next();
        items.push_back(parse_bitor());
        return;
      }
      items.push_back(parse_test());
      expect_op(":");
      items.push_back(parse_test());
    };
    if (at_op("**")) {
      Dict d;
      parse_dict_item(d.items);
      while (at_op(",")) {
        next();
        if (at_op("}")) break;
        parse_dict_item(d.items);
      }
      expect_op("}");
      return Expr{span_from(begin), std::move(d)};
    }
    Expr first = parse_star_or_namedexpr();
    if (at_op(":")) {
      next();
      Dict d;
      d.items.push_back(std::move(first));
      d.items.push_back(parse_test());
      if (at_name("for") || at_name("async")) {
        OpaqueExpr o{"dict comprehension", std::move(d.items), {}};
        Expr comp = parse_comprehension(begin, "dict comprehension",
                                        Expr{span_from(begin), std::move(o)});
        expect_op("}");
        comp.span = span_from(begin);
        return comp;
      }
      while (at_op(",")) {
        next();
        if (at_op("}")) break;
        parse_dict_item(d.items);
      }
      expect_op("}");
      return Expr{span_from(begin), std::move(d)};
    }
    if (at_name("for") || at_name("async")) {
      Expr comp = parse_comprehension(begin, "set comprehension", std::move(first));
      expect_op("}");
      comp.span = span_from(begin);
      return comp;
    }
    Set s;
    s.elts.push_back(std::move(first));
    while (at_op(",")) {
      next();
      if (at_op("}")) break;
      s.elts.push_back(parse_star_or_namedexpr());
    }
    expect_op("}");
    return Expr{span_from(begin), std::move(s)};
  }

  std::vector<Token> tokens_;
  std::vector<Comment> comments_;
  std::shared_ptr<const std::string> file_;
  std::size_t pos_ = 0;
  Position last_end_;
};

}  // namespace

ModuleAst parse_file(std::string_view source, const std::string& file) {
  auto shared_file = std::make_shared<const std::string>(file);
  Parser parser(tokenize(source, file), shared_file);
  return parser.parse_module();
}

}  // namespace qlint::frontend
