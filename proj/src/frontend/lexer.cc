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

#include <algorithm>
#include <array>
#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "qlint/frontend/parser.h"

namespace qlint::frontend {
namespace {

constexpr std::array<std::string_view, 5> kThreeCharOps = {"**=", "//=", ">>=",
                                                           "<<=", "..."};
constexpr std::array<std::string_view, 19> kTwoCharOps = {
    "**", "//", ">>", "<<", "<=", ">=", "==", "!=", "->", "+=",
    "-=", "*=", "/=", "%=", "&=", "|=", "^=", "@=", ":="};
constexpr std::string_view kOneCharOps = "+-*/%@&|^~<>()[]{},:.;=";

bool is_ident_start(unsigned char c) {
  return std::isalpha(c) || c == '_' || c >= 0x80;
}
bool is_ident_char(unsigned char c) {
  return std::isalnum(c) || c == '_' || c >= 0x80;
}

class Lexer {
 public:
  Lexer(std::string_view src, const std::string& file) : src_(src), file_(file) {}

  TokenStream run() {
    if (src_.substr(0, 3) == "\xEF\xBB\xBF") advance(3);
    bool at_line_start = true;
    while (pos_ < src_.size()) {
      if (at_line_start && depth_ == 0) {
        if (!handle_line_start()) continue;
        at_line_start = false;
        if (pos_ >= src_.size()) break;
      }
      const char c = src_[pos_];
      if (c == ' ' || c == '\t' || c == '\f') {
        advance(1);
      } else if (c == '#') {
        read_comment();
      } else if (c == '\\' && is_newline_at(pos_ + 1)) {
        advance(1);
        consume_newline();
      } else if (c == '\n' || c == '\r') {
        const bool logical_end = depth_ == 0;
        if (logical_end) emit(TokenKind::kNewline, "", here(), here());
        consume_newline();
        at_line_start = logical_end;
      } else if (is_ident_start(static_cast<unsigned char>(c))) {
        read_name_or_prefixed_string();
      } else if (std::isdigit(static_cast<unsigned char>(c)) ||
                 (c == '.' && pos_ + 1 < src_.size() &&
                  std::isdigit(static_cast<unsigned char>(src_[pos_ + 1])))) {
        read_number();
      } else if (c == '"' || c == '\'') {
        read_string(here(), "");
      } else {
        read_operator();
      }
    }
    if (depth_ > 0) fail(open_.back(), "bracket is never closed");
    if (!out_.tokens.empty() && out_.tokens.back().kind != TokenKind::kNewline &&
        out_.tokens.back().kind != TokenKind::kDedent) {
      emit(TokenKind::kNewline, "", here(), here());
    }
    while (indents_.size() > 1) {
      indents_.pop_back();
      emit(TokenKind::kDedent, "", here(), here());
    }
    emit(TokenKind::kEnd, "", here(), here());
    return std::move(out_);
  }

 private:
  [[noreturn]] void fail(Position p, const std::string& msg) {
    throw SyntaxError(file_, p.line, p.column, msg);
  }

  Position here() const { return {line_, col_}; }

  void advance(std::size_t n) {
    pos_ += n;
    col_ += static_cast<int>(n);
  }

  bool is_newline_at(std::size_t p) const {
    return p < src_.size() && (src_[p] == '\n' || src_[p] == '\r');
  }

  void consume_newline() {
    if (src_[pos_] == '\r' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '\n')
      ++pos_;
    ++pos_;
    ++line_;
    col_ = 1;
  }

  void emit(TokenKind kind, std::string text, Position b, Position e) {
    out_.tokens.push_back(Token{kind, std::move(text), b, e});
  }

  // Measures indentation of a logical line. Returns false when the line was
  // blank or comment-only and has been consumed.
  bool handle_line_start() {
    int width = 0;
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == ' ') {
        ++width;
      } else if (c == '\t') {
        width = (width / 8 + 1) * 8;
      } else if (c == '\f') {
        width = 0;
      } else {
        break;
      }
      advance(1);
    }
    if (pos_ >= src_.size()) return true;
    const char c = src_[pos_];
    if (c == '#') {
      read_comment();
      if (pos_ < src_.size()) consume_newline();
      return false;
    }
    if (c == '\n' || c == '\r') {
      consume_newline();
      return false;
    }
    if (width > indents_.back()) {
      indents_.push_back(width);
      emit(TokenKind::kIndent, "", here(), here());
    } else {
      while (width < indents_.back()) {
        indents_.pop_back();
        emit(TokenKind::kDedent, "", here(), here());
      }
      if (width != indents_.back())
        fail(here(), "unindent does not match any outer indentation level");
    }
    return true;
  }

  void read_comment() {
    const Position start = here();
    const std::size_t begin = pos_ + 1;
    while (pos_ < src_.size() && src_[pos_] != '\n' && src_[pos_] != '\r')
      advance(1);
    out_.comments.push_back(
        Comment{start.line, start.column,
                std::string(src_.substr(begin, pos_ - begin))});
  }

  void read_name_or_prefixed_string() {
    const Position start = here();
    std::size_t end = pos_;
    while (end < src_.size() && is_ident_char(static_cast<unsigned char>(src_[end])))
      ++end;
    std::string word(src_.substr(pos_, end - pos_));
    if (end < src_.size() && (src_[end] == '"' || src_[end] == '\'') &&
        word.size() <= 2) {
      std::string lower = word;
      std::transform(lower.begin(), lower.end(), lower.begin(),
                     [](unsigned char ch) { return std::tolower(ch); });
      static constexpr std::array<std::string_view, 8> kPrefixes = {
          "r", "u", "b", "f", "br", "rb", "fr", "rf"};
      if (std::find(kPrefixes.begin(), kPrefixes.end(), lower) != kPrefixes.end()) {
        advance(end - pos_);
        read_string(start, lower);
        return;
      }
    }
    advance(end - pos_);
    emit(TokenKind::kName, std::move(word), start, here());
  }

  void read_number() {
    const Position start = here();
    const std::size_t begin = pos_;
    auto digits = [&](auto pred) {
      while (pos_ < src_.size() &&
             (pred(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
        advance(1);
    };
    if (src_[pos_] == '0' && pos_ + 1 < src_.size() &&
        std::string_view("xXoObB").find(src_[pos_ + 1]) != std::string_view::npos) {
      advance(2);
      digits([](unsigned char ch) { return std::isxdigit(ch) != 0; });
    } else {
      auto dec = [](unsigned char ch) { return std::isdigit(ch) != 0; };
      digits(dec);
      if (pos_ < src_.size() && src_[pos_] == '.') {
        advance(1);
        digits(dec);
      }
      if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
        std::size_t look = pos_ + 1;
        if (look < src_.size() && (src_[look] == '+' || src_[look] == '-')) ++look;
        if (look < src_.size() && std::isdigit(static_cast<unsigned char>(src_[look]))) {
          advance(look - pos_);
          digits(dec);
        }
      }
      if (pos_ < src_.size() && (src_[pos_] == 'j' || src_[pos_] == 'J')) advance(1);
    }
    emit(TokenKind::kNumber, std::string(src_.substr(begin, pos_ - begin)), start,
         here());
  }

  void read_string(Position start, const std::string& prefix) {
    const char quote = src_[pos_];
    const bool triple = pos_ + 2 < src_.size() && src_[pos_ + 1] == quote &&
                        src_[pos_ + 2] == quote;
    const bool raw = prefix.find('r') != std::string::npos ||
                     prefix.find('f') != std::string::npos;
    advance(triple ? 3 : 1);
    std::string value;
    while (true) {
      if (pos_ >= src_.size()) fail(start, "unterminated string literal");
      const char c = src_[pos_];
      if (c == quote) {
        if (!triple) {
          advance(1);
          break;
        }
        if (pos_ + 2 < src_.size() && src_[pos_ + 1] == quote &&
            src_[pos_ + 2] == quote) {
          advance(3);
          break;
        }
        value.push_back(c);
        advance(1);
      } else if (c == '\n' || c == '\r') {
        if (!triple) fail(start, "unterminated string literal");
        value.push_back('\n');
        consume_newline();
      } else if (c == '\\' && pos_ + 1 < src_.size()) {
        const char n = src_[pos_ + 1];
        if (n == '\n' || n == '\r') {
          advance(1);
          consume_newline();
          if (raw) value += "\\\n";
          continue;
        }
        advance(2);
        if (raw) {
          value.push_back('\\');
          value.push_back(n);
          continue;
        }
        switch (n) {
          case 'n': value.push_back('\n'); break;
          case 't': value.push_back('\t'); break;
          case 'r': value.push_back('\r'); break;
          case '0': value.push_back('\0'); break;
          case '\\': value.push_back('\\'); break;
          case '\'': value.push_back('\''); break;
          case '"': value.push_back('"'); break;
          default:
            value.push_back('\\');
            value.push_back(n);
        }
      } else {
        value.push_back(c);
        advance(1);
      }
    }
    emit(TokenKind::kString, std::move(value), start, here());
  }

  void read_operator() {
    const Position start = here();
    const std::string_view rest = src_.substr(pos_);
    for (auto op : kThreeCharOps) {
      if (rest.substr(0, 3) == op) {
        advance(3);
        emit(TokenKind::kOp, std::string(op), start, here());
        return;
      }
    }
    for (auto op : kTwoCharOps) {
      if (rest.substr(0, 2) == op) {
        advance(2);
        emit(TokenKind::kOp, std::string(op), start, here());
        return;
      }
    }
    const char c = src_[pos_];
    if (kOneCharOps.find(c) == std::string_view::npos) {
      fail(start, std::string("invalid character '") + c + "'");
    }
    if (c == '(' || c == '[' || c == '{') {
      ++depth_;
      open_.push_back(start);
    }
    if (c == ')' || c == ']' || c == '}') {
      if (depth_ == 0) fail(start, std::string("unmatched '") + c + "'");
      --depth_;
      open_.pop_back();
    }
    advance(1);
    emit(TokenKind::kOp, std::string(1, c), start, here());
  }

  std::string_view src_;
  const std::string& file_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  int depth_ = 0;
  std::vector<Position> open_;
  std::vector<int> indents_{0};
  TokenStream out_;
};

}  // namespace

TokenStream tokenize(std::string_view source, const std::string& file) {
  return Lexer(source, file).run();
}

}  // namespace qlint::frontend
