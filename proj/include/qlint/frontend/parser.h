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

#ifndef QLINT_FRONTEND_PARSER_H_
#define QLINT_FRONTEND_PARSER_H_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qlint/frontend/ast.h"

namespace qlint::frontend {

// Raised when a file cannot be tokenized or parsed at all.
class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(std::string file, int line, int column, const std::string& what)
      : std::runtime_error(what),
        file_(std::move(file)),
        line_(line),
        column_(column) {}

  const std::string& file() const { return file_; }
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  std::string file_;
  int line_;
  int column_;
};

enum class TokenKind { kName, kNumber, kString, kOp, kNewline, kIndent, kDedent, kEnd };

struct Token {
  TokenKind kind;
  std::string text;  // for strings: the decoded value
  Position begin;
  Position end;
};

struct TokenStream {
  std::vector<Token> tokens;
  std::vector<Comment> comments;
};

// Splits Python source into tokens, including INDENT/DEDENT/NEWLINE.
TokenStream tokenize(std::string_view source, const std::string& file);

// Parses `source` into a syntax tree with numbered statements.
// Throws SyntaxError when the text is not parseable.
ModuleAst parse_file(std::string_view source, const std::string& file);

}  // namespace qlint::frontend

#endif  // QLINT_FRONTEND_PARSER_H_
