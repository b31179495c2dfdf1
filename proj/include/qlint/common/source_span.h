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

#ifndef QLINT_COMMON_SOURCE_SPAN_H_
#define QLINT_COMMON_SOURCE_SPAN_H_

#include <algorithm>
#include <compare>
#include <memory>
#include <string>
#include <tuple>

namespace qlint {

// Line/column position inside one file. Both are 1-based; columns count bytes.
struct Position {
  int line = 1;
  int column = 1;

  friend auto operator<=>(const Position&, const Position&) = default;
};

// A source range. The file name is shared between all spans of one parsed
// file so that copying a span stays cheap.
class SourceSpan {
 public:
  SourceSpan() = default;
  SourceSpan(std::shared_ptr<const std::string> file, Position begin,
             Position end)
      : file_(std::move(file)), begin_(begin), end_(end) {
    if (end_ < begin_) end_ = begin_;
  }

  const std::string& file() const {
    static const std::string kEmpty;
    return file_ ? *file_ : kEmpty;
  }
  const std::shared_ptr<const std::string>& file_ptr() const { return file_; }

  int line() const { return begin_.line; }
  int column() const { return begin_.column; }
  int end_line() const { return end_.line; }
  int end_column() const { return end_.column; }
  Position begin() const { return begin_; }
  Position end() const { return end_; }

  // Span covering both `this` and `other` (same file assumed).
  SourceSpan merge(const SourceSpan& other) const {
    return SourceSpan(file_ ? file_ : other.file_, std::min(begin_, other.begin_),
                      std::max(end_, other.end_));
  }

  friend bool operator==(const SourceSpan& a, const SourceSpan& b) {
    return a.file() == b.file() && a.begin_ == b.begin_ && a.end_ == b.end_;
  }
  friend std::strong_ordering operator<=>(const SourceSpan& a,
                                          const SourceSpan& b) {
    if (auto c = a.file() <=> b.file(); c != 0) return c;
    if (auto c = a.begin_ <=> b.begin_; c != 0) return c;
    return a.end_ <=> b.end_;
  }

 private:
  std::shared_ptr<const std::string> file_;
  Position begin_;
  Position end_;
};

}  // namespace qlint

#endif  // QLINT_COMMON_SOURCE_SPAN_H_
