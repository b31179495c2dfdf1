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

#ifndef QLINT_COMMON_CONST_VALUE_H_
#define QLINT_COMMON_CONST_VALUE_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace qlint {

// A statically resolved integer, or Unknown. Arithmetic is exact: any
// overflow of the 64-bit carrier yields Unknown rather than a wrapped value.
class ConstValue {
 public:
  constexpr ConstValue() = default;  // Unknown
  static constexpr ConstValue known(std::int64_t v) { return ConstValue(v); }
  static constexpr ConstValue unknown() { return ConstValue(); }

  constexpr bool is_known() const { return value_.has_value(); }
  constexpr std::int64_t value() const { return *value_; }
  constexpr std::optional<std::int64_t> get() const { return value_; }

  friend constexpr bool operator==(const ConstValue&, const ConstValue&) = default;

  friend ConstValue operator+(ConstValue a, ConstValue b);
  friend ConstValue operator-(ConstValue a, ConstValue b);
  friend ConstValue operator*(ConstValue a, ConstValue b);
  ConstValue operator-() const;

  // Python `//`: floors toward negative infinity; division by zero is Unknown.
  static ConstValue floor_div(ConstValue a, ConstValue b);

  // Lattice join used at control-flow merges.
  static constexpr ConstValue join(ConstValue a, ConstValue b) {
    return a == b ? a : ConstValue();
  }

  std::string to_string() const;

 private:
  constexpr explicit ConstValue(std::int64_t v) : value_(v) {}
  std::optional<std::int64_t> value_;
};

std::ostream& operator<<(std::ostream& os, const ConstValue& v);

}  // namespace qlint

#endif  // QLINT_COMMON_CONST_VALUE_H_
