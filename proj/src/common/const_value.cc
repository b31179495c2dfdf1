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

#include "qlint/common/const_value.h"

namespace qlint {

ConstValue operator+(ConstValue a, ConstValue b) {
  if (!a.is_known() || !b.is_known()) return {};
  std::int64_t r;
  if (__builtin_add_overflow(a.value(), b.value(), &r)) return {};
  return ConstValue::known(r);
}

ConstValue operator-(ConstValue a, ConstValue b) {
  if (!a.is_known() || !b.is_known()) return {};
  std::int64_t r;
  if (__builtin_sub_overflow(a.value(), b.value(), &r)) return {};
  return ConstValue::known(r);
}

ConstValue operator*(ConstValue a, ConstValue b) {
  if (!a.is_known() || !b.is_known()) return {};
  std::int64_t r;
  if (__builtin_mul_overflow(a.value(), b.value(), &r)) return {};
  return ConstValue::known(r);
}

ConstValue ConstValue::operator-() const { return known(0) - *this; }

ConstValue ConstValue::floor_div(ConstValue a, ConstValue b) {
  if (!a.is_known() || !b.is_known() || b.value() == 0) return {};
  const std::int64_t n = a.value();
  const std::int64_t d = b.value();
  if (n == INT64_MIN && d == -1) return {};
  std::int64_t q = n / d;
  if ((n % d != 0) && ((n < 0) != (d < 0))) --q;
  return known(q);
}

std::string ConstValue::to_string() const {
  return is_known() ? std::to_string(value()) : std::string("Unknown");
}

std::ostream& operator<<(std::ostream& os, const ConstValue& v) {
  return os << v.to_string();
}

}  // namespace qlint
