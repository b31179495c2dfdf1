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

#include "qlint/qir/gate_spec.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include <fmt/format.h>

namespace qlint::qir {

extern const char kBuiltinGateSpec[];

namespace {

struct CategoryName {
  GateCategory category;
  const char* name;
};

constexpr CategoryName kCategoryNames[] = {
    {GateCategory::kReversibleGate, "reversible_gate"},
    {GateCategory::kMeasurement, "measurement"},
    {GateCategory::kMeasureAll, "measure_all"},
    {GateCategory::kReset, "reset"},
    {GateCategory::kInitialize, "initialize"},
    {GateCategory::kBarrier, "barrier"},
    {GateCategory::kConditionalMarker, "conditional_marker"},
    {GateCategory::kCompose, "compose"},
    {GateCategory::kAppend, "append"},
    {GateCategory::kAddRegister, "add_register"},
    {GateCategory::kToGate, "to_gate"},
    {GateCategory::kCircuitCopy, "circuit_copy"},
    {GateCategory::kInertMethod, "inert_method"},
    {GateCategory::kBuiltinCircuit, "builtin_circuit"},
    {GateCategory::kPureCall, "pure_call"},
};

std::vector<ArgSlot> parse_slots(std::string_view text, const std::string& where) {
  std::vector<ArgSlot> out;
  if (text == "-") return out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    std::string_view item = text.substr(start, comma - start);
    ArgSlot slot;
    if (const auto eq = item.find('='); eq != std::string_view::npos) {
      slot.keyword = std::string(item.substr(eq + 1));
      item = item.substr(0, eq);
    }
    if (!item.empty() && item.back() == '*') {
      slot.is_list = true;
      item.remove_suffix(1);
    }
    const auto [ptr, ec] =
        std::from_chars(item.data(), item.data() + item.size(), slot.position);
    if (ec != std::errc() || ptr != item.data() + item.size() || slot.position < 0) {
      throw GateSpecError(fmt::format("{}: bad argument slot '{}'", where, item));
    }
    out.push_back(std::move(slot));
    start = comma + 1;
  }
  return out;
}

}  // namespace

const char* to_string(GateCategory c) {
  for (const auto& entry : kCategoryNames) {
    if (entry.category == c) return entry.name;
  }
  return "?";
}

GateTable GateTable::parse(std::string_view text, const std::string& origin) {
  GateTable table;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> cols;
    for (std::string f; fields >> f;) cols.push_back(f);
    if (cols.empty()) continue;
    const std::string where = fmt::format("{}:{}", origin, line_no);
    if (cols.size() != 5) {
      throw GateSpecError(fmt::format("{}: expected 5 columns, got {}", where, cols.size()));
    }
    GateSpec spec;
    spec.method = cols[0];
    const auto* cat = std::find_if(std::begin(kCategoryNames), std::end(kCategoryNames),
                                   [&](const CategoryName& c) { return cols[1] == c.name; });
    if (cat == std::end(kCategoryNames)) {
      throw GateSpecError(fmt::format("{}: unknown category '{}'", where, cols[1]));
    }
    spec.category = cat->category;
    if (cols[2] == "*") {
      spec.all_args_are_qubits = true;
    } else {
      spec.qubits = parse_slots(cols[2], where);
    }
    spec.clbits = parse_slots(cols[3], where);
    spec.params = parse_slots(cols[4], where);
    std::set<int> seen;
    for (const auto* group : {&spec.qubits, &spec.clbits, &spec.params}) {
      for (const auto& slot : *group) {
        if (!seen.insert(slot.position).second) {
          throw GateSpecError(fmt::format("{}: position {} used twice in '{}'", where,
                                          slot.position, spec.method));
        }
      }
    }
    if (table.index_.count(spec.method)) {
      throw GateSpecError(fmt::format("{}: duplicate entry '{}'", where, spec.method));
    }
    table.index_.emplace(spec.method, table.entries_.size());
    table.entries_.push_back(std::move(spec));
  }
  return table;
}

GateTable GateTable::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw GateSpecError(fmt::format("cannot read gate table '{}'", path));
  std::ostringstream text;
  text << in.rdbuf();
  return parse(text.str(), path);
}

const GateTable& GateTable::builtin() {
  static const GateTable table = parse(kBuiltinGateSpec, "<builtin gate table>");
  return table;
}

const GateSpec* GateTable::find(std::string_view method) const {
  auto it = index_.find(method);
  return it == index_.end() ? nullptr : &entries_[it->second];
}

}  // namespace qlint::qir
