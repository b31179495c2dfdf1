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

#include "qlint/cli/pipeline.h"

#include <algorithm>
#include <map>
#include <set>

#include "qlint/frontend/parser.h"
#include "qlint/qir/extract.h"

namespace qlint::cli {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

struct LineSuppression {
  bool all = false;
  std::set<std::string, std::less<>> rules;
};

// Parses "qlint: ignore" / "qlint: ignore[a, b]"; false for other comments.
bool parse_suppression(std::string_view text, LineSuppression& into) {
  text = trim(text);
  constexpr std::string_view kPrefix = "qlint:";
  if (text.substr(0, kPrefix.size()) != kPrefix) return false;
  text = trim(text.substr(kPrefix.size()));
  constexpr std::string_view kIgnore = "ignore";
  if (text.substr(0, kIgnore.size()) != kIgnore) return false;
  text = trim(text.substr(kIgnore.size()));
  if (text.empty()) {
    into.all = true;
    return true;
  }
  if (text.front() != '[' || text.find(']') == std::string_view::npos) return false;
  std::string_view list = text.substr(1, text.find(']') - 1);
  while (!list.empty()) {
    auto comma = list.find(',');
    auto item = trim(list.substr(0, comma));
    if (!item.empty()) into.rules.emplace(item);
    if (comma == std::string_view::npos) break;
    list.remove_prefix(comma + 1);
  }
  return true;
}

}  // namespace

Analysis analyze(std::string_view source, const std::string& path, const AnalysisOptions& options) {
  const auto& gates = options.gates ? *options.gates : qir::GateTable::builtin();
  Analysis a;
  a.ast = frontend::unroll_loops(frontend::parse_file(source, path), options.max_unroll);
  a.env = frontend::propagate_constants(a.ast);
  a.cfg = frontend::build_cfg(a.ast);
  a.ir = qir::extract(a.ast, a.env, a.cfg, gates);
  a.flow = qflow::build_flow(a.ir, a.cfg);
  return a;
}

std::vector<analyses::Warning> apply_suppressions(std::vector<analyses::Warning> warnings,
                                                  const std::vector<frontend::Comment>& comments) {
  std::map<int, LineSuppression> by_line;
  for (const auto& c : comments) {
    LineSuppression s;
    if (!parse_suppression(c.text, s)) continue;
    auto& slot = by_line[c.line];
    slot.all = slot.all || s.all;
    slot.rules.insert(s.rules.begin(), s.rules.end());
  }
  std::erase_if(warnings, [&](const analyses::Warning& w) {
    auto it = by_line.find(w.span.line());
    if (it == by_line.end()) return false;
    return it->second.all || it->second.rules.count(analyses::rule_name(w.rule)) > 0;
  });
  return warnings;
}

std::vector<analyses::Warning> lint_source(std::string_view source, const std::string& path,
                                           const analyses::RuleSet& rules,
                                           const AnalysisOptions& options) {
  auto a = analyze(source, path, options);
  return apply_suppressions(analyses::run_all(a.ir, a.flow, rules), a.ast.comments);
}

}  // namespace qlint::cli
