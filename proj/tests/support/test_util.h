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

#ifndef QLINT_TESTS_SUPPORT_TEST_UTIL_H_
#define QLINT_TESTS_SUPPORT_TEST_UTIL_H_

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qlint/analyses/rules.h"
#include "qlint/cli/pipeline.h"

namespace qlint::testing {

inline std::string corpus_dir() { return QLINT_CORPUS_DIR; }

inline std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline cli::Analysis analyze_text(const std::string& source, int max_unroll = 10) {
  return cli::analyze(source, "test.py", {max_unroll, nullptr});
}

inline std::vector<analyses::Warning> lint(const std::string& source,
                                           const analyses::RuleSet& rules = analyses::all_rules(),
                                           int max_unroll = 10) {
  return cli::lint_source(source, "test.py", rules, {max_unroll, nullptr});
}

// (rule, line) pairs.
inline std::set<std::pair<std::string, int>> rule_lines(const std::vector<analyses::Warning>& ws) {
  std::set<std::pair<std::string, int>> out;
  for (const auto& w : ws) out.emplace(std::string(analyses::rule_name(w.rule)), w.span.line());
  return out;
}

inline int count_rule(const std::vector<analyses::Warning>& ws, analyses::RuleId rule) {
  return static_cast<int>(std::count_if(ws.begin(), ws.end(),
                                        [&](const analyses::Warning& w) { return w.rule == rule; }));
}

// "# expect: rule-a, rule-b" markers, as (rule, line) pairs.
inline std::set<std::pair<std::string, int>> expected_markers(const std::string& source) {
  std::set<std::pair<std::string, int>> out;
  std::istringstream in(source);
  std::string line;
  for (int n = 1; std::getline(in, line); ++n) {
    auto at = line.find("# expect:");
    if (at == std::string::npos) continue;
    std::stringstream rules(line.substr(at + 9));
    std::string rule;
    while (std::getline(rules, rule, ',')) {
      rule.erase(0, rule.find_first_not_of(" \t"));
      rule.erase(rule.find_last_not_of(" \t\r") + 1);
      if (!rule.empty()) out.emplace(rule, n);
    }
  }
  return out;
}

}  // namespace qlint::testing

#endif  // QLINT_TESTS_SUPPORT_TEST_UTIL_H_
