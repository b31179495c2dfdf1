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

#ifndef QLINT_CLI_DRIVER_H_
#define QLINT_CLI_DRIVER_H_

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "qlint/analyses/rule_id.h"
#include "qlint/cli/pipeline.h"
#include "qlint/report/report.h"

namespace qlint::cli {

inline constexpr int kExitClean = 0;
inline constexpr int kExitWarnings = 1;
inline constexpr int kExitError = 2;

enum class Profile { kDefault, kAll };

struct Config {
  std::vector<std::string> paths;
  Profile profile = Profile::kDefault;
  std::vector<analyses::RuleId> selected;
  std::vector<analyses::RuleId> disabled;
  report::Format format = report::Format::kText;
  int max_unroll = frontend::kDefaultMaxUnroll;
  std::string gate_spec;   // empty: builtin table
  unsigned jobs = 1;       // 0: one per hardware thread
  bool dump_flow = false;
  std::string stats_path;  // corpus mode
};

// (profile ∪ selected) \ disabled.
analyses::RuleSet effective_rules(const Config& config);

// Python files under the given paths, sorted. Throws std::runtime_error for
// a path that does not exist.
std::vector<std::string> collect_files(const std::vector<std::string>& paths);

// Analyzes every file and merges the results into a normalized report.
// Syntax errors become skipped entries; I/O errors throw std::runtime_error.
report::Report analyze_files(const std::vector<std::string>& files, const Config& config,
                             const qir::GateTable& gates, std::ostream* flow_dump = nullptr);

// Entry point behind the qlint executable; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qlint::cli

#endif  // QLINT_CLI_DRIVER_H_
