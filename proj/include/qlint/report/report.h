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

#ifndef QLINT_REPORT_REPORT_H_
#define QLINT_REPORT_REPORT_H_

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qlint/analyses/rules.h"

namespace qlint::report {

inline constexpr std::string_view kToolName = "qlint";
inline constexpr std::string_view kToolVersion = "0.1.0";
inline constexpr int kJsonSchemaVersion = 1;

struct FileReport {
  std::string path;
  std::vector<analyses::Warning> warnings;  // sorted
};

struct SkippedFile {
  std::string path;
  std::string reason;
};

struct Report {
  std::vector<FileReport> files;  // sorted by path; analyzed files only
  std::vector<SkippedFile> skipped;

  std::size_t files_analyzed() const { return files.size(); }
  std::size_t files_skipped() const { return skipped.size(); }
  std::size_t warning_count() const;
  // Count per rule, with every rule present.
  std::map<analyses::RuleId, std::size_t> summary() const;
  // Sorts files by path so the result does not depend on analysis order.
  void normalize();
};

enum class Format { kText, kJson, kSarif };

std::string format_text(const Report& r);
std::string format_json(const Report& r);
std::string format_sarif(const Report& r);
std::string format(const Report& r, Format f);

class ReportParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Reads back the output of format_json.
Report parse_json(std::string_view text);

// "rule,total_warnings,percent_files" rows for all ten rules. Throws
// std::invalid_argument when no file was analyzed.
std::string corpus_stats(const Report& r);

}  // namespace qlint::report

#endif  // QLINT_REPORT_REPORT_H_
