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

#include "qlint/report/report.h"

#include <algorithm>
#include <memory>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

namespace qlint::report {
namespace {

using analyses::RuleId;
using analyses::Warning;
using nlohmann::json;

json warning_json(const Warning& w) {
  json j;
  j["rule"] = std::string(analyses::rule_name(w.rule));
  j["message"] = w.message;
  j["severity"] = "warning";
  j["line"] = w.span.line();
  j["column"] = w.span.column();
  j["end_line"] = w.span.end_line();
  j["end_column"] = w.span.end_column();
  j["circuit"] = w.circuit ? json(w.circuit->index()) : json(nullptr);
  return j;
}

template <typename T>
T field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ReportParseError(fmt::format("missing field '{}'", key));
  }
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ReportParseError(fmt::format("bad field '{}': {}", key, e.what()));
  }
}

}  // namespace

std::size_t Report::warning_count() const {
  std::size_t n = 0;
  for (const auto& f : files) n += f.warnings.size();
  return n;
}

std::map<RuleId, std::size_t> Report::summary() const {
  std::map<RuleId, std::size_t> out;
  for (RuleId r : analyses::kAllRules) out[r] = 0;
  for (const auto& f : files) {
    for (const auto& w : f.warnings) ++out[w.rule];
  }
  return out;
}

void Report::normalize() {
  std::sort(files.begin(), files.end(),
            [](const FileReport& a, const FileReport& b) { return a.path < b.path; });
  std::sort(skipped.begin(), skipped.end(), [](const SkippedFile& a, const SkippedFile& b) {
    return std::tie(a.path, a.reason) < std::tie(b.path, b.reason);
  });
  for (auto& f : files) std::sort(f.warnings.begin(), f.warnings.end(), analyses::warning_less);
}

std::string format_text(const Report& r) {
  std::string out;
  for (const auto& f : r.files) {
    for (const auto& w : f.warnings) {
      out += fmt::format("{}:{}:{} {} {}\n", f.path, w.span.line(), w.span.column(),
                         analyses::rule_name(w.rule), w.message);
    }
  }
  return out;
}

std::string format_json(const Report& r) {
  json doc;
  doc["schema_version"] = kJsonSchemaVersion;
  doc["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
  doc["files_analyzed"] = r.files_analyzed();
  doc["files_skipped"] = r.files_skipped();
  json skipped = json::array();
  for (const auto& s : r.skipped) skipped.push_back({{"path", s.path}, {"reason", s.reason}});
  doc["skipped"] = skipped;
  json summary = json::object();
  for (const auto& [rule, n] : r.summary()) summary[std::string(analyses::rule_name(rule))] = n;
  doc["summary"] = summary;
  json files = json::array();
  for (const auto& f : r.files) {
    json ws = json::array();
    for (const auto& w : f.warnings) ws.push_back(warning_json(w));
    files.push_back({{"path", f.path}, {"warnings", ws}});
  }
  doc["files"] = files;
  return doc.dump(2) + "\n";
}

std::string format_sarif(const Report& r) {
  json rules = json::array();
  for (RuleId id : analyses::kAllRules) {
    rules.push_back({{"id", analyses::rule_name(id)},
                     {"name", analyses::rule_name(id)},
                     {"shortDescription", {{"text", analyses::rule_summary(id)}}},
                     {"helpUri", fmt::format("docs/rules/{}.md", analyses::rule_name(id))},
                     {"defaultConfiguration", {{"level", "warning"}}}});
  }
  json results = json::array();
  for (const auto& f : r.files) {
    for (const auto& w : f.warnings) {
      json region = {{"startLine", w.span.line()},
                     {"startColumn", w.span.column()},
                     {"endLine", w.span.end_line()},
                     {"endColumn", w.span.end_column()}};
      results.push_back(
          {{"ruleId", analyses::rule_name(w.rule)},
           {"ruleIndex", static_cast<int>(w.rule)},
           {"level", "warning"},
           {"message", {{"text", w.message}}},
           {"locations",
            json::array({{{"physicalLocation",
                           {{"artifactLocation", {{"uri", f.path}}}, {"region", region}}}}})}});
    }
  }
  json run = {{"tool",
               {{"driver",
                 {{"name", kToolName},
                  {"version", kToolVersion},
                  {"informationUri", "https://github.com/qlint/qlint"},
                  {"rules", rules}}}}},
              {"results", results}};
  json doc = {{"$schema", "https://json.schemastore.org/sarif-2.1.0.json"},
              {"version", "2.1.0"},
              {"runs", json::array({run})}};
  return doc.dump(2) + "\n";
}

std::string format(const Report& r, Format f) {
  switch (f) {
    case Format::kText: return format_text(r);
    case Format::kJson: return format_json(r);
    case Format::kSarif: return format_sarif(r);
  }
  return {};
}

Report parse_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ReportParseError(e.what());
  }
  if (field<int>(doc, "schema_version") != kJsonSchemaVersion) {
    throw ReportParseError("unsupported schema_version");
  }
  Report r;
  for (const auto& s : field<json>(doc, "skipped")) {
    r.skipped.push_back({field<std::string>(s, "path"), field<std::string>(s, "reason")});
  }
  for (const auto& f : field<json>(doc, "files")) {
    FileReport fr;
    fr.path = field<std::string>(f, "path");
    auto file = std::make_shared<const std::string>(fr.path);
    for (const auto& jw : field<json>(f, "warnings")) {
      auto rule = analyses::parse_rule(field<std::string>(jw, "rule"));
      if (!rule) throw ReportParseError("unknown rule id");
      Warning w;
      w.rule = *rule;
      w.message = field<std::string>(jw, "message");
      w.span = SourceSpan(file, {field<int>(jw, "line"), field<int>(jw, "column")},
                          {field<int>(jw, "end_line"), field<int>(jw, "end_column")});
      const auto& c = field<json>(jw, "circuit");
      if (!c.is_null()) w.circuit = qir::CircuitId(c.get<std::uint32_t>());
      fr.warnings.push_back(std::move(w));
    }
    r.files.push_back(std::move(fr));
  }
  if (field<std::size_t>(doc, "files_analyzed") != r.files.size() ||
      field<std::size_t>(doc, "files_skipped") != r.skipped.size()) {
    throw ReportParseError("file counts do not match the listed files");
  }
  return r;
}

std::string corpus_stats(const Report& r) {
  if (r.files_analyzed() == 0) throw std::invalid_argument("corpus has no analyzed files");
  std::string out = "rule,total_warnings,percent_files\n";
  for (RuleId rule : analyses::kAllRules) {
    std::size_t total = 0;
    std::size_t with = 0;
    for (const auto& f : r.files) {
      auto n = std::count_if(f.warnings.begin(), f.warnings.end(),
                             [&](const Warning& w) { return w.rule == rule; });
      total += n;
      with += n > 0 ? 1 : 0;
    }
    double pct = 100.0 * static_cast<double>(with) / static_cast<double>(r.files_analyzed());
    out += fmt::format("{},{},{:.2f}\n", analyses::rule_name(rule), total, pct);
  }
  return out;
}

}  // namespace qlint::report
