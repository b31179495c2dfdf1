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

#include "qlint/cli/driver.h"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>
#include <variant>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "qlint/frontend/parser.h"

namespace qlint::cli {
namespace fs = std::filesystem;
namespace {

using analyses::RuleId;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error(fmt::format("{}: cannot read file", path));
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw std::runtime_error(fmt::format("{}: cannot read file", path));
  return ss.str();
}

struct FileOutcome {
  std::variant<report::FileReport, report::SkippedFile> result;
  std::string flow_dump;
  std::string io_error;
};

FileOutcome analyze_one(const std::string& path, const analyses::RuleSet& rules,
                        const AnalysisOptions& options, bool want_dump) {
  FileOutcome o;
  std::string source;
  try {
    source = read_file(path);
  } catch (const std::runtime_error& e) {
    o.io_error = e.what();
    return o;
  }
  try {
    auto a = analyze(source, path, options);
    report::FileReport fr;
    fr.path = path;
    fr.warnings = apply_suppressions(analyses::run_all(a.ir, a.flow, rules), a.ast.comments);
    if (want_dump) o.flow_dump = a.flow.dump(a.ir);
    o.result = std::move(fr);
  } catch (const frontend::SyntaxError& e) {
    o.result = report::SkippedFile{
        path, fmt::format("{}:{}: syntax error: {}", e.line(), e.column(), e.what())};
  }
  return o;
}

std::vector<RuleId> parse_rule_list(const std::vector<std::string>& items) {
  std::vector<RuleId> out;
  for (const auto& item : items) {
    std::stringstream ss(item);
    std::string name;
    while (std::getline(ss, name, ',')) {
      if (name.empty()) continue;
      auto id = analyses::parse_rule(name);
      if (!id) throw CLI::ValidationError(fmt::format("unknown rule id '{}'", name));
      out.push_back(*id);
    }
  }
  return out;
}

struct RawOptions {
  std::vector<std::string> paths;
  std::string profile = "default";
  std::vector<std::string> select;
  std::vector<std::string> disable;
  std::string format = "text";
  int max_unroll = frontend::kDefaultMaxUnroll;
  std::string gate_spec;
  unsigned jobs = 1;
  bool dump_flow = false;
  std::string stats;
};

void add_common(CLI::App* cmd, RawOptions& o) {
  cmd->add_option("--profile", o.profile, "Rule profile")
      ->check(CLI::IsMember({"default", "all"}));
  cmd->add_option("--select", o.select, "Enable extra rules (comma separated)");
  cmd->add_option("--disable", o.disable, "Disable rules (comma separated)");
  cmd->add_option("--max-unroll", o.max_unroll, "Largest range() loop that is unrolled")
      ->check(CLI::Range(1, 1000));
  cmd->add_option("--gate-spec", o.gate_spec, "Gate table replacing the bundled one")
      ->check(CLI::ExistingFile);
  cmd->add_option("--jobs,-j", o.jobs, "Worker threads (0 = all cores)");
}

Config to_config(const RawOptions& o) {
  Config c;
  c.paths = o.paths;
  c.profile = o.profile == "all" ? Profile::kAll : Profile::kDefault;
  c.selected = parse_rule_list(o.select);
  c.disabled = parse_rule_list(o.disable);
  for (RuleId id : c.selected) {
    if (std::find(c.disabled.begin(), c.disabled.end(), id) != c.disabled.end()) {
      throw CLI::ValidationError(
          fmt::format("rule '{}' is both selected and disabled", analyses::rule_name(id)));
    }
  }
  if (o.format == "json") c.format = report::Format::kJson;
  if (o.format == "sarif") c.format = report::Format::kSarif;
  c.max_unroll = o.max_unroll;
  c.gate_spec = o.gate_spec;
  c.jobs = o.jobs;
  c.dump_flow = o.dump_flow;
  c.stats_path = o.stats;
  return c;
}

void print_rules(std::ostream& out) {
  for (RuleId id : analyses::kAllRules) {
    out << fmt::format("{:<18} {:<8} {}\n", analyses::rule_name(id),
                       analyses::in_default_profile(id) ? "default" : "opt-in",
                       analyses::rule_summary(id));
  }
}

}  // namespace

analyses::RuleSet effective_rules(const Config& config) {
  auto rules = config.profile == Profile::kAll ? analyses::all_rules() : analyses::default_rules();
  rules.insert(config.selected.begin(), config.selected.end());
  for (RuleId id : config.disabled) rules.erase(id);
  return rules;
}

std::vector<std::string> collect_files(const std::vector<std::string>& paths) {
  std::vector<std::string> out;
  for (const auto& p : paths) {
    std::error_code ec;
    auto status = fs::status(p, ec);
    if (ec || !fs::exists(status)) throw std::runtime_error(fmt::format("{}: no such file or directory", p));
    if (fs::is_directory(status)) {
      for (auto it = fs::recursive_directory_iterator(p, ec); !ec && it != fs::recursive_directory_iterator();
           it.increment(ec)) {
        if (it->is_regular_file() && it->path().extension() == ".py") {
          out.push_back(it->path().generic_string());
        }
      }
      if (ec) throw std::runtime_error(fmt::format("{}: {}", p, ec.message()));
    } else {
      out.push_back(p);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

report::Report analyze_files(const std::vector<std::string>& files, const Config& config,
                             const qir::GateTable& gates, std::ostream* flow_dump) {
  const auto rules = effective_rules(config);
  const AnalysisOptions options{config.max_unroll, &gates};
  std::vector<FileOutcome> outcomes(files.size());

  unsigned workers = config.jobs == 0 ? std::max(1u, std::thread::hardware_concurrency()) : config.jobs;
  workers = std::min<unsigned>(workers, std::max<std::size_t>(files.size(), 1));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < files.size(); i = next++) {
      outcomes[i] = analyze_one(files[i], rules, options, flow_dump != nullptr);
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(work);
  }

  report::Report r;
  for (auto& o : outcomes) {
    if (!o.io_error.empty()) throw std::runtime_error(o.io_error);
    if (auto* fr = std::get_if<report::FileReport>(&o.result)) {
      if (flow_dump) *flow_dump << "== " << fr->path << "\n" << o.flow_dump;
      r.files.push_back(std::move(*fr));
    } else {
      r.skipped.push_back(std::get<report::SkippedFile>(std::move(o.result)));
    }
  }
  r.normalize();
  return r;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Static checks for Qiskit quantum programs", "qlint"};
  app.require_subcommand(1);
  RawOptions check_opts;
  RawOptions corpus_opts;
  corpus_opts.profile = "all";

  auto* check = app.add_subcommand("check", "Analyze Python files or directories");
  check->add_option("paths", check_opts.paths, "Files or directories")->required();
  add_common(check, check_opts);
  check->add_option("--format", check_opts.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "sarif"}));
  check->add_flag("--dump-flow", check_opts.dump_flow, "Print per-qubit event timelines");

  auto* corpus = app.add_subcommand("corpus", "Per-rule statistics over a directory");
  corpus->add_option("dir", corpus_opts.paths, "Corpus directory")->required()->expected(1);
  corpus->add_option("--stats", corpus_opts.stats, "CSV output file (stdout if omitted)");
  add_common(corpus, corpus_opts);

  auto* rules = app.add_subcommand("rules", "List the rule catalog");

  std::vector<std::string> argv_store{"qlint"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  Config config;
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    if (!rules->parsed()) config = to_config(check->parsed() ? check_opts : corpus_opts);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitClean;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitClean;
  } catch (const CLI::ParseError& e) {
    err << "qlint: " << e.what() << "\n" << "Run 'qlint --help' for usage.\n";
    return kExitError;
  }

  if (rules->parsed()) {
    print_rules(out);
    return kExitClean;
  }

  try {
    std::optional<qir::GateTable> custom;
    if (!config.gate_spec.empty()) custom = qir::GateTable::load(config.gate_spec);
    const auto& gates = custom ? *custom : qir::GateTable::builtin();
    auto files = collect_files(config.paths);

    std::ostringstream dump;
    auto r = analyze_files(files, config, gates, config.dump_flow ? &dump : nullptr);
    for (const auto& s : r.skipped) err << "qlint: skipped " << s.path << ":" << s.reason << "\n";

    if (corpus->parsed()) {
      auto csv = report::corpus_stats(r);
      if (config.stats_path.empty()) {
        out << csv;
      } else {
        std::ofstream f(config.stats_path, std::ios::binary);
        f << csv;
        if (!f) throw std::runtime_error(fmt::format("{}: cannot write file", config.stats_path));
      }
    } else {
      out << dump.str() << report::format(r, config.format);
    }
    return r.warning_count() > 0 ? kExitWarnings : kExitClean;
  } catch (const std::exception& e) {
    err << "qlint: " << e.what() << "\n";
    return kExitError;
  }
}

}  // namespace qlint::cli
