// Copyright 2026 The qmlstt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// qmlstt: command-line front end.
//
//   qmlstt check FILE        bounded countermodel search
//   qmlstt emit FILE         write QML.ax and FILE's THF problem
//   qmlstt suite             run the bundled corpus
//   qmlstt prove FILE        hand the THF problem to an external prover
//
// Exit codes: 0 valid up to the bounds (or a model was found for a problem
// without conjecture), 1 countermodel found, 2 unknown or error.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qmlstt/corpus.hpp"
#include "qmlstt/error.hpp"
#include "qmlstt/model_json.hpp"
#include "qmlstt/parser.hpp"
#include "qmlstt/prover.hpp"
#include "qmlstt/search.hpp"
#include "qmlstt/suite.hpp"
#include "qmlstt/thf.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

constexpr int kExitValid = 0;
constexpr int kExitCounter = 1;
constexpr int kExitUnknown = 2;

// Reads a problem from disk, falling back to the bundled corpus by file name.
qml::ProblemFile load_problem(const std::string& path) {
  std::string text;
  std::string stem = fs::path(path).stem().string();
  if (fs::exists(path)) {
    std::ifstream in(path);
    if (!in) throw qml::Error("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  } else if (auto bundled = qml::corpus_file(fs::path(path).filename().string())) {
    text = std::string(*bundled);
  } else {
    throw qml::Error("no such file: " + path);
  }
  for (char& c : stem) {
    if (c == '.' || c == '-') c = '_';
  }
  return qml::parse_problem(text, stem);
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw qml::Error("cannot write " + path.string());
  out << text;
  if (!out) throw qml::Error("write failed: " + path.string());
}

struct Common {
  int max_worlds = 3;
  int max_domain = 2;
  double timeout = 0;  // seconds, 0 = none
  bool json = false;
  std::string out;

  qml::SearchBounds bounds() const {
    qml::SearchBounds b;
    b.max_worlds = max_worlds;
    b.max_domain = max_domain;
    if (timeout > 0) b.timeout = std::chrono::milliseconds(static_cast<long long>(timeout * 1000));
    return b;
  }
};

void add_bounds(CLI::App* cmd, Common& c) {
  cmd->add_option("--max-worlds", c.max_worlds, "Largest number of worlds to try")
      ->check(CLI::Range(1, 8));
  cmd->add_option("--max-domain", c.max_domain, "Largest individual domain to try")
      ->check(CLI::PositiveNumber);
}

ordered_json classification_json(const qml::Classification& c, const std::string& name) {
  ordered_json j;
  j["problem"] = name;
  j["status"] = qml::classification_long_name(c.kind);
  j["bounds"] = {{"max_worlds", c.bounds.max_worlds}, {"max_domain", c.bounds.max_domain}};
  j["reason"] = c.reason;
  j["witness"] = c.model ? qml::model_to_json(*c.model, c.witness_world) : ordered_json(nullptr);
  return j;
}

void print_model(std::ostream& os, const qml::KripkeModel& m, int witness) {
  os << "  worlds: " << m.worlds() << ", domain: " << m.domain() << "\n";
  const auto j = qml::model_to_json(m, witness);
  for (const char* key : {"relations", "relation_functions", "propositions", "predicates",
                          "individual_constants"}) {
    if (!j[key].empty()) os << "  " << key << ": " << j[key].dump() << "\n";
  }
  if (witness >= 0) os << "  falsified at world " << witness << "\n";
}

int cmd_check(const std::string& file, const Common& c) {
  const qml::ProblemFile p = load_problem(file);
  const qml::Classification r = qml::classify(p, c.bounds());
  if (c.json) {
    std::cout << classification_json(r, p.name).dump(2) << "\n";
  } else {
    std::cout << p.name << ": " << qml::classification_long_name(r.kind);
    if (r.kind == qml::Classification::Kind::ValidUpToBound) {
      std::cout << " (no countermodel with |W|<=" << c.max_worlds << ", |D|<=" << c.max_domain
                << ")";
    }
    if (!r.reason.empty()) std::cout << " (" << r.reason << ")";
    std::cout << "\n";
    if (r.model) print_model(std::cout, *r.model, r.witness_world);
  }
  switch (r.kind) {
    case qml::Classification::Kind::ValidUpToBound:
    case qml::Classification::Kind::Satisfiable:
      return kExitValid;
    case qml::Classification::Kind::CounterSatisfiable:
      return kExitCounter;
    case qml::Classification::Kind::Unknown:
      break;
  }
  return kExitUnknown;
}

// Writes QML.ax (unless present) and the problem file; returns the latter.
fs::path emit_to(const qml::ProblemFile& p, const fs::path& dir) {
  fs::create_directories(dir);
  const qml::ThfDocument lib = qml::emit_axiom_library();
  const qml::ThfDocument doc = qml::emit_problem(p);
  auto issues = qml::lint(lib);
  for (const auto& i : qml::lint(doc, &lib)) issues.push_back(i);
  if (!issues.empty()) {
    std::string msg = "emitted THF failed the lint:";
    for (const auto& i : issues) msg += "\n  " + i;
    throw qml::Error(msg);
  }
  const fs::path lib_path = dir / qml::kAxiomLibraryFile;
  if (!fs::exists(lib_path)) write_file(lib_path, lib.str());
  const fs::path out = dir / (p.name + ".p");
  write_file(out, doc.str());
  return out;
}

int cmd_emit(const std::string& file, const Common& c) {
  const qml::ProblemFile p = load_problem(file);
  const fs::path out = emit_to(p, c.out.empty() ? fs::path(".") : fs::path(c.out));
  std::cout << out.string() << "\n";
  return kExitValid;
}

int cmd_suite(const Common& c, const std::string& filter, bool experimental, unsigned jobs) {
  qml::SuiteOptions o;
  o.bounds = c.bounds();
  o.filter = filter;
  o.experimental = experimental;
  o.jobs = jobs;
  const qml::SuiteReport report = qml::run_suite(o);
  const std::string json = qml::report_json(report).dump(2) + "\n";
  if (!c.out.empty()) write_file(c.out, json);
  if (c.json) {
    std::cout << json;
  } else {
    std::cout << qml::render_table(report);
  }
  return report.mismatched == 0 ? kExitValid : kExitCounter;
}

std::string prover_template(const std::string& cli_template, const std::string& config,
                            const std::string& prover) {
  if (!cli_template.empty()) return cli_template;
  if (config.empty()) throw qml::Error("no prover command: pass --prover-cmd or --config");
  std::ifstream in(config);
  if (!in) throw qml::Error("cannot read " + config);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
    const auto& provers = j.at("provers");
    const std::string name = prover.empty() ? j.at("default").get<std::string>() : prover;
    return provers.at(name).get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw qml::Error("bad prover config " + config + ": " + e.what());
  }
}

int cmd_prove(const std::string& file, const Common& c, const std::string& cli_template,
              const std::string& config, const std::string& prover) {
  const std::string tpl = prover_template(cli_template, config, prover);
  const qml::ProblemFile p = load_problem(file);
  fs::path dir = c.out.empty() ? fs::temp_directory_path() / ("qmlstt-" + std::to_string(getpid()))
                               : fs::path(c.out);
  const fs::path problem = emit_to(p, dir);
  const auto timeout = std::chrono::milliseconds(
      static_cast<long long>((c.timeout > 0 ? c.timeout : 200.0) * 1000));
  const qml::SzsResult r = qml::run_prover(tpl, problem.string(), timeout);
  if (c.json) {
    ordered_json j;
    j["problem"] = p.name;
    j["status"] = qml::szs_name(r.status);
    j["wall_seconds"] = r.wall_seconds;
    j["exit_code"] = r.exit_code;
    j["excerpt"] = r.excerpt;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << p.name << ": " << qml::szs_name(r.status) << " (" << r.wall_seconds << " s)\n";
    if (r.status == qml::SzsResult::Status::Unknown && !r.excerpt.empty()) {
      std::cout << r.excerpt << "\n";
    }
  }
  switch (r.status) {
    case qml::SzsResult::Status::Theorem:
      return kExitValid;
    case qml::SzsResult::Status::CounterSatisfiable:
      return kExitCounter;
    default:
      return kExitUnknown;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantified multimodal logic in simple type theory: checker, THF emitter, suite"};
  app.require_subcommand(1);
  Common c;
  std::string file;
  std::string filter = "*";
  std::string prover_cmd;
  std::string config;
  std::string prover;
  bool experimental = false;
  unsigned jobs = 1;

  auto* check = app.add_subcommand("check", "Search for a countermodel within the bounds");
  check->add_option("file", file, "Problem file")->required();
  add_bounds(check, c);
  check->add_flag("--json", c.json, "Print the classification and witness as JSON");
  check->add_option("--timeout", c.timeout, "Give up after this many seconds");

  auto* emit = app.add_subcommand("emit", "Write QML.ax and the THF problem file");
  emit->add_option("file", file, "Problem file")->required();
  emit->add_option("--out", c.out, "Output directory (default: current directory)");

  auto* suite = app.add_subcommand("suite", "Run the bundled corpus");
  add_bounds(suite, c);
  suite->add_option("--filter", filter, "Glob over entry ids, e.g. 'corr.*'");
  suite->add_flag("--json", c.json, "Print the JSON report instead of the table");
  suite->add_option("--out", c.out, "Also write the JSON report to this file");
  suite->add_option("--timeout", c.timeout, "Per-entry time limit in seconds");
  suite->add_flag("--experimental", experimental, "Also check emit-only entries");
  suite->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  auto* prove = app.add_subcommand("prove", "Run an external THF prover on the problem");
  prove->add_option("file", file, "Problem file")->required();
  prove->add_option("--prover-cmd", prover_cmd, "Command template; {file} is the problem path");
  prove->add_option("--config", config, "JSON file with {\"provers\": {...}, \"default\": ...}");
  prove->add_option("--prover", prover, "Prover name from the config file");
  prove->add_option("--timeout", c.timeout, "Seconds before the prover is killed (default 200)");
  prove->add_option("--out", c.out, "Directory for the emitted files");
  prove->add_flag("--json", c.json, "Print the result as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUnknown;
  }

  try {
    if (*check) return cmd_check(file, c);
    if (*emit) return cmd_emit(file, c);
    if (*suite) return cmd_suite(c, filter, experimental, jobs);
    if (*prove) return cmd_prove(file, c, prover_cmd, config, prover);
  } catch (const std::exception& e) {
    std::cerr << "qmlstt: " << e.what() << "\n";
    return kExitUnknown;
  }
  return kExitUnknown;
}
