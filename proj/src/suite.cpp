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

#include "qmlstt/suite.hpp"

#include <atomic>
#include <chrono>
#include <iomanip>
#include <sstream>
#include <thread>

#include "qmlstt/model_json.hpp"

namespace qml {

bool glob_match(std::string_view pattern, std::string_view text) {
  // Iterative matcher with single-star backtracking.
  size_t p = 0, t = 0, star = std::string_view::npos, mark = 0;
  while (t < text.size()) {
    if (p < pattern.size() && (pattern[p] == '?' || pattern[p] == text[t])) {
      ++p;
      ++t;
    } else if (p < pattern.size() && pattern[p] == '*') {
      star = p++;
      mark = t;
    } else if (star != std::string_view::npos) {
      p = star + 1;
      t = ++mark;
    } else {
      return false;
    }
  }
  while (p < pattern.size() && pattern[p] == '*') ++p;
  return p == pattern.size();
}

namespace {

bool recorded_has(const SuiteEntry& e, std::string_view status) {
  for (const auto& v : e.paper_observed) {
    if (v.status == status) return true;
  }
  return false;
}

EntryResult run_entry(const SuiteEntry& e, const SuiteOptions& o) {
  EntryResult r;
  r.entry = &e;
  if (e.emit_only && !o.experimental) {
    r.skipped = true;
    r.note = "emit-only (use --experimental to check)";
    return r;
  }
  const auto start = std::chrono::steady_clock::now();
  r.result = classify(e.problem, o.bounds);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.match = r.result.kind == e.expected;
  if (!e.paper_observed.empty()) {
    if (r.result.kind == Classification::Kind::CounterSatisfiable && !recorded_has(e, "CSA")) {
      r.note = "internal result stronger than paper's provers";
    } else if (r.result.kind == Classification::Kind::ValidUpToBound && !recorded_has(e, "THM")) {
      r.note = "no paper prover proved this; bounded evidence only";
    }
  }
  if (r.result.kind == Classification::Kind::Unknown) {
    r.note = r.result.reason;
  }
  return r;
}

}  // namespace

SuiteReport run_suite(const SuiteOptions& options) {
  SuiteReport report;
  report.options = options;
  std::vector<const SuiteEntry*> selected;
  for (const auto& e : suite_entries()) {
    if (glob_match(options.filter, e.id)) selected.push_back(&e);
  }
  report.entries.resize(selected.size());
  std::atomic<size_t> next{0};
  const auto worker = [&] {
    for (size_t i = next++; i < selected.size(); i = next++) {
      report.entries[i] = run_entry(*selected[i], options);
    }
  };
  const unsigned jobs = std::max(1U, options.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (const auto& r : report.entries) {
    if (r.skipped) {
      ++report.skipped;
    } else if (r.match) {
      ++report.matched;
    } else {
      ++report.mismatched;
    }
  }
  return report;
}

namespace {

std::string recorded_summary(const SuiteEntry& e) {
  std::string out;
  for (const auto& v : e.paper_observed) {
    if (!out.empty()) out += " ";
    out += v.status;
  }
  return out.empty() ? "-" : out;
}

std::string witness_summary(const Classification& c) {
  if (!c.model) return "";
  std::string s = "|W|=" + std::to_string(c.model->worlds()) + " |D|=" + std::to_string(c.model->domain());
  if (c.witness_world >= 0) s += " w=" + std::to_string(c.witness_world);
  return s;
}

}  // namespace

std::string render_table(const SuiteReport& report) {
  std::ostringstream out;
  out << std::left << std::setw(18) << "entry" << std::setw(26) << "table" << std::setw(8)
      << "expect" << std::setw(8) << "got" << std::setw(7) << "ok" << std::setw(20) << "recorded"
      << std::setw(18) << "witness" << "note\n";
  for (const auto& r : report.entries) {
    const SuiteEntry& e = *r.entry;
    out << std::setw(18) << e.id << std::setw(26) << (e.table_ref.empty() ? "-" : e.table_ref)
        << std::setw(8) << classification_name(e.expected) << std::setw(8)
        << (r.skipped ? "-" : std::string(classification_name(r.result.kind))) << std::setw(7)
        << (r.skipped ? "skip" : (r.match ? "yes" : "NO")) << std::setw(20) << recorded_summary(e)
        << std::setw(18) << witness_summary(r.result) << r.note << "\n";
  }
  out << "\n"
      << report.matched << " matched, " << report.mismatched << " mismatched, " << report.skipped
      << " skipped (bounds |W|<=" << report.options.bounds.max_worlds
      << ", |D|<=" << report.options.bounds.max_domain << ")\n"
      << "THM* means valid up to the bounds, not a proof.\n";
  return out.str();
}

nlohmann::ordered_json report_json(const SuiteReport& report, bool with_timing) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["schema"] = kReportSchema;
  j["version"] = kReportSchemaVersion;
  j["bounds"] = {{"max_worlds", report.options.bounds.max_worlds},
                 {"max_domain", report.options.bounds.max_domain}};
  j["filter"] = report.options.filter;
  j["experimental"] = report.options.experimental;
  ordered_json entries = ordered_json::array();
  for (const auto& r : report.entries) {
    const SuiteEntry& e = *r.entry;
    ordered_json x;
    x["id"] = e.id;
    x["file"] = e.file;
    x["table_ref"] = e.table_ref;
    x["expected"] = classification_long_name(e.expected);
    if (r.skipped) {
      x["status"] = nullptr;
    } else {
      x["status"] = classification_long_name(r.result.kind);
    }
    x["skipped"] = r.skipped;
    x["match"] = r.match;
    x["reason"] = r.result.reason;
    x["witness"] = r.result.model ? model_to_json(*r.result.model, r.result.witness_world)
                                  : ordered_json(nullptr);
    ordered_json recorded = ordered_json::array();
    for (const auto& v : e.paper_observed) {
      ordered_json pv;
      pv["prover"] = v.prover;
      pv["status"] = v.status;
      pv["seconds"] = v.seconds ? ordered_json(*v.seconds) : ordered_json(nullptr);
      recorded.push_back(pv);
    }
    x["paper_observed"] = recorded;
    x["note"] = r.note;
    if (with_timing) x["seconds"] = r.seconds;
    entries.push_back(x);
  }
  j["entries"] = entries;
  j["summary"] = {{"total", report.entries.size()},
                  {"matched", report.matched},
                  {"mismatched", report.mismatched},
                  {"skipped", report.skipped}};
  return j;
}

}  // namespace qml
