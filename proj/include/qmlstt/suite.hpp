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

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qmlstt/corpus.hpp"
#include "qmlstt/search.hpp"

namespace qml {

struct SuiteOptions {
  SearchBounds bounds;
  std::string filter = "*";  // glob over entry ids
  bool experimental = false;  // also check emit-only entries
  unsigned jobs = 1;          // worker threads
};

struct EntryResult {
  const SuiteEntry* entry = nullptr;
  Classification result;
  bool skipped = false;  // emit-only entry without --experimental
  bool match = false;
  double seconds = 0.0;
  std::string note;
};

struct SuiteReport {
  SuiteOptions options;
  std::vector<EntryResult> entries;  // corpus order
  int matched = 0;
  int mismatched = 0;
  int skipped = 0;
};

inline constexpr const char* kReportSchema = "qmlstt-suite-report";
inline constexpr int kReportSchemaVersion = 1;

// Shell-style glob with * and ?.
bool glob_match(std::string_view pattern, std::string_view text);

SuiteReport run_suite(const SuiteOptions& options);

std::string render_table(const SuiteReport& report);
// Timing fields are omitted when with_timing is false, which makes the
// output byte-identical across runs.
nlohmann::ordered_json report_json(const SuiteReport& report, bool with_timing = true);

}  // namespace qml
