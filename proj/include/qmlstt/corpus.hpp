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

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qmlstt/formula.hpp"
#include "qmlstt/search.hpp"

namespace qml {

// A verdict reported for a historical prover run, e.g. THM(0.3) or TMO.
struct RecordedVerdict {
  std::string prover;
  std::string status;  // THM, CSA, TMO or UKN
  std::optional<double> seconds;
  friend bool operator==(const RecordedVerdict&, const RecordedVerdict&) = default;
};

struct SuiteEntry {
  std::string id;    // ex1, ex8a, corr.18.fwd, friends, ...
  std::string file;  // corpus file name
  ProblemFile problem;
  Classification::Kind expected;
  std::vector<RecordedVerdict> paper_observed;  // empty for entries without a table row
  std::string table_ref;                     // "Table 2 (8a)", or empty
  bool emit_only = false;                    // semantic check needs --experimental
};

inline constexpr const char* kReferenceProvers[] = {"IsabelleP", "LEO-II", "TPS", "IsabelleM"};

// The corpus files compiled into the library, by file name.
const std::vector<std::pair<std::string_view, std::string_view>>& corpus_files();
std::optional<std::string_view> corpus_file(std::string_view name);

// Every suite entry in table order, parsed once.
const std::vector<SuiteEntry>& suite_entries();
const SuiteEntry* find_entry(std::string_view id);

// Parses "THM(0.3)" / "TMO"; throws Error on anything else.
RecordedVerdict parse_verdict(std::string prover, std::string_view text);

}  // namespace qml
