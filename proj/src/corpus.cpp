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

#include "qmlstt/corpus.hpp"

#include <sstream>

#include "qmlstt/error.hpp"
#include "qmlstt/parser.hpp"

namespace qml {

namespace detail {
const std::vector<std::pair<std::string_view, std::string_view>>& embedded_corpus();
}

const std::vector<std::pair<std::string_view, std::string_view>>& corpus_files() {
  return detail::embedded_corpus();
}

std::optional<std::string_view> corpus_file(std::string_view name) {
  for (const auto& [n, text] : corpus_files()) {
    if (n == name) return text;
  }
  return std::nullopt;
}

RecordedVerdict parse_verdict(std::string prover, std::string_view text) {
  RecordedVerdict v{std::move(prover), std::string(text.substr(0, 3)), std::nullopt};
  if (v.status != "THM" && v.status != "CSA" && v.status != "TMO" && v.status != "UKN") {
    throw Error("bad prover verdict " + std::string(text));
  }
  if (text.size() > 3) {
    if (text[3] != '(' || text.back() != ')') throw Error("bad prover verdict " + std::string(text));
    v.seconds = std::stod(std::string(text.substr(4, text.size() - 5)));
  }
  return v;
}

namespace {

using K = Classification::Kind;

struct Row {
  const char* id;
  const char* file;
  K expected;
  const char* table_ref;
  const char* verdicts;  // one per prover, in kReferenceProvers order
  bool emit_only = false;
};

// Verdicts as printed in the published tables. Timings are historical.
const Row kRows[] = {
    {"ex1", "ex1.qml", K::ValidUpToBound, "Table 1 (1)", "THM(40.0) THM(0.0) THM(0.3) TMO"},
    {"ex2", "ex2.qml", K::ValidUpToBound, "Table 1 (2)", "THM(105.6) THM(0.0) THM(0.4) TMO"},
    {"ex3", "ex3.qml", K::ValidUpToBound, "Table 1 (3)", "THM(149.6) THM(0.0) THM(0.2) TMO"},
    {"ex4", "ex4.qml", K::ValidUpToBound, "Table 1 (4)", "THM(123.8) THM(0.0) THM(0.3) TMO"},
    {"ex5", "ex5.qml", K::ValidUpToBound, "Table 1 (5)", "TMO THM(0.1) THM(0.3) TMO"},
    {"ex6", "ex6.qml", K::ValidUpToBound, "Table 1 (6)", "TMO THM(0.1) THM(0.2) TMO"},

    {"ex7", "ex7.qml", K::CounterSatisfiable, "Table 2 (7)", "TMO UKN TMO CSA(1.6)"},
    {"ex7a", "ex7a.qml", K::ValidUpToBound, "Table 2 (7a)", "THM(79.6) THM(62.4) THM(0.2) TMO"},
    {"ex8", "ex8.qml", K::CounterSatisfiable, "Table 2 (8)", "UKN UKN TMO TMO"},
    {"ex8a", "ex8a.qml", K::CounterSatisfiable, "Table 2 (8a)", "UKN TMO TMO CSA(1.6)"},
    {"ex9", "ex9.qml", K::CounterSatisfiable, "Table 2 (9)", "UKN TMO TMO CSA(1.7)"},
    {"ex9a", "ex9a.qml", K::ValidUpToBound, "Table 2 (9a)", "UKN THM(64.9) THM(0.2) TMO"},
    {"ex10", "ex10.qml", K::CounterSatisfiable, "Table 2 (10)", "UKN UKN TMO CSA(1.5)"},
    {"ex10a", "ex10a.qml", K::ValidUpToBound, "Table 2 (10a)", "THM(78.9) THM(63.4) THM(0.2) TMO"},
    {"ex11", "ex11.qml", K::CounterSatisfiable, "Table 2 (11)", "UKN UKN TMO TMO"},
    {"ex11a", "ex11a.qml", K::CounterSatisfiable, "Table 2 (11a)", "TMO TMO UKN CSA(1.6)"},
    {"ex12", "ex12.qml", K::CounterSatisfiable, "Table 2 (12)", "TMO UKN TMO TMO"},
    {"ex12a", "ex12a.qml", K::CounterSatisfiable, "Table 2 (12a)", "UKN TMO TMO CSA(1.8)"},
    {"ex13", "ex13.qml", K::CounterSatisfiable, "Table 2 (13)", "UKN UKN TMO TMO"},
    {"ex13a", "ex13a.qml", K::CounterSatisfiable, "Table 2 (13a)", "UKN TMO TMO CSA(1.7)"},
    {"ex14", "ex14.qml", K::CounterSatisfiable, "Table 2 (14)", "UKN TMO TMO CSA(1.6)"},
    {"ex14a", "ex14a.qml", K::ValidUpToBound, "Table 2 (14a)", "UKN THM(72.5) THM(8.6) TMO"},

    {"corr.15.fwd", "corr.15.fwd.qml", K::ValidUpToBound, "Table 3 (15)=>(15a)", "THM(90.0) THM(0.0) THM(0.3) TMO"},
    {"corr.16.fwd", "corr.16.fwd.qml", K::ValidUpToBound, "Table 3 (16)=>(16a)", "THM(113.7) THM(0.0) THM(0.2) TMO"},
    {"corr.17.fwd", "corr.17.fwd.qml", K::ValidUpToBound, "Table 3 (17)=>(17a)", "THM(102.1) THM(0.0) THM(0.3) TMO"},
    {"corr.18.fwd", "corr.18.fwd.qml", K::ValidUpToBound, "Table 3 (18)=>(18a)", "THM(123.2) THM(0.0) THM(8.1) TMO"},
    {"corr.19.fwd", "corr.19.fwd.qml", K::ValidUpToBound, "Table 3 (19)=>(19a)", "THM(131.7) THM(0.0) THM(0.6) TMO"},
    {"corr.20.fwd", "corr.20.fwd.qml", K::ValidUpToBound, "Table 3 (20)=>(20a)", "THM(125.8) THM(0.0) THM(1.1) TMO"},
    {"corr.21.fwd", "corr.21.fwd.qml", K::ValidUpToBound, "Table 3 (21)=>(21a)", "THM(156.3) THM(0.0) TMO TMO"},
    {"corr.22.fwd", "corr.22.fwd.qml", K::ValidUpToBound, "Table 3 (22)=>(22a)", "THM(105.1) THM(0.0) THM(1.1) TMO"},
    {"corr.23.fwd", "corr.23.fwd.qml", K::ValidUpToBound, "Table 3 (23)=>(23a)", "THM(42.6) THM(0.0) THM(0.2) TMO"},
    {"corr.24.fwd", "corr.24.fwd.qml", K::ValidUpToBound, "Table 3 (24)=>(24a)", "THM(178.1) THM(0.0) THM(0.2) TMO"},
    {"corr.15.bwd", "corr.15.bwd.qml", K::ValidUpToBound, "Table 3 (15)<=(15a)", "THM(75.3) THM(0.0) THM(0.2) TMO"},
    {"corr.16.bwd", "corr.16.bwd.qml", K::ValidUpToBound, "Table 3 (16)<=(16a)", "UKN TMO THM(0.5) TMO"},
    {"corr.17.bwd", "corr.17.bwd.qml", K::ValidUpToBound, "Table 3 (17)<=(17a)", "THM(89.6) THM(0.0) THM(0.2) TMO"},
    {"corr.18.bwd", "corr.18.bwd.qml", K::ValidUpToBound, "Table 3 (18)<=(18a)", "TMO TMO TMO TMO"},
    {"corr.19.bwd", "corr.19.bwd.qml", K::ValidUpToBound, "Table 3 (19)<=(19a)", "UKN TMO TMO TMO"},
    {"corr.20.bwd", "corr.20.bwd.qml", K::ValidUpToBound, "Table 3 (20)<=(20a)", "TMO THM(6.2) THM(47.9) TMO"},
    {"corr.21.bwd", "corr.21.bwd.qml", K::ValidUpToBound, "Table 3 (21)<=(21a)", "TMO TMO THM(151.3) TMO"},
    {"corr.22.bwd", "corr.22.bwd.qml", K::ValidUpToBound, "Table 3 (22)<=(22a)", "TMO TMO TMO TMO"},
    {"corr.23.bwd", "corr.23.bwd.qml", K::ValidUpToBound, "Table 3 (23)<=(23a)", "UKN TMO TMO TMO"},
    {"corr.24.bwd", "corr.24.bwd.qml", K::ValidUpToBound, "Table 3 (24)<=(24a)", "THM(85.1) THM(0.1) THM(148.5) TMO"},

    {"friends.k", "friends.k.qml", K::ValidUpToBound, "Table 4 K(wife(peter))", "THM(89.4) THM(0.0) THM(0.3) TMO"},
    {"friends.t", "friends.t.qml", K::ValidUpToBound, "Table 4 T(wife(peter))", "THM(178.3) THM(0.0) TMO TMO"},
    {"friends", "friends.qml", K::ValidUpToBound, "Table 4 friends puzzle", "TMO THM(0.1) TMO TMO"},
    {"wise_men", "wise_men.qml", K::ValidUpToBound, "Table 4 wise men puzzle", "UKN THM(0.3) TMO TMO", true},

    {"temporal.always", "temporal.always.qml", K::ValidUpToBound, "", ""},
    {"temporal.duality", "temporal.duality.qml", K::ValidUpToBound, "", ""},
    {"consistency", "consistency.qml", K::Satisfiable, "", ""},
};

std::vector<SuiteEntry> build_entries() {
  std::vector<SuiteEntry> out;
  for (const Row& r : kRows) {
    auto text = corpus_file(r.file);
    if (!text) throw Error(std::string("corpus file missing: ") + r.file);
    SuiteEntry e{r.id, r.file, parse_problem(*text, r.id), r.expected, {}, r.table_ref, r.emit_only};
    std::istringstream in(r.verdicts);
    std::string word;
    size_t i = 0;
    while (in >> word) {
      if (i >= std::size(kReferenceProvers)) throw Error(std::string("too many verdicts for ") + r.id);
      e.paper_observed.push_back(parse_verdict(kReferenceProvers[i++], word));
    }
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

const std::vector<SuiteEntry>& suite_entries() {
  static const std::vector<SuiteEntry> entries = build_entries();
  return entries;
}

const SuiteEntry* find_entry(std::string_view id) {
  for (const auto& e : suite_entries()) {
    if (e.id == id) return &e;
  }
  return nullptr;
}

}  // namespace qml
