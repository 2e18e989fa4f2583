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

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "qmlstt/formula.hpp"
#include "qmlstt/model.hpp"

namespace qml {

struct SearchBounds {
  int max_worlds = 3;
  int max_domain = 2;
  EvalLimits limits;
  // Wall-clock budget; exhausting it yields Unknown.
  std::optional<std::chrono::milliseconds> timeout;
};

struct Classification {
  enum class Kind { ValidUpToBound, CounterSatisfiable, Satisfiable, Unknown };

  Kind kind = Kind::Unknown;
  SearchBounds bounds;
  std::optional<KripkeModel> model;
  int witness_world = -1;  // least falsifying world of a `valid` conjecture
  std::string reason;      // Unknown only
  std::uint64_t models_examined = 0;
};

std::string_view classification_name(Classification::Kind k);  // THM-style short names
std::string_view classification_long_name(Classification::Kind k);

// Least model (in enumeration order) that satisfies every axiom of p and
// falsifies its conjecture. ValidUpToBound when none exists within b.
Classification find_countermodel(const ProblemFile& p, const SearchBounds& b = {});

// Least model satisfying every axiom (and the conjecture, when present).
// Satisfiable, or Unknown when none exists within b.
Classification find_model(const ProblemFile& p, const SearchBounds& b = {});

// Dispatches on the problem: countermodel search when a conjecture is
// present, model finding otherwise.
Classification classify(const ProblemFile& p, const SearchBounds& b = {});

}  // namespace qml
