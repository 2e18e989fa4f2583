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

#include "qmlstt/formula.hpp"

namespace qml {

// Parses a problem file. See docs/problem-format.md for the grammar.
//
// Throws ParseError carrying the line and column of the offending token.
ProblemFile parse_problem(std::string_view text, std::string default_name = "problem");

}  // namespace qml
