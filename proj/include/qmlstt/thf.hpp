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

#include "qmlstt/formula.hpp"
#include "qmlstt/term.hpp"

namespace qml {

struct ThfFormula {
  std::string name;
  std::string role;  // type, definition, axiom or conjecture
  std::string text;  // the part inside thf(name,role,( ... )).
  friend bool operator==(const ThfFormula&, const ThfFormula&) = default;
};

struct ThfDocument {
  std::vector<std::string> header;    // comment lines, without the leading %
  std::vector<std::string> includes;  // file names for include('...').
  std::vector<ThfFormula> formulas;

  std::string str() const;
  const ThfFormula* find(std::string_view name) const;
};

inline constexpr const char* kAxiomLibraryFile = "QML.ax";

// Type declarations for mu, the temporal relations and every operator,
// followed by one definition per operator.
ThfDocument emit_axiom_library();

// include('QML.ax'), signature declarations, one axiom per frame, modal and
// meta axiom, then the conjecture. Throws Error if p has no conjecture or
// declares a name owned by the library.
ThfDocument emit_problem(const ProblemFile& p);

std::string render(const Type& t);
std::string render(const Term& t);
std::string render(const Formula& f, const Signature& sig);

// Well-formedness problems (empty when fine): duplicate names, unbalanced
// parentheses, symbols used before their type declaration, misplaced
// conjecture. `library` supplies the declarations of included files.
std::vector<std::string> lint(const ThfDocument& doc, const ThfDocument* library = nullptr);

// Drops % comments and all whitespace, for layout-insensitive comparison.
std::string normalize_thf(std::string_view text);

}  // namespace qml
