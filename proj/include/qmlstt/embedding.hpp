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

// One lambda-defined operator of the embedding.
struct Definition {
  std::string name;  // THF name, e.g. "mbox"
  Type type;
  Term term;  // closed, well-typed at `type`
};

// The operators of the embedding of quantified multimodal logic into simple
// type theory, in dependency order: the core connectives, the derived ones,
// validity, the ten relation properties and the temporal operators.
class DefinitionTable {
 public:
  static const DefinitionTable& standard();

  const std::vector<Definition>& entries() const noexcept { return entries_; }
  const Definition* find(std::string_view name) const;
  // The operator as a constant of its declared type. Throws Error if unknown.
  Term constant(std::string_view name) const;

 private:
  DefinitionTable();
  void add(std::string name, Term term);

  std::vector<Definition> entries_;
};

// Names of the designated temporal relations used by malways/msometime.
inline constexpr const char* kPastRelation = "past";
inline constexpr const char* kFutureRelation = "future";

// The defining lambda-term of an operator. Throws Error for unknown names.
Term definition_of(std::string_view name);

// "mtransitive" for Property::Transitive, and so on.
std::string property_operator(Property p);

// Translation into simple type theory. Modal formulas become terms of type
// mu > $o built from the operator constants (sugar maps to the derived
// operators); meta statements become terms of type $o. Free variables of the
// formula stay free variables of the term. Throws Error for symbols missing
// from the signature.
Term translate(const Formula& f, const Signature& sig);
Term translate_meta(const MetaFormula& m, const Signature& sig);
Term translate_rel(const RelExpr& r, const Signature& sig);

// Replaces every operator constant and defined connective by its definition
// and beta-eta-normalises. The result mentions only ~, |, =, !! , variables and
// signature constants.
Term expand(const Term& t);

// The modal axiom schema corresponding to a relation property, over `rel`.
Formula axiom_schema(Property p, const RelExpr& rel = RelExpr::constant("r"));

}  // namespace qml
