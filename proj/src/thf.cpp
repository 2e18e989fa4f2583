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

#include "qmlstt/thf.hpp"

#include <cctype>
#include <set>
#include <sstream>

#include "qmlstt/embedding.hpp"
#include "qmlstt/error.hpp"

namespace qml {

std::string ThfDocument::str() const {
  std::ostringstream out;
  for (const auto& h : header) out << "%" << (h.empty() ? "" : " ") << h << "\n";
  if (!header.empty()) out << "\n";
  for (const auto& i : includes) out << "include('" << i << "').\n";
  if (!includes.empty()) out << "\n";
  for (const auto& f : formulas) {
    out << "thf(" << f.name << "," << f.role << ",(\n    " << f.text << " )).\n\n";
  }
  return out.str();
}

const ThfFormula* ThfDocument::find(std::string_view name) const {
  for (const auto& f : formulas) {
    if (f.name == name) return &f;
  }
  return nullptr;
}

std::string render(const Type& t) { return t.str(); }

std::string render(const Term& t) { return to_thf(t, true); }

std::string render(const Formula& f, const Signature& sig) { return render(translate(f, sig)); }

namespace {

std::string declaration(const std::string& name, const Type& t) {
  return name + ": " + render(t);
}

bool library_owns(const std::string& name) {
  return name == "mu" || DefinitionTable::standard().find(name) != nullptr;
}

std::string short_property(Property p) {
  switch (p) {
    case Property::Reflexive:
      return "refl";
    case Property::Symmetric:
      return "sym";
    case Property::Serial:
      return "serial";
    case Property::Transitive:
      return "trans";
    case Property::Euclidean:
      return "eucl";
    case Property::PartiallyFunctional:
      return "pfunc";
    case Property::Functional:
      return "func";
    case Property::WeaklyDense:
      return "wdense";
    case Property::WeaklyConnected:
      return "wconn";
    case Property::WeaklyDirected:
      return "wdir";
  }
  return "prop";
}

// wife(peter) -> wife_peter
std::string flat_name(const RelExpr& r) {
  if (r.kind() == RelExpr::Kind::Applied) return r.name() + "_" + flat_name(r.arg());
  std::string out = r.name();
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

Type symbol_type(const Signature::Symbol& s) {
  using SK = Signature::SymbolKind;
  switch (s.kind) {
    case SK::Relation:
      return rel_type();
    case SK::RelFun:
      return relfun_type();
    case SK::Pred:
      return pred_type(s.arity);
    case SK::PropConst:
      return prop_type();
    case SK::IndConst:
      return Type::iota();
  }
  return Type::o();
}

}  // namespace

ThfDocument emit_axiom_library() {
  ThfDocument doc;
  doc.header = {"Quantified multimodal logic embedded in simple type theory.",
                "Worlds have type mu; propositions are predicates over worlds."};
  doc.formulas.push_back({"mu_type", "type", "mu: $tType"});
  doc.formulas.push_back({std::string(kPastRelation) + "_type", "type",
                          declaration(kPastRelation, rel_type())});
  doc.formulas.push_back({std::string(kFutureRelation) + "_type", "type",
                          declaration(kFutureRelation, rel_type())});
  const auto& table = DefinitionTable::standard();
  for (const auto& d : table.entries()) {
    doc.formulas.push_back({d.name + "_type", "type", declaration(d.name, d.type)});
  }
  for (const auto& d : table.entries()) {
    doc.formulas.push_back(
        {d.name, "definition", render(logic::mk_eq(Term::constant(d.name, d.type), d.term))});
  }
  return doc;
}

ThfDocument emit_problem(const ProblemFile& p) {
  if (!p.conjecture) throw Error("problem " + p.name + " has no conjecture to emit");
  ThfDocument doc;
  doc.header = {"Problem: " + p.name};
  doc.includes = {kAxiomLibraryFile};
  std::set<std::string> names;
  const auto add = [&](std::string name, std::string role, std::string text) {
    std::string unique = name;
    for (int i = 2; names.count(unique) != 0; ++i) unique = name + "_" + std::to_string(i);
    names.insert(unique);
    doc.formulas.push_back({std::move(unique), std::move(role), std::move(text)});
  };
  for (const auto& s : p.signature.symbols()) {
    // The temporal relations are declared by the library.
    if (s.kind == Signature::SymbolKind::Relation &&
        (s.name == kPastRelation || s.name == kFutureRelation)) {
      continue;
    }
    if (library_owns(s.name)) {
      throw Error("symbol " + s.name + " collides with a name defined in " + kAxiomLibraryFile);
    }
    add(s.name, "type", declaration(s.name, symbol_type(s)));
  }
  for (const auto& f : p.frame_axioms) {
    add(short_property(f.property) + "_" + flat_name(f.rel), "axiom",
        render(translate_meta(MetaFormula::has_property(f.property, f.rel), p.signature)));
  }
  int counter = 0;
  const auto label = [&](const std::string& l) {
    ++counter;
    return l.empty() ? "ax" + std::to_string(counter) : l;
  };
  for (const auto& a : p.modal_axioms) {
    add(label(a.label), "axiom", render(translate_meta(MetaFormula::valid(a.body), p.signature)));
  }
  for (const auto& a : p.meta_axioms) {
    add(label(a.label), "axiom", render(translate_meta(a.body, p.signature)));
  }
  add("conj", "conjecture", render(translate_meta(*p.conjecture, p.signature)));
  return doc;
}

namespace {

bool ident_start(char c) { return std::islower(static_cast<unsigned char>(c)) != 0; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

// Lowercase identifiers of a formula text; `$`-prefixed words and variables
// are skipped.
std::vector<std::string> symbols_in(const std::string& text) {
  std::vector<std::string> out;
  for (size_t i = 0; i < text.size();) {
    const char c = text[i];
    if (c == '$' || std::isupper(static_cast<unsigned char>(c))) {
      ++i;
      while (i < text.size() && ident_char(text[i])) ++i;
    } else if (ident_start(c)) {
      size_t j = i;
      while (j < text.size() && ident_char(text[j])) ++j;
      out.push_back(text.substr(i, j - i));
      i = j;
    } else {
      ++i;
    }
  }
  return out;
}

}  // namespace

std::vector<std::string> lint(const ThfDocument& doc, const ThfDocument* library) {
  std::vector<std::string> issues;
  std::set<std::string> declared;
  if (library != nullptr) {
    for (const auto& f : library->formulas) {
      if (f.role == "type") declared.insert(symbols_in(f.text).front());
    }
  }
  std::set<std::string> names;
  bool seen_conjecture = false;
  for (const auto& f : doc.formulas) {
    const std::string where = "formula " + f.name + ": ";
    if (!names.insert(f.name).second) issues.push_back(where + "duplicate name");
    int depth = 0;
    for (char c : f.text) {
      if (c == '(') ++depth;
      if (c == ')' && --depth < 0) break;
    }
    if (depth != 0) issues.push_back(where + "unbalanced parentheses");
    if (seen_conjecture) issues.push_back(where + "appears after the conjecture");
    if (f.role == "conjecture") seen_conjecture = true;
    if (f.role != "type" && f.role != "definition" && f.role != "axiom" && f.role != "conjecture") {
      issues.push_back(where + "unknown role " + f.role);
    }
    auto syms = symbols_in(f.text);
    if (f.role == "type") {
      if (syms.empty()) {
        issues.push_back(where + "type declaration without a symbol");
        continue;
      }
      // The declared symbol itself, then the symbols of its type.
      const std::string self = syms.front();
      for (size_t i = 1; i < syms.size(); ++i) {
        if (declared.count(syms[i]) == 0) issues.push_back(where + syms[i] + " used before declaration");
      }
      if (!declared.insert(self).second) issues.push_back(where + self + " declared twice");
      continue;
    }
    for (const auto& s : syms) {
      if (declared.count(s) == 0) issues.push_back(where + s + " used before declaration");
    }
  }
  return issues;
}

std::string normalize_thf(std::string_view text) {
  std::string out;
  bool comment = false;
  bool quoted = false;
  for (char c : text) {
    if (comment) {
      if (c == '\n') comment = false;
      continue;
    }
    if (c == '\'') quoted = !quoted;
    if (!quoted && c == '%') {
      comment = true;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c)) != 0) continue;
    out += c;
  }
  return out;
}

}  // namespace qml
