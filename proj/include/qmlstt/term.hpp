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

#include <initializer_list>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qmlstt/type.hpp"

namespace qml {

// Typed lambda terms of simple type theory.
//
// Terms are locally nameless: variables bound by a lambda are de Bruijn
// indices, free variables and constants carry a name and a type. Binder names
// survive only as printing hints, so operator== is alpha-equivalence.
//
// Public constructors never produce loose bound indices; `lam` abstracts a
// named free variable of the body.
class Term {
 public:
  enum class Kind { Const, Var, Bound, Lam, App };

  static Term constant(std::string name, Type type);
  static Term var(std::string name, Type type);
  // ^[name: type]: body, binding every free occurrence of var(name, type).
  static Term lam(const std::string& name, const Type& type, const Term& body);
  static Term app(Term fun, Term arg);
  static Term app(Term fun, std::initializer_list<Term> args);
  static Term app(Term fun, std::span<const Term> args);

  // Raw locally nameless constructors. Used by the kernel itself and by code
  // that walks under binders; results may contain loose indices.
  static Term bound(int index);
  static Term raw_lam(std::string hint, Type type, Term body);

  Kind kind() const noexcept { return node_->kind; }
  bool is_const() const noexcept { return kind() == Kind::Const; }
  bool is_var() const noexcept { return kind() == Kind::Var; }
  bool is_bound() const noexcept { return kind() == Kind::Bound; }
  bool is_lam() const noexcept { return kind() == Kind::Lam; }
  bool is_app() const noexcept { return kind() == Kind::App; }

  // Const/Var name, or the binder hint of a Lam.
  const std::string& name() const noexcept { return node_->name; }
  // Const/Var annotation, or the binder type of a Lam.
  const Type& type() const noexcept { return node_->type; }
  int index() const noexcept { return node_->index; }
  Term body() const;  // Lam
  Term fun() const;   // App
  Term arg() const;   // App

  // One more than the largest loose de Bruijn index (0 for locally closed terms).
  int loose_bound() const noexcept { return node_->loose; }

  // Splits `f a1 ... an` into f and [a1, ..., an].
  std::pair<Term, std::vector<Term>> spine() const;

  // Type computed from the annotations alone (no context). Throws TypeError.
  Type infer() const;

  friend bool operator==(const Term& a, const Term& b) noexcept;
  friend bool operator!=(const Term& a, const Term& b) noexcept { return !(a == b); }

  // THF-style rendering used in diagnostics: ^ [X: mu]: (f @ X).
  std::string str() const;

 private:
  struct Node {
    Kind kind;
    std::string name;
    Type type;
    int index = 0;
    int loose = 0;
    std::shared_ptr<const Node> left;
    std::shared_ptr<const Node> right;
  };
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  friend bool equal_nodes(const Node* a, const Node* b) noexcept;

  std::shared_ptr<const Node> node_;
};

// Variable typing context; later entries shadow earlier ones.
class TypingContext {
 public:
  TypingContext() = default;
  TypingContext(std::initializer_list<std::pair<std::string, Type>> entries);

  TypingContext extend(std::string name, Type type) const;
  void bind(std::string name, Type type);
  std::optional<Type> lookup(const std::string& name) const;

 private:
  std::vector<std::pair<std::string, Type>> entries_;
};

// The unique type of `t` under `ctx`. Free variables must be bound in `ctx`
// at their annotated type.
Type type_of(const Term& t, const TypingContext& ctx = {});

// Capture-avoiding substitution of `s` for the free variable named `x`.
Term substitute(const Term& t, const std::string& x, const Term& s);

// Full beta-normal form by leftmost-outermost reduction, then eta-contraction.
Term beta_normalize(const Term& t);
Term eta_contract(const Term& t);
Term beta_eta_normalize(const Term& t);

bool alpha_eq(const Term& a, const Term& b);

// Free variables as (name, type) pairs.
std::set<std::pair<std::string, Type>> free_vars(const Term& t);
// Constants as (name, type) pairs.
std::set<std::pair<std::string, Type>> constants(const Term& t);

// THF0 rendering: `^ [X: mu]:` binders, `!`/`?` quantifiers with merged
// binder lists, `@` application with parenthesised non-atomic arguments.
// With `top_level` the outermost parentheses of an application or binary
// connective are dropped (the caller wraps the formula).
std::string to_thf(const Term& t, bool top_level = false);

// Lower-level locally nameless operations.
Term shift(const Term& t, int delta, int cutoff = 0);
// Body of a lambda with index 0 replaced by `s`.
Term instantiate(const Term& body, const Term& s);

// Logical constants of the kernel. The primitives are negation, disjunction,
// and the type-indexed families of equality and Pi; the rest are defined
// connectives that `expand` unfolds into the primitives.
namespace logic {

inline constexpr const char* kNot = "~";
inline constexpr const char* kOr = "|";
inline constexpr const char* kEq = "=";
inline constexpr const char* kPi = "!!";
inline constexpr const char* kAnd = "&";
inline constexpr const char* kImplies = "=>";
inline constexpr const char* kIff = "<=>";
inline constexpr const char* kSigma = "??";
inline constexpr const char* kTrue = "$true";
inline constexpr const char* kFalse = "$false";

Term not_const();
Term or_const();
Term eq_const(const Type& alpha);
Term pi_const(const Type& alpha);
Term and_const();
Term implies_const();
Term iff_const();
Term sigma_const(const Type& alpha);
Term true_const();
Term false_const();

bool is_primitive(const Term& c);  // ~ | = !!
bool is_derived(const Term& c);    // & => <=> ?? $true $false
bool is_logical(const Term& c);

Term mk_not(Term a);
Term mk_or(Term a, Term b);
Term mk_and(Term a, Term b);
Term mk_implies(Term a, Term b);
Term mk_iff(Term a, Term b);
Term mk_eq(Term a, Term b);
// !! (^[name: type]: body) and ?? (^[name: type]: body)
Term mk_forall(const std::string& name, const Type& type, const Term& body);
Term mk_exists(const std::string& name, const Type& type, const Term& body);

// Unfolding of the defined connectives into the primitives; `true` is
// realised as (^[X:$o]: X) = (^[X:$o]: X).
Term definition_of_derived(const Term& c);

}  // namespace logic

}  // namespace qml
