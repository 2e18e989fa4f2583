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

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace qml {

// Properties of accessibility relations with a modal correspondent.
enum class Property {
  Reflexive,
  Symmetric,
  Serial,
  Transitive,
  Euclidean,
  PartiallyFunctional,
  Functional,
  WeaklyDense,
  WeaklyConnected,
  WeaklyDirected,
};

inline constexpr Property kAllProperties[] = {
    Property::Reflexive,   Property::Symmetric,           Property::Serial,
    Property::Transitive,  Property::Euclidean,           Property::PartiallyFunctional,
    Property::Functional,  Property::WeaklyDense,         Property::WeaklyConnected,
    Property::WeaklyDirected,
};

std::string_view property_name(Property p);  // "weakly_dense"
std::optional<Property> property_from_name(std::string_view name);

// Relation expression: a relation constant, a quantified relation variable,
// or a relation functor applied to a relation expression (wife(peter)).
class RelExpr {
 public:
  enum class Kind { Const, Var, Applied };

  static RelExpr constant(std::string name);
  static RelExpr variable(std::string name);
  static RelExpr applied(std::string functor, RelExpr arg);

  Kind kind() const noexcept { return kind_; }
  // Relation/variable name, or the functor of an application.
  const std::string& name() const noexcept { return name_; }
  const RelExpr& arg() const;

  bool ground() const;  // no relation variables
  std::string str() const;  // wife(peter)

  friend bool operator==(const RelExpr& a, const RelExpr& b);
  friend bool operator!=(const RelExpr& a, const RelExpr& b) { return !(a == b); }
  friend bool operator<(const RelExpr& a, const RelExpr& b) { return a.str() < b.str(); }

 private:
  Kind kind_ = Kind::Const;
  std::string name_;
  std::shared_ptr<const RelExpr> arg_;
};

// Argument of an atom: an individual variable or an individual constant.
struct IndTerm {
  bool is_var = true;
  std::string name;
  friend bool operator==(const IndTerm&, const IndTerm&) = default;
};

// Quantified multimodal formula. The core nodes are PropVar, PropConst, Atom,
// Not, Or, Box, ForallInd, ForallProp and Top; the rest is sugar removed by
// desugar().
class Formula {
 public:
  enum class Kind {
    PropVar,
    PropConst,
    Atom,
    Not,
    Or,
    Box,
    ForallInd,
    ForallProp,
    Top,
    And,
    Impl,
    Iff,
    Bot,
    Dia,
    ExistsInd,
    ExistsProp,
    Always,
    Sometime,
  };

  static Formula prop_var(std::string name);
  static Formula prop_const(std::string name);
  static Formula atom(std::string pred, std::vector<IndTerm> args);
  static Formula top();
  static Formula bot();
  static Formula neg(Formula a);
  static Formula disj(Formula a, Formula b);
  static Formula conj(Formula a, Formula b);
  static Formula impl(Formula a, Formula b);
  static Formula iff(Formula a, Formula b);
  static Formula box(RelExpr r, Formula a);
  static Formula dia(RelExpr r, Formula a);
  static Formula forall_ind(std::string var, Formula a);
  static Formula exists_ind(std::string var, Formula a);
  static Formula forall_prop(std::string var, Formula a);
  static Formula exists_prop(std::string var, Formula a);
  static Formula always(Formula a);
  static Formula sometime(Formula a);

  Kind kind() const noexcept { return node_->kind; }
  bool is_core() const noexcept { return kind() <= Kind::Top; }
  // Variable/constant/predicate name or the bound variable of a quantifier.
  const std::string& name() const noexcept { return node_->name; }
  const std::vector<IndTerm>& args() const noexcept { return node_->args; }
  const RelExpr& rel() const noexcept { return node_->rel; }
  const Formula& sub(size_t i = 0) const { return node_->subs.at(i); }
  size_t sub_count() const noexcept { return node_->subs.size(); }

  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

  // Problem-file syntax, e.g. `box r (=> A B)`.
  std::string str() const;

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::vector<IndTerm> args;
    RelExpr rel;
    std::vector<Formula> subs;
  };
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Formula make(Node n);

  std::shared_ptr<const Node> node_;
};

// Meta-level statements: validity, relation properties, boolean structure and
// quantification over accessibility relations.
class MetaFormula {
 public:
  enum class Kind { Valid, HasProperty, Not, And, Or, Implies, Iff, ExistsRel, ForallRel };

  static MetaFormula valid(Formula f);
  static MetaFormula has_property(Property p, RelExpr r);
  static MetaFormula neg(MetaFormula a);
  static MetaFormula conj(MetaFormula a, MetaFormula b);
  static MetaFormula disj(MetaFormula a, MetaFormula b);
  static MetaFormula implies(MetaFormula a, MetaFormula b);
  static MetaFormula iff(MetaFormula a, MetaFormula b);
  static MetaFormula exists_rel(std::string var, MetaFormula body);
  static MetaFormula forall_rel(std::string var, MetaFormula body);

  Kind kind() const noexcept { return node_->kind; }
  const Formula& formula() const;  // Valid
  Property property() const noexcept { return node_->property; }
  const RelExpr& rel() const noexcept { return node_->rel; }
  const std::string& var() const noexcept { return node_->var; }
  const MetaFormula& sub(size_t i = 0) const { return node_->subs.at(i); }
  size_t sub_count() const noexcept { return node_->subs.size(); }

  friend bool operator==(const MetaFormula& a, const MetaFormula& b);
  friend bool operator!=(const MetaFormula& a, const MetaFormula& b) { return !(a == b); }

  std::string str() const;

 private:
  struct Node {
    Kind kind;
    std::optional<Formula> formula;
    Property property = Property::Reflexive;
    RelExpr rel;
    std::string var;
    std::vector<MetaFormula> subs;
  };
  explicit MetaFormula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static MetaFormula make(Node n);

  std::shared_ptr<const Node> node_;
};

// Symbols of a problem, kept in declaration order.
class Signature {
 public:
  enum class SymbolKind { Relation, RelFun, Pred, PropConst, IndConst };
  struct Symbol {
    std::string name;
    SymbolKind kind;
    int arity = 0;  // predicates only
    friend bool operator==(const Symbol&, const Symbol&) = default;
  };

  // Throws Error on a duplicate name.
  void add(std::string name, SymbolKind kind, int arity = 0);

  const std::vector<Symbol>& symbols() const noexcept { return symbols_; }
  const Symbol* find(std::string_view name) const;
  std::vector<std::string> names_of(SymbolKind kind) const;
  bool has_individuals() const;  // predicates or individual constants

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  std::vector<Symbol> symbols_;
};

struct FrameAxiom {
  Property property;
  RelExpr rel;
  friend bool operator==(const FrameAxiom&, const FrameAxiom&) = default;
};

template <typename T>
struct Labeled {
  std::string label;  // empty: generated on output
  T body;
  friend bool operator==(const Labeled&, const Labeled&) = default;
};

enum class Expectation { Theorem, CounterSatisfiable, Satisfiable, Unknown };

std::string_view expectation_name(Expectation e);

struct ProblemFile {
  std::string name;
  Signature signature;
  std::vector<FrameAxiom> frame_axioms;
  std::vector<Labeled<Formula>> modal_axioms;  // asserted valid
  std::vector<Labeled<MetaFormula>> meta_axioms;
  std::optional<MetaFormula> conjecture;
  std::optional<Expectation> expected;

  friend bool operator==(const ProblemFile&, const ProblemFile&) = default;
};

// Unfolds every sugar node into the core connectives. Top stays primitive;
// always/sometime unfold over the relations `past` and `future`.
Formula desugar(const Formula& f);
MetaFormula desugar(const MetaFormula& m);

// Free symbols: signature names and unbound variables.
std::set<std::string> free_symbols(const Formula& f);
std::set<std::string> free_symbols(const MetaFormula& m);
std::set<std::string> free_symbols(const RelExpr& r);

// Problem-file rendering; parse_problem(print_problem(p)) == p.
std::string print_problem(const ProblemFile& p);

}  // namespace qml
