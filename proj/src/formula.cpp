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

#include "qmlstt/formula.hpp"

#include <array>
#include <sstream>

#include "qmlstt/error.hpp"

namespace qml {

namespace {

constexpr std::array<std::string_view, 10> kPropertyNames = {
    "reflexive",  "symmetric",    "serial",      "transitive",       "euclidean",
    "partially_functional", "functional", "weakly_dense", "weakly_connected", "weakly_directed",
};

}  // namespace

std::string_view property_name(Property p) { return kPropertyNames[static_cast<size_t>(p)]; }

std::optional<Property> property_from_name(std::string_view name) {
  for (size_t i = 0; i < kPropertyNames.size(); ++i) {
    if (kPropertyNames[i] == name) return static_cast<Property>(i);
  }
  return std::nullopt;
}

std::string_view expectation_name(Expectation e) {
  switch (e) {
    case Expectation::Theorem:
      return "theorem";
    case Expectation::CounterSatisfiable:
      return "csa";
    case Expectation::Satisfiable:
      return "sat";
    case Expectation::Unknown:
      return "unknown";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// RelExpr

RelExpr RelExpr::constant(std::string name) {
  RelExpr r;
  r.kind_ = Kind::Const;
  r.name_ = std::move(name);
  return r;
}

RelExpr RelExpr::variable(std::string name) {
  RelExpr r;
  r.kind_ = Kind::Var;
  r.name_ = std::move(name);
  return r;
}

RelExpr RelExpr::applied(std::string functor, RelExpr arg) {
  RelExpr r;
  r.kind_ = Kind::Applied;
  r.name_ = std::move(functor);
  r.arg_ = std::make_shared<const RelExpr>(std::move(arg));
  return r;
}

const RelExpr& RelExpr::arg() const {
  if (kind_ != Kind::Applied) throw Error("arg() of unapplied relation " + name_);
  return *arg_;
}

bool RelExpr::ground() const {
  switch (kind_) {
    case Kind::Const:
      return true;
    case Kind::Var:
      return false;
    case Kind::Applied:
      return arg_->ground();
  }
  return false;
}

std::string RelExpr::str() const {
  if (kind_ == Kind::Applied) return name_ + "(" + arg_->str() + ")";
  return name_;
}

bool operator==(const RelExpr& a, const RelExpr& b) {
  if (a.kind_ != b.kind_ || a.name_ != b.name_) return false;
  if (a.kind_ != RelExpr::Kind::Applied) return true;
  return *a.arg_ == *b.arg_;
}

// ---------------------------------------------------------------------------
// Formula

Formula Formula::make(Node n) { return Formula(std::make_shared<const Node>(std::move(n))); }

Formula Formula::prop_var(std::string name) { return make({Kind::PropVar, std::move(name)}); }
Formula Formula::prop_const(std::string name) { return make({Kind::PropConst, std::move(name)}); }
Formula Formula::atom(std::string pred, std::vector<IndTerm> args) {
  return make({Kind::Atom, std::move(pred), std::move(args)});
}
Formula Formula::top() { return make({Kind::Top}); }
Formula Formula::bot() { return make({Kind::Bot}); }
Formula Formula::neg(Formula a) { return make({Kind::Not, {}, {}, {}, {std::move(a)}}); }
Formula Formula::disj(Formula a, Formula b) {
  return make({Kind::Or, {}, {}, {}, {std::move(a), std::move(b)}});
}
Formula Formula::conj(Formula a, Formula b) {
  return make({Kind::And, {}, {}, {}, {std::move(a), std::move(b)}});
}
Formula Formula::impl(Formula a, Formula b) {
  return make({Kind::Impl, {}, {}, {}, {std::move(a), std::move(b)}});
}
Formula Formula::iff(Formula a, Formula b) {
  return make({Kind::Iff, {}, {}, {}, {std::move(a), std::move(b)}});
}
Formula Formula::box(RelExpr r, Formula a) {
  return make({Kind::Box, {}, {}, std::move(r), {std::move(a)}});
}
Formula Formula::dia(RelExpr r, Formula a) {
  return make({Kind::Dia, {}, {}, std::move(r), {std::move(a)}});
}
Formula Formula::forall_ind(std::string var, Formula a) {
  return make({Kind::ForallInd, std::move(var), {}, {}, {std::move(a)}});
}
Formula Formula::exists_ind(std::string var, Formula a) {
  return make({Kind::ExistsInd, std::move(var), {}, {}, {std::move(a)}});
}
Formula Formula::forall_prop(std::string var, Formula a) {
  return make({Kind::ForallProp, std::move(var), {}, {}, {std::move(a)}});
}
Formula Formula::exists_prop(std::string var, Formula a) {
  return make({Kind::ExistsProp, std::move(var), {}, {}, {std::move(a)}});
}
Formula Formula::always(Formula a) { return make({Kind::Always, {}, {}, {}, {std::move(a)}}); }
Formula Formula::sometime(Formula a) {
  return make({Kind::Sometime, {}, {}, {}, {std::move(a)}});
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  return x.kind == y.kind && x.name == y.name && x.args == y.args && x.rel == y.rel &&
         x.subs == y.subs;
}

namespace {

std::string wrap(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::PropVar:
    case Formula::Kind::PropConst:
    case Formula::Kind::Atom:
    case Formula::Kind::Top:
    case Formula::Kind::Bot:
      return f.str();
    default:
      return "(" + f.str() + ")";
  }
}

std::string wrap(const MetaFormula& m) {
  if (m.kind() == MetaFormula::Kind::HasProperty) return m.str();
  return "(" + m.str() + ")";
}

}  // namespace

std::string Formula::str() const {
  switch (kind()) {
    case Kind::PropVar:
    case Kind::PropConst:
      return name();
    case Kind::Atom: {
      std::string s = name() + "(";
      for (size_t i = 0; i < args().size(); ++i) s += (i ? ", " : "") + args()[i].name;
      return s + ")";
    }
    case Kind::Top:
      return "top";
    case Kind::Bot:
      return "bot";
    case Kind::Not:
      return "~ " + wrap(sub());
    case Kind::Or:
      return "| " + wrap(sub(0)) + " " + wrap(sub(1));
    case Kind::And:
      return "& " + wrap(sub(0)) + " " + wrap(sub(1));
    case Kind::Impl:
      return "=> " + wrap(sub(0)) + " " + wrap(sub(1));
    case Kind::Iff:
      return "<=> " + wrap(sub(0)) + " " + wrap(sub(1));
    case Kind::Box:
      return "box " + rel().str() + " " + wrap(sub());
    case Kind::Dia:
      return "dia " + rel().str() + " " + wrap(sub());
    case Kind::ForallInd:
      return "forall_ind " + name() + ". " + sub().str();
    case Kind::ExistsInd:
      return "exists_ind " + name() + ". " + sub().str();
    case Kind::ForallProp:
      return "forall_prop " + name() + ". " + sub().str();
    case Kind::ExistsProp:
      return "exists_prop " + name() + ". " + sub().str();
    case Kind::Always:
      return "always " + wrap(sub());
    case Kind::Sometime:
      return "sometime " + wrap(sub());
  }
  return {};
}

// ---------------------------------------------------------------------------
// MetaFormula

MetaFormula MetaFormula::make(Node n) {
  return MetaFormula(std::make_shared<const Node>(std::move(n)));
}

MetaFormula MetaFormula::valid(Formula f) {
  Node n{Kind::Valid};
  n.formula = std::move(f);
  return make(std::move(n));
}

MetaFormula MetaFormula::has_property(Property p, RelExpr r) {
  Node n{Kind::HasProperty};
  n.property = p;
  n.rel = std::move(r);
  return make(std::move(n));
}

MetaFormula MetaFormula::neg(MetaFormula a) {
  Node n{Kind::Not};
  n.subs = {std::move(a)};
  return make(std::move(n));
}

namespace {

MetaFormula::Kind binary_kind(int which) {
  constexpr MetaFormula::Kind kinds[] = {MetaFormula::Kind::And, MetaFormula::Kind::Or,
                                         MetaFormula::Kind::Implies, MetaFormula::Kind::Iff};
  return kinds[which];
}

}  // namespace

MetaFormula MetaFormula::conj(MetaFormula a, MetaFormula b) {
  Node n{binary_kind(0)};
  n.subs = {std::move(a), std::move(b)};
  return make(std::move(n));
}

MetaFormula MetaFormula::disj(MetaFormula a, MetaFormula b) {
  Node n{binary_kind(1)};
  n.subs = {std::move(a), std::move(b)};
  return make(std::move(n));
}

MetaFormula MetaFormula::implies(MetaFormula a, MetaFormula b) {
  Node n{binary_kind(2)};
  n.subs = {std::move(a), std::move(b)};
  return make(std::move(n));
}

MetaFormula MetaFormula::iff(MetaFormula a, MetaFormula b) {
  Node n{binary_kind(3)};
  n.subs = {std::move(a), std::move(b)};
  return make(std::move(n));
}

MetaFormula MetaFormula::exists_rel(std::string var, MetaFormula body) {
  Node n{Kind::ExistsRel};
  n.var = std::move(var);
  n.subs = {std::move(body)};
  return make(std::move(n));
}

MetaFormula MetaFormula::forall_rel(std::string var, MetaFormula body) {
  Node n{Kind::ForallRel};
  n.var = std::move(var);
  n.subs = {std::move(body)};
  return make(std::move(n));
}

const Formula& MetaFormula::formula() const {
  if (!node_->formula) throw Error("formula() of non-validity statement");
  return *node_->formula;
}

bool operator==(const MetaFormula& a, const MetaFormula& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  return x.kind == y.kind && x.formula == y.formula && x.property == y.property &&
         x.rel == y.rel && x.var == y.var && x.subs == y.subs;
}

std::string MetaFormula::str() const {
  switch (kind()) {
    case Kind::Valid:
      return "valid " + wrap(formula());
    case Kind::HasProperty:
      return std::string(property_name(property())) + " " + rel().str();
    case Kind::Not:
      return "~ " + wrap(sub());
    case Kind::And:
      return "& " + wrap(sub(0)) + " " + wrap(sub(1));
    case Kind::Or:
      return "| " + wrap(sub(0)) + " " + wrap(sub(1));
    case Kind::Implies:
      return "=> " + wrap(sub(0)) + " " + wrap(sub(1));
    case Kind::Iff:
      return "<=> " + wrap(sub(0)) + " " + wrap(sub(1));
    case Kind::ExistsRel:
      return "exists " + var() + ". " + sub().str();
    case Kind::ForallRel:
      return "forall " + var() + ". " + sub().str();
  }
  return {};
}

// ---------------------------------------------------------------------------
// Signature

void Signature::add(std::string name, SymbolKind kind, int arity) {
  if (find(name) != nullptr) throw Error("duplicate symbol " + name);
  symbols_.push_back({std::move(name), kind, arity});
}

const Signature::Symbol* Signature::find(std::string_view name) const {
  for (const auto& s : symbols_) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

std::vector<std::string> Signature::names_of(SymbolKind kind) const {
  std::vector<std::string> out;
  for (const auto& s : symbols_) {
    if (s.kind == kind) out.push_back(s.name);
  }
  return out;
}

bool Signature::has_individuals() const {
  for (const auto& s : symbols_) {
    if (s.kind == SymbolKind::Pred || s.kind == SymbolKind::IndConst) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// desugar / free symbols

Formula desugar(const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::PropVar:
    case K::PropConst:
    case K::Atom:
    case K::Top:
      return f;
    case K::Bot:
      return Formula::neg(Formula::top());
    case K::Not:
      return Formula::neg(desugar(f.sub()));
    case K::Or:
      return Formula::disj(desugar(f.sub(0)), desugar(f.sub(1)));
    case K::And:
      return Formula::neg(Formula::disj(Formula::neg(desugar(f.sub(0))),
                                        Formula::neg(desugar(f.sub(1)))));
    case K::Impl:
      return Formula::disj(Formula::neg(desugar(f.sub(0))), desugar(f.sub(1)));
    case K::Iff:
      return desugar(Formula::conj(Formula::impl(f.sub(0), f.sub(1)),
                                   Formula::impl(f.sub(1), f.sub(0))));
    case K::Box:
      return Formula::box(f.rel(), desugar(f.sub()));
    case K::Dia:
      return Formula::neg(Formula::box(f.rel(), Formula::neg(desugar(f.sub()))));
    case K::ForallInd:
      return Formula::forall_ind(f.name(), desugar(f.sub()));
    case K::ForallProp:
      return Formula::forall_prop(f.name(), desugar(f.sub()));
    case K::ExistsInd:
      return Formula::neg(Formula::forall_ind(f.name(), Formula::neg(desugar(f.sub()))));
    case K::ExistsProp:
      return Formula::neg(Formula::forall_prop(f.name(), Formula::neg(desugar(f.sub()))));
    case K::Always: {
      const Formula& a = f.sub();
      return desugar(Formula::conj(
          Formula::conj(Formula::box(RelExpr::constant("past"), a), a),
          Formula::box(RelExpr::constant("future"), a)));
    }
    case K::Sometime: {
      const Formula& a = f.sub();
      return desugar(Formula::disj(
          Formula::disj(Formula::dia(RelExpr::constant("past"), a), a),
          Formula::dia(RelExpr::constant("future"), a)));
    }
  }
  return f;
}

MetaFormula desugar(const MetaFormula& m) {
  using K = MetaFormula::Kind;
  switch (m.kind()) {
    case K::Valid:
      return MetaFormula::valid(desugar(m.formula()));
    case K::HasProperty:
      return m;
    case K::Not:
      return MetaFormula::neg(desugar(m.sub()));
    case K::And:
      return MetaFormula::conj(desugar(m.sub(0)), desugar(m.sub(1)));
    case K::Or:
      return MetaFormula::disj(desugar(m.sub(0)), desugar(m.sub(1)));
    case K::Implies:
      return MetaFormula::implies(desugar(m.sub(0)), desugar(m.sub(1)));
    case K::Iff:
      return MetaFormula::iff(desugar(m.sub(0)), desugar(m.sub(1)));
    case K::ExistsRel:
      return MetaFormula::exists_rel(m.var(), desugar(m.sub()));
    case K::ForallRel:
      return MetaFormula::forall_rel(m.var(), desugar(m.sub()));
  }
  return m;
}

std::set<std::string> free_symbols(const RelExpr& r) {
  std::set<std::string> out{r.name()};
  if (r.kind() == RelExpr::Kind::Applied) out.merge(free_symbols(r.arg()));
  return out;
}

std::set<std::string> free_symbols(const Formula& f) {
  using K = Formula::Kind;
  std::set<std::string> out;
  switch (f.kind()) {
    case K::PropVar:
    case K::PropConst:
      out.insert(f.name());
      break;
    case K::Atom:
      out.insert(f.name());
      for (const auto& a : f.args()) out.insert(a.name);
      break;
    case K::Top:
    case K::Bot:
      break;
    case K::Box:
    case K::Dia:
      out = free_symbols(f.rel());
      out.merge(free_symbols(f.sub()));
      break;
    case K::ForallInd:
    case K::ExistsInd:
    case K::ForallProp:
    case K::ExistsProp:
      out = free_symbols(f.sub());
      out.erase(f.name());
      break;
    case K::Always:
    case K::Sometime:
      out = free_symbols(f.sub());
      out.insert("past");
      out.insert("future");
      break;
    default:
      for (size_t i = 0; i < f.sub_count(); ++i) out.merge(free_symbols(f.sub(i)));
  }
  return out;
}

std::set<std::string> free_symbols(const MetaFormula& m) {
  using K = MetaFormula::Kind;
  std::set<std::string> out;
  switch (m.kind()) {
    case K::Valid:
      return free_symbols(m.formula());
    case K::HasProperty:
      return free_symbols(m.rel());
    case K::ExistsRel:
    case K::ForallRel:
      out = free_symbols(m.sub());
      out.erase(m.var());
      return out;
    default:
      for (size_t i = 0; i < m.sub_count(); ++i) out.merge(free_symbols(m.sub(i)));
      return out;
  }
}

// ---------------------------------------------------------------------------
// Printing

std::string print_problem(const ProblemFile& p) {
  using SK = Signature::SymbolKind;
  std::ostringstream out;
  out << "problem " << p.name << ".\n";
  for (const auto& s : p.signature.symbols()) {
    switch (s.kind) {
      case SK::Relation:
        out << "relation " << s.name << ".\n";
        break;
      case SK::RelFun:
        out << "relfun " << s.name << ".\n";
        break;
      case SK::Pred:
        out << "pred " << s.name << "/" << s.arity << ".\n";
        break;
      case SK::PropConst:
        out << "propconst " << s.name << ".\n";
        break;
      case SK::IndConst:
        out << "indconst " << s.name << ".\n";
        break;
    }
  }
  for (const auto& f : p.frame_axioms) {
    out << "frame " << property_name(f.property) << " " << f.rel.str() << ".\n";
  }
  for (const auto& a : p.modal_axioms) {
    out << "axiom " << (a.label.empty() ? "" : a.label + ": ") << "valid ("
        << a.body.str() << ").\n";
  }
  for (const auto& a : p.meta_axioms) {
    out << "axiom " << (a.label.empty() ? "" : a.label + ": ") << a.body.str() << ".\n";
  }
  if (p.conjecture) out << "conjecture " << p.conjecture->str() << ".\n";
  if (p.expected) out << "expect " << expectation_name(*p.expected) << ".\n";
  return out.str();
}

}  // namespace qml
