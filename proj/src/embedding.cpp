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

#include "qmlstt/embedding.hpp"

#include "qmlstt/error.hpp"

namespace qml {

using logic::mk_and;
using logic::mk_eq;
using logic::mk_exists;
using logic::mk_forall;
using logic::mk_implies;
using logic::mk_not;
using logic::mk_or;

namespace {

Term v(const char* name, const Type& t) { return Term::var(name, t); }
Term ap(const Term& f, std::initializer_list<Term> args) { return Term::app(f, args); }

}  // namespace

DefinitionTable::DefinitionTable() {
  const Type mu = Type::mu();
  const Type iota = Type::iota();
  const Type P = prop_type();
  const Type R = rel_type();

  const Term phi = v("Phi", P);
  const Term psi = v("Psi", P);
  const Term w = v("W", mu);
  const Term r = v("R", R);

  add("mnot", Term::lam("Phi", P, Term::lam("W", mu, mk_not(ap(phi, {w})))));
  add("mor", Term::lam("Phi", P, Term::lam("Psi", P, Term::lam("W", mu,
                                                            mk_or(ap(phi, {w}), ap(psi, {w}))))));
  add("mbox",
      Term::lam("R", R, Term::lam("Phi", P, Term::lam("W", mu,
          mk_forall("V", mu, mk_or(mk_not(ap(r, {w, v("V", mu)})), ap(phi, {v("V", mu)})))))));
  {
    const Type fty = Type::arrow(iota, P);
    const Term f = v("Phi", fty);
    add("mall_ind", Term::lam("Phi", fty, Term::lam("W", mu,
                                                    mk_forall("X", iota, ap(f, {v("X", iota), w})))));
  }
  {
    const Type fty = Type::arrow(P, P);
    const Term f = v("Phi", fty);
    add("mall_prop", Term::lam("Phi", fty, Term::lam("W", mu,
                                                     mk_forall("P", P, ap(f, {v("P", P), w})))));
  }
  add("mtrue", Term::lam("W", mu, logic::true_const()));

  const auto mnot = [&](Term a) { return ap(constant("mnot"), {std::move(a)}); };
  const auto mor = [&](Term a, Term b) { return ap(constant("mor"), {std::move(a), std::move(b)}); };
  const auto mbox = [&](Term rel, Term a) {
    return ap(constant("mbox"), {std::move(rel), std::move(a)});
  };

  add("mfalse", mnot(constant("mtrue")));
  add("mand", Term::lam("Phi", P, Term::lam("Psi", P, mnot(mor(mnot(phi), mnot(psi))))));
  add("mimpl", Term::lam("Phi", P, Term::lam("Psi", P, mor(mnot(phi), psi))));
  const auto mand = [&](Term a, Term b) {
    return ap(constant("mand"), {std::move(a), std::move(b)});
  };
  const auto mimpl = [&](Term a, Term b) {
    return ap(constant("mimpl"), {std::move(a), std::move(b)});
  };
  add("mequiv", Term::lam("Phi", P, Term::lam("Psi", P, mand(mimpl(phi, psi), mimpl(psi, phi)))));
  add("mdia", Term::lam("R", R, Term::lam("Phi", P, mnot(mbox(r, mnot(phi))))));
  const auto mdia = [&](Term rel, Term a) {
    return ap(constant("mdia"), {std::move(rel), std::move(a)});
  };
  {
    const Type fty = Type::arrow(iota, P);
    const Term f = v("Phi", fty);
    add("mexi_ind",
        Term::lam("Phi", fty, mnot(ap(constant("mall_ind"),
                                      {Term::lam("X", iota, mnot(ap(f, {v("X", iota)})))}))));
  }
  {
    const Type fty = Type::arrow(P, P);
    const Term f = v("Phi", fty);
    add("mexi_prop",
        Term::lam("Phi", fty, mnot(ap(constant("mall_prop"),
                                      {Term::lam("P", P, mnot(ap(f, {v("P", P)})))}))));
  }
  add("mvalid", Term::lam("Phi", P, mk_forall("W", mu, ap(phi, {w}))));

  // Relation properties.
  const Term s = v("S", mu);
  const Term t = v("T", mu);
  const Term u = v("U", mu);
  const auto rel = [&](const Term& a, const Term& b) { return ap(r, {a, b}); };
  const auto forall3 = [&](const Term& body) {
    return mk_forall("S", mu, mk_forall("T", mu, mk_forall("U", mu, body)));
  };
  const auto prop_def = [&](Property p, const Term& body) {
    add(property_operator(p), Term::lam("R", R, body));
  };
  prop_def(Property::Reflexive, mk_forall("S", mu, rel(s, s)));
  prop_def(Property::Symmetric,
           mk_forall("S", mu, mk_forall("T", mu, mk_implies(rel(s, t), rel(t, s)))));
  prop_def(Property::Serial, mk_forall("S", mu, mk_exists("T", mu, rel(s, t))));
  prop_def(Property::Transitive, forall3(mk_implies(mk_and(rel(s, t), rel(t, u)), rel(s, u))));
  prop_def(Property::Euclidean, forall3(mk_implies(mk_and(rel(s, t), rel(s, u)), rel(t, u))));
  prop_def(Property::PartiallyFunctional,
           forall3(mk_implies(mk_and(rel(s, t), rel(s, u)), mk_eq(t, u))));
  prop_def(Property::Functional,
           mk_forall("S", mu, mk_exists("T", mu, mk_and(rel(s, t),
               mk_forall("U", mu, mk_implies(rel(s, u), mk_eq(t, u)))))));
  prop_def(Property::WeaklyDense,
           mk_forall("S", mu, mk_forall("T", mu, mk_implies(rel(s, t),
               mk_exists("U", mu, mk_and(rel(s, u), rel(u, t)))))));
  prop_def(Property::WeaklyConnected,
           forall3(mk_implies(mk_and(rel(s, t), rel(s, u)),
                              mk_or(mk_or(rel(t, u), mk_eq(t, u)), rel(u, t)))));
  prop_def(Property::WeaklyDirected,
           forall3(mk_implies(mk_and(rel(s, t), rel(s, u)),
                              mk_exists("V", mu, mk_and(rel(t, v("V", mu)), rel(u, v("V", mu)))))));

  // Temporal operators over the designated relations.
  const Term past = Term::constant(kPastRelation, R);
  const Term future = Term::constant(kFutureRelation, R);
  const Term a = v("A", P);
  add("malways", Term::lam("A", P, mand(mand(mbox(past, a), a), mbox(future, a))));
  add("msometime", Term::lam("A", P, mor(mor(mdia(past, a), a), mdia(future, a))));
}

void DefinitionTable::add(std::string name, Term term) {
  Type ty = type_of(term);
  entries_.push_back({std::move(name), std::move(ty), std::move(term)});
}

const DefinitionTable& DefinitionTable::standard() {
  static const DefinitionTable table;
  return table;
}

const Definition* DefinitionTable::find(std::string_view name) const {
  for (const auto& d : entries_) {
    if (d.name == name) return &d;
  }
  return nullptr;
}

Term DefinitionTable::constant(std::string_view name) const {
  const Definition* d = find(name);
  if (d == nullptr) throw Error("unknown operator " + std::string(name));
  return Term::constant(d->name, d->type);
}

Term definition_of(std::string_view name) {
  const Definition* d = DefinitionTable::standard().find(name);
  if (d == nullptr) throw Error("unknown operator " + std::string(name));
  return d->term;
}

std::string property_operator(Property p) { return "m" + std::string(property_name(p)); }

// ---------------------------------------------------------------------------
// Translation

namespace {

using SK = Signature::SymbolKind;

void require(const Signature& sig, const std::string& name, SK kind, std::string_view what) {
  const auto* s = sig.find(name);
  if (s == nullptr || s->kind != kind) {
    throw Error("ill-formed input: " + name + " is not a declared " + std::string(what));
  }
}

Term op(const char* name) { return DefinitionTable::standard().constant(name); }

}  // namespace

Term translate_rel(const RelExpr& r, const Signature& sig) {
  switch (r.kind()) {
    case RelExpr::Kind::Const:
      if (r.name() != kPastRelation && r.name() != kFutureRelation) {
        require(sig, r.name(), SK::Relation, "relation");
      } else if (const auto* s = sig.find(r.name()); s != nullptr && s->kind != SK::Relation) {
        throw Error("ill-formed input: " + r.name() + " is not a relation");
      }
      return Term::constant(r.name(), rel_type());
    case RelExpr::Kind::Var:
      return Term::var(r.name(), rel_type());
    case RelExpr::Kind::Applied:
      require(sig, r.name(), SK::RelFun, "relation functor");
      return Term::app(Term::constant(r.name(), relfun_type()), translate_rel(r.arg(), sig));
  }
  return Term::var(r.name(), rel_type());
}

Term translate(const Formula& f, const Signature& sig) {
  using K = Formula::Kind;
  const Type P = prop_type();
  auto un = [&](const char* name) { return Term::app(op(name), translate(f.sub(), sig)); };
  auto bin = [&](const char* name) {
    return Term::app(op(name), {translate(f.sub(0), sig), translate(f.sub(1), sig)});
  };
  switch (f.kind()) {
    case K::PropVar:
      return Term::var(f.name(), P);
    case K::PropConst:
      require(sig, f.name(), SK::PropConst, "propositional constant");
      return Term::constant(f.name(), P);
    case K::Atom: {
      const auto* s = sig.find(f.name());
      if (s == nullptr || s->kind != SK::Pred || s->arity != static_cast<int>(f.args().size())) {
        throw Error("ill-formed input: " + f.name() + " is not a predicate of arity " +
                    std::to_string(f.args().size()));
      }
      Term t = Term::constant(f.name(), pred_type(s->arity));
      for (const auto& a : f.args()) {
        if (!a.is_var) require(sig, a.name, SK::IndConst, "individual constant");
        t = Term::app(t, a.is_var ? Term::var(a.name, Type::iota())
                                  : Term::constant(a.name, Type::iota()));
      }
      return t;
    }
    case K::Top:
      return op("mtrue");
    case K::Bot:
      return op("mfalse");
    case K::Not:
      return un("mnot");
    case K::Or:
      return bin("mor");
    case K::And:
      return bin("mand");
    case K::Impl:
      return bin("mimpl");
    case K::Iff:
      return bin("mequiv");
    case K::Box:
    case K::Dia:
      return Term::app(op(f.kind() == K::Box ? "mbox" : "mdia"),
                       {translate_rel(f.rel(), sig), translate(f.sub(), sig)});
    case K::ForallInd:
    case K::ExistsInd:
      return Term::app(op(f.kind() == K::ForallInd ? "mall_ind" : "mexi_ind"),
                       Term::lam(f.name(), Type::iota(), translate(f.sub(), sig)));
    case K::ForallProp:
    case K::ExistsProp:
      return Term::app(op(f.kind() == K::ForallProp ? "mall_prop" : "mexi_prop"),
                       Term::lam(f.name(), P, translate(f.sub(), sig)));
    case K::Always:
      return un("malways");
    case K::Sometime:
      return un("msometime");
  }
  throw Error("ill-formed formula");
}

Term translate_meta(const MetaFormula& m, const Signature& sig) {
  using K = MetaFormula::Kind;
  auto sub = [&](size_t i) { return translate_meta(m.sub(i), sig); };
  switch (m.kind()) {
    case K::Valid:
      return Term::app(op("mvalid"), translate(m.formula(), sig));
    case K::HasProperty:
      return Term::app(op(property_operator(m.property()).c_str()), translate_rel(m.rel(), sig));
    case K::Not:
      return mk_not(sub(0));
    case K::And:
      return mk_and(sub(0), sub(1));
    case K::Or:
      return mk_or(sub(0), sub(1));
    case K::Implies:
      return mk_implies(sub(0), sub(1));
    case K::Iff:
      return logic::mk_iff(sub(0), sub(1));
    case K::ExistsRel:
      return mk_exists(m.var(), rel_type(), sub(0));
    case K::ForallRel:
      return mk_forall(m.var(), rel_type(), sub(0));
  }
  throw Error("ill-formed meta formula");
}

// ---------------------------------------------------------------------------
// Expansion

namespace {

Term unfold(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Const: {
      if (logic::is_derived(t)) return unfold(logic::definition_of_derived(t));
      const Definition* d = DefinitionTable::standard().find(t.name());
      if (d != nullptr && d->type == t.type()) return unfold(d->term);
      return t;
    }
    case Term::Kind::Lam:
      return Term::raw_lam(t.name(), t.type(), unfold(t.body()));
    case Term::Kind::App:
      return Term::app(unfold(t.fun()), unfold(t.arg()));
    default:
      return t;
  }
}

}  // namespace

Term expand(const Term& t) { return beta_eta_normalize(unfold(t)); }

// ---------------------------------------------------------------------------
// Axiom schemas

Formula axiom_schema(Property p, const RelExpr& rel) {
  const Formula a = Formula::prop_var("A");
  const Formula b = Formula::prop_var("B");
  auto box = [&](const Formula& f) { return Formula::box(rel, f); };
  auto dia = [&](const Formula& f) { return Formula::dia(rel, f); };
  auto all_a = [&](const Formula& f) { return Formula::forall_prop("A", f); };
  switch (p) {
    case Property::Reflexive:
      return all_a(Formula::impl(box(a), a));
    case Property::Symmetric:
      return all_a(Formula::impl(a, box(dia(a))));
    case Property::Serial:
      return all_a(Formula::impl(box(a), dia(a)));
    case Property::Transitive:
      return all_a(Formula::impl(box(a), box(box(a))));
    case Property::Euclidean:
      return all_a(Formula::impl(dia(a), box(dia(a))));
    case Property::PartiallyFunctional:
      return all_a(Formula::impl(dia(a), box(a)));
    case Property::Functional:
      return all_a(Formula::iff(dia(a), box(a)));
    case Property::WeaklyDense:
      return all_a(Formula::impl(box(box(a)), box(a)));
    case Property::WeaklyConnected:
      // box((A & box A) => B) | box((B & box B) => A)
      return all_a(Formula::forall_prop(
          "B", Formula::disj(box(Formula::impl(Formula::conj(a, box(a)), b)),
                             box(Formula::impl(Formula::conj(b, box(b)), a)))));
    case Property::WeaklyDirected:
      return all_a(Formula::impl(dia(box(a)), box(dia(a))));
  }
  throw Error("unknown relation property");
}

}  // namespace qml
