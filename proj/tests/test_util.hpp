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


// Random generators shared by the property tests and the acceptance binary.
// Everything is driven by a caller-supplied std::mt19937 so failures replay.

#pragma once

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "qmlstt/embedding.hpp"
#include "qmlstt/formula.hpp"
#include "qmlstt/model.hpp"
#include "qmlstt/semantics.hpp"
#include "qmlstt/term.hpp"
#include "qmlstt/type.hpp"

namespace qml::testing {

inline int pick(std::mt19937& rng, int n) {
  return std::uniform_int_distribution<int>(0, n - 1)(rng);
}

inline bool coin(std::mt19937& rng, double p = 0.5) {
  return std::bernoulli_distribution(p)(rng);
}

// Signature used by the oracle tests: two relations, two unary predicates,
// two propositional constants and one individual constant.
inline Signature oracle_signature() {
  using SK = Signature::SymbolKind;
  Signature s;
  s.add("r1", SK::Relation);
  s.add("r2", SK::Relation);
  s.add("p", SK::Pred, 1);
  s.add("q", SK::Pred, 1);
  s.add("a", SK::PropConst);
  s.add("b", SK::PropConst);
  s.add("c", SK::IndConst);
  return s;
}

struct FormulaGen {
  std::mt19937& rng;
  bool sugar = false;      // also produce derived connectives
  bool free_prop = false;  // allow the free propositional variable F
  std::vector<std::string> relations = {"r1", "r2"};

  Formula operator()(int depth) {
    std::vector<std::string> inds;
    std::vector<std::string> props;
    if (free_prop) props.push_back("F");
    return gen(depth, inds, props);
  }

  RelExpr rel() { return RelExpr::constant(relations[pick(rng, static_cast<int>(relations.size()))]); }

  Formula leaf(const std::vector<std::string>& inds, const std::vector<std::string>& props) {
    switch (pick(rng, sugar ? 5 : 4)) {
      case 0:
        return Formula::prop_const(coin(rng) ? "a" : "b");
      case 1:
        if (!props.empty()) return Formula::prop_var(props[pick(rng, static_cast<int>(props.size()))]);
        return Formula::top();
      case 2: {
        IndTerm arg{false, "c"};
        if (!inds.empty() && coin(rng, 0.8)) arg = {true, inds[pick(rng, static_cast<int>(inds.size()))]};
        return Formula::atom(coin(rng) ? "p" : "q", {arg});
      }
      case 3:
        return Formula::top();
      default:
        return Formula::bot();
    }
  }

  Formula gen(int depth, std::vector<std::string>& inds, std::vector<std::string>& props) {
    if (depth <= 0 || coin(rng, 0.2)) return leaf(inds, props);
    const int kinds = sugar ? 13 : 5;
    switch (pick(rng, kinds)) {
      case 0:
        return Formula::neg(gen(depth - 1, inds, props));
      case 1: {
        Formula l = gen(depth - 1, inds, props);
        return Formula::disj(l, gen(depth - 1, inds, props));
      }
      case 2:
        return Formula::box(rel(), gen(depth - 1, inds, props));
      case 3: {
        // At most two individual variables in scope.
        std::string x = inds.size() < 2 ? (inds.empty() ? "X" : "Y") : inds[pick(rng, 2)];
        inds.push_back(x);
        Formula body = gen(depth - 1, inds, props);
        inds.pop_back();
        return sugar && coin(rng) ? Formula::exists_ind(x, body) : Formula::forall_ind(x, body);
      }
      case 4: {
        // At most two propositional variables: P and Q.
        std::string v = coin(rng) ? "P" : "Q";
        props.push_back(v);
        Formula body = gen(depth - 1, inds, props);
        props.pop_back();
        return sugar && coin(rng) ? Formula::exists_prop(v, body) : Formula::forall_prop(v, body);
      }
      case 5: {
        Formula l = gen(depth - 1, inds, props);
        return Formula::conj(l, gen(depth - 1, inds, props));
      }
      case 6: {
        Formula l = gen(depth - 1, inds, props);
        return Formula::impl(l, gen(depth - 1, inds, props));
      }
      case 7: {
        Formula l = gen(depth - 1, inds, props);
        return Formula::iff(l, gen(depth - 1, inds, props));
      }
      case 8:
        return Formula::dia(rel(), gen(depth - 1, inds, props));
      case 9:
        return Formula::always(gen(depth - 1, inds, props));
      case 10:
        return Formula::sometime(gen(depth - 1, inds, props));
      case 11:
        return Formula::top();
      default:
        return Formula::bot();
    }
  }
};

// A random model over the oracle signature (plus past/future for the
// temporal operators).
inline KripkeModel random_model(std::mt19937& rng, int max_worlds = 3, int max_domain = 2) {
  const int n = 1 + pick(rng, max_worlds);
  const int d = 1 + pick(rng, max_domain);
  KripkeModel m(n, d);
  auto rel = [&] {
    RelBits r = 0;
    for (int i = 0; i < n * n; ++i) {
      if (coin(rng, 0.4)) r |= RelBits{1} << i;
    }
    return r;
  };
  auto set = [&] { return static_cast<WorldSet>(pick(rng, 1 << n)); };
  for (const char* name : {"r1", "r2", "past", "future"}) m.relations[name] = rel();
  m.props["a"] = set();
  m.props["b"] = set();
  for (const char* name : {"p", "q"}) {
    KripkeModel::Predicate pr;
    pr.arity = 1;
    for (int i = 0; i < d; ++i) pr.extension.push_back(set());
    m.preds[name] = pr;
  }
  m.individuals["c"] = pick(rng, d);
  return m;
}

// Well-typed random STT terms over a small type pool.
struct TermGen {
  std::mt19937& rng;

  static std::vector<Type> pool() {
    return {Type::o(), Type::mu(), Type::iota(), prop_type(), rel_type()};
  }

  std::vector<Term> atoms() const {
    return {Term::constant("c_o", Type::o()),     Term::constant("c_mu", Type::mu()),
            Term::constant("c_i", Type::iota()),  Term::constant("f", prop_type()),
            Term::constant("r", rel_type()),      Term::var("X", Type::mu()),
            Term::var("P", prop_type()),          Term::var("B", Type::o())};
  }

  Term fallback(const Type& ty) {
    if (ty.is_arrow()) {
      std::vector<std::pair<std::string, Type>> scope;
      return lam(ty, 0, scope);
    }
    switch (ty.kind()) {
      case Type::Kind::O:
        return Term::constant("c_o", ty);
      case Type::Kind::Mu:
        return Term::constant("c_mu", ty);
      default:
        return Term::constant("c_i", ty);
    }
  }

  Term lam(const Type& ty, int depth, std::vector<std::pair<std::string, Type>>& scope) {
    static const char* names[] = {"X", "Y", "Z"};
    std::string name = names[pick(rng, 3)];
    scope.emplace_back(name, ty.domain());
    Term body = gen(ty.codomain(), depth, scope);
    scope.pop_back();
    return Term::lam(name, ty.domain(), body);
  }

  Term gen(const Type& ty, int depth) {
    std::vector<std::pair<std::string, Type>> scope;
    return gen(ty, depth, scope);
  }

  Term gen(const Type& ty, int depth, std::vector<std::pair<std::string, Type>>& scope) {
    if (depth <= 0 || coin(rng, 0.15)) {
      std::vector<Term> fits;
      for (const auto& t : atoms()) {
        if (t.type() == ty) fits.push_back(t);
      }
      for (const auto& [n, t] : scope) {
        if (t == ty) fits.push_back(Term::var(n, t));
      }
      if (!fits.empty()) return fits[pick(rng, static_cast<int>(fits.size()))];
      return fallback(ty);
    }
    const int choice = pick(rng, ty == Type::o() ? 5 : 2);
    if (choice == 0 && ty.is_arrow()) return lam(ty, depth - 1, scope);
    if (choice <= 1) {
      auto args = pool();
      Type arg = args[pick(rng, static_cast<int>(args.size()))];
      Term f = gen(Type::arrow(arg, ty), depth - 1, scope);
      return Term::app(f, gen(arg, depth - 1, scope));
    }
    using namespace logic;
    switch (choice) {
      case 2:
        return mk_not(gen(ty, depth - 1, scope));
      case 3: {
        Term l = gen(ty, depth - 1, scope);
        return mk_or(l, gen(ty, depth - 1, scope));
      }
      default: {
        Type alpha = coin(rng) ? Type::mu() : prop_type();
        if (coin(rng)) {
          Term l = gen(alpha, depth - 1, scope);
          return mk_eq(l, gen(alpha, depth - 1, scope));
        }
        return Term::app(pi_const(alpha), gen(Type::arrow(alpha, Type::o()), depth - 1, scope));
      }
    }
  }
};

// Random problem files for the print/parse round trip.
struct ProblemGen {
  std::mt19937& rng;

  ProblemFile operator()() {
    using SK = Signature::SymbolKind;
    ProblemFile p;
    p.name = "rt" + std::to_string(pick(rng, 100));
    p.signature.add("r1", SK::Relation);
    p.signature.add("r2", SK::Relation);
    p.signature.add("g", SK::RelFun);
    p.signature.add("p", SK::Pred, 1);
    p.signature.add("q", SK::Pred, 1);
    p.signature.add("a", SK::PropConst);
    p.signature.add("b", SK::PropConst);
    p.signature.add("c", SK::IndConst);
    std::vector<std::string> rel_vars;
    for (int i = pick(rng, 3); i > 0; --i) {
      p.frame_axioms.push_back({kAllProperties[pick(rng, 10)], rel(rel_vars)});
    }
    for (int i = pick(rng, 3); i > 0; --i) {
      p.modal_axioms.push_back({coin(rng) ? "" : "ax_" + std::to_string(i), formula(rel_vars, 3)});
    }
    for (int i = pick(rng, 2); i > 0; --i) {
      MetaFormula m = meta(rel_vars, 3);
      while (m.kind() == MetaFormula::Kind::Valid) m = meta(rel_vars, 3);
      p.meta_axioms.push_back({coin(rng) ? "" : "meta_" + std::to_string(i), m});
    }
    if (coin(rng, 0.8)) p.conjecture = meta(rel_vars, 3);
    if (coin(rng)) p.expected = static_cast<Expectation>(pick(rng, 4));
    return p;
  }

  RelExpr rel(const std::vector<std::string>& vars) {
    switch (pick(rng, vars.empty() ? 3 : 4)) {
      case 0:
        return RelExpr::constant("r1");
      case 1:
        return RelExpr::constant("r2");
      case 2:
        return RelExpr::applied("g", rel(vars));
      default:
        return RelExpr::variable(vars[pick(rng, static_cast<int>(vars.size()))]);
    }
  }

  Formula formula(const std::vector<std::string>& rel_vars, int depth) {
    FormulaGen g{rng, true};
    Formula f = g(depth);
    return rebox(f, rel_vars);
  }

  // Replaces every box/dia relation with a random expression in scope.
  Formula rebox(const Formula& f, const std::vector<std::string>& vars) {
    using K = Formula::Kind;
    switch (f.kind()) {
      case K::Not:
        return Formula::neg(rebox(f.sub(), vars));
      case K::Or:
        return Formula::disj(rebox(f.sub(0), vars), rebox(f.sub(1), vars));
      case K::And:
        return Formula::conj(rebox(f.sub(0), vars), rebox(f.sub(1), vars));
      case K::Impl:
        return Formula::impl(rebox(f.sub(0), vars), rebox(f.sub(1), vars));
      case K::Iff:
        return Formula::iff(rebox(f.sub(0), vars), rebox(f.sub(1), vars));
      case K::Box:
        return Formula::box(rel(vars), rebox(f.sub(), vars));
      case K::Dia:
        return Formula::dia(rel(vars), rebox(f.sub(), vars));
      case K::ForallInd:
        return Formula::forall_ind(f.name(), rebox(f.sub(), vars));
      case K::ExistsInd:
        return Formula::exists_ind(f.name(), rebox(f.sub(), vars));
      case K::ForallProp:
        return Formula::forall_prop(f.name(), rebox(f.sub(), vars));
      case K::ExistsProp:
        return Formula::exists_prop(f.name(), rebox(f.sub(), vars));
      case K::Always:
        return Formula::always(rebox(f.sub(), vars));
      case K::Sometime:
        return Formula::sometime(rebox(f.sub(), vars));
      default:
        return f;
    }
  }

  MetaFormula meta(std::vector<std::string>& vars, int depth) {
    const int k = depth <= 0 ? pick(rng, 2) : pick(rng, 8);
    switch (k) {
      case 0:
        return MetaFormula::valid(formula(vars, 2));
      case 1:
        return MetaFormula::has_property(kAllProperties[pick(rng, 10)], rel(vars));
      case 2:
        return MetaFormula::neg(meta(vars, depth - 1));
      case 3: {
        MetaFormula l = meta(vars, depth - 1);
        return MetaFormula::conj(l, meta(vars, depth - 1));
      }
      case 4: {
        MetaFormula l = meta(vars, depth - 1);
        return MetaFormula::disj(l, meta(vars, depth - 1));
      }
      case 5: {
        MetaFormula l = meta(vars, depth - 1);
        return coin(rng) ? MetaFormula::implies(l, meta(vars, depth - 1))
                         : MetaFormula::iff(l, meta(vars, depth - 1));
      }
      default: {
        std::string v = vars.empty() ? "R" : "S";
        vars.push_back(v);
        MetaFormula body = meta(vars, depth - 1);
        vars.pop_back();
        return k == 6 ? MetaFormula::exists_rel(v, body) : MetaFormula::forall_rel(v, body);
      }
    }
  }
};

// Evaluates an expanded term of type mu > o at one world through the STT
// evaluator, by binding a fresh world variable in the environment.
inline bool stt_at_world(const KripkeModel& m, const Assignment& a, const Term& prop, int w) {
  SttEnv env = stt_env(a);
  env.values["Wcur"] = static_cast<std::uint64_t>(w);
  return eval_stt_bool(m, env, Term::app(prop, Term::var("Wcur", Type::mu())));
}

// Brute-force reading of the ten frame properties, written independently of
// the library for use as an oracle.
inline bool property_oracle(int n, RelBits r, Property p) {
  auto R = [&](int s, int t) { return has_edge(r, n, s, t); };
  auto all3 = [&](auto pred) {
    for (int s = 0; s < n; ++s)
      for (int t = 0; t < n; ++t)
        for (int u = 0; u < n; ++u)
          if (!pred(s, t, u)) return false;
    return true;
  };
  auto some = [&](auto pred) {
    for (int v = 0; v < n; ++v)
      if (pred(v)) return true;
    return false;
  };
  switch (p) {
    case Property::Reflexive:
      return all3([&](int s, int, int) { return R(s, s); });
    case Property::Symmetric:
      return all3([&](int s, int t, int) { return !R(s, t) || R(t, s); });
    case Property::Serial:
      return all3([&](int s, int, int) { return some([&](int t) { return R(s, t); }); });
    case Property::Transitive:
      return all3([&](int s, int t, int u) { return !(R(s, t) && R(t, u)) || R(s, u); });
    case Property::Euclidean:
      return all3([&](int s, int t, int u) { return !(R(s, t) && R(s, u)) || R(t, u); });
    case Property::PartiallyFunctional:
      return all3([&](int s, int t, int u) { return !(R(s, t) && R(s, u)) || t == u; });
    case Property::Functional:
      return all3([&](int s, int, int) {
        int count = 0;
        for (int t = 0; t < n; ++t) count += R(s, t) ? 1 : 0;
        return count == 1;
      });
    case Property::WeaklyDense:
      return all3([&](int s, int t, int) {
        return !R(s, t) || some([&](int u) { return R(s, u) && R(u, t); });
      });
    case Property::WeaklyConnected:
      return all3([&](int s, int t, int u) {
        return !(R(s, t) && R(s, u)) || R(t, u) || t == u || R(u, t);
      });
    case Property::WeaklyDirected:
      return all3([&](int s, int t, int u) {
        return !(R(s, t) && R(s, u)) || some([&](int v) { return R(t, v) && R(u, v); });
      });
  }
  return false;
}

}  // namespace qml::testing
