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

#include "qmlstt/term.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "qmlstt/error.hpp"

namespace qml {

Term Term::constant(std::string name, Type type) {
  return Term(std::make_shared<const Node>(Node{Kind::Const, std::move(name), std::move(type)}));
}

Term Term::var(std::string name, Type type) {
  return Term(std::make_shared<const Node>(Node{Kind::Var, std::move(name), std::move(type)}));
}

Term Term::bound(int index) {
  Node n{Kind::Bound, {}, Type::o()};
  n.index = index;
  n.loose = index + 1;
  return Term(std::make_shared<const Node>(std::move(n)));
}

Term Term::raw_lam(std::string hint, Type type, Term body) {
  Node n{Kind::Lam, std::move(hint), std::move(type)};
  n.loose = std::max(0, body.loose_bound() - 1);
  n.left = std::move(body.node_);
  return Term(std::make_shared<const Node>(std::move(n)));
}

Term Term::app(Term fun, Term arg) {
  Node n{Kind::App, {}, Type::o()};
  n.loose = std::max(fun.loose_bound(), arg.loose_bound());
  n.left = std::move(fun.node_);
  n.right = std::move(arg.node_);
  return Term(std::make_shared<const Node>(std::move(n)));
}

Term Term::app(Term fun, std::initializer_list<Term> args) {
  for (const Term& a : args) fun = app(std::move(fun), a);
  return fun;
}

Term Term::app(Term fun, std::span<const Term> args) {
  for (const Term& a : args) fun = app(std::move(fun), a);
  return fun;
}

namespace {

Term abstract_var(const Term& t, const std::string& name, const Type& type, int depth) {
  switch (t.kind()) {
    case Term::Kind::Var:
      if (t.name() == name && t.type() == type) return Term::bound(depth);
      return t;
    case Term::Kind::Const:
    case Term::Kind::Bound:
      return t;
    case Term::Kind::Lam: {
      Term b = abstract_var(t.body(), name, type, depth + 1);
      return Term::raw_lam(t.name(), t.type(), b);
    }
    case Term::Kind::App:
      return Term::app(abstract_var(t.fun(), name, type, depth),
                       abstract_var(t.arg(), name, type, depth));
  }
  return t;
}

}  // namespace

Term Term::lam(const std::string& name, const Type& type, const Term& body) {
  return raw_lam(name, type, abstract_var(body, name, type, 0));
}

Term Term::body() const {
  if (!is_lam()) throw Error("body() of non-lambda term");
  return Term(node_->left);
}

Term Term::fun() const {
  if (!is_app()) throw Error("fun() of non-application term");
  return Term(node_->left);
}

Term Term::arg() const {
  if (!is_app()) throw Error("arg() of non-application term");
  return Term(node_->right);
}

std::pair<Term, std::vector<Term>> Term::spine() const {
  std::vector<Term> args;
  Term head = *this;
  while (head.is_app()) {
    args.push_back(head.arg());
    head = head.fun();
  }
  std::reverse(args.begin(), args.end());
  return {head, std::move(args)};
}

bool equal_nodes(const Term::Node* a, const Term::Node* b) noexcept {
  while (a != b) {
    if (a->kind != b->kind) return false;
    switch (a->kind) {
      case Term::Kind::Const:
      case Term::Kind::Var:
        return a->name == b->name && a->type == b->type;
      case Term::Kind::Bound:
        return a->index == b->index;
      case Term::Kind::Lam:
        if (a->type != b->type) return false;
        a = a->left.get();
        b = b->left.get();
        break;
      case Term::Kind::App:
        if (!equal_nodes(a->left.get(), b->left.get())) return false;
        a = a->right.get();
        b = b->right.get();
        break;
    }
  }
  return true;
}

bool operator==(const Term& a, const Term& b) noexcept {
  return equal_nodes(a.node_.get(), b.node_.get());
}

bool alpha_eq(const Term& a, const Term& b) { return a == b; }

// ---------------------------------------------------------------------------
// Typing

namespace {

struct TypeChecker {
  const TypingContext* ctx;  // null: trust annotations of free variables
  std::vector<Type> binders;
  std::vector<std::string> path;

  std::string where() const {
    if (path.empty()) return "root";
    std::string s;
    for (const auto& p : path) s += (s.empty() ? "" : ".") + p;
    return s;
  }

  Type check(const Term& t) {
    switch (t.kind()) {
      case Term::Kind::Const:
        return t.type();
      case Term::Kind::Var: {
        if (ctx == nullptr) return t.type();
        auto bound = ctx->lookup(t.name());
        if (!bound) {
          throw TypeError(TypeError::Kind::UnboundVariable,
                          "unbound variable " + t.name() + " at " + where());
        }
        if (*bound != t.type()) {
          throw TypeError(TypeError::Kind::TypeMismatch,
                          "type mismatch at " + where() + ": expected " + bound->str() +
                              ", found " + t.type().str() + " for variable " + t.name());
        }
        return t.type();
      }
      case Term::Kind::Bound: {
        int i = t.index();
        if (i < 0 || i >= static_cast<int>(binders.size())) {
          throw TypeError(TypeError::Kind::UnboundVariable,
                          "loose bound index " + std::to_string(i) + " at " + where());
        }
        return binders[binders.size() - 1 - static_cast<size_t>(i)];
      }
      case Term::Kind::Lam: {
        binders.push_back(t.type());
        path.emplace_back("body");
        Type b = check(t.body());
        path.pop_back();
        binders.pop_back();
        return Type::arrow(t.type(), b);
      }
      case Term::Kind::App: {
        path.emplace_back("fun");
        Type f = check(t.fun());
        path.back() = "arg";
        Type a = check(t.arg());
        path.pop_back();
        if (!f.is_arrow()) {
          throw TypeError(TypeError::Kind::TypeMismatch,
                          "type mismatch at " + where() + ": expected a function, found " +
                              f.str());
        }
        if (f.domain() != a) {
          throw TypeError(TypeError::Kind::TypeMismatch,
                          "type mismatch at " + where() + ": expected " + f.domain().str() +
                              ", found " + a.str());
        }
        return f.codomain();
      }
    }
    return Type::o();
  }
};

}  // namespace

Type Term::infer() const {
  TypeChecker tc{nullptr, {}, {}};
  return tc.check(*this);
}

TypingContext::TypingContext(std::initializer_list<std::pair<std::string, Type>> entries)
    : entries_(entries) {}

TypingContext TypingContext::extend(std::string name, Type type) const {
  TypingContext c = *this;
  c.bind(std::move(name), std::move(type));
  return c;
}

void TypingContext::bind(std::string name, Type type) {
  entries_.emplace_back(std::move(name), std::move(type));
}

std::optional<Type> TypingContext::lookup(const std::string& name) const {
  for (auto it = entries_.rbegin(); it != entries_.rend(); ++it) {
    if (it->first == name) return it->second;
  }
  return std::nullopt;
}

Type type_of(const Term& t, const TypingContext& ctx) {
  TypeChecker tc{&ctx, {}, {}};
  return tc.check(t);
}

// ---------------------------------------------------------------------------
// Locally nameless machinery

Term shift(const Term& t, int delta, int cutoff) {
  if (delta == 0 || t.loose_bound() <= cutoff) return t;
  switch (t.kind()) {
    case Term::Kind::Bound:
      return Term::bound(t.index() + delta);
    case Term::Kind::Lam:
      return Term::raw_lam(t.name(), t.type(), shift(t.body(), delta, cutoff + 1));
    case Term::Kind::App:
      return Term::app(shift(t.fun(), delta, cutoff), shift(t.arg(), delta, cutoff));
    default:
      return t;
  }
}

namespace {

Term instantiate_at(const Term& t, const Term& s, int depth) {
  if (t.loose_bound() <= depth) return t;
  switch (t.kind()) {
    case Term::Kind::Bound:
      if (t.index() == depth) return shift(s, depth);
      return Term::bound(t.index() - 1);
    case Term::Kind::Lam:
      return Term::raw_lam(t.name(), t.type(), instantiate_at(t.body(), s, depth + 1));
    case Term::Kind::App:
      return Term::app(instantiate_at(t.fun(), s, depth), instantiate_at(t.arg(), s, depth));
    default:
      return t;
  }
}

bool occurs_bound(const Term& t, int index) {
  if (t.loose_bound() <= index) return false;
  switch (t.kind()) {
    case Term::Kind::Bound:
      return t.index() == index;
    case Term::Kind::Lam:
      return occurs_bound(t.body(), index + 1);
    case Term::Kind::App:
      return occurs_bound(t.fun(), index) || occurs_bound(t.arg(), index);
    default:
      return false;
  }
}

void collect_leaves(const Term& t, Term::Kind kind, std::set<std::pair<std::string, Type>>& out) {
  switch (t.kind()) {
    case Term::Kind::Lam:
      collect_leaves(t.body(), kind, out);
      break;
    case Term::Kind::App:
      collect_leaves(t.fun(), kind, out);
      collect_leaves(t.arg(), kind, out);
      break;
    default:
      if (t.kind() == kind) out.emplace(t.name(), t.type());
  }
}

}  // namespace

Term instantiate(const Term& body, const Term& s) { return instantiate_at(body, s, 0); }

std::set<std::pair<std::string, Type>> free_vars(const Term& t) {
  std::set<std::pair<std::string, Type>> out;
  collect_leaves(t, Term::Kind::Var, out);
  return out;
}

std::set<std::pair<std::string, Type>> constants(const Term& t) {
  std::set<std::pair<std::string, Type>> out;
  collect_leaves(t, Term::Kind::Const, out);
  return out;
}

Term substitute(const Term& t, const std::string& x, const Term& s) {
  const Type sty = s.infer();
  std::function<Term(const Term&, int)> go = [&](const Term& u, int depth) -> Term {
    switch (u.kind()) {
      case Term::Kind::Var:
        if (u.name() != x) return u;
        if (u.type() != sty) {
          throw TypeError(TypeError::Kind::TypeMismatch,
                          "substitution type mismatch for " + x + ": expected " +
                              u.type().str() + ", found " + sty.str());
        }
        return shift(s, depth);
      case Term::Kind::Lam:
        return Term::raw_lam(u.name(), u.type(), go(u.body(), depth + 1));
      case Term::Kind::App:
        return Term::app(go(u.fun(), depth), go(u.arg(), depth));
      default:
        return u;
    }
  };
  return go(t, 0);
}

Term beta_normalize(const Term& t) {
  auto [head, args] = t.spine();
  size_t next = 0;
  while (head.is_lam() && next < args.size()) {
    Term reduced = instantiate(head.body(), args[next++]);
    auto [h, inner] = reduced.spine();
    inner.insert(inner.end(), args.begin() + static_cast<std::ptrdiff_t>(next), args.end());
    head = std::move(h);
    args = std::move(inner);
    next = 0;
  }
  if (head.is_lam()) {
    return Term::raw_lam(head.name(), head.type(), beta_normalize(head.body()));
  }
  Term out = head;
  for (size_t i = next; i < args.size(); ++i) out = Term::app(out, beta_normalize(args[i]));
  return out;
}

Term eta_contract(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Lam: {
      Term b = eta_contract(t.body());
      if (b.is_app() && b.arg().is_bound() && b.arg().index() == 0 &&
          !occurs_bound(b.fun(), 0)) {
        return shift(b.fun(), -1);
      }
      return Term::raw_lam(t.name(), t.type(), b);
    }
    case Term::Kind::App:
      return Term::app(eta_contract(t.fun()), eta_contract(t.arg()));
    default:
      return t;
  }
}

Term beta_eta_normalize(const Term& t) { return eta_contract(beta_normalize(t)); }

// ---------------------------------------------------------------------------
// Logical constants

namespace logic {
namespace {

Type o1() { return Type::arrow(Type::o(), Type::o()); }
Type o2() { return Type::arrow(Type::o(), o1()); }

}  // namespace

Term not_const() { return Term::constant(kNot, o1()); }
Term or_const() { return Term::constant(kOr, o2()); }
Term and_const() { return Term::constant(kAnd, o2()); }
Term implies_const() { return Term::constant(kImplies, o2()); }
Term iff_const() { return Term::constant(kIff, o2()); }
Term true_const() { return Term::constant(kTrue, Type::o()); }
Term false_const() { return Term::constant(kFalse, Type::o()); }

Term eq_const(const Type& alpha) {
  return Term::constant(kEq, Type::arrow(alpha, Type::arrow(alpha, Type::o())));
}

Term pi_const(const Type& alpha) {
  return Term::constant(kPi, Type::arrow(Type::arrow(alpha, Type::o()), Type::o()));
}

Term sigma_const(const Type& alpha) {
  return Term::constant(kSigma, Type::arrow(Type::arrow(alpha, Type::o()), Type::o()));
}

bool is_primitive(const Term& c) {
  if (!c.is_const()) return false;
  const std::string& n = c.name();
  if (n == kNot) return c.type() == o1();
  if (n == kOr) return c.type() == o2();
  if (n == kEq) {
    const Type& t = c.type();
    return t.is_arrow() && t.codomain().is_arrow() && t.codomain().domain() == t.domain() &&
           t.codomain().codomain() == Type::o();
  }
  if (n == kPi) {
    const Type& t = c.type();
    return t.is_arrow() && t.domain().is_arrow() && t.domain().codomain() == Type::o() &&
           t.codomain() == Type::o();
  }
  return false;
}

bool is_derived(const Term& c) {
  if (!c.is_const()) return false;
  const std::string& n = c.name();
  if (n == kAnd || n == kImplies || n == kIff) return c.type() == o2();
  if (n == kTrue || n == kFalse) return c.type() == Type::o();
  if (n == kSigma) {
    const Type& t = c.type();
    return t.is_arrow() && t.domain().is_arrow() && t.domain().codomain() == Type::o() &&
           t.codomain() == Type::o();
  }
  return false;
}

bool is_logical(const Term& c) { return is_primitive(c) || is_derived(c); }

Term mk_not(Term a) { return Term::app(not_const(), std::move(a)); }
Term mk_or(Term a, Term b) { return Term::app(or_const(), {std::move(a), std::move(b)}); }
Term mk_and(Term a, Term b) { return Term::app(and_const(), {std::move(a), std::move(b)}); }
Term mk_implies(Term a, Term b) {
  return Term::app(implies_const(), {std::move(a), std::move(b)});
}
Term mk_iff(Term a, Term b) { return Term::app(iff_const(), {std::move(a), std::move(b)}); }

Term mk_eq(Term a, Term b) {
  Type alpha = a.infer();
  return Term::app(eq_const(alpha), {std::move(a), std::move(b)});
}

Term mk_forall(const std::string& name, const Type& type, const Term& body) {
  return Term::app(pi_const(type), Term::lam(name, type, body));
}

Term mk_exists(const std::string& name, const Type& type, const Term& body) {
  return Term::app(sigma_const(type), Term::lam(name, type, body));
}

Term definition_of_derived(const Term& c) {
  const Type o = Type::o();
  const Term a = Term::var("A", o);
  const Term b = Term::var("B", o);
  const std::string& n = c.name();
  if (n == kAnd) {
    return Term::lam("A", o, Term::lam("B", o, mk_not(mk_or(mk_not(a), mk_not(b)))));
  }
  if (n == kImplies) return Term::lam("A", o, Term::lam("B", o, mk_or(mk_not(a), b)));
  if (n == kIff) {
    // (A => B) & (B => A), written out in the primitives.
    Term ab = mk_or(mk_not(a), b);
    Term ba = mk_or(mk_not(b), a);
    return Term::lam("A", o, Term::lam("B", o, mk_not(mk_or(mk_not(ab), mk_not(ba)))));
  }
  if (n == kTrue) {
    Term id = Term::lam("X", o, Term::var("X", o));
    return mk_eq(id, id);
  }
  if (n == kFalse) {
    Term id = Term::lam("X", o, Term::var("X", o));
    return mk_not(mk_eq(id, id));
  }
  if (n == kSigma) {
    Type alpha = c.type().domain().domain();
    Type pty = Type::arrow(alpha, o);
    Term p = Term::var("P", pty);
    Term x = Term::var("X", alpha);
    return Term::lam("P", pty,
                     mk_not(Term::app(pi_const(alpha),
                                      Term::lam("X", alpha, mk_not(Term::app(p, x))))));
  }
  throw Error("not a derived connective: " + n);
}

}  // namespace logic

// ---------------------------------------------------------------------------
// THF rendering

namespace {

enum class Form { Atom, Neg, Binary, Binder, Apply };

const char* binary_symbol(const Term& c) {
  if (!c.is_const()) return nullptr;
  const std::string& n = c.name();
  if (!logic::is_logical(c)) return nullptr;
  if (n == logic::kOr || n == logic::kAnd || n == logic::kImplies || n == logic::kIff ||
      n == logic::kEq) {
    return n.c_str();
  }
  return nullptr;
}

class ThfPrinter {
 public:
  explicit ThfPrinter(const Term& root) {
    for (const auto& [n, ty] : free_vars(root)) taken_.insert(n);
    for (const auto& [n, ty] : constants(root)) taken_.insert(n);
  }

  std::string top(const Term& t) {
    Form f = form(t);
    if (f == Form::Binary) return binary(t, false);
    if (f == Form::Apply) return apply(t, false);
    return render(t);
  }

  std::string render(const Term& t) {
    switch (form(t)) {
      case Form::Atom:
        return atom(t);
      case Form::Neg:
        return "~ " + operand(t.arg());
      case Form::Binary:
        return binary(t, true);
      case Form::Binder:
        return binder(t);
      case Form::Apply:
        return apply(t, true);
    }
    return {};
  }

 private:
  static Form form(const Term& t) {
    if (!t.is_app()) return t.is_lam() ? Form::Binder : Form::Atom;
    auto [head, args] = t.spine();
    if (head.is_const() && logic::is_logical(head)) {
      const std::string& n = head.name();
      if (n == logic::kNot && args.size() == 1) return Form::Neg;
      if (binary_symbol(head) != nullptr && args.size() == 2) return Form::Binary;
      if ((n == logic::kPi || n == logic::kSigma) && args.size() == 1 && args[0].is_lam()) {
        return Form::Binder;
      }
    }
    return Form::Apply;
  }

  std::string atom(const Term& t) {
    switch (t.kind()) {
      case Term::Kind::Bound: {
        size_t i = static_cast<size_t>(t.index());
        if (i < scope_.size()) return scope_[scope_.size() - 1 - i];
        return "#" + std::to_string(t.index());
      }
      case Term::Kind::Const:
        if (logic::is_logical(t)) {
          const std::string& n = t.name();
          if (n == logic::kPi || n == logic::kSigma || n == logic::kTrue || n == logic::kFalse) {
            return n;
          }
          return "(" + n + ")";
        }
        return t.name();
      default:
        return t.name();
    }
  }

  std::string operand(const Term& t) {
    switch (form(t)) {
      case Form::Atom:
      case Form::Binary:
      case Form::Apply:
        return render(t);
      default:
        return "(" + render(t) + ")";
    }
  }

  // Applications are parenthesized by render itself.
  std::string body(const Term& t) { return render(t); }

  std::string binary(const Term& t, bool parens) {
    auto [head, args] = t.spine();
    std::string s = operand(args[0]) + " " + head.name() + " " + operand(args[1]);
    return parens ? "(" + s + ")" : s;
  }

  std::string apply(const Term& t, bool parens) {
    auto [head, args] = t.spine();
    std::string s = form(head) == Form::Atom ? atom(head) : "(" + render(head) + ")";
    for (size_t i = 0; i < args.size(); ++i) {
      bool last = i + 1 == args.size();
      s += " @ ";
      s += (last && form(args[i]) == Form::Binder) ? render(args[i]) : operand(args[i]);
    }
    return parens ? "(" + s + ")" : s;
  }

  // Lambdas and Pi/Sigma applied to a lambda; directly nested binders of the
  // same kind share one bracket list.
  std::string binder(const Term& t) {
    std::string symbol;
    Term cur = t;
    auto peel = [&](const Term& u) -> std::optional<Term> {
      if (u.is_lam()) return symbol == "^" ? std::optional<Term>(u) : std::nullopt;
      if (form(u) != Form::Binder) return std::nullopt;
      const std::string q = u.fun().name() == logic::kPi ? "!" : "?";
      if (q != symbol) return std::nullopt;
      return u.arg();
    };
    Term lam = t;
    if (t.is_lam()) {
      symbol = "^";
    } else {
      symbol = t.fun().name() == logic::kPi ? "!" : "?";
      lam = t.arg();
    }
    std::string s = symbol + " [";
    size_t pushed = 0;
    bool first = true;
    while (true) {
      std::string name = fresh(lam.name());
      scope_.push_back(name);
      ++pushed;
      s += (first ? "" : ",") + name + ": " + lam.type().str();
      first = false;
      cur = lam.body();
      auto next = peel(cur);
      if (!next) break;
      lam = *next;
    }
    s += "]: " + body(cur);
    for (size_t i = 0; i < pushed; ++i) scope_.pop_back();
    return s;
  }

  std::string fresh(const std::string& hint) {
    std::string base = hint.empty() ? "X" : hint;
    auto used = [&](const std::string& n) {
      return taken_.count(n) > 0 || std::find(scope_.begin(), scope_.end(), n) != scope_.end();
    };
    if (!used(base)) return base;
    for (int i = 1;; ++i) {
      std::string n = base + std::to_string(i);
      if (!used(n)) return n;
    }
  }

  std::set<std::string> taken_;
  std::vector<std::string> scope_;
};

}  // namespace

std::string to_thf(const Term& t, bool top_level) {
  ThfPrinter p(t);
  return top_level ? p.top(t) : p.render(t);
}

std::string Term::str() const { return to_thf(*this); }

}  // namespace qml
