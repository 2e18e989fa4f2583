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

#include "qmlstt/parser.hpp"

#include <cctype>
#include <set>
#include <utility>
#include <vector>

#include "qmlstt/error.hpp"

namespace qml {

namespace {

struct Token {
  enum class Kind { Ident, Number, Symbol, End };
  Kind kind;
  std::string text;
  int line;
  int column;
};

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  size_t i = 0;
  auto advance = [&](size_t n) {
    for (size_t k = 0; k < n; ++k) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '%') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    const int tl = line;
    const int tc = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i;
      while (j < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) {
        ++j;
      }
      out.push_back({Token::Kind::Ident, std::string(src.substr(i, j - i)), tl, tc});
      advance(j - i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Token::Kind::Number, std::string(src.substr(i, j - i)), tl, tc});
      advance(j - i);
      continue;
    }
    if (src.substr(i, 3) == "<=>") {
      out.push_back({Token::Kind::Symbol, "<=>", tl, tc});
      advance(3);
      continue;
    }
    if (src.substr(i, 2) == "=>") {
      out.push_back({Token::Kind::Symbol, "=>", tl, tc});
      advance(2);
      continue;
    }
    if (std::string_view("~&|().,:/").find(c) != std::string_view::npos) {
      out.push_back({Token::Kind::Symbol, std::string(1, c), tl, tc});
      advance(1);
      continue;
    }
    throw ParseError(ParseError::Kind::Lexical, tl, tc,
                     std::string("unexpected character '") + c + "'");
  }
  out.push_back({Token::Kind::End, "", line, col});
  return out;
}

const std::set<std::string>& reserved_words() {
  static const std::set<std::string> words = {
      "box",     "dia",         "forall_ind", "exists_ind", "forall_prop", "exists_prop",
      "top",     "bot",         "valid",      "always",     "sometime",    "not",
      "and",     "or",          "impl",       "iff",        "exists",      "forall",
      "problem", "relation",    "relfun",     "pred",       "propconst",   "indconst",
      "frame",   "axiom",       "conjecture", "expect",
  };
  return words;
}

enum class VarKind { Ind, Prop, Rel };

std::string_view var_kind_name(VarKind k) {
  switch (k) {
    case VarKind::Ind:
      return "an individual variable";
    case VarKind::Prop:
      return "a propositional variable";
    case VarKind::Rel:
      return "a relation variable";
  }
  return "a variable";
}

class Parser {
 public:
  Parser(std::string_view text, std::string default_name) : toks_(tokenize(text)) {
    problem_.name = std::move(default_name);
  }

  ProblemFile run() {
    while (peek().kind != Token::Kind::End) statement();
    return std::move(problem_);
  }

 private:
  using SK = Signature::SymbolKind;

  const Token& peek(size_t ahead = 0) const {
    size_t k = std::min(pos_ + ahead, toks_.size() - 1);
    return toks_[k];
  }
  const Token& next() {
    const Token& t = toks_[pos_];
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }
  bool at(std::string_view sym) const {
    const Token& t = peek();
    return (t.kind == Token::Kind::Symbol || t.kind == Token::Kind::Ident) && t.text == sym;
  }
  bool accept(std::string_view sym) {
    if (!at(sym)) return false;
    next();
    return true;
  }

  [[noreturn]] void fail(const Token& t, ParseError::Kind kind, const std::string& msg) const {
    throw ParseError(kind, t.line, t.column, msg);
  }
  [[noreturn]] void unexpected(const Token& t, std::string_view wanted) const {
    std::string got = t.kind == Token::Kind::End ? "end of input" : "'" + t.text + "'";
    fail(t, ParseError::Kind::Syntax, "expected " + std::string(wanted) + ", found " + got);
  }

  void expect(std::string_view sym) {
    if (!accept(sym)) unexpected(peek(), "'" + std::string(sym) + "'");
  }

  const Token& ident(std::string_view what) {
    if (peek().kind != Token::Kind::Ident) unexpected(peek(), what);
    return next();
  }

  const Token& symbol_name() {
    const Token& t = ident("a symbol name");
    if (!std::islower(static_cast<unsigned char>(t.text[0]))) {
      fail(t, ParseError::Kind::Syntax, "symbol names start with a lowercase letter: " + t.text);
    }
    if (reserved_words().count(t.text)) {
      fail(t, ParseError::Kind::Syntax, "reserved word used as a symbol: " + t.text);
    }
    return t;
  }

  const Token& variable_name() {
    const Token& t = ident("a variable name");
    if (!std::isupper(static_cast<unsigned char>(t.text[0]))) {
      fail(t, ParseError::Kind::Syntax,
           "variable names start with an uppercase letter: " + t.text);
    }
    return t;
  }

  void declare(const Token& t, SK kind, int arity = 0) {
    if (problem_.signature.find(t.text) != nullptr) {
      fail(t, ParseError::Kind::Duplicate, "duplicate symbol " + t.text);
    }
    problem_.signature.add(t.text, kind, arity);
  }

  void statement() {
    const Token& kw = ident("a declaration keyword");
    const std::string k = kw.text;
    if (k == "problem") {
      problem_.name = ident("a problem name").text;
    } else if (k == "relation" || k == "relfun" || k == "propconst" || k == "indconst") {
      SK kind = k == "relation"    ? SK::Relation
                : k == "relfun"    ? SK::RelFun
                : k == "propconst" ? SK::PropConst
                                   : SK::IndConst;
      do {
        declare(symbol_name(), kind);
      } while (accept(","));
    } else if (k == "pred") {
      do {
        const Token& name = symbol_name();
        expect("/");
        const Token& n = next();
        if (n.kind != Token::Kind::Number) unexpected(n, "an arity");
        int arity = std::stoi(n.text);
        if (arity < 1) fail(n, ParseError::Kind::Syntax, "predicate arity must be positive");
        declare(name, SK::Pred, arity);
      } while (accept(","));
    } else if (k == "frame") {
      const Token& pt = ident("a relation property");
      auto p = property_from_name(pt.text);
      if (!p) fail(pt, ParseError::Kind::UnknownSymbol, "unknown relation property " + pt.text);
      problem_.frame_axioms.push_back({*p, rel_expr()});
    } else if (k == "axiom") {
      std::string label;
      if (peek().kind == Token::Kind::Ident && peek(1).text == ":" &&
          peek(1).kind == Token::Kind::Symbol) {
        label = next().text;
        next();
      }
      MetaFormula m = meta();
      if (m.kind() == MetaFormula::Kind::Valid) {
        problem_.modal_axioms.push_back({label, m.formula()});
      } else {
        problem_.meta_axioms.push_back({label, m});
      }
    } else if (k == "conjecture") {
      if (problem_.conjecture) fail(kw, ParseError::Kind::Duplicate, "second conjecture");
      problem_.conjecture = meta();
    } else if (k == "expect") {
      const Token& e = ident("theorem, csa, sat or unknown");
      if (e.text == "theorem") {
        problem_.expected = Expectation::Theorem;
      } else if (e.text == "csa") {
        problem_.expected = Expectation::CounterSatisfiable;
      } else if (e.text == "sat") {
        problem_.expected = Expectation::Satisfiable;
      } else if (e.text == "unknown") {
        problem_.expected = Expectation::Unknown;
      } else {
        unexpected(e, "theorem, csa, sat or unknown");
      }
    } else {
      fail(kw, ParseError::Kind::Syntax, "unknown declaration '" + k + "'");
    }
    expect(".");
  }

  // -- scopes ---------------------------------------------------------------

  const VarKind* lookup_var(const std::string& name) const {
    for (auto it = scope_.rbegin(); it != scope_.rend(); ++it) {
      if (it->first == name) return &it->second;
    }
    return nullptr;
  }

  void require_var(const Token& t, VarKind kind) const {
    const VarKind* k = lookup_var(t.text);
    if (k == nullptr) fail(t, ParseError::Kind::UnboundVariable, "unbound variable " + t.text);
    if (*k != kind) {
      fail(t, ParseError::Kind::Syntax,
           t.text + " is " + std::string(var_kind_name(*k)) + ", expected " +
               std::string(var_kind_name(kind)));
    }
  }

  const Signature::Symbol& require_symbol(const Token& t, SK kind, std::string_view what) const {
    const auto* s = problem_.signature.find(t.text);
    if (s == nullptr) fail(t, ParseError::Kind::UnknownSymbol, "unknown symbol " + t.text);
    if (s->kind != kind) {
      fail(t, ParseError::Kind::Syntax, t.text + " is not " + std::string(what));
    }
    return *s;
  }

  static bool is_var_name(const std::string& s) {
    return std::isupper(static_cast<unsigned char>(s[0])) != 0;
  }

  // Parses `A, B.` binder lists and returns the names.
  std::vector<std::string> binders(VarKind kind) {
    std::vector<std::string> names;
    do {
      names.push_back(variable_name().text);
      scope_.emplace_back(names.back(), kind);
    } while (accept(","));
    expect(".");
    return names;
  }

  void pop(size_t n) { scope_.resize(scope_.size() - n); }

  // -- relation expressions ---------------------------------------------------

  RelExpr rel_expr() {
    if (accept("(")) {
      RelExpr r = rel_expr();
      expect(")");
      return r;
    }
    const Token& t = ident("a relation");
    if (is_var_name(t.text)) {
      require_var(t, VarKind::Rel);
      return RelExpr::variable(t.text);
    }
    const auto* s = problem_.signature.find(t.text);
    if (s == nullptr) fail(t, ParseError::Kind::UnknownSymbol, "unknown symbol " + t.text);
    if (s->kind == SK::Relation) return RelExpr::constant(t.text);
    if (s->kind == SK::RelFun) {
      const Token& open = peek();
      if (!accept("(")) {
        fail(open, ParseError::Kind::ArityMismatch,
             "relation functor " + t.text + " expects one relation argument");
      }
      RelExpr arg = rel_expr();
      expect(")");
      return RelExpr::applied(t.text, std::move(arg));
    }
    fail(t, ParseError::Kind::Syntax, t.text + " is not a relation");
  }

  // -- meta formulas ------------------------------------------------------------

  MetaFormula meta() {
    const Token& t = peek();
    if (accept("(")) {
      MetaFormula m = meta();
      expect(")");
      return m;
    }
    if (accept("~") || accept("not")) return MetaFormula::neg(meta());
    if (accept("&") || accept("and")) {
      MetaFormula a = meta();
      return MetaFormula::conj(a, meta());
    }
    if (accept("|") || accept("or")) {
      MetaFormula a = meta();
      return MetaFormula::disj(a, meta());
    }
    if (accept("=>") || accept("impl")) {
      MetaFormula a = meta();
      return MetaFormula::implies(a, meta());
    }
    if (accept("<=>") || accept("iff")) {
      MetaFormula a = meta();
      return MetaFormula::iff(a, meta());
    }
    if (accept("valid")) return MetaFormula::valid(formula());
    if (at("exists") || at("forall")) {
      bool exists = next().text == "exists";
      auto names = binders(VarKind::Rel);
      MetaFormula body = meta();
      pop(names.size());
      for (auto it = names.rbegin(); it != names.rend(); ++it) {
        body = exists ? MetaFormula::exists_rel(*it, body) : MetaFormula::forall_rel(*it, body);
      }
      return body;
    }
    if (t.kind == Token::Kind::Ident) {
      if (auto p = property_from_name(t.text)) {
        next();
        return MetaFormula::has_property(*p, rel_expr());
      }
    }
    unexpected(t, "a meta-level statement");
  }

  // -- modal formulas -------------------------------------------------------------

  Formula formula() {
    const Token& t = peek();
    if (accept("(")) {
      Formula f = formula();
      expect(")");
      return f;
    }
    if (accept("~") || accept("not")) return Formula::neg(formula());
    if (accept("&") || accept("and")) {
      Formula a = formula();
      return Formula::conj(a, formula());
    }
    if (accept("|") || accept("or")) {
      Formula a = formula();
      return Formula::disj(a, formula());
    }
    if (accept("=>") || accept("impl")) {
      Formula a = formula();
      return Formula::impl(a, formula());
    }
    if (accept("<=>") || accept("iff")) {
      Formula a = formula();
      return Formula::iff(a, formula());
    }
    if (accept("box")) {
      RelExpr r = rel_expr();
      return Formula::box(r, formula());
    }
    if (accept("dia")) {
      RelExpr r = rel_expr();
      return Formula::dia(r, formula());
    }
    if (accept("top")) return Formula::top();
    if (accept("bot")) return Formula::bot();
    if (accept("always")) return Formula::always(formula());
    if (accept("sometime")) return Formula::sometime(formula());
    if (at("forall_ind") || at("exists_ind") || at("forall_prop") || at("exists_prop")) {
      const std::string q = next().text;
      const bool ind = q.ends_with("_ind");
      auto names = binders(ind ? VarKind::Ind : VarKind::Prop);
      Formula body = formula();
      pop(names.size());
      for (auto it = names.rbegin(); it != names.rend(); ++it) {
        if (q == "forall_ind") body = Formula::forall_ind(*it, body);
        if (q == "exists_ind") body = Formula::exists_ind(*it, body);
        if (q == "forall_prop") body = Formula::forall_prop(*it, body);
        if (q == "exists_prop") body = Formula::exists_prop(*it, body);
      }
      return body;
    }
    if (t.kind == Token::Kind::Ident) {
      next();
      if (is_var_name(t.text)) {
        require_var(t, VarKind::Prop);
        return Formula::prop_var(t.text);
      }
      const auto* s = problem_.signature.find(t.text);
      if (s == nullptr) fail(t, ParseError::Kind::UnknownSymbol, "unknown symbol " + t.text);
      if (s->kind == SK::PropConst) return Formula::prop_const(t.text);
      if (s->kind == SK::Pred) return atom(t, *s);
      fail(t, ParseError::Kind::Syntax, t.text + " is not a proposition");
    }
    unexpected(t, "a modal formula");
  }

  Formula atom(const Token& pred, const Signature::Symbol& sym) {
    expect("(");
    std::vector<IndTerm> args;
    if (!at(")")) {
      do {
        const Token& a = ident("an individual");
        if (is_var_name(a.text)) {
          require_var(a, VarKind::Ind);
          args.push_back({true, a.text});
        } else {
          require_symbol(a, SK::IndConst, "an individual constant");
          args.push_back({false, a.text});
        }
      } while (accept(","));
    }
    expect(")");
    if (static_cast<int>(args.size()) != sym.arity) {
      fail(pred, ParseError::Kind::ArityMismatch,
           pred.text + " expects " + std::to_string(sym.arity) + " argument(s), got " +
               std::to_string(args.size()));
    }
    return Formula::atom(pred.text, std::move(args));
  }

  std::vector<Token> toks_;
  size_t pos_ = 0;
  ProblemFile problem_;
  std::vector<std::pair<std::string, VarKind>> scope_;
};

}  // namespace

ProblemFile parse_problem(std::string_view text, std::string default_name) {
  return Parser(text, std::move(default_name)).run();
}

}  // namespace qml
