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

// Bounded model search.
//
// Models are enumerated world-count first, then domain size, then the symbol
// interpretations in a fixed order: relations, ground relation-functor
// applications, propositional constants, predicate extensions (one tuple at a
// time), individual constants. Interpretations are assigned depth first in
// increasing numeric order, so the first complete assignment that survives
// every check is the least model in lexicographic order. Each check is run as
// soon as the last symbol it mentions has a value, which prunes whole subtrees.

#include "qmlstt/search.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "direct.hpp"
#include "qmlstt/error.hpp"
#include "qmlstt/semantics.hpp"

namespace qml {

std::string_view classification_name(Classification::Kind k) {
  switch (k) {
    case Classification::Kind::ValidUpToBound:
      return "THM*";
    case Classification::Kind::CounterSatisfiable:
      return "CSA";
    case Classification::Kind::Satisfiable:
      return "SAT";
    case Classification::Kind::Unknown:
      return "UNK";
  }
  return "UNK";
}

std::string_view classification_long_name(Classification::Kind k) {
  switch (k) {
    case Classification::Kind::ValidUpToBound:
      return "ValidUpToBound";
    case Classification::Kind::CounterSatisfiable:
      return "CounterSatisfiable";
    case Classification::Kind::Satisfiable:
      return "Satisfiable";
    case Classification::Kind::Unknown:
      return "Unknown";
  }
  return "Unknown";
}

namespace {

using detail::Program;
using detail::RuntimeState;
using detail::SymbolTable;
using SK = Signature::SymbolKind;

struct Timeout {};

void collect_rels(const RelExpr& r, std::vector<RelExpr>& out) {
  out.push_back(r);
  if (r.kind() == RelExpr::Kind::Applied) collect_rels(r.arg(), out);
}

void collect_rels(const Formula& f, std::vector<RelExpr>& out) {
  if (f.kind() == Formula::Kind::Box || f.kind() == Formula::Kind::Dia) collect_rels(f.rel(), out);
  for (size_t i = 0; i < f.sub_count(); ++i) collect_rels(f.sub(i), out);
}

void collect_rels(const MetaFormula& m, std::vector<RelExpr>& out) {
  if (m.kind() == MetaFormula::Kind::Valid) {
    collect_rels(m.formula(), out);
  } else if (m.kind() == MetaFormula::Kind::HasProperty) {
    collect_rels(m.rel(), out);
  }
  for (size_t i = 0; i < m.sub_count(); ++i) collect_rels(m.sub(i), out);
}

int depth(const RelExpr& r) {
  return r.kind() == RelExpr::Kind::Applied ? 1 + depth(r.arg()) : 0;
}

struct Check {
  MetaFormula formula;
  bool is_conjecture = false;
  int stage = -1;
  int root = -1;
};

enum class Mode { Countermodel, Model };

class Searcher {
 public:
  Searcher(const ProblemFile& p, const SearchBounds& b, Mode mode)
      : p_(p), b_(b), mode_(mode) {}

  Classification run() {
    Classification out;
    out.bounds = b_;
    if (mode_ == Mode::Countermodel && !p_.conjecture) {
      out.reason = "problem has no conjecture";
      return out;
    }
    if (b_.max_worlds < 1 || b_.max_domain < 1) {
      out.reason = "search bounds must be at least 1";
      return out;
    }
    if (b_.max_worlds > KripkeModel::kMaxWorlds) {
      out.reason = "bounds too large for exhaustive search";
      return out;
    }
    gather();
    if (!unsupported_.empty()) {
      out.reason = unsupported_;
      return out;
    }
    if (b_.timeout) deadline_ = std::chrono::steady_clock::now() + *b_.timeout;

    const int max_d = has_individuals_ ? b_.max_domain : 1;
    try {
      for (int n = 1; n <= b_.max_worlds; ++n) {
        for (int d = 1; d <= max_d; ++d) {
          if (search(n, d)) {
            out.kind = mode_ == Mode::Countermodel ? Classification::Kind::CounterSatisfiable
                                                   : Classification::Kind::Satisfiable;
            out.model = build_model();
            out.witness_world = self_check(*out.model);
            out.models_examined = examined_;
            return out;
          }
        }
      }
    } catch (const Timeout&) {
      out.reason = "timeout";
      out.models_examined = examined_;
      return out;
    } catch (const EvalError& e) {
      out.reason = e.kind() == EvalError::Kind::CapExceeded
                       ? "bounds too large for exhaustive search: " + std::string(e.what())
                       : std::string(e.what());
      out.models_examined = examined_;
      return out;
    }
    out.models_examined = examined_;
    if (mode_ == Mode::Countermodel) {
      out.kind = Classification::Kind::ValidUpToBound;
    } else {
      out.reason = "no model within bounds";
    }
    return out;
  }

 private:
  struct Var {
    enum class Kind { Rel, Applied, Prop, PredTuple, Ind } kind;
    std::string symbol;  // relation, functor, proposition, predicate or individual
    int slot = -1;
    int tuple = 0;         // PredTuple
    int pred_index = -1;   // PredTuple: index into preds_
    int arg_slot = -1;     // Applied: relation slot of the argument
    bool used = true;
  };

  void gather() {
    for (const auto& s : p_.signature.symbols()) {
      switch (s.kind) {
        case SK::Relation:
          rel_names_.push_back(s.name);
          break;
        case SK::RelFun:
          relfun_names_.push_back(s.name);
          break;
        case SK::Pred:
          pred_specs_.emplace_back(s.name, s.arity);
          has_individuals_ = true;
          break;
        case SK::PropConst:
          prop_names_.push_back(s.name);
          break;
        case SK::IndConst:
          ind_names_.push_back(s.name);
          has_individuals_ = true;
          break;
      }
    }

    for (const auto& f : p_.frame_axioms) checks_.push_back({MetaFormula::has_property(f.property, f.rel)});
    for (const auto& a : p_.modal_axioms) checks_.push_back({MetaFormula::valid(a.body)});
    for (const auto& a : p_.meta_axioms) checks_.push_back({a.body});
    if (p_.conjecture) checks_.push_back({*p_.conjecture, true});

    std::vector<RelExpr> rels;
    std::set<std::string> mentioned;
    for (const auto& c : checks_) {
      collect_rels(c.formula, rels);
      mentioned.merge(free_symbols(c.formula));
    }
    // The temporal relations may be used without a declaration.
    for (const char* t : {"past", "future"}) {
      if (mentioned.count(t) != 0 && p_.signature.find(t) == nullptr) rel_names_.push_back(t);
    }
    std::map<std::string, RelExpr> applied;
    for (const auto& r : rels) {
      if (r.kind() != RelExpr::Kind::Applied) continue;
      if (!r.ground()) {
        unsupported_ = "relation functor applied to a quantified relation (" + r.str() + ")";
        return;
      }
      applied.emplace(r.str(), r);
    }
    applied_.assign(applied.begin(), applied.end());
    std::stable_sort(applied_.begin(), applied_.end(), [](const auto& x, const auto& y) {
      return depth(x.second) < depth(y.second);
    });
    mentioned_ = std::move(mentioned);
  }

  // Lays out slots and variables for one (worlds, domain) pair and compiles
  // every check against them.
  void prepare(int n, int d) {
    table_ = SymbolTable{};
    prog_ = Program{};
    vars_.clear();
    preds_.clear();
    state_ = RuntimeState{};
    state_.resize_worlds(n, d);
    state_.limits = b_.limits;

    const auto used = [&](const std::string& s) { return mentioned_.count(s) != 0; };
    for (const auto& r : rel_names_) {
      vars_.push_back({Var::Kind::Rel, r, table_.add_rel(r)});
      vars_.back().used = used(r);
    }
    for (const auto& f : relfun_names_) table_.add_relfun(f);
    for (const auto& [text, r] : applied_) {
      const int slot = table_.rel_count++;
      table_.applied[text] = slot;
      const RelExpr& arg = r.arg();
      const int arg_slot = arg.kind() == RelExpr::Kind::Applied ? table_.applied.at(arg.str())
                                                                : table_.rels.at(arg.name());
      Var v{Var::Kind::Applied, r.name(), slot};
      v.arg_slot = arg_slot;
      vars_.push_back(v);
    }
    for (const auto& pname : prop_names_) {
      vars_.push_back({Var::Kind::Prop, pname, table_.add_prop(pname)});
      vars_.back().used = used(pname);
    }
    preds_.reserve(pred_specs_.size());
    for (const auto& [name, arity] : pred_specs_) {
      const int slot = table_.add_pred(name);
      KripkeModel::Predicate pred;
      pred.arity = arity;
      std::size_t tuples = 1;
      for (int i = 0; i < arity; ++i) tuples *= static_cast<std::size_t>(d);
      pred.extension.assign(tuples, 0);
      preds_.push_back(std::move(pred));
      for (std::size_t t = 0; t < tuples; ++t) {
        Var v{Var::Kind::PredTuple, name, slot};
        v.tuple = static_cast<int>(t);
        v.pred_index = static_cast<int>(preds_.size()) - 1;
        v.used = used(name);
        vars_.push_back(v);
      }
    }
    for (const auto& iname : ind_names_) {
      vars_.push_back({Var::Kind::Ind, iname, table_.add_ind(iname)});
      vars_.back().used = used(iname);
    }

    for (auto& c : checks_) {
      c.root = prog_.add_meta(c.formula, table_);
      const auto syms = free_symbols(c.formula);
      c.stage = -1;
      for (int i = 0; i < static_cast<int>(vars_.size()); ++i) {
        if (syms.count(vars_[static_cast<size_t>(i)].symbol) != 0) c.stage = i;
      }
    }
    table_.shape(state_);
    for (size_t i = 0; i < preds_.size(); ++i) state_.preds[i] = &preds_[i];
    stage_checks_.assign(vars_.size() + 1, {});
    for (size_t i = 0; i < checks_.size(); ++i) {
      stage_checks_[static_cast<size_t>(checks_[i].stage + 1)].push_back(static_cast<int>(i));
    }
  }

  bool passes(int stage) {
    for (int i : stage_checks_[static_cast<size_t>(stage + 1)]) {
      const Check& c = checks_[static_cast<size_t>(i)];
      const bool v = prog_.meta(c.root, state_);
      const bool wanted = c.is_conjecture && mode_ == Mode::Countermodel ? false : true;
      if (v != wanted) return false;
    }
    return true;
  }

  bool search(int n, int d) {
    if (n * n > 62) throw EvalError(EvalError::Kind::CapExceeded, "too many worlds");
    prepare(n, d);
    if (!passes(-1)) return false;
    return dfs(0);
  }

  void tick() {
    ++examined_;
    if (deadline_ && (examined_ & 1023U) == 0 && std::chrono::steady_clock::now() > *deadline_) {
      throw Timeout{};
    }
  }

  bool dfs(size_t k) {
    if (k == vars_.size()) return true;
    Var& v = vars_[k];
    const int n = state_.n;
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
    switch (v.kind) {
      case Var::Kind::Rel:
      case Var::Kind::Applied:
        hi = (std::uint64_t{1} << (n * n)) - 1;
        break;
      case Var::Kind::Prop:
      case Var::Kind::PredTuple:
        hi = state_.all;
        break;
      case Var::Kind::Ind:
        hi = static_cast<std::uint64_t>(state_.d - 1);
        break;
    }
    if (!v.used) hi = 0;
    if (v.kind == Var::Kind::Applied) {
      // Functionality: the same functor on equal arguments gives equal results.
      const RelBits arg = state_.rels[static_cast<size_t>(v.arg_slot)];
      for (size_t j = 0; j < k; ++j) {
        const Var& u = vars_[j];
        if (u.kind == Var::Kind::Applied && u.symbol == v.symbol &&
            state_.rels[static_cast<size_t>(u.arg_slot)] == arg) {
          lo = hi = state_.rels[static_cast<size_t>(u.slot)];
          break;
        }
      }
    }
    for (std::uint64_t x = lo;; ++x) {
      assign(v, x);
      tick();
      if (passes(static_cast<int>(k)) && dfs(k + 1)) return true;
      if (x == hi) break;
    }
    return false;
  }

  void assign(const Var& v, std::uint64_t x) {
    const auto slot = static_cast<size_t>(v.slot);
    switch (v.kind) {
      case Var::Kind::Rel:
      case Var::Kind::Applied:
        state_.rels[slot] = x;
        break;
      case Var::Kind::Prop:
        state_.props[slot] = x;
        break;
      case Var::Kind::PredTuple:
        preds_[static_cast<size_t>(v.pred_index)].extension[static_cast<size_t>(v.tuple)] = x;
        break;
      case Var::Kind::Ind:
        state_.inds[slot] = static_cast<int>(x);
        break;
    }
  }

  KripkeModel build_model() const {
    KripkeModel m(state_.n, state_.d);
    for (const auto& name : rel_names_) {
      m.relations[name] = state_.rels[static_cast<size_t>(table_.rels.at(name))];
    }
    for (const auto& f : relfun_names_) m.relfuns[f];
    for (const auto& v : vars_) {
      if (v.kind != Var::Kind::Applied) continue;
      m.relfuns[v.symbol][state_.rels[static_cast<size_t>(v.arg_slot)]] =
          state_.rels[static_cast<size_t>(v.slot)];
    }
    for (const auto& name : prop_names_) {
      m.props[name] = state_.props[static_cast<size_t>(table_.props.at(name))];
    }
    for (size_t i = 0; i < pred_specs_.size(); ++i) m.preds[pred_specs_[i].first] = preds_[i];
    for (const auto& name : ind_names_) {
      m.individuals[name] = state_.inds[static_cast<size_t>(table_.inds.at(name))];
    }
    return m;
  }

  // Re-evaluates every check on the finished model from scratch and returns
  // the least falsifying world of a `valid` conjecture (or -1).
  int self_check(const KripkeModel& m) const {
    for (const auto& c : checks_) {
      const bool v = eval_meta(m, c.formula, {}, b_.limits);
      const bool wanted = !(c.is_conjecture && mode_ == Mode::Countermodel);
      if (v != wanted) throw std::logic_error("model search produced a model that fails re-evaluation");
    }
    if (mode_ == Mode::Countermodel && p_.conjecture->kind() == MetaFormula::Kind::Valid) {
      const WorldSet holds = eval_worlds(m, {}, p_.conjecture->formula(), b_.limits);
      for (int w = 0; w < m.worlds(); ++w) {
        if (((holds >> w) & 1U) == 0) return w;
      }
    }
    return -1;
  }

  const ProblemFile& p_;
  SearchBounds b_;
  Mode mode_;
  std::optional<std::chrono::steady_clock::time_point> deadline_;
  std::uint64_t examined_ = 0;
  std::string unsupported_;
  bool has_individuals_ = false;

  std::vector<std::string> rel_names_;
  std::vector<std::string> relfun_names_;
  std::vector<std::string> prop_names_;
  std::vector<std::string> ind_names_;
  std::vector<std::pair<std::string, int>> pred_specs_;
  std::vector<std::pair<std::string, RelExpr>> applied_;
  std::set<std::string> mentioned_;
  std::vector<Check> checks_;

  SymbolTable table_;
  Program prog_;
  RuntimeState state_;
  std::vector<Var> vars_;
  std::vector<KripkeModel::Predicate> preds_;
  std::vector<std::vector<int>> stage_checks_;
};

}  // namespace

Classification find_countermodel(const ProblemFile& p, const SearchBounds& b) {
  return Searcher(p, b, Mode::Countermodel).run();
}

Classification find_model(const ProblemFile& p, const SearchBounds& b) {
  return Searcher(p, b, Mode::Model).run();
}

Classification classify(const ProblemFile& p, const SearchBounds& b) {
  return p.conjecture ? find_countermodel(p, b) : find_model(p, b);
}

}  // namespace qml
