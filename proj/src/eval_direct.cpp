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

#include <string>
#include <vector>

#include "direct.hpp"
#include "qmlstt/error.hpp"
#include "qmlstt/semantics.hpp"

namespace qml {
namespace detail {

class Program::Compiler {
 public:
  Compiler(Program& prog, SymbolTable& table) : prog_(prog), table_(table) {}

  int formula(const Formula& f) {
    using K = Formula::Kind;
    Node n{};
    switch (f.kind()) {
      case K::PropVar:
      case K::PropConst:
        n.op = Op::Prop;
        n.slot = prop_slot(f.name());
        break;
      case K::Atom: {
        n.op = Op::Atom;
        auto it = table_.preds.find(f.name());
        if (it == table_.preds.end()) uninterpreted("predicate", f.name());
        n.slot = it->second;
        for (const IndTerm& t : f.args()) n.args.push_back(ind_slot(t.name));
        break;
      }
      case K::Top:
        n.op = Op::Top;
        break;
      case K::Bot:
        n.op = Op::Bot;
        break;
      case K::Not:
        n.op = Op::Not;
        n.a = formula(f.sub());
        break;
      case K::Or:
      case K::And:
      case K::Impl:
      case K::Iff:
        n.op = f.kind() == K::Or    ? Op::Or
               : f.kind() == K::And ? Op::And
               : f.kind() == K::Impl ? Op::Impl
                                     : Op::Iff;
        n.a = formula(f.sub(0));
        n.b = formula(f.sub(1));
        break;
      case K::Box:
      case K::Dia:
        n.op = f.kind() == K::Box ? Op::Box : Op::Dia;
        n.rel = rel(f.rel());
        n.a = formula(f.sub());
        break;
      case K::ForallInd:
      case K::ExistsInd:
        n.op = f.kind() == K::ForallInd ? Op::ForallInd : Op::ExistsInd;
        n.slot = table_.ind_count++;
        inds_.emplace_back(f.name(), n.slot);
        n.a = formula(f.sub());
        inds_.pop_back();
        break;
      case K::ForallProp:
      case K::ExistsProp:
        n.op = f.kind() == K::ForallProp ? Op::ForallProp : Op::ExistsProp;
        n.slot = table_.prop_count++;
        props_.emplace_back(f.name(), n.slot);
        n.a = formula(f.sub());
        props_.pop_back();
        break;
      case K::Always:
      case K::Sometime:
        n.op = f.kind() == K::Always ? Op::Always : Op::Sometime;
        n.rel = rel(RelExpr::constant("past"));
        n.rel2 = rel(RelExpr::constant("future"));
        n.a = formula(f.sub());
        break;
    }
    return push(std::move(n));
  }

  int meta(const MetaFormula& m) {
    using K = MetaFormula::Kind;
    Node n{};
    switch (m.kind()) {
      case K::Valid:
        n.op = Op::Valid;
        n.a = formula(m.formula());
        break;
      case K::HasProperty:
        n.op = Op::HasProperty;
        n.property = m.property();
        n.rel = rel(m.rel());
        break;
      case K::Not:
        n.op = Op::MNot;
        n.a = meta(m.sub());
        break;
      case K::And:
      case K::Or:
      case K::Implies:
      case K::Iff:
        n.op = m.kind() == K::And   ? Op::MAnd
               : m.kind() == K::Or  ? Op::MOr
               : m.kind() == K::Implies ? Op::MImplies
                                        : Op::MIff;
        n.a = meta(m.sub(0));
        n.b = meta(m.sub(1));
        break;
      case K::ExistsRel:
      case K::ForallRel:
        n.op = m.kind() == K::ExistsRel ? Op::ExistsRel : Op::ForallRel;
        n.slot = table_.rel_count++;
        rels_.emplace_back(m.var(), n.slot);
        n.a = meta(m.sub());
        rels_.pop_back();
        break;
    }
    return push(std::move(n));
  }

 private:
  [[noreturn]] static void uninterpreted(const char* what, const std::string& name) {
    throw EvalError(EvalError::Kind::Uninterpreted,
                    std::string("no interpretation for ") + what + " " + name);
  }

  static const int* scoped(const std::vector<std::pair<std::string, int>>& scope,
                           const std::string& name) {
    for (auto it = scope.rbegin(); it != scope.rend(); ++it) {
      if (it->first == name) return &it->second;
    }
    return nullptr;
  }

  int prop_slot(const std::string& name) {
    if (const int* s = scoped(props_, name)) return *s;
    auto it = table_.props.find(name);
    if (it != table_.props.end()) return it->second;
    if (table_.auto_props) {
      const int slot = table_.add_prop(name);
      table_.auto_props_added.emplace_back(name, slot);
      return slot;
    }
    uninterpreted("proposition", name);
  }

  int ind_slot(const std::string& name) {
    if (const int* s = scoped(inds_, name)) return *s;
    auto it = table_.inds.find(name);
    if (it == table_.inds.end()) uninterpreted("individual", name);
    return it->second;
  }

  int rel(const RelExpr& r) {
    Rel out;
    out.text = r.str();
    switch (r.kind()) {
      case RelExpr::Kind::Const:
      case RelExpr::Kind::Var: {
        if (const int* s = scoped(rels_, r.name())) {
          out.slot = *s;
          break;
        }
        auto it = table_.rels.find(r.name());
        if (it == table_.rels.end()) uninterpreted("relation", r.name());
        out.slot = it->second;
        break;
      }
      case RelExpr::Kind::Applied: {
        auto ap = table_.applied.find(out.text);
        if (ap != table_.applied.end() && r.ground()) {
          out.slot = ap->second;
          break;
        }
        auto it = table_.relfuns.find(r.name());
        if (it == table_.relfuns.end()) uninterpreted("relation functor", r.name());
        out.applied = true;
        out.slot = it->second;
        out.child = rel(r.arg());
        break;
      }
    }
    prog_.rels_.push_back(std::move(out));
    return static_cast<int>(prog_.rels_.size()) - 1;
  }

  int push(Node n) {
    prog_.nodes_.push_back(std::move(n));
    return static_cast<int>(prog_.nodes_.size()) - 1;
  }

  Program& prog_;
  SymbolTable& table_;
  std::vector<std::pair<std::string, int>> props_;
  std::vector<std::pair<std::string, int>> inds_;
  std::vector<std::pair<std::string, int>> rels_;
};

int Program::add_formula(const Formula& f, SymbolTable& table) {
  return Compiler(*this, table).formula(f);
}

int Program::add_meta(const MetaFormula& m, SymbolTable& table) {
  return Compiler(*this, table).meta(m);
}

RelBits Program::rel_value(int rel, RuntimeState& s) const {
  const Rel& r = rels_[static_cast<size_t>(rel)];
  if (!r.applied) return s.rels[static_cast<size_t>(r.slot)];
  const RelBits arg = rel_value(r.child, s);
  const auto* table = s.relfuns[static_cast<size_t>(r.slot)];
  if (table != nullptr) {
    auto it = table->find(arg);
    if (it != table->end()) return it->second;
  }
  throw EvalError(EvalError::Kind::Uninterpreted,
                  "no interpretation for " + r.text + " at the argument relation");
}

namespace {

WorldSet box_of(RelBits r, WorldSet a, int n) {
  WorldSet out = 0;
  for (int w = 0; w < n; ++w) {
    if ((successors(r, n, w) & ~a) == 0) out |= WorldSet{1} << w;
  }
  return out;
}

WorldSet dia_of(RelBits r, WorldSet a, int n) {
  WorldSet out = 0;
  for (int w = 0; w < n; ++w) {
    if ((successors(r, n, w) & a) != 0) out |= WorldSet{1} << w;
  }
  return out;
}

void check_enumeration(std::uint64_t count_log2, const EvalLimits& limits, const char* what) {
  if (count_log2 >= 63 || (std::uint64_t{1} << count_log2) > limits.max_enumeration) {
    throw EvalError(EvalError::Kind::CapExceeded,
                    std::string("enumerating ") + what + " exceeds the configured limit");
  }
}

}  // namespace

WorldSet Program::worlds(int root, RuntimeState& s) const {
  const Node& n = nodes_[static_cast<size_t>(root)];
  switch (n.op) {
    case Op::Prop:
      return s.props[static_cast<size_t>(n.slot)] & s.all;
    case Op::Atom: {
      const auto* p = s.preds[static_cast<size_t>(n.slot)];
      if (p == nullptr) {
        throw EvalError(EvalError::Kind::Uninterpreted, "no interpretation for predicate");
      }
      size_t idx = 0;
      for (int a : n.args) idx = idx * static_cast<size_t>(s.d) + static_cast<size_t>(s.inds[static_cast<size_t>(a)]);
      if (idx >= p->extension.size()) {
        throw EvalError(EvalError::Kind::Uninterpreted, "predicate extension is too short");
      }
      return p->extension[idx] & s.all;
    }
    case Op::Top:
      return s.all;
    case Op::Bot:
      return 0;
    case Op::Not:
      return ~worlds(n.a, s) & s.all;
    case Op::Or:
      return worlds(n.a, s) | worlds(n.b, s);
    case Op::And:
      return worlds(n.a, s) & worlds(n.b, s);
    case Op::Impl:
      return (~worlds(n.a, s) | worlds(n.b, s)) & s.all;
    case Op::Iff:
      return ~(worlds(n.a, s) ^ worlds(n.b, s)) & s.all;
    case Op::Box:
      return box_of(rel_value(n.rel, s), worlds(n.a, s), s.n);
    case Op::Dia:
      return dia_of(rel_value(n.rel, s), worlds(n.a, s), s.n);
    case Op::ForallInd:
    case Op::ExistsInd: {
      const bool all = n.op == Op::ForallInd;
      WorldSet acc = all ? s.all : 0;
      int& x = s.inds[static_cast<size_t>(n.slot)];
      for (x = 0; x < s.d; ++x) {
        const WorldSet v = worlds(n.a, s);
        acc = all ? (acc & v) : (acc | v);
        if (acc == (all ? 0 : s.all)) break;
      }
      return acc;
    }
    case Op::ForallProp:
    case Op::ExistsProp: {
      const bool all = n.op == Op::ForallProp;
      WorldSet acc = all ? s.all : 0;
      for (WorldSet p = 0;; ++p) {
        s.props[static_cast<size_t>(n.slot)] = p;
        const WorldSet v = worlds(n.a, s);
        acc = all ? (acc & v) : (acc | v);
        if (acc == (all ? 0 : s.all) || p == s.all) break;
      }
      return acc;
    }
    case Op::Always:
    case Op::Sometime: {
      const WorldSet a = worlds(n.a, s);
      const RelBits past = rel_value(n.rel, s);
      const RelBits future = rel_value(n.rel2, s);
      if (n.op == Op::Always) return box_of(past, a, s.n) & a & box_of(future, a, s.n);
      return dia_of(past, a, s.n) | a | dia_of(future, a, s.n);
    }
    default:
      throw EvalError(EvalError::Kind::Unsupported, "meta node evaluated as a formula");
  }
}

bool Program::meta(int root, RuntimeState& s) const {
  const Node& n = nodes_[static_cast<size_t>(root)];
  switch (n.op) {
    case Op::Valid:
      return worlds(n.a, s) == s.all;
    case Op::HasProperty:
      return check_property(s.n, rel_value(n.rel, s), n.property);
    case Op::MNot:
      return !meta(n.a, s);
    case Op::MAnd:
      return meta(n.a, s) && meta(n.b, s);
    case Op::MOr:
      return meta(n.a, s) || meta(n.b, s);
    case Op::MImplies:
      return !meta(n.a, s) || meta(n.b, s);
    case Op::MIff:
      return meta(n.a, s) == meta(n.b, s);
    case Op::ExistsRel:
    case Op::ForallRel: {
      const int edges = s.n * s.n;
      check_enumeration(static_cast<std::uint64_t>(edges), s.limits, "relations");
      const bool all = n.op == Op::ForallRel;
      const RelBits last = (RelBits{1} << edges) - 1;
      RelBits& r = s.rels[static_cast<size_t>(n.slot)];
      for (RelBits v = 0;; ++v) {
        r = v;
        if (meta(n.a, s) != all) return !all;
        if (v == last) break;
      }
      return all;
    }
    default:
      return worlds(root, s) == s.all;
  }
}

// Registers the model and assignment symbols, the latter shadowing the former.
SymbolTable table_for(const KripkeModel& m, const Assignment& a) {
  SymbolTable t;
  for (const auto& [name, _] : m.relations) t.add_rel(name);
  for (const auto& [name, _] : a.relations) t.add_rel(name);
  for (const auto& [name, _] : m.props) t.add_prop(name);
  for (const auto& [name, _] : a.props) t.add_prop(name);
  for (const auto& [name, _] : m.individuals) t.add_ind(name);
  for (const auto& [name, _] : a.individuals) t.add_ind(name);
  for (const auto& [name, _] : m.preds) t.add_pred(name);
  for (const auto& [name, _] : m.relfuns) t.add_relfun(name);
  return t;
}

void load_state(const KripkeModel& m, const Assignment& a, const SymbolTable& t,
                const EvalLimits& limits, RuntimeState& s) {
  s.resize_worlds(m.worlds(), m.domain());
  s.limits = limits;
  t.shape(s);
  const auto idx = [](const std::map<std::string, int>& slots, const std::string& name) {
    return static_cast<size_t>(slots.at(name));
  };
  for (const auto& [name, v] : m.relations) s.rels[idx(t.rels, name)] = v;
  for (const auto& [name, v] : a.relations) s.rels[idx(t.rels, name)] = v;
  for (const auto& [name, v] : m.props) s.props[idx(t.props, name)] = v;
  for (const auto& [name, v] : a.props) s.props[idx(t.props, name)] = v;
  for (const auto& [name, v] : m.individuals) s.inds[idx(t.inds, name)] = v;
  for (const auto& [name, v] : a.individuals) s.inds[idx(t.inds, name)] = v;
  for (const auto& [name, v] : m.preds) s.preds[idx(t.preds, name)] = &v;
  for (const auto& [name, v] : m.relfuns) s.relfuns[idx(t.relfuns, name)] = &v;
}

}  // namespace detail

using detail::Program;
using detail::RuntimeState;
using detail::SymbolTable;

WorldSet eval_worlds(const KripkeModel& m, const Assignment& a, const Formula& f,
                     const EvalLimits& limits) {
  SymbolTable table = detail::table_for(m, a);
  Program prog;
  const int root = prog.add_formula(f, table);
  RuntimeState s;
  detail::load_state(m, a, table, limits, s);
  return prog.worlds(root, s);
}

bool eval_direct(const KripkeModel& m, const Assignment& a, int world, const Formula& f,
                 const EvalLimits& limits) {
  if (world < 0 || world >= m.worlds()) throw Error("world index out of range");
  return ((eval_worlds(m, a, f, limits) >> world) & 1U) != 0;
}

bool eval_meta(const KripkeModel& m, const MetaFormula& mf, const Assignment& a,
               const EvalLimits& limits) {
  SymbolTable table = detail::table_for(m, a);
  Program prog;
  const int root = prog.add_meta(mf, table);
  RuntimeState s;
  detail::load_state(m, a, table, limits, s);
  return prog.meta(root, s);
}

RelBits eval_rel(const KripkeModel& m, const Assignment& a, const RelExpr& r) {
  switch (r.kind()) {
    case RelExpr::Kind::Const:
    case RelExpr::Kind::Var: {
      if (auto it = a.relations.find(r.name()); it != a.relations.end()) return it->second;
      if (auto it = m.relations.find(r.name()); it != m.relations.end()) return it->second;
      throw EvalError(EvalError::Kind::Uninterpreted, "no interpretation for relation " + r.name());
    }
    case RelExpr::Kind::Applied: {
      const RelBits arg = eval_rel(m, a, r.arg());
      auto f = m.relfuns.find(r.name());
      if (f != m.relfuns.end()) {
        if (auto it = f->second.find(arg); it != f->second.end()) return it->second;
      }
      throw EvalError(EvalError::Kind::Uninterpreted, "no interpretation for " + r.str());
    }
  }
  return 0;
}

bool check_property(int n, RelBits r, Property p) {
  const auto R = [&](int a, int b) { return has_edge(r, n, a, b); };
  switch (p) {
    case Property::Reflexive:
      for (int s = 0; s < n; ++s) {
        if (!R(s, s)) return false;
      }
      return true;
    case Property::Symmetric:
      for (int s = 0; s < n; ++s) {
        for (int t = 0; t < n; ++t) {
          if (R(s, t) && !R(t, s)) return false;
        }
      }
      return true;
    case Property::Serial:
      for (int s = 0; s < n; ++s) {
        if (successors(r, n, s) == 0) return false;
      }
      return true;
    case Property::Functional:
      for (int s = 0; s < n; ++s) {
        const WorldSet succ = successors(r, n, s);
        if (succ == 0 || (succ & (succ - 1)) != 0) return false;
      }
      return true;
    case Property::PartiallyFunctional:
      for (int s = 0; s < n; ++s) {
        const WorldSet succ = successors(r, n, s);
        if ((succ & (succ - 1)) != 0) return false;
      }
      return true;
    case Property::WeaklyDense:
      for (int s = 0; s < n; ++s) {
        for (int t = 0; t < n; ++t) {
          if (!R(s, t)) continue;
          bool found = false;
          for (int u = 0; u < n && !found; ++u) found = R(s, u) && R(u, t);
          if (!found) return false;
        }
      }
      return true;
    default:
      break;
  }
  // The remaining properties quantify over three worlds.
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) {
      for (int u = 0; u < n; ++u) {
        bool ok = true;
        switch (p) {
          case Property::Transitive:
            ok = !(R(s, t) && R(t, u)) || R(s, u);
            break;
          case Property::Euclidean:
            ok = !(R(s, t) && R(s, u)) || R(t, u);
            break;
          case Property::WeaklyConnected:
            ok = !(R(s, t) && R(s, u)) || R(t, u) || t == u || R(u, t);
            break;
          case Property::WeaklyDirected:
            ok = !(R(s, t) && R(s, u)) ||
                 (successors(r, n, t) & successors(r, n, u)) != 0;
            break;
          default:
            break;
        }
        if (!ok) return false;
      }
    }
  }
  return true;
}

bool check_property(const KripkeModel& m, const RelExpr& r, Property p) {
  return check_property(m.worlds(), eval_rel(m, {}, r), p);
}

bool frame_valid(const KripkeModel& frame, const Formula& schema, const EvalLimits& limits) {
  SymbolTable table = detail::table_for(frame, {});
  table.auto_props = true;
  Program prog;
  const int root = prog.add_formula(schema, table);
  RuntimeState s;
  detail::load_state(frame, {}, table, limits, s);
  const auto& free = table.auto_props_added;
  detail::check_enumeration(static_cast<std::uint64_t>(frame.worlds()) * free.size(), limits,
                            "proposition valuations");
  const WorldSet all = s.all;
  // Odometer over every valuation of the schema's free propositions.
  for (auto& [_, slot] : free) s.props[static_cast<size_t>(slot)] = 0;
  while (true) {
    if (prog.worlds(root, s) != all) return false;
    size_t i = 0;
    for (; i < free.size(); ++i) {
      WorldSet& v = s.props[static_cast<size_t>(free[i].second)];
      if (v < all) {
        ++v;
        break;
      }
      v = 0;
    }
    if (i == free.size()) return true;
  }
}

}  // namespace qml
