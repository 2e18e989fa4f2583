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

// Compiled form of modal and meta formulas for the direct Kripke evaluator.
// Symbols are resolved to slots once; evaluation then only reads slot values,
// which lets the model search reuse one program across millions of models.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qmlstt/formula.hpp"
#include "qmlstt/model.hpp"

namespace qml::detail {

struct RuntimeState {
  int n = 1;
  int d = 1;
  WorldSet all = 1;
  std::vector<RelBits> rels;
  std::vector<WorldSet> props;
  std::vector<int> inds;
  std::vector<const KripkeModel::Predicate*> preds;
  std::vector<const std::map<RelBits, RelBits>*> relfuns;
  EvalLimits limits;

  void resize_worlds(int worlds, int domain) {
    n = worlds;
    d = domain;
    all = (WorldSet{1} << worlds) - 1;
  }
};

// Name -> slot maps. Bound variables get fresh slots during compilation.
struct SymbolTable {
  std::map<std::string, int> rels;
  std::map<std::string, int> props;
  std::map<std::string, int> inds;
  std::map<std::string, int> preds;
  std::map<std::string, int> relfuns;
  // Ground relation-functor applications bound directly to a relation slot
  // (used by the model search); keyed by RelExpr::str().
  std::map<std::string, int> applied;
  // When set, unknown proposition names become fresh slots recorded in
  // auto_props instead of being rejected (frame validity of schemas).
  bool auto_props = false;
  std::vector<std::pair<std::string, int>> auto_props_added;
  int rel_count = 0;
  int prop_count = 0;
  int ind_count = 0;
  int pred_count = 0;
  int relfun_count = 0;

  int add_rel(const std::string& name) { return rels[name] = rel_count++; }
  int add_prop(const std::string& name) { return props[name] = prop_count++; }
  int add_ind(const std::string& name) { return inds[name] = ind_count++; }
  int add_pred(const std::string& name) { return preds[name] = pred_count++; }
  int add_relfun(const std::string& name) { return relfuns[name] = relfun_count++; }

  // Sizes the runtime vectors to the slot counts.
  void shape(RuntimeState& s) const {
    s.rels.resize(static_cast<size_t>(rel_count));
    s.props.resize(static_cast<size_t>(prop_count));
    s.inds.resize(static_cast<size_t>(ind_count));
    s.preds.resize(static_cast<size_t>(pred_count), nullptr);
    s.relfuns.resize(static_cast<size_t>(relfun_count), nullptr);
  }
};

class Program {
 public:
  int add_formula(const Formula& f, SymbolTable& table);
  int add_meta(const MetaFormula& m, SymbolTable& table);

  WorldSet worlds(int root, RuntimeState& s) const;
  bool meta(int root, RuntimeState& s) const;

 private:
  enum class Op {
    Prop,
    Atom,
    Top,
    Bot,
    Not,
    Or,
    And,
    Impl,
    Iff,
    Box,
    Dia,
    ForallInd,
    ExistsInd,
    ForallProp,
    ExistsProp,
    Always,
    Sometime,
    Valid,
    HasProperty,
    MNot,
    MAnd,
    MOr,
    MImplies,
    MIff,
    ExistsRel,
    ForallRel,
  };
  struct Node {
    Op op;
    int slot = -1;  // prop/pred/binder slot
    int a = -1;
    int b = -1;
    int rel = -1;   // index into rels_
    int rel2 = -1;  // future relation of always/sometime
    Property property = Property::Reflexive;
    std::vector<int> args;  // individual slots of an atom
  };
  struct Rel {
    bool applied = false;
    int slot = -1;  // relation slot, or relfun slot when applied
    int child = -1;
    std::string text;
  };

  class Compiler;

  RelBits rel_value(int rel, RuntimeState& s) const;

  std::vector<Node> nodes_;
  std::vector<Rel> rels_;
};

}  // namespace qml::detail

namespace qml::detail {

// Symbol table and runtime state for a fully interpreted model plus an
// assignment that shadows model symbols of the same name.
SymbolTable table_for(const KripkeModel& m, const Assignment& a);
void load_state(const KripkeModel& m, const Assignment& a, const SymbolTable& t,
                const EvalLimits& limits, RuntimeState& s);

}  // namespace qml::detail
