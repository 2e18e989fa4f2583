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

// Evaluator for expanded STT terms over full finite function spaces.
//
// Every type denotes a finite carrier and every value is an index into it:
// o is {0, 1}, mu the worlds, iota the domain, and a function f : a -> b is
// the number sum_x f(x) * |b|^x. With this encoding a proposition (mu > o) is
// a world bitmask and a relation (mu > mu > o) is exactly the RelBits layout
// used by KripkeModel, so model data needs no translation.
//
// Lambdas are kept as closures and only tabulated when a plain number is
// needed (equality, arguments of tabulated functions).

#include <bit>
#include <memory>
#include <string>
#include <vector>

#include "qmlstt/embedding.hpp"
#include "qmlstt/error.hpp"
#include "qmlstt/semantics.hpp"

namespace qml {

namespace {

constexpr std::uint64_t kCarrierLimit = std::uint64_t{1} << 62;

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && out > kCarrierLimit / base) return 0;
    out *= base;
  }
  return out;
}

}  // namespace

std::uint64_t carrier_size(const Type& t, int worlds, int domain) {
  switch (t.kind()) {
    case Type::Kind::O:
      return 2;
    case Type::Kind::Mu:
      return static_cast<std::uint64_t>(worlds);
    case Type::Kind::Iota:
      return static_cast<std::uint64_t>(domain);
    case Type::Kind::Arrow: {
      const std::uint64_t d = carrier_size(t.domain(), worlds, domain);
      const std::uint64_t c = carrier_size(t.codomain(), worlds, domain);
      if (d == 0 || c == 0) return 0;
      if (c == 1) return 1;
      return saturating_pow(c, d);
    }
  }
  return 0;
}

SttEnv stt_env(const Assignment& a) {
  SttEnv env;
  for (const auto& [name, v] : a.individuals) env.values[name] = static_cast<std::uint64_t>(v);
  for (const auto& [name, v] : a.props) env.values[name] = v;
  for (const auto& [name, v] : a.relations) env.values[name] = v;
  return env;
}

namespace {

enum class Prim { Not, Or, Eq, Pi, RelFun };

struct SNode {
  enum class Op { Data, Bound, Lam, App, Prim };
  Op op;
  Type type;
  std::uint64_t data = 0;
  int index = 0;  // Bound
  int body = -1;  // Lam
  int head = -1;  // App
  std::vector<int> args;
  Prim prim = Prim::Not;
  Type prim_arg;  // Eq / Pi: the quantified or compared type
  const std::map<RelBits, RelBits>* table = nullptr;
  std::string name;
};

struct Value;
struct EnvCell;
using EnvPtr = std::shared_ptr<const EnvCell>;

struct Value {
  enum class Kind { Data, Closure, Partial };
  Kind kind = Kind::Data;
  Type type;
  std::uint64_t data = 0;
  int node = -1;  // Closure: Lam node; Partial: Prim node
  EnvPtr env;
  std::vector<Value> args;
};

struct EnvCell {
  Value value;
  EnvPtr next;
};

int prim_arity(Prim p) {
  return p == Prim::Or || p == Prim::Eq ? 2 : 1;
}

// Converts a predicate extension to the carrier encoding of i > ... > i > mu > o.
std::uint64_t encode_predicate(const KripkeModel::Predicate& p, int domain, int worlds) {
  std::uint64_t total = 0;
  const std::uint64_t world_base = std::uint64_t{1} << worlds;
  // Work from the last argument outwards; level k encodes args k..arity-1.
  std::vector<std::uint64_t> level(p.extension.begin(), p.extension.end());
  std::uint64_t digit = world_base;
  for (int k = p.arity - 1; k >= 0; --k) {
    std::vector<std::uint64_t> next(level.size() / static_cast<size_t>(domain));
    for (size_t prefix = 0; prefix < next.size(); ++prefix) {
      std::uint64_t v = 0;
      std::uint64_t mult = 1;
      for (int x = 0; x < domain; ++x) {
        v += level[prefix * static_cast<size_t>(domain) + static_cast<size_t>(x)] * mult;
        mult *= digit;
      }
      next[prefix] = v;
    }
    digit = saturating_pow(digit, static_cast<std::uint64_t>(domain));
    level = std::move(next);
  }
  if (!level.empty()) total = level.front();
  return total;
}

class SttEvaluator {
 public:
  SttEvaluator(const KripkeModel& m, const SttEnv& env, const EvalLimits& limits)
      : m_(m), env_(env), limits_(limits) {}

  int compile(const Term& t, std::vector<Type>& ctx) {
    switch (t.kind()) {
      case Term::Kind::Bound: {
        SNode n{SNode::Op::Bound, ctx.at(ctx.size() - 1 - static_cast<size_t>(t.index()))};
        n.index = t.index();
        return push(std::move(n));
      }
      case Term::Kind::Lam: {
        ctx.push_back(t.type());
        const int body = compile(t.body(), ctx);
        ctx.pop_back();
        SNode n{SNode::Op::Lam, Type::arrow(t.type(), nodes_[static_cast<size_t>(body)].type)};
        n.body = body;
        return push(std::move(n));
      }
      case Term::Kind::App: {
        auto [head, args] = t.spine();
        SNode n{SNode::Op::App, Type::o()};
        n.head = compile(head, ctx);
        Type ty = nodes_[static_cast<size_t>(n.head)].type;
        for (const Term& a : args) {
          n.args.push_back(compile(a, ctx));
          if (!ty.is_arrow()) throw TypeError(TypeError::Kind::TypeMismatch, "ill-typed application");
          ty = ty.codomain();
        }
        n.type = ty;
        return push(std::move(n));
      }
      case Term::Kind::Const:
      case Term::Kind::Var:
        return leaf(t);
    }
    return -1;
  }

  std::uint64_t run(int root) {
    return materialize(eval(root, nullptr));
  }

 private:
  int push(SNode n) {
    nodes_.push_back(std::move(n));
    return static_cast<int>(nodes_.size()) - 1;
  }

  int prim(Prim p, const Type& type, Type arg = Type::o()) {
    SNode n{SNode::Op::Prim, type};
    n.prim = p;
    n.prim_arg = std::move(arg);
    return push(std::move(n));
  }

  int data(const Type& type, std::uint64_t v) {
    SNode n{SNode::Op::Data, type};
    n.data = v;
    return push(std::move(n));
  }

  int leaf(const Term& t) {
    const std::string& name = t.name();
    const Type& ty = t.type();
    if (t.is_const()) {
      if (name == logic::kNot) return prim(Prim::Not, ty);
      if (name == logic::kOr) return prim(Prim::Or, ty);
      if (name == logic::kEq) return prim(Prim::Eq, ty, ty.domain());
      if (name == logic::kPi) return prim(Prim::Pi, ty, ty.domain().domain());
      if (logic::is_derived(t)) {
        std::vector<Type> ctx;
        return compile(logic::definition_of_derived(t), ctx);
      }
    }
    if (auto it = env_.values.find(name); it != env_.values.end()) return data(ty, it->second);
    if (t.is_const()) {
      if (auto it = m_.relations.find(name); it != m_.relations.end()) return data(ty, it->second);
      if (auto it = m_.props.find(name); it != m_.props.end()) return data(ty, it->second);
      if (auto it = m_.individuals.find(name); it != m_.individuals.end()) {
        return data(ty, static_cast<std::uint64_t>(it->second));
      }
      if (auto it = m_.preds.find(name); it != m_.preds.end()) {
        if (carrier_size(ty, m_.worlds(), m_.domain()) == 0) {
          throw EvalError(EvalError::Kind::CapExceeded, "predicate " + name + " is too large to tabulate");
        }
        return data(ty, encode_predicate(it->second, m_.domain(), m_.worlds()));
      }
      if (auto it = m_.relfuns.find(name); it != m_.relfuns.end()) {
        const int n = prim(Prim::RelFun, ty);
        nodes_[static_cast<size_t>(n)].table = &it->second;
        nodes_[static_cast<size_t>(n)].name = name;
        return n;
      }
    }
    // Embedding operators that nothing above overrides are unfolded in place.
    if (t.is_const()) {
      const Definition* d = DefinitionTable::standard().find(name);
      if (d != nullptr && d->type == ty) {
        std::vector<Type> ctx;
        return compile(d->term, ctx);
      }
    }
    throw EvalError(EvalError::Kind::Uninterpreted, "no interpretation for " + name);
  }

  std::uint64_t carrier(const Type& t) {
    const std::uint64_t c = carrier_size(t, m_.worlds(), m_.domain());
    if (c == 0) {
      throw EvalError(EvalError::Kind::CapExceeded,
                      "carrier of type " + t.str() + " is too large to represent");
    }
    return c;
  }

  void check_loop(std::uint64_t count) {
    if (count > limits_.max_enumeration) {
      throw EvalError(EvalError::Kind::CapExceeded, "enumeration exceeds the configured limit");
    }
  }

  Value eval(int id, const EnvPtr& env) {
    const SNode& n = nodes_[static_cast<size_t>(id)];
    switch (n.op) {
      case SNode::Op::Data:
        return Value{Value::Kind::Data, n.type, n.data};
      case SNode::Op::Bound: {
        const EnvCell* cell = env.get();
        for (int i = 0; i < n.index; ++i) cell = cell->next.get();
        return cell->value;
      }
      case SNode::Op::Lam:
        return Value{Value::Kind::Closure, n.type, 0, id, env};
      case SNode::Op::Prim:
        return Value{Value::Kind::Partial, n.type, 0, id};
      case SNode::Op::App:
        return eval_app(n, env);
    }
    return {};
  }

  Value eval_app(const SNode& n, const EnvPtr& env) {
    const SNode& head = nodes_[static_cast<size_t>(n.head)];
    // Short-circuit the boolean primitives when fully applied.
    if (head.op == SNode::Op::Prim && head.prim == Prim::Or && n.args.size() == 2) {
      if (truth(eval(n.args[0], env))) return boolean(true);
      return boolean(truth(eval(n.args[1], env)));
    }
    Value f = eval(n.head, env);
    for (int a : n.args) f = apply(std::move(f), eval(a, env));
    return f;
  }

  static Value boolean(bool b) { return Value{Value::Kind::Data, Type::o(), b ? 1U : 0U}; }

  bool truth(const Value& v) { return materialize(v) != 0; }

  Value apply(Value f, Value x) {
    switch (f.kind) {
      case Value::Kind::Data: {
        const std::uint64_t i = materialize(x);
        const Type cod = f.type.codomain();
        const std::uint64_t c = carrier(cod);
        std::uint64_t v = f.data;
        if ((c & (c - 1)) == 0) {
          const int bits = std::countr_zero(c);
          v = (v >> (static_cast<std::uint64_t>(bits) * i)) & (c - 1);
        } else {
          for (std::uint64_t k = 0; k < i; ++k) v /= c;
          v %= c;
        }
        return Value{Value::Kind::Data, cod, v};
      }
      case Value::Kind::Closure: {
        const SNode& lam = nodes_[static_cast<size_t>(f.node)];
        auto cell = std::make_shared<EnvCell>(EnvCell{std::move(x), f.env});
        return eval(lam.body, cell);
      }
      case Value::Kind::Partial: {
        f.args.push_back(std::move(x));
        f.type = f.type.codomain();
        const SNode& p = nodes_[static_cast<size_t>(f.node)];
        if (static_cast<int>(f.args.size()) < prim_arity(p.prim)) return f;
        return run_prim(p, f.args);
      }
    }
    return {};
  }

  Value run_prim(const SNode& p, const std::vector<Value>& args) {
    switch (p.prim) {
      case Prim::Not:
        return boolean(!truth(args[0]));
      case Prim::Or:
        return boolean(truth(args[0]) || truth(args[1]));
      case Prim::Eq:
        return boolean(materialize(args[0]) == materialize(args[1]));
      case Prim::Pi: {
        const Value& pred = args[0];
        const std::uint64_t size = carrier(p.prim_arg);
        if (pred.kind == Value::Kind::Data) {
          // All-ones in base 2 over the carrier.
          return boolean(size >= 64 ? false : pred.data == (std::uint64_t{1} << size) - 1);
        }
        check_loop(size);
        for (std::uint64_t i = 0; i < size; ++i) {
          if (!truth(apply(pred, Value{Value::Kind::Data, p.prim_arg, i}))) return boolean(false);
        }
        return boolean(true);
      }
      case Prim::RelFun: {
        const RelBits arg = materialize(args[0]);
        if (p.table != nullptr) {
          if (auto it = p.table->find(arg); it != p.table->end()) {
            return Value{Value::Kind::Data, p.type.codomain(), it->second};
          }
        }
        throw EvalError(EvalError::Kind::Uninterpreted,
                        "no interpretation for " + p.name + " at the argument relation");
      }
    }
    return {};
  }

  // Carrier index of a value, tabulating closures and partial applications.
  std::uint64_t materialize(const Value& v) {
    if (v.kind == Value::Kind::Data) return v.data;
    carrier(v.type);
    const Type dom = v.type.domain();
    const Type cod = v.type.codomain();
    const std::uint64_t d = carrier(dom);
    const std::uint64_t c = carrier(cod);
    check_loop(d);
    std::uint64_t out = 0;
    std::uint64_t mult = 1;
    for (std::uint64_t i = 0; i < d; ++i) {
      out += materialize(apply(v, Value{Value::Kind::Data, dom, i})) * mult;
      if (i + 1 < d) mult *= c;
    }
    return out;
  }

  const KripkeModel& m_;
  const SttEnv& env_;
  const EvalLimits& limits_;
  std::vector<SNode> nodes_;
};

}  // namespace

std::uint64_t eval_stt(const KripkeModel& m, const SttEnv& env, const Term& t,
                       const EvalLimits& limits) {
  SttEvaluator ev(m, env, limits);
  std::vector<Type> ctx;
  const int root = ev.compile(t, ctx);
  return ev.run(root);
}

bool eval_stt_bool(const KripkeModel& m, const SttEnv& env, const Term& t,
                   const EvalLimits& limits) {
  if (t.loose_bound() == 0) {
    const Type ty = t.infer();
    if (ty != Type::o()) {
      throw TypeError(TypeError::Kind::TypeMismatch, "expected a term of type o, got " + ty.str());
    }
  }
  return eval_stt(m, env, t, limits) != 0;
}

}  // namespace qml
