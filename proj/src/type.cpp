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

#include "qmlstt/type.hpp"

#include <stdexcept>

#include "qmlstt/error.hpp"

namespace qml {

Type Type::o() {
  static const Type t(std::make_shared<const Node>(Node{Kind::O, nullptr, nullptr}));
  return t;
}

Type Type::iota() {
  static const Type t(std::make_shared<const Node>(Node{Kind::Iota, nullptr, nullptr}));
  return t;
}

Type Type::mu() {
  static const Type t(std::make_shared<const Node>(Node{Kind::Mu, nullptr, nullptr}));
  return t;
}

Type Type::arrow(Type domain, Type codomain) {
  return Type(std::make_shared<const Node>(
      Node{Kind::Arrow, std::move(domain.node_), std::move(codomain.node_)}));
}

Type Type::domain() const {
  if (!is_arrow()) throw Error("domain() of non-arrow type " + str());
  return Type(node_->dom);
}

Type Type::codomain() const {
  if (!is_arrow()) throw Error("codomain() of non-arrow type " + str());
  return Type(node_->cod);
}

int Type::arity() const noexcept {
  int n = 0;
  for (const Node* p = node_.get(); p->kind == Kind::Arrow; p = p->cod.get()) ++n;
  return n;
}

Type Type::result() const {
  std::shared_ptr<const Node> p = node_;
  while (p->kind == Kind::Arrow) p = p->cod;
  return Type(p);
}


bool operator==(const Type& a, const Type& b) noexcept {
  const auto* x = a.node_.get();
  const auto* y = b.node_.get();
  while (x != y) {
    if (x->kind != y->kind) return false;
    if (x->kind != Type::Kind::Arrow) return true;
    if (!(Type(x->dom) == Type(y->dom))) return false;
    x = x->cod.get();
    y = y->cod.get();
  }
  return true;
}

bool operator<(const Type& a, const Type& b) noexcept {
  if (a.kind() != b.kind()) return a.kind() < b.kind();
  if (!a.is_arrow()) return false;
  Type ad = a.domain(), bd = b.domain();
  if (ad != bd) return ad < bd;
  return a.codomain() < b.codomain();
}

std::string Type::str() const {
  switch (kind()) {
    case Kind::O:
      return "$o";
    case Kind::Iota:
      return "$i";
    case Kind::Mu:
      return "mu";
    case Kind::Arrow: {
      Type d = domain();
      std::string lhs = d.is_arrow() ? "(" + d.str() + ")" : d.str();
      return lhs + " > " + codomain().str();
    }
  }
  return "?";
}

Type prop_type() { return Type::arrow(Type::mu(), Type::o()); }
Type rel_type() { return Type::arrow(Type::mu(), prop_type()); }
Type relfun_type() { return Type::arrow(rel_type(), rel_type()); }

Type pred_type(int arity) {
  Type t = prop_type();
  for (int i = 0; i < arity; ++i) t = Type::arrow(Type::iota(), t);
  return t;
}

}  // namespace qml
