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

#include <cstdint>
#include <memory>
#include <string>

namespace qml {

// A simple type over the base types o (truth values), i (individuals) and
// mu (worlds), closed under the function arrow. Immutable, cheap to copy.
class Type {
 public:
  enum class Kind { O, Iota, Mu, Arrow };

  static Type o();
  static Type iota();
  static Type mu();
  static Type arrow(Type domain, Type codomain);

  // Default-constructed types are o.
  Type() : Type(o()) {}

  Kind kind() const noexcept { return node_->kind; }
  bool is_arrow() const noexcept { return node_->kind == Kind::Arrow; }
  bool is_base() const noexcept { return !is_arrow(); }

  // Only valid for arrow types.
  Type domain() const;
  Type codomain() const;

  // Number of leading arrows, e.g. 2 for mu > mu > $o.
  int arity() const noexcept;
  // Final codomain after stripping every arrow.
  Type result() const;

  friend bool operator==(const Type& a, const Type& b) noexcept;
  friend bool operator!=(const Type& a, const Type& b) noexcept { return !(a == b); }
  // Total order used for keys in maps and deterministic output.
  friend bool operator<(const Type& a, const Type& b) noexcept;

  // THF spelling with right-associated arrows, e.g. "(mu > $o) > mu > $o".
  std::string str() const;

 private:
  struct Node {
    Kind kind;
    std::shared_ptr<const Node> dom;
    std::shared_ptr<const Node> cod;
  };
  explicit Type(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  std::shared_ptr<const Node> node_;
};

// Shorthands for the types that occur everywhere in the embedding.
Type prop_type();      // mu > o
Type rel_type();       // mu > mu > o
Type relfun_type();    // (mu > mu > o) > mu > mu > o
Type pred_type(int arity);  // i > ... > i > mu > o

}  // namespace qml
