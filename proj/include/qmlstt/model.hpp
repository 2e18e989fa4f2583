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
#include <map>
#include <string>
#include <vector>

namespace qml {

// Set of worlds: bit w is world w.
using WorldSet = std::uint64_t;
// Accessibility relation on n worlds: bit (w * n + v) holds iff w sees v.
using RelBits = std::uint64_t;

// Finite constant-domain multimodal Kripke model. Worlds are 0..worlds-1 and
// individuals 0..domain-1; both carriers are nonempty. At most kMaxWorlds
// worlds so that a relation fits one 64-bit word.
class KripkeModel {
 public:
  static constexpr int kMaxWorlds = 8;

  struct Predicate {
    int arity = 1;
    // Extension per argument tuple; tuple (x1, ..., xk) has index
    // ((x1 * domain + x2) * domain + ...) + xk.
    std::vector<WorldSet> extension;
    friend bool operator==(const Predicate&, const Predicate&) = default;
  };

  KripkeModel() : KripkeModel(1, 1) {}
  KripkeModel(int worlds, int domain);

  int worlds() const noexcept { return worlds_; }
  int domain() const noexcept { return domain_; }
  WorldSet all_worlds() const noexcept { return (WorldSet{1} << worlds_) - 1; }

  std::map<std::string, RelBits> relations;
  // Relation functors, tabulated on the arguments they are applied to.
  std::map<std::string, std::map<RelBits, RelBits>> relfuns;
  std::map<std::string, WorldSet> props;
  std::map<std::string, Predicate> preds;
  std::map<std::string, int> individuals;

  friend bool operator==(const KripkeModel&, const KripkeModel&) = default;

 private:
  int worlds_;
  int domain_;
};

inline bool has_edge(RelBits r, int n, int w, int v) {
  return ((r >> (w * n + v)) & 1U) != 0;
}

inline RelBits add_edge(RelBits r, int n, int w, int v) {
  return r | (RelBits{1} << (w * n + v));
}

// Successors of w as a world set.
inline WorldSet successors(RelBits r, int n, int w) {
  return (r >> (w * n)) & ((WorldSet{1} << n) - 1);
}

// Values of free variables during evaluation.
struct Assignment {
  std::map<std::string, int> individuals;
  std::map<std::string, WorldSet> props;
  std::map<std::string, RelBits> relations;
};

// Guards exhaustive enumeration (relation and proposition quantifiers,
// full function spaces).
struct EvalLimits {
  std::uint64_t max_enumeration = std::uint64_t{1} << 20;
};

}  // namespace qml
