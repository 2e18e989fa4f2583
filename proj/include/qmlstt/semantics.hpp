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

#include "qmlstt/formula.hpp"
#include "qmlstt/model.hpp"
#include "qmlstt/term.hpp"

namespace qml {

// -- Direct Kripke semantics -------------------------------------------------
//
// Box(r, A) holds at w iff A holds at every r-successor of w; individual
// quantifiers range over the whole (constant) domain; propositional
// quantifiers over every subset of worlds; relation quantifiers over every
// subset of worlds x worlds. Sugar nodes are evaluated by their usual
// clauses. Throws EvalError for uninterpreted symbols or when an enumeration
// exceeds the limits.

WorldSet eval_worlds(const KripkeModel& m, const Assignment& a, const Formula& f,
                     const EvalLimits& limits = {});
bool eval_direct(const KripkeModel& m, const Assignment& a, int world, const Formula& f,
                 const EvalLimits& limits = {});
bool eval_meta(const KripkeModel& m, const MetaFormula& mf, const Assignment& a = {},
               const EvalLimits& limits = {});
RelBits eval_rel(const KripkeModel& m, const Assignment& a, const RelExpr& r);

// First-order check of a relation property.
bool check_property(int worlds, RelBits r, Property p);
bool check_property(const KripkeModel& m, const RelExpr& r, Property p);

// True iff `schema` holds at every world of the frame under every valuation
// of its propositional variables and of the propositional constants and
// predicates the model leaves uninterpreted.
bool frame_valid(const KripkeModel& frame, const Formula& schema, const EvalLimits& limits = {});

// -- Set-theoretic evaluation of STT terms -------------------------------------
//
// Every finite type denotes a finite carrier: $o the booleans, mu the worlds,
// $i the individuals, and a -> b the full function space. A value is its
// index in the carrier; a function f: a -> b is encoded as
// sum_x f(x) * |b|^x, so propositions (mu > $o) are world bitmasks and
// relations (mu > mu > $o) are RelBits. Pi quantifies over the whole
// carrier of its domain type.
//
// Signature constants are read from the model: relations, propositional
// constants, predicates, individual constants and relation functors (only on
// tabulated arguments). Operator constants must have been expanded away.

// Free variable values, encoded as above.
struct SttEnv {
  std::map<std::string, std::uint64_t> values;
};

SttEnv stt_env(const Assignment& a);

// Number of elements of the carrier of `t`, or 0 if it exceeds 2^62.
std::uint64_t carrier_size(const Type& t, int worlds, int domain);

std::uint64_t eval_stt(const KripkeModel& m, const SttEnv& env, const Term& t,
                       const EvalLimits& limits = {});
bool eval_stt_bool(const KripkeModel& m, const SttEnv& env, const Term& t,
                   const EvalLimits& limits = {});

}  // namespace qml
