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


#include <gtest/gtest.h>

#include <random>

#include "qmlstt/corpus.hpp"
#include "qmlstt/error.hpp"
#include "qmlstt/model_json.hpp"
#include "qmlstt/parser.hpp"
#include "qmlstt/search.hpp"
#include "qmlstt/semantics.hpp"
#include "test_util.hpp"

namespace qml {
namespace {

using Kind = Classification::Kind;

const ProblemFile& corpus(std::string_view id) {
  const SuiteEntry* e = find_entry(id);
  if (e == nullptr) throw std::runtime_error("no corpus entry " + std::string(id));
  return e->problem;
}

// Every stated axiom holds in the model.
bool satisfies_axioms(const KripkeModel& m, const ProblemFile& p) {
  for (const auto& f : p.frame_axioms) {
    if (!check_property(m, f.rel, f.property)) return false;
  }
  for (const auto& a : p.modal_axioms) {
    if (eval_worlds(m, {}, a.body) != m.all_worlds()) return false;
  }
  for (const auto& a : p.meta_axioms) {
    if (!eval_meta(m, a.body)) return false;
  }
  return true;
}

TEST(Search, ProblemSevenHasAOneWorldCountermodel) {
  Classification c = find_countermodel(corpus("ex7"));
  ASSERT_EQ(c.kind, Kind::CounterSatisfiable);
  ASSERT_TRUE(c.model);
  EXPECT_EQ(c.model->worlds(), 1);
  EXPECT_EQ(c.model->relations.at("r"), RelBits{0});
  EXPECT_EQ(c.witness_world, 0);
  EXPECT_FALSE(eval_meta(*c.model, *corpus("ex7").conjecture));
}

TEST(Search, ProblemOneIsValidUpToFourWorlds) {
  SearchBounds b;
  b.max_worlds = 4;
  b.max_domain = 2;
  Classification c = find_countermodel(corpus("ex1"), b);
  EXPECT_EQ(c.kind, Kind::ValidUpToBound);
  EXPECT_FALSE(c.model);
  EXPECT_EQ(c.bounds.max_worlds, 4);
  EXPECT_GT(c.models_examined, 0u);
}

TEST(Search, ProblemEightAFailsOnOneWorld) {
  Classification c = find_countermodel(corpus("ex8a"));
  ASSERT_EQ(c.kind, Kind::CounterSatisfiable);
  EXPECT_EQ(c.model->worlds(), 1);
  // Existential conjectures have no falsifying world.
  EXPECT_EQ(c.witness_world, -1);
}

TEST(Search, ProblemEightNeedsTwoWorlds) {
  Classification c = find_countermodel(corpus("ex8"));
  ASSERT_EQ(c.kind, Kind::CounterSatisfiable);
  EXPECT_EQ(c.model->worlds(), 2);
  EXPECT_FALSE(check_property(*c.model, RelExpr::constant("r"), Property::Transitive));
}

TEST(Search, ConsistencyHasAOneWorldModel) {
  Classification c = classify(corpus("consistency"));
  ASSERT_EQ(c.kind, Kind::Satisfiable);
  EXPECT_EQ(c.model->worlds(), 1);
  EXPECT_EQ(c.model->domain(), 1);
  EXPECT_TRUE(satisfies_axioms(*c.model, corpus("consistency")));
}

TEST(Search, UnsatisfiableAxiomsAreValidUpToBound) {
  ProblemFile p = parse_problem("propconst q. axiom valid q. axiom valid ~ q.");
  Classification none = find_model(p);
  EXPECT_EQ(none.kind, Kind::Unknown);
  EXPECT_EQ(none.reason, "no model within bounds");
  // ... and they entail anything.
  ProblemFile e = parse_problem("relation r. propconst q. axiom valid q. axiom valid ~ q. conjecture valid (box r bot).");
  EXPECT_EQ(classify(e).kind, Kind::ValidUpToBound);
}

TEST(Search, NoConjecture) {
  Classification c = find_countermodel(parse_problem("relation r."));
  EXPECT_EQ(c.kind, Kind::Unknown);
  EXPECT_EQ(c.reason, "problem has no conjecture");
}

TEST(Search, CapExceededIsUnknown) {
  SearchBounds b;
  b.max_worlds = 5;
  b.limits.max_enumeration = 1u << 10;
  Classification c = find_countermodel(corpus("ex7a"), b);
  EXPECT_EQ(c.kind, Kind::Unknown);
  EXPECT_EQ(c.reason.rfind("bounds too large for exhaustive search", 0), 0u) << c.reason;
}

TEST(Search, TimeoutIsUnknown) {
  SearchBounds b;
  b.max_worlds = 5;
  b.timeout = std::chrono::milliseconds(50);
  Classification c = find_countermodel(corpus("friends"), b);
  EXPECT_EQ(c.kind, Kind::Unknown);
  EXPECT_EQ(c.reason, "timeout");
}

TEST(Search, ClassificationNames) {
  EXPECT_EQ(classification_name(Kind::ValidUpToBound), "THM*");
  EXPECT_EQ(classification_name(Kind::CounterSatisfiable), "CSA");
  EXPECT_EQ(classification_name(Kind::Satisfiable), "SAT");
  EXPECT_EQ(classification_name(Kind::Unknown), "UNK");
  EXPECT_EQ(classification_long_name(Kind::ValidUpToBound), "ValidUpToBound");
}

TEST(Search, WitnessSoundnessAcrossCorpus) {
  for (const auto& e : suite_entries()) {
    if (e.emit_only) continue;
    Classification c = classify(e.problem);
    if (c.kind != Kind::CounterSatisfiable) continue;
    ASSERT_TRUE(c.model) << e.id;
    EXPECT_TRUE(satisfies_axioms(*c.model, e.problem)) << e.id;
    EXPECT_FALSE(eval_meta(*c.model, *e.problem.conjecture)) << e.id;
    if (c.witness_world >= 0) {
      const MetaFormula& conj = *e.problem.conjecture;
      ASSERT_EQ(conj.kind(), MetaFormula::Kind::Valid);
      WorldSet truth = eval_worlds(*c.model, {}, conj.formula());
      EXPECT_FALSE((truth >> c.witness_world) & 1U) << e.id;
      // ... and it is the least such world.
      for (int w = 0; w < c.witness_world; ++w) EXPECT_TRUE((truth >> w) & 1U) << e.id;
    }
  }
}

TEST(Search, BoundMonotonicity) {
  for (const auto& e : suite_entries()) {
    if (e.emit_only || e.expected != Kind::CounterSatisfiable) continue;
    Classification small = classify(e.problem);
    // Worlds are the outer loop of the enumeration, so growing them keeps the
    // least witness.
    SearchBounds wide;
    wide.max_worlds = 4;
    Classification big = classify(e.problem, wide);
    ASSERT_EQ(small.kind, Kind::CounterSatisfiable) << e.id;
    ASSERT_EQ(big.kind, Kind::CounterSatisfiable) << e.id;
    EXPECT_EQ(*small.model, *big.model) << e.id;
    EXPECT_EQ(small.witness_world, big.witness_world) << e.id;
  }
}

TEST(ModelJson, FieldOrderAndWitness) {
  KripkeModel m(2, 1);
  m.relations["r"] = add_edge(0, 2, 0, 1);
  m.props["q"] = 0b10;
  auto j = model_to_json(m, 1);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"worlds", "domain", "relations", "relation_functions",
                                            "propositions", "predicates", "individual_constants",
                                            "witness_world"}));
  EXPECT_EQ(j["relations"]["r"], nlohmann::json::parse("[[0,1]]"));
  EXPECT_EQ(j["propositions"]["q"], nlohmann::json::parse("[1]"));
  EXPECT_EQ(j["witness_world"], 1);
  EXPECT_TRUE(model_to_json(m)["witness_world"].is_null());
}

TEST(ModelJson, RoundTrip) {
  std::mt19937 rng(5);
  for (int i = 0; i < 200; ++i) {
    KripkeModel m = testing::random_model(rng, 4, 3);
    m.preds["two"] = {2, std::vector<WorldSet>(static_cast<size_t>(m.domain() * m.domain()), 1)};
    m.relfuns["g"][m.relations["r1"]] = m.relations["r2"];
    EXPECT_EQ(model_from_json(model_to_json(m)), m);
  }
  for (const auto& e : suite_entries()) {
    if (e.emit_only) continue;
    Classification c = classify(e.problem);
    if (c.model) EXPECT_EQ(model_from_json(model_to_json(*c.model, c.witness_world)), *c.model);
  }
}

TEST(ModelJson, RejectsMalformedInput) {
  EXPECT_THROW(model_from_json(nlohmann::ordered_json::parse(R"({"worlds": 0, "domain": 1})")), Error);
  EXPECT_THROW(model_from_json(nlohmann::ordered_json::parse(R"({"worlds": 2})")), Error);
  EXPECT_THROW(model_from_json(nlohmann::ordered_json::parse(
                   R"({"worlds": 2, "domain": 1, "relations": {"r": [[0, 5]]}})")),
               Error);
}

}  // namespace
}  // namespace qml
