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

#include "qmlstt/embedding.hpp"
#include "qmlstt/error.hpp"
#include "qmlstt/semantics.hpp"
#include "test_util.hpp"

namespace qml {
namespace {

const RelExpr r = RelExpr::constant("r");
const Formula A = Formula::prop_var("A");

KripkeModel frame(int n, RelBits bits) {
  KripkeModel m(n, 1);
  m.relations["r"] = bits;
  return m;
}

Term op(std::string_view name) { return DefinitionTable::standard().constant(name); }

TEST(EvalDirect, VacuousBox) {
  KripkeModel m = frame(1, 0);
  EXPECT_TRUE(eval_direct(m, {}, 0, Formula::box(r, Formula::bot())));
}

TEST(EvalDirect, LeastCountermodelOfProblemSeven) {
  KripkeModel m = frame(1, 0);
  Assignment a;
  a.props["A"] = 0;
  EXPECT_FALSE(eval_direct(m, a, 0, Formula::impl(Formula::box(r, A), A)));
}

TEST(EvalDirect, UninterpretedSymbolThrows) {
  KripkeModel m = frame(1, 0);
  try {
    eval_direct(m, {}, 0, Formula::prop_const("nowhere"));
    FAIL();
  } catch (const EvalError& e) {
    EXPECT_EQ(e.kind(), EvalError::Kind::Uninterpreted);
  }
}

TEST(EvalDirect, PredicatesAndIndividuals) {
  KripkeModel m(2, 2);
  m.preds["k"] = {1, {0b01, 0b10}};
  m.individuals["c"] = 1;
  EXPECT_EQ(eval_worlds(m, {}, Formula::atom("k", {{false, "c"}})), WorldSet{0b10});
  // Constant domain: "some individual has k" holds everywhere.
  Formula ex = Formula::exists_ind("X", Formula::atom("k", {{true, "X"}}));
  EXPECT_EQ(eval_worlds(m, {}, ex), WorldSet{0b11});
  Formula all = Formula::forall_ind("X", Formula::atom("k", {{true, "X"}}));
  EXPECT_EQ(eval_worlds(m, {}, all), WorldSet{0});
}

class RandomModels : public ::testing::Test {
 protected:
  std::mt19937 rng{99};
};

TEST_F(RandomModels, BoxOfPropositionalExistenceIsValid) {
  Formula f = Formula::box(RelExpr::constant("r1"), Formula::exists_prop("P", Formula::prop_var("P")));
  Signature sig = testing::oracle_signature();
  Term expanded = expand(translate_meta(MetaFormula::valid(f), sig));
  for (int i = 0; i < 50; ++i) {
    KripkeModel m = testing::random_model(rng);
    EXPECT_EQ(eval_worlds(m, {}, f), m.all_worlds());
    EXPECT_TRUE(eval_stt_bool(m, {}, expanded));
  }
}

TEST(EvalStt, TruthAtAWorld) {
  KripkeModel m(3, 1);
  for (int w = 0; w < 3; ++w) {
    EXPECT_TRUE(testing::stt_at_world(m, {}, expand(op("mtrue")), w));
    EXPECT_TRUE(testing::stt_at_world(m, {}, op("mtrue"), w));
    EXPECT_FALSE(testing::stt_at_world(m, {}, op("mfalse"), w));
  }
}

TEST(EvalStt, TransitivityCounterexample) {
  KripkeModel m = frame(2, 0);
  m.relations["r"] = add_edge(add_edge(0, 2, 0, 1), 2, 1, 0);
  Term t = Term::app(op("mtransitive"), Term::constant("r", rel_type()));
  EXPECT_FALSE(eval_stt_bool(m, {}, t));
  EXPECT_FALSE(eval_stt_bool(m, {}, expand(t)));
  EXPECT_FALSE(check_property(m, r, Property::Transitive));
}

TEST(EvalStt, CarrierSizes) {
  EXPECT_EQ(carrier_size(Type::o(), 3, 2), 2u);
  EXPECT_EQ(carrier_size(Type::mu(), 3, 2), 3u);
  EXPECT_EQ(carrier_size(Type::iota(), 3, 2), 2u);
  EXPECT_EQ(carrier_size(prop_type(), 3, 2), 8u);
  EXPECT_EQ(carrier_size(rel_type(), 3, 2), 512u);
  EXPECT_EQ(carrier_size(Type::arrow(prop_type(), Type::o()), 3, 2), 256u);
}

TEST(EvalStt, Errors) {
  KripkeModel m(3, 1);
  EXPECT_THROW(eval_stt_bool(m, {}, op("mtrue")), TypeError);
  try {
    eval_stt(m, {}, Term::constant("ghost", Type::o()));
    FAIL();
  } catch (const EvalError& e) {
    EXPECT_EQ(e.kind(), EvalError::Kind::Uninterpreted);
  }
  // Quantifying over (mu>o)>o on three worlds needs 2^8 entries per value and
  // 2^256 values: well over any cap.
  Type big = Type::arrow(Type::arrow(prop_type(), Type::o()), Type::o());
  Term q = logic::mk_forall("G", big, logic::mk_eq(Term::var("G", big), Term::var("G", big)));
  try {
    eval_stt(m, {}, q);
    FAIL();
  } catch (const EvalError& e) {
    EXPECT_EQ(e.kind(), EvalError::Kind::CapExceeded);
  }
}

TEST(EvalMeta, OneWorldDegeneracyExample) {
  MetaFormula m = MetaFormula::exists_rel(
      "R", MetaFormula::neg(MetaFormula::has_property(Property::Transitive, RelExpr::variable("R"))));
  EXPECT_FALSE(eval_meta(KripkeModel(1, 1), m));
  EXPECT_TRUE(eval_meta(KripkeModel(2, 1), m));
  EXPECT_TRUE(eval_meta(KripkeModel(3, 1), MetaFormula::valid(Formula::top())));
}

TEST(CheckProperty, Examples) {
  RelBits diag = add_edge(add_edge(0, 2, 0, 0), 2, 1, 1);
  EXPECT_TRUE(check_property(2, diag, Property::Reflexive));
  EXPECT_FALSE(check_property(2, add_edge(0, 2, 0, 0), Property::Reflexive));
}

TEST(CheckProperty, MatchesBruteForceAndSttDefinitions) {
  for (int n = 1; n <= 3; ++n) {
    for (RelBits bits = 0; bits < (RelBits{1} << (n * n)); ++bits) {
      KripkeModel m = frame(n, bits);
      for (Property p : kAllProperties) {
        const bool want = testing::property_oracle(n, bits, p);
        ASSERT_EQ(check_property(n, bits, p), want) << property_name(p) << " n=" << n << " r=" << bits;
        ASSERT_EQ(check_property(m, r, p), want);
        Term t = Term::app(op(property_operator(p)), Term::constant("r", rel_type()));
        ASSERT_EQ(eval_stt_bool(m, {}, t), want) << property_name(p) << " r=" << bits;
      }
    }
  }
}

TEST(CheckProperty, OneWorldDegeneracy) {
  for (RelBits bits : {RelBits{0}, RelBits{1}}) {
    for (Property p : {Property::Transitive, Property::Symmetric, Property::Euclidean,
                       Property::WeaklyDense, Property::WeaklyConnected, Property::WeaklyDirected}) {
      EXPECT_TRUE(check_property(1, bits, p)) << property_name(p);
    }
  }
}

TEST(FrameValid, Examples) {
  const Formula t_schema = axiom_schema(Property::Reflexive);
  EXPECT_TRUE(frame_valid(frame(1, 1), t_schema));
  EXPECT_FALSE(frame_valid(frame(2, add_edge(0, 2, 0, 0)), t_schema));
  // Loeb: box(box A => A) => box A fails on a reflexive point with A empty.
  Formula loeb = Formula::forall_prop(
      "A", Formula::impl(Formula::box(r, Formula::impl(Formula::box(r, A), A)), Formula::box(r, A)));
  EXPECT_FALSE(frame_valid(frame(1, 1), loeb));
  // The T-schema falsifier on the second frame: A = {w1}, at w2.
  KripkeModel m = frame(2, add_edge(0, 2, 0, 0));
  Assignment a;
  a.props["A"] = 0b01;
  EXPECT_FALSE(eval_direct(m, a, 1, Formula::impl(Formula::box(r, A), A)));
}

TEST(FrameValid, CorrespondenceOnSmallFrames) {
  // Two worlds keep this fast; the acceptance binary runs three.
  for (int n = 1; n <= 2; ++n) {
    for (RelBits bits = 0; bits < (RelBits{1} << (n * n)); ++bits) {
      for (Property p : kAllProperties) {
        EXPECT_EQ(check_property(n, bits, p), frame_valid(frame(n, bits), axiom_schema(p)))
            << property_name(p) << " n=" << n << " r=" << bits;
      }
    }
  }
}

TEST_F(RandomModels, OracleEquivalence) {
  testing::FormulaGen gen{rng, false, true};
  Signature sig = testing::oracle_signature();
  for (int i = 0; i < 200; ++i) {
    Formula f = gen(4);
    Term expanded = expand(translate(f, sig));
    for (int j = 0; j < 10; ++j) {
      KripkeModel m = testing::random_model(rng);
      Assignment a;
      a.props["F"] = static_cast<WorldSet>(testing::pick(rng, 1 << m.worlds()));
      for (int w = 0; w < m.worlds(); ++w) {
        ASSERT_EQ(eval_direct(m, a, w, f), testing::stt_at_world(m, a, expanded, w))
            << f.str() << " at " << w;
      }
    }
  }
}

TEST_F(RandomModels, SugaredOracleEquivalence) {
  // Derived connectives and temporal operators through their own definitions.
  testing::FormulaGen gen{rng, true, true};
  Signature sig = testing::oracle_signature();
  sig.add("past", Signature::SymbolKind::Relation);
  sig.add("future", Signature::SymbolKind::Relation);
  for (int i = 0; i < 200; ++i) {
    Formula f = gen(3);
    Term t = translate(f, sig);
    for (int j = 0; j < 5; ++j) {
      KripkeModel m = testing::random_model(rng);
      Assignment a;
      a.props["F"] = static_cast<WorldSet>(testing::pick(rng, 1 << m.worlds()));
      for (int w = 0; w < m.worlds(); ++w) {
        ASSERT_EQ(eval_direct(m, a, w, f), testing::stt_at_world(m, a, t, w)) << f.str();
      }
    }
  }
}

TEST_F(RandomModels, MetaEvaluationAgreesWithStt) {
  // Meta formulas with relation quantifiers, checked against the STT reading of
  // translate_meta.
  testing::ProblemGen pg{rng};
  int checked = 0;
  for (int i = 0; i < 200 && checked < 60; ++i) {
    ProblemFile p = pg();
    if (!p.conjecture) continue;
    KripkeModel m(1 + testing::pick(rng, 2), 1);
    std::mt19937 local(static_cast<unsigned>(i));
    for (const char* name : {"r1", "r2"}) m.relations[name] = local() & ((1u << (m.worlds() * m.worlds())) - 1);
    m.props["a"] = local() & 1;
    m.props["b"] = local() & 3 & m.all_worlds();
    m.preds["p"] = {1, {static_cast<WorldSet>(local() & m.all_worlds())}};
    m.preds["q"] = {1, {static_cast<WorldSet>(local() & m.all_worlds())}};
    m.individuals["c"] = 0;
    bool direct = false;
    try {
      direct = eval_meta(m, *p.conjecture);
    } catch (const EvalError&) {
      continue;  // relation functor over a quantified relation
    }
    Term t = translate_meta(*p.conjecture, p.signature);
    try {
      EXPECT_EQ(direct, eval_stt_bool(m, {}, t)) << p.conjecture->str();
      ++checked;
    } catch (const EvalError&) {
    }
  }
  EXPECT_GT(checked, 10);
}

}  // namespace
}  // namespace qml
