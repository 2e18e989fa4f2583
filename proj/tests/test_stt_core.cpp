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
#include "qmlstt/term.hpp"
#include "test_util.hpp"

namespace qml {
namespace {

using namespace logic;

const Type o = Type::o();
const Type mu = Type::mu();

TEST(Types, RenderingIsRightAssociated) {
  EXPECT_EQ(rel_type().str(), "mu > mu > $o");
  EXPECT_EQ(relfun_type().str(), "(mu > mu > $o) > mu > mu > $o");
  EXPECT_EQ(rel_type().arity(), 2);
  EXPECT_EQ(rel_type().result(), o);
  EXPECT_EQ(pred_type(2), Type::arrow(Type::iota(), Type::arrow(Type::iota(), prop_type())));
}

TEST(TypeOf, Identity) {
  EXPECT_EQ(type_of(Term::lam("X", mu, Term::var("X", mu))), Type::arrow(mu, mu));
}

TEST(TypeOf, NegationOfConstant) {
  EXPECT_EQ(type_of(mk_not(Term::constant("p", o))), o);
}

TEST(TypeOf, WorkedExampleUnderContext) {
  Term r = Term::var("r", rel_type());
  Term body = mk_or(mk_not(Term::app(r, {Term::var("W", mu), Term::var("Y", mu)})),
                    mk_not(mk_forall("X", prop_type(),
                                     mk_not(Term::app(Term::var("X", prop_type()),
                                                      Term::var("Y", mu))))));
  Term t = mk_forall("W", mu, mk_forall("Y", mu, body));
  EXPECT_EQ(type_of(t, TypingContext{{"r", rel_type()}}), o);
}

TEST(TypeOf, MismatchIsReported) {
  try {
    type_of(mk_not(Term::constant("c", mu)));
    FAIL() << "expected a type error";
  } catch (const TypeError& e) {
    EXPECT_EQ(e.kind(), TypeError::Kind::TypeMismatch);
  }
}

TEST(TypeOf, UnboundVariableInContext) {
  try {
    type_of(Term::var("Z", mu), TypingContext{{"X", mu}});
    FAIL() << "expected a type error";
  } catch (const TypeError& e) {
    EXPECT_EQ(e.kind(), TypeError::Kind::UnboundVariable);
  }
}

TEST(Substitute, AvoidsCapture) {
  // (^Y. X)[X := Y] must not capture the free Y.
  Term t = Term::lam("Y", mu, Term::var("X", mu));
  Term r = substitute(t, "X", Term::var("Y", mu));
  ASSERT_TRUE(r.is_lam());
  EXPECT_TRUE(r.body().is_var());
  EXPECT_EQ(r.body().name(), "Y");
  EXPECT_TRUE(alpha_eq(r, Term::lam("Z", mu, Term::var("Y", mu))));
  EXPECT_FALSE(alpha_eq(r, Term::lam("Y", mu, Term::var("Y", mu))));
}

TEST(Substitute, IdentityAndBoundOccurrence) {
  Term s = Term::constant("c", mu);
  EXPECT_EQ(substitute(Term::var("X", mu), "X", s), s);
  Term id = Term::lam("X", mu, Term::var("X", mu));
  EXPECT_TRUE(alpha_eq(substitute(id, "X", s), id));
}

TEST(Substitute, TypeMismatchThrows) {
  EXPECT_THROW(substitute(Term::var("X", mu), "X", Term::constant("p", o)), TypeError);
}

TEST(Normalize, BetaRedex) {
  Term p = Term::constant("p", prop_type());
  Term t = Term::app(Term::lam("X", prop_type(), Term::var("X", prop_type())), p);
  EXPECT_EQ(beta_eta_normalize(t), p);
}

TEST(Normalize, EtaRedex) {
  Term f = Term::constant("f", prop_type());
  Term t = Term::lam("X", mu, Term::app(f, Term::var("X", mu)));
  EXPECT_EQ(beta_eta_normalize(t), f);
  // X occurs in the head, so there is nothing to contract.
  Term g = Term::lam("X", mu, Term::app(Term::app(Term::constant("r", rel_type()),
                                                  Term::var("X", mu)),
                                        Term::var("X", mu)));
  EXPECT_TRUE(beta_eta_normalize(g).is_lam());
}

TEST(Normalize, NormalOrderDiscardsDivergentArgument) {
  // (^X:o. c) ((^Y:o. Y) d) reduces to c without touching the argument.
  Term c = Term::constant("c", o);
  Term d = Term::constant("d", o);
  Term arg = Term::app(Term::lam("Y", o, Term::var("Y", o)), d);
  EXPECT_EQ(beta_eta_normalize(Term::app(Term::lam("X", o, c), arg)), c);
}

TEST(Normalize, WorkedExampleGolden) {
  Signature sig;
  sig.add("r", Signature::SymbolKind::Relation);
  Formula f = Formula::box(RelExpr::constant("r"),
                           Formula::exists_prop("P", Formula::prop_var("P")));
  Term got = expand(translate_meta(MetaFormula::valid(f), sig));

  Term r = Term::constant("r", rel_type());
  Term body = mk_or(mk_not(Term::app(r, {Term::var("W", mu), Term::var("Y", mu)})),
                    mk_not(mk_forall("X", prop_type(),
                                     mk_not(Term::app(Term::var("X", prop_type()),
                                                      Term::var("Y", mu))))));
  Term want = mk_forall("W", mu, mk_forall("Y", mu, body));
  EXPECT_TRUE(alpha_eq(got, want)) << got.str();
}

TEST(AlphaEq, Examples) {
  EXPECT_TRUE(alpha_eq(Term::lam("X", mu, Term::var("X", mu)),
                       Term::lam("Y", mu, Term::var("Y", mu))));
  Term k1 = Term::lam("X", mu, Term::lam("Y", mu, Term::var("X", mu)));
  Term k2 = Term::lam("Y", mu, Term::lam("X", mu, Term::var("X", mu)));
  EXPECT_FALSE(alpha_eq(k1, k2));
  // Binder types matter.
  EXPECT_FALSE(alpha_eq(Term::lam("X", mu, Term::constant("c", o)),
                        Term::lam("X", o, Term::constant("c", o))));
}

TEST(Logic, DerivedDefinitionsAreWellTyped) {
  for (const Term& c : {and_const(), implies_const(), iff_const(), true_const(), false_const(),
                        sigma_const(mu), sigma_const(prop_type())}) {
    EXPECT_TRUE(is_derived(c)) << c.str();
    Term def = definition_of_derived(c);
    EXPECT_EQ(type_of(def), c.type()) << c.str();
    for (const auto& k : constants(def)) {
      EXPECT_FALSE(is_derived(Term::constant(k.first, k.second))) << k.first;
    }
  }
  EXPECT_TRUE(is_primitive(not_const()));
  EXPECT_TRUE(is_primitive(pi_const(mu)));
  EXPECT_FALSE(is_logical(Term::constant("r", rel_type())));
}

TEST(Printing, ThfRendering) {
  Term t = Term::lam("A", prop_type(), Term::app(Term::var("A", prop_type()), Term::var("W", mu)));
  EXPECT_EQ(to_thf(t, true), "^ [A: mu > $o]: (A @ W)");
  EXPECT_EQ(Term::var("Abc", mu).str(), "Abc");
}

// ---------------------------------------------------------------------------
// Property tests over random well-typed terms of depth <= 6.

class KernelProperties : public ::testing::Test {
 protected:
  std::mt19937 rng{20260601};
  testing::TermGen gen{rng};

  Term random_term() {
    auto types = testing::TermGen::pool();
    return gen.gen(types[testing::pick(rng, static_cast<int>(types.size()))], 6);
  }
};

TEST_F(KernelProperties, SubjectReduction) {
  for (int i = 0; i < 1000; ++i) {
    Term t = random_term();
    Type ty = t.infer();
    EXPECT_EQ(beta_eta_normalize(t).infer(), ty) << t.str();
  }
}

TEST_F(KernelProperties, NormalizationIsIdempotent) {
  for (int i = 0; i < 1000; ++i) {
    Term n = beta_eta_normalize(random_term());
    EXPECT_TRUE(alpha_eq(beta_eta_normalize(n), n)) << n.str();
  }
}

TEST_F(KernelProperties, SubstitutionLemma) {
  int checked = 0;
  for (int i = 0; i < 1000; ++i) {
    Term t = random_term();
    auto fv = free_vars(t);
    if (fv.empty()) continue;
    auto it = fv.begin();
    std::advance(it, testing::pick(rng, static_cast<int>(fv.size())));
    Term s = gen.gen(it->second, 3);
    Term lhs = beta_eta_normalize(substitute(t, it->first, s));
    Term rhs = beta_eta_normalize(
        substitute(beta_eta_normalize(t), it->first, beta_eta_normalize(s)));
    EXPECT_TRUE(alpha_eq(lhs, rhs)) << t.str() << " [" << it->first << " := " << s.str() << "]";
    ++checked;
  }
  EXPECT_GT(checked, 100);
}

TEST_F(KernelProperties, AlphaEqIsAnEquivalence) {
  for (int i = 0; i < 300; ++i) {
    Term a = random_term();
    Term b = random_term();
    EXPECT_TRUE(alpha_eq(a, a));
    EXPECT_EQ(alpha_eq(a, b), alpha_eq(b, a));
    // Substituting for a variable that does not occur changes nothing.
    Term renamed = substitute(a, "__none__", Term::constant("c", mu));
    EXPECT_TRUE(alpha_eq(a, renamed));
  }
}

}  // namespace
}  // namespace qml
