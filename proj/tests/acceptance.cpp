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


// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qmlstt/corpus.hpp"
#include "qmlstt/embedding.hpp"
#include "qmlstt/parser.hpp"
#include "qmlstt/search.hpp"
#include "qmlstt/semantics.hpp"
#include "qmlstt/thf.hpp"
#include "test_util.hpp"

namespace {

using namespace qml;
using Kind = Classification::Kind;

struct Outcome {
  bool ok = true;
  std::string detail;
};

Outcome fail(std::string why) { return {false, std::move(why)}; }

const ProblemFile& corpus(const std::string& id) {
  const SuiteEntry* e = find_entry(id);
  if (e == nullptr) throw std::runtime_error("missing corpus entry " + id);
  return e->problem;
}

std::string read(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome golden_normal_form() {
  using namespace logic;
  const Type mu = Type::mu();
  Signature sig;
  sig.add("r", Signature::SymbolKind::Relation);
  Formula f = Formula::box(RelExpr::constant("r"), Formula::exists_prop("P", Formula::prop_var("P")));
  Term got = expand(translate_meta(MetaFormula::valid(f), sig));
  Term r = Term::constant("r", rel_type());
  Term y = Term::var("Y", mu);
  Term body = mk_or(mk_not(Term::app(r, {Term::var("W", mu), y})),
                    mk_not(mk_forall("X", prop_type(),
                                     mk_not(Term::app(Term::var("X", prop_type()), y)))));
  Term want = mk_forall("W", mu, mk_forall("Y", mu, body));
  if (!alpha_eq(got, want)) return fail("got " + got.str());
  return {true, got.str()};
}

Outcome oracle_equivalence() {
  std::mt19937 rng(1);
  std::vector<KripkeModel> models;
  std::vector<Assignment> assignments;
  for (int i = 0; i < 50; ++i) {
    models.push_back(testing::random_model(rng));
    Assignment a;
    a.props["F"] = static_cast<WorldSet>(testing::pick(rng, 1 << models.back().worlds()));
    assignments.push_back(a);
  }
  testing::FormulaGen gen{rng, false, true};
  const Signature sig = testing::oracle_signature();
  long cases = 0;
  for (int i = 0; i < 1000; ++i) {
    const Formula f = gen(4);
    const Term t = expand(translate(f, sig));
    for (size_t k = 0; k < models.size(); ++k) {
      for (int w = 0; w < models[k].worlds(); ++w) {
        ++cases;
        if (eval_direct(models[k], assignments[k], w, f) !=
            testing::stt_at_world(models[k], assignments[k], t, w)) {
          return fail("disagreement on " + f.str() + " in model " + std::to_string(k) +
                      " at world " + std::to_string(w));
        }
      }
    }
  }
  return {true, std::to_string(cases) + " cases agree"};
}

Outcome table_one() {
  SearchBounds b;
  b.max_worlds = 4;
  for (int i = 1; i <= 6; ++i) {
    const std::string id = "ex" + std::to_string(i);
    Classification c = find_countermodel(corpus(id), b);
    if (c.kind != Kind::ValidUpToBound) {
      return fail(id + " classified " + std::string(classification_long_name(c.kind)));
    }
  }
  return {true, "(1)-(6) ValidUpToBound at |W|<=4"};
}

Outcome table_two() {
  for (int i = 7; i <= 14; ++i) {
    const std::string id = "ex" + std::to_string(i);
    Classification c = find_countermodel(corpus(id));
    if (c.kind != Kind::CounterSatisfiable || c.model->worlds() > 3) {
      return fail(id + " is not CSA within three worlds");
    }
  }
  for (const char* id : {"ex8a", "ex11a", "ex12a", "ex13a"}) {
    Classification c = find_countermodel(corpus(id));
    if (c.kind != Kind::CounterSatisfiable || c.model->worlds() != 1) {
      return fail(std::string(id) + " is not CSA at |W|=1");
    }
  }
  // Bounded evidence: no model up to three worlds lacks a witness relation.
  for (const char* id : {"ex7a", "ex9a", "ex10a", "ex14a"}) {
    Classification c = find_countermodel(corpus(id));
    if (c.kind != Kind::ValidUpToBound) {
      return fail(std::string(id) + " lacks a witness relation in some model");
    }
  }
  return {true, "16 rows as expected"};
}

Outcome correspondence() {
  long frames = 0;
  for (int n = 1; n <= 3; ++n) {
    for (RelBits bits = 0; bits < (RelBits{1} << (n * n)); ++bits) {
      KripkeModel m(n, 1);
      m.relations["r"] = bits;
      ++frames;
      for (Property p : kAllProperties) {
        if (check_property(m, RelExpr::constant("r"), p) != frame_valid(m, axiom_schema(p))) {
          return fail(std::string(property_name(p)) + " on n=" + std::to_string(n) +
                      " r=" + std::to_string(bits));
        }
      }
    }
  }
  return {true, std::to_string(frames) + " frames x 10 properties, 0 violations"};
}

Outcome thf_goldens() {
  const std::string dir = QMLSTT_GOLDEN_DIR;
  if (normalize_thf(emit_problem(corpus("ex8a")).str()) != normalize_thf(read(dir + "/ex8a.p"))) {
    return fail("problem (8a) differs");
  }
  ThfDocument lib = emit_axiom_library();
  ThfDocument one;
  one.formulas.push_back(*lib.find("mtransitive"));
  if (normalize_thf(one.str()) != normalize_thf(read(dir + "/mtransitive.thf"))) {
    return fail("mtransitive differs");
  }
  const std::string decls = normalize_thf(read(dir + "/friends_decls.thf"));
  if (normalize_thf(emit_problem(corpus("friends.k")).str()).find(decls) == std::string::npos) {
    return fail("peter/john/wife block differs");
  }
  return {true, "3 listings match"};
}

Outcome friends() {
  for (const char* id : {"friends.k", "friends.t", "friends"}) {
    Classification c = find_countermodel(corpus(id));
    if (c.kind != Kind::ValidUpToBound) {
      return fail(std::string(id) + " classified " + std::string(classification_long_name(c.kind)));
    }
  }
  return {true, "no countermodel at |W|<=3"};
}

Outcome one_world() {
  MetaFormula m = MetaFormula::exists_rel(
      "R", MetaFormula::neg(MetaFormula::has_property(Property::Transitive, RelExpr::variable("R"))));
  for (int d = 1; d <= 2; ++d) {
    for (RelBits r = 0; r < 2; ++r) {
      KripkeModel k(1, d);
      k.relations["r"] = r;
      if (eval_meta(k, m)) return fail("true on a one-world model");
    }
  }
  if (!eval_meta(KripkeModel(2, 1), m)) return fail("false on two worlds");
  return {true, "false on |W|=1, true on |W|=2"};
}

Outcome consistency() {
  Classification c = classify(corpus("consistency"));
  if (c.kind != Kind::Satisfiable || c.model->worlds() != 1) return fail("no one-world model");
  return {true, "Satisfiable with |W|=1, |D|=" + std::to_string(c.model->domain())};
}

Outcome kernel() {
  std::mt19937 rng(2);
  testing::TermGen tg{rng};
  auto types = testing::TermGen::pool();
  for (int i = 0; i < 1000; ++i) {
    Term t = tg.gen(types[testing::pick(rng, static_cast<int>(types.size()))], 6);
    Term n = beta_eta_normalize(t);
    if (n.infer() != t.infer()) return fail("subject reduction: " + t.str());
    if (!alpha_eq(beta_eta_normalize(n), n)) return fail("idempotence: " + t.str());
  }
  testing::ProblemGen pg{rng};
  for (int i = 0; i < 1000; ++i) {
    ProblemFile p = pg();
    if (parse_problem(print_problem(p)) != p) return fail("round trip: " + print_problem(p));
  }
  return {true, "3 x 1000 cases"};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "golden normal form", golden_normal_form},
      {2, "oracle equivalence", oracle_equivalence},
      {3, "Table 1 reproduction", table_one},
      {4, "Table 2 reproduction", table_two},
      {5, "correspondence biconditionals", correspondence},
      {6, "THF golden listings", thf_goldens},
      {7, "friends puzzle", friends},
      {8, "one-world degeneracy", one_world},
      {9, "consistency check", consistency},
      {10, "kernel properties", kernel},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = fail(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.ok) ++failures;
    std::printf("%s criterion %d: %s (%.2f s) %s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, secs,
                o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
