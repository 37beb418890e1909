#include "doctest.h"

#include "corpus.hpp"
#include "errors.hpp"
#include "oracle.hpp"
#include "semantics.hpp"

using namespace causet;

namespace {

const CausalModel& disjunctive() {
  static CausalModel model =
      load_fixture("forest-fire-disjunctive").document.model;
  return model;
}

}  // namespace

TEST_CASE("solve runs mechanisms in dependency order") {
  World world = solve(disjunctive(), {{"U_L", 1}, {"U_ML", 0}});
  CHECK(world.at("L") == 1);
  CHECK(world.at("ML") == 0);
  CHECK(world.at("F") == 1);
}

TEST_CASE("solve agrees with the enumeration reference on every fixture") {
  for (const std::string& name : fixture_names()) {
    Fixture fixture = load_fixture(name);
    for (const auto& [context_name, context] : fixture.contexts) {
      CHECK_MESSAGE(
          solve(fixture.document.model, context) ==
              oracle::solve_by_enumeration(fixture.document.model, context),
          (name + "/" + context_name));
    }
  }
}

TEST_CASE("solve rejects partial, overfull, and out-of-range contexts") {
  CHECK_THROWS_AS(solve(disjunctive(), {{"U_L", 1}}), Error);
  CHECK_THROWS_AS(
      solve(disjunctive(), {{"U_L", 1}, {"U_ML", 0}, {"L", 1}}), Error);
  CHECK_THROWS_AS(solve(disjunctive(), {{"U_L", 2}, {"U_ML", 0}}), Error);
}

TEST_CASE("intervention replaces a mechanism and nothing else") {
  CausalModel cut = intervene(disjunctive(), {{"ML", 0}});
  CHECK(cut.mechanism_for("ML")->body == Expr::constant(0));
  CHECK(cut.mechanism_for("L")->body == disjunctive().mechanism_for("L")->body);
  CHECK(cut.mechanism_for("F")->body == disjunctive().mechanism_for("F")->body);
  // The original is untouched.
  CHECK(!(disjunctive().mechanism_for("ML")->body == Expr::constant(0)));
}

TEST_CASE("intervention rejects bad targets") {
  CHECK_THROWS_AS(intervene(disjunctive(), {{"U_L", 0}}), Error);
  CHECK_THROWS_AS(intervene(disjunctive(), {{"nope", 0}}), Error);
  CHECK_THROWS_AS(intervene(disjunctive(), {{"ML", 7}}), Error);
  CHECK_THROWS_AS(intervene(disjunctive(), {{"ML", 0}, {"ML", 1}}), Error);
}

TEST_CASE("counterfactual satisfaction at a context") {
  Context u{{"U_L", 1}, {"U_ML", 1}};
  CausalFormula still_burns;
  still_burns.interventions = {{"ML", 0}};
  still_burns.body = BoolFormula::leaf("F", 1);
  CHECK(satisfies(disjunctive(), u, still_burns));

  CausalFormula both_out;
  both_out.interventions = {{"L", 0}, {"ML", 0}};
  both_out.body = BoolFormula::leaf("F", 0);
  CHECK(satisfies(disjunctive(), u, both_out));

  CausalFormula plain;
  plain.body = BoolFormula::leaf("F", 0);
  CHECK(!satisfies(disjunctive(), u, plain));
}

TEST_CASE("formula evaluation handles the connectives") {
  World world{{"A", 1}, {"B", 0}};
  BoolFormula a = BoolFormula::leaf("A", 1);
  BoolFormula b = BoolFormula::leaf("B", 1);
  CHECK(eval_formula(a, world));
  CHECK(!eval_formula(b, world));
  CHECK(!eval_formula(BoolFormula::make(BoolFormula::Kind::And, {a, b}), world));
  CHECK(eval_formula(BoolFormula::make(BoolFormula::Kind::Or, {a, b}), world));
  CHECK(eval_formula(BoolFormula::make(BoolFormula::Kind::Not, {b}), world));
}

TEST_CASE("universal satisfaction sweeps every context") {
  CausalFormula f;
  f.interventions = {{"L", 0}, {"ML", 0}};
  f.body = BoolFormula::leaf("F", 0);
  CHECK(satisfies_all_contexts(disjunctive(), f));

  CausalFormula g;
  g.body = BoolFormula::leaf("F", 0);
  CHECK(!satisfies_all_contexts(disjunctive(), g));
}

TEST_CASE("formula checking rejects unknown names and bad values") {
  CHECK_THROWS_AS(
      check_formula(disjunctive(), BoolFormula::leaf("nope", 1), false),
      Error);
  CHECK_THROWS_AS(
      check_formula(disjunctive(), BoolFormula::leaf("F", 9), false), Error);
  CHECK_THROWS_AS(
      check_formula(disjunctive(), BoolFormula::leaf("U_L", 1), true), Error);
  CHECK_NOTHROW(
      check_formula(disjunctive(), BoolFormula::leaf("U_L", 1), false));
}

TEST_CASE("formulas print with connective precedence") {
  BoolFormula a = BoolFormula::leaf("A", 1);
  BoolFormula b = BoolFormula::leaf("B", 0);
  BoolFormula c = BoolFormula::leaf("C", 1);
  BoolFormula or_ab = BoolFormula::make(BoolFormula::Kind::Or, {a, b});
  BoolFormula and_top = BoolFormula::make(BoolFormula::Kind::And, {or_ab, c});
  CHECK(to_string(and_top) == "(A = 1 | B = 0) & C = 1");

  CausalFormula f;
  f.interventions = {{"ML", 0}};
  f.body = BoolFormula::leaf("F", 1);
  CHECK(to_string(f) == "[ML <- 0](F = 1)");
}
