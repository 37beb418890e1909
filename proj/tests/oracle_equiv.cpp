#include "doctest.h"

#include <string>
#include <vector>

#include "corpus.hpp"
#include "causality.hpp"
#include "oracle.hpp"
#include "semantics.hpp"

using namespace causet;

// The no-shortcut reference implementation must agree with the search engine
// on every singleton query over every fixture small enough to brute-force.
TEST_CASE("the engine matches exhaustive search across the corpus") {
  int comparisons = 0;
  for (const std::string& name : fixture_names()) {
    Fixture fixture = load_fixture(name);
    if (!fixture.valid) continue;
    const CausalModel& model = fixture.document.model;
    std::vector<std::string> endo = model.endogenous_names();
    if (endo.size() > 6) continue;

    for (const auto& [context_name, context] : fixture.contexts) {
      for (const std::string& cvar : endo) {
        for (std::int64_t cval : model.find(cvar)->range) {
          CauseCandidate candidate{{{cvar, cval}}};
          for (const std::string& evar : endo) {
            for (std::int64_t eval : model.find(evar)->range) {
              BoolFormula effect = BoolFormula::leaf(evar, eval);
              bool expected =
                  oracle::is_cause_brute(model, context, candidate, effect);
              Verdict got = is_actual_cause(model, context, candidate, effect);
              ++comparisons;
              CHECK_MESSAGE(
                  got.is_cause == expected,
                  (name + "@" + context_name + ": " + cvar + "=" +
                   std::to_string(cval) + " ~> " + evar + "=" +
                   std::to_string(eval)));
            }
          }
        }
      }
    }
  }
  CHECK(comparisons > 500);
  MESSAGE("compared ", comparisons, " singleton queries");
}

// Conjunction candidates exercise AC3 against the recursive reference.
TEST_CASE("the engine matches exhaustive search on actual-valued pairs") {
  int comparisons = 0;
  for (const std::string& name :
       {std::string("forest-fire-disjunctive"),
        std::string("forest-fire-conjunctive"), std::string("rock-throw-5var"),
        std::string("soldiers-trumping"), std::string("camping"),
        std::string("door-alarm")}) {
    Fixture fixture = load_fixture(name);
    const CausalModel& model = fixture.document.model;
    std::vector<std::string> endo = model.endogenous_names();
    for (const auto& [context_name, context] : fixture.contexts) {
      World actual = solve(model, context);
      for (std::size_t i = 0; i < endo.size(); ++i) {
        for (std::size_t j = i + 1; j < endo.size(); ++j) {
          CauseCandidate candidate{{{endo[i], actual.at(endo[i])},
                                    {endo[j], actual.at(endo[j])}}};
          for (const std::string& evar : endo) {
            if (evar == endo[i] || evar == endo[j]) continue;
            BoolFormula effect = BoolFormula::leaf(evar, actual.at(evar));
            bool expected =
                oracle::is_cause_brute(model, context, candidate, effect);
            Verdict got = is_actual_cause(model, context, candidate, effect);
            ++comparisons;
            CHECK_MESSAGE(got.is_cause == expected,
                          (name + "@" + context_name + ": " + endo[i] + "&" +
                           endo[j] + " ~> " + evar));
          }
        }
      }
    }
  }
  CHECK(comparisons > 30);
  MESSAGE("compared ", comparisons, " pair queries");
}
