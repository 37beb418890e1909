#include "doctest.h"

#include <string>
#include <vector>

#include "corpus.hpp"
#include "dsl.hpp"
#include "errors.hpp"
#include "causality.hpp"

using namespace causet;

namespace {

Context fixture_context(const Fixture& fixture, const std::string& name) {
  for (const auto& [context_name, context] : fixture.contexts) {
    if (context_name == name) return context;
  }
  FAIL(("no context named " + name));
  return {};
}

const Fixture& disjunctive() {
  static Fixture f = load_fixture("forest-fire-disjunctive");
  return f;
}

const Fixture& conjunctive() {
  static Fixture f = load_fixture("forest-fire-conjunctive");
  return f;
}

const Fixture& rocks5() {
  static Fixture f = load_fixture("rock-throw-5var");
  return f;
}

BoolFormula fire() { return BoolFormula::leaf("F", 1); }
BoolFormula bottle() { return BoolFormula::leaf("BS", 1); }

}  // namespace

TEST_CASE("AC1 requires the candidate and the effect to be actual") {
  Context both = fixture_context(disjunctive(), "both");
  CHECK(check_ac1(disjunctive().document.model, both, {{{"L", 1}}}, fire()));
  CHECK(!check_ac1(disjunctive().document.model, both, {{{"L", 0}}}, fire()));
  CHECK(!check_ac1(disjunctive().document.model, both, {{{"L", 1}}},
                   BoolFormula::leaf("F", 0)));
}

TEST_CASE("candidates must be nonempty, endogenous, distinct, in range") {
  Context both = fixture_context(disjunctive(), "both");
  const CausalModel& m = disjunctive().document.model;
  CHECK_THROWS_AS(is_actual_cause(m, both, {}, fire()), Error);
  CHECK_THROWS_AS(is_actual_cause(m, both, {{{"U_L", 1}}}, fire()), Error);
  CHECK_THROWS_AS(is_actual_cause(m, both, {{{"nope", 1}}}, fire()), Error);
  CHECK_THROWS_AS(is_actual_cause(m, both, {{{"L", 7}}}, fire()), Error);
  CHECK_THROWS_AS(
      is_actual_cause(m, both, {{{"L", 1}, {"L", 1}}}, fire()), Error);
}

TEST_CASE("overdetermination: each fire suffices, so each is a cause") {
  Context both = fixture_context(disjunctive(), "both");
  Verdict v = is_actual_cause(disjunctive().document.model, both, {{{"L", 1}}},
                              fire());
  REQUIRE(v.is_cause);
  REQUIRE(v.witness.has_value());
  CHECK(v.witness->w_set == std::vector<std::string>{"ML"});
  CHECK(v.witness->w_values.at("ML") == 0);
  CHECK(v.witness->x_prime.at("L") == 0);
  CHECK(v.witness->z_set == std::vector<std::string>{"L", "F"});
  CHECK(v.witness->z_star ==
        std::map<std::string, std::int64_t>{{"L", 1}, {"F", 1}});
  CHECK(v.stats.partitions > 0);
  CHECK(v.failed_clause == Clause::None);
}

TEST_CASE("a false candidate fails AC1 before anything else") {
  Context both = fixture_context(disjunctive(), "both");
  Verdict v = is_actual_cause(disjunctive().document.model, both, {{{"L", 0}}},
                              fire());
  CHECK(!v.is_cause);
  CHECK(v.failed_clause == Clause::AC1);
  CHECK(!v.witness.has_value());
}

TEST_CASE("a conjunction with a sufficient part fails AC3") {
  Context both = fixture_context(conjunctive(), "both");
  Verdict v = is_actual_cause(conjunctive().document.model, both,
                              {{{"L", 1}, {"ML", 1}}}, fire());
  CHECK(!v.is_cause);
  CHECK(v.failed_clause == Clause::AC3);
  REQUIRE(v.ac3_subcause.has_value());
  CHECK(v.ac3_subcause->conjuncts ==
        std::vector<std::pair<std::string, std::int64_t>>{{"L", 1}});
}

TEST_CASE("preemption: the preempted throw is not a cause") {
  Context both = fixture_context(rocks5(), "both-throw");
  Verdict v = is_actual_cause(rocks5().document.model, both, {{{"BT", 1}}},
                              bottle());
  CHECK(!v.is_cause);
  CHECK(v.failed_clause == Clause::AC2);
  REQUIRE(!v.near_misses.empty());
  const AttemptFailure& miss = v.near_misses.front();
  CHECK(miss.reason == AttemptFailure::Reason::Ac2b);
  CHECK(miss.w_set == std::vector<std::string>{"ST"});
  CHECK(miss.w_values.at("ST") == 0);
  CHECK(miss.x_prime.at("BT") == 0);
  CHECK(miss.w_prime == std::vector<std::string>{"ST"});
  CHECK(miss.z_prime == std::vector<std::string>{"BH"});
}

TEST_CASE("preemption: the actual throw is a cause with the rival held back") {
  Context both = fixture_context(rocks5(), "both-throw");
  Verdict v = is_actual_cause(rocks5().document.model, both, {{{"ST", 1}}},
                              bottle());
  REQUIRE(v.is_cause);
  REQUIRE(v.witness.has_value());
  CHECK(v.witness->w_set == std::vector<std::string>{"BT"});
  CHECK(v.witness->w_values.at("BT") == 0);
  CHECK(v.witness->x_prime.at("ST") == 0);
  CHECK(v.witness->z_set ==
        std::vector<std::string>{"ST", "SH", "BH", "BS"});
}

TEST_CASE("verify_witness accepts a hand-built certificate") {
  Context both = fixture_context(conjunctive(), "both");
  Witness w;
  w.z_set = {"L", "F"};
  w.w_set = {"ML"};
  w.x_prime = {{"L", 0}};
  w.w_values = {{"ML", 1}};
  w.z_star = {{"L", 1}, {"F", 1}};
  WitnessCheck check = verify_witness(conjunctive().document.model, both,
                                      {{{"L", 1}}}, fire(), w);
  CHECK(check.ok);
  CHECK(check.ac2a);
  CHECK(check.ac2b);
}

TEST_CASE("verify_witness reports which half of AC2 broke") {
  SUBCASE("AC2(a) fails when the alternative still yields the effect") {
    Context both = fixture_context(disjunctive(), "both");
    Witness w;
    w.z_set = {"L", "F"};
    w.w_set = {"ML"};
    w.x_prime = {{"L", 0}};
    w.w_values = {{"ML", 1}};
    w.z_star = {{"L", 1}, {"F", 1}};
    WitnessCheck check = verify_witness(disjunctive().document.model, both,
                                        {{{"L", 1}}}, fire(), w);
    CHECK(!check.ok);
    CHECK(!check.ac2a);
  }
  SUBCASE("AC2(b) fails with the first counterexample subsets") {
    Context both = fixture_context(rocks5(), "both-throw");
    Witness w;
    w.z_set = {"BT", "SH", "BH", "BS"};
    w.w_set = {"ST"};
    w.x_prime = {{"BT", 0}};
    w.w_values = {{"ST", 0}};
    w.z_star = {{"BT", 1}, {"SH", 1}, {"BH", 0}, {"BS", 1}};
    WitnessCheck check = verify_witness(rocks5().document.model, both,
                                        {{{"BT", 1}}}, bottle(), w);
    CHECK(!check.ok);
    CHECK(check.ac2a);
    CHECK(!check.ac2b);
    CHECK(check.w_prime == std::vector<std::string>{"ST"});
    CHECK(check.z_prime == std::vector<std::string>{"BH"});
  }
}

TEST_CASE("verify_witness rejects certificates that do not fit the model") {
  Context both = fixture_context(disjunctive(), "both");
  Witness w;
  w.z_set = {"L", "F"};
  w.w_set = {"ML"};
  w.x_prime = {{"L", 0}};
  w.w_values = {{"ML", 0}};
  w.z_star = {{"L", 1}, {"F", 1}};

  SUBCASE("partition not total") {
    w.z_set = {"L"};
    CHECK_THROWS_AS(verify_witness(disjunctive().document.model, both,
                                   {{{"L", 1}}}, fire(), w),
                    Error);
  }
  SUBCASE("z_star disagrees with the solved world") {
    w.z_star = {{"L", 1}, {"F", 0}};
    CHECK_THROWS_AS(verify_witness(disjunctive().document.model, both,
                                   {{{"L", 1}}}, fire(), w),
                    Error);
  }
  SUBCASE("out-of-range setting") {
    w.w_values = {{"ML", 9}};
    CHECK_THROWS_AS(verify_witness(disjunctive().document.model, both,
                                   {{{"L", 1}}}, fire(), w),
                    Error);
  }
}

TEST_CASE("the witness search refuses to run past its variable cap") {
  std::string text = "model wide {\n  exogenous { U: {0,1} }\n  endogenous {\n";
  for (int i = 0; i < 17; ++i) {
    text += "    X" + std::to_string(i) + ": {0,1}\n";
  }
  text += "  }\n  equations {\n    X0 = U\n";
  for (int i = 1; i < 17; ++i) {
    text += "    X" + std::to_string(i) + " = X" + std::to_string(i - 1) + "\n";
  }
  text += "  }\n}\n";
  CausalModel model = parse_model(text).model;
  Context u{{"U", 1}};
  CauseCandidate candidate{{{"X0", 1}}};
  BoolFormula effect = BoolFormula::leaf("X16", 1);
  try {
    is_actual_cause(model, u, candidate, effect);
    FAIL("expected the cap to trip");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SearchSpaceExceeded);
  }
  HpOptions wide;
  wide.max_vars = 17;
  CHECK(is_actual_cause(model, u, candidate, effect, wide).is_cause);
}

TEST_CASE("normality blocks the bodyguard's antidote") {
  Fixture guard = load_fixture("bodyguard");
  Context actual = fixture_context(guard, "actual");
  const CausalModel& model = guard.document.model;
  ExtendedCausalModel extended{model, *guard.document.ranking};
  BoolFormula survives = BoolFormula::leaf("VS", 1);
  CauseCandidate antidote{{{"B", 1}}};

  CHECK(is_actual_cause(model, actual, antidote, survives).is_cause);
  for (NormalitySemantics semantics :
       {NormalitySemantics::Literal, NormalitySemantics::Solution}) {
    Verdict v =
        is_actual_cause_extended(extended, actual, antidote, survives,
                                 semantics);
    CHECK(!v.is_cause);
    CHECK(v.failed_clause == Clause::AC2);
    bool blocked = false;
    for (const AttemptFailure& miss : v.near_misses) {
      if (miss.reason == AttemptFailure::Reason::Normality) blocked = true;
    }
    CHECK(blocked);
  }
}

TEST_CASE("but-for dependence is the empty-W special case") {
  Context both_d = fixture_context(disjunctive(), "both");
  Context both_c = fixture_context(conjunctive(), "both");
  CHECK(!but_for(disjunctive().document.model, both_d, {{{"L", 1}}}, fire()));
  CHECK(but_for(conjunctive().document.model, both_c, {{{"L", 1}}}, fire()));
  Context both_r = fixture_context(rocks5(), "both-throw");
  CHECK(!but_for(rocks5().document.model, both_r, {{{"ST", 1}}}, bottle()));
  CHECK(!but_for(rocks5().document.model, both_r, {{{"BT", 1}}}, bottle()));
}

TEST_CASE("cause enumeration lists actual-valued causes in canonical order") {
  Context both = fixture_context(disjunctive(), "both");
  auto causes =
      enumerate_causes(disjunctive().document.model, both, fire(), 2);
  REQUIRE(causes.size() == 2);
  CHECK(causes[0].first.conjuncts ==
        std::vector<std::pair<std::string, std::int64_t>>{{"L", 1}});
  CHECK(causes[1].first.conjuncts ==
        std::vector<std::pair<std::string, std::int64_t>>{{"ML", 1}});

  auto with_self = enumerate_causes(disjunctive().document.model, both, fire(),
                                    2, /*exclude_effect_variables=*/false);
  REQUIRE(with_self.size() == 3);
  CHECK(with_self[2].first.conjuncts ==
        std::vector<std::pair<std::string, std::int64_t>>{{"F", 1}});
}

TEST_CASE("cause enumeration requires the effect to be actual") {
  Context neither{{"U_L", 0}, {"U_ML", 0}};
  CHECK_THROWS_AS(
      enumerate_causes(disjunctive().document.model, neither, fire(), 1),
      Error);
}

TEST_CASE("directed paths come shortest first") {
  const CausalModel& model = rocks5().document.model;
  std::vector<std::vector<std::string>> expected = {
      {"ST", "SH", "BS"},
      {"ST", "SH", "BH", "BS"},
  };
  CHECK(directed_paths(model, "ST", "BS") == expected);
  CHECK(directed_paths(model, "BS", "ST").empty());
  CHECK(directed_paths(model, "BT", "BS") ==
        std::vector<std::vector<std::string>>{{"BT", "BH", "BS"}});
}

TEST_CASE("verdict comparison flags instability and topology changes") {
  Fixture three = load_fixture("rock-throw-3var");
  Fixture five = rocks5();
  std::vector<CausalModel> models = {three.document.model,
                                     five.document.model};
  std::vector<Context> contexts = {fixture_context(three, "both-throw"),
                                   fixture_context(five, "both-throw")};
  Comparison cmp =
      compare_verdicts(models, contexts, {{{"BT", 1}}}, bottle());
  REQUIRE(cmp.rows.size() == 2);
  REQUIRE(cmp.rows[0].verdict.has_value());
  REQUIRE(cmp.rows[1].verdict.has_value());
  CHECK(cmp.rows[0].verdict->is_cause);
  CHECK(!cmp.rows[1].verdict->is_cause);
  CHECK(!cmp.stable);
  REQUIRE(cmp.topology_changed.size() == 1);
  CHECK(cmp.topology_changed[0]);
}

TEST_CASE("verdict comparison reports per-model failures inline") {
  Fixture three = load_fixture("rock-throw-3var");
  Fixture guard = load_fixture("bodyguard");
  std::vector<CausalModel> models = {three.document.model,
                                     guard.document.model};
  std::vector<Context> contexts = {fixture_context(three, "both-throw"),
                                   fixture_context(guard, "actual")};
  Comparison cmp =
      compare_verdicts(models, contexts, {{{"BT", 1}}}, bottle());
  REQUIRE(cmp.rows.size() == 2);
  CHECK(cmp.rows[0].verdict.has_value());
  CHECK(!cmp.rows[1].verdict.has_value());
  CHECK(!cmp.rows[1].error.empty());
  CHECK(!cmp.stable);
}
