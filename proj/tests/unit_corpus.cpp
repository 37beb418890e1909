#include "doctest.h"

#include <string>

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

void assert_expected(const Fixture& fixture) {
  const CausalModel& model = fixture.document.model;
  for (const ExpectedVerdict& e : fixture.expected) {
    Context context = fixture_context(fixture, e.context_name);
    CauseCandidate candidate = parse_candidate(e.candidate, model);
    BoolFormula effect = parse_formula(e.effect, model).body;
    Verdict verdict;
    if (e.extended) {
      REQUIRE(fixture.document.ranking.has_value());
      ExtendedCausalModel extended{model, *fixture.document.ranking};
      verdict = is_actual_cause_extended(extended, context, candidate, effect,
                                         e.semantics);
    } else {
      verdict = is_actual_cause(model, context, candidate, effect);
    }
    std::string label = fixture.name + ": " + e.candidate + " ~> " + e.effect +
                        " @ " + e.context_name +
                        (e.extended ? " [extended]" : "");
    CHECK_MESSAGE(verdict.is_cause == e.is_cause, label);
    if (verdict.is_cause) {
      REQUIRE_MESSAGE(verdict.witness.has_value(), label);
      WitnessCheck check =
          verify_witness(model, context, candidate, effect, *verdict.witness);
      CHECK_MESSAGE(check.ok, (label + " (witness re-verification)"));
    }
  }
}

Expr rename(const Expr& e, const std::map<std::string, std::string>& names) {
  Expr out = e;
  if (out.kind == ExprKind::Variable) out.var = names.at(out.var);
  for (Expr& arg : out.args) arg = rename(arg, names);
  return out;
}

}  // namespace

TEST_CASE("the registry lists every fixture and rejects strangers") {
  CHECK(fixture_names().size() == 12);
  for (const std::string& name : fixture_names()) {
    CHECK_NOTHROW(load_fixture(name));
  }
  try {
    load_fixture("no-such-model");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnknownFixture);
    CHECK(std::string(e.what()).find("bodyguard") != std::string::npos);
  }
}

TEST_CASE("every documented verdict holds") {
  for (const std::string& name : fixture_names()) {
    Fixture fixture = load_fixture(name);
    if (!fixture.valid) continue;
    assert_expected(fixture);
  }
}

TEST_CASE("fixture sources reparse to the loaded documents") {
  for (const std::string& name : fixture_names()) {
    Fixture fixture = load_fixture(name);
    CHECK_MESSAGE(parse_document(fixture.source) == fixture.document, name);
  }
}

TEST_CASE("the bodyguard story reuses the disjunctive fire equations") {
  CausalModel fire = load_fixture("forest-fire-disjunctive").document.model;
  CausalModel guard = load_fixture("bodyguard").document.model;
  std::map<std::string, std::string> names = {
      {"U_A", "U_L"}, {"U_B", "U_ML"}, {"A", "L"}, {"B", "ML"}, {"VS", "F"}};
  REQUIRE(guard.mechanisms.size() == fire.mechanisms.size());
  for (std::size_t i = 0; i < guard.mechanisms.size(); ++i) {
    CHECK(names.at(guard.mechanisms[i].target) == fire.mechanisms[i].target);
    CHECK(rename(guard.mechanisms[i].body, names) == fire.mechanisms[i].body);
  }
}

TEST_CASE("the doctors family scales without changing its verdicts") {
  for (int n : {2, 3, 4}) {
    Fixture fixture = load_fixture("doctors(" + std::to_string(n) + ")");
    CHECK(fixture.document.model.endogenous_names().size() ==
          static_cast<std::size_t>(n + 1));
    assert_expected(fixture);
  }
  CHECK(load_fixture("doctors").document == load_fixture("doctors(3)").document);
  CHECK_THROWS_AS(load_fixture("doctors(1)"), Error);
  CHECK_THROWS_AS(load_fixture("doctors(7)"), Error);
}

TEST_CASE("the broken fixture is broken in exactly the advertised way") {
  Fixture cyclic = load_fixture("camping-cyclic");
  CHECK(!cyclic.valid);
  std::vector<Violation> report = validate_model(cyclic.document.model);
  REQUIRE(!report.empty());
  bool cycle = false;
  for (const Violation& v : report) {
    if (v.kind == Violation::Kind::Cycle) cycle = true;
  }
  CHECK(cycle);
}
