#include "doctest.h"

#include "corpus.hpp"
#include "dsl.hpp"
#include "model.hpp"

using namespace causet;

namespace {

bool has_violation(const std::vector<Violation>& report, Violation::Kind kind) {
  for (const Violation& v : report) {
    if (v.kind == kind) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("fixture models validate cleanly") {
  for (const std::string& name : fixture_names()) {
    Fixture fixture = load_fixture(name);
    std::vector<Violation> report = validate_model(fixture.document.model);
    if (fixture.valid) {
      CHECK_MESSAGE(report.empty(), name);
    } else {
      CHECK_MESSAGE(!report.empty(), name);
    }
  }
}

TEST_CASE("cycle detection reports the path") {
  CausalModel model = load_fixture("camping-cyclic").document.model;
  std::vector<Violation> report = validate_model(model);
  REQUIRE(has_violation(report, Violation::Kind::Cycle));
  for (const Violation& v : report) {
    if (v.kind != Violation::Kind::Cycle) continue;
    REQUIRE(v.cycle.size() >= 3);
    CHECK(v.cycle.front() == v.cycle.back());
  }
  CHECK_THROWS_AS(topological_order(model), Error);
}

TEST_CASE("missing and extra mechanisms are flagged") {
  CausalModel model = load_fixture("forest-fire-disjunctive").document.model;
  SUBCASE("missing") {
    model.mechanisms.pop_back();
    CHECK(has_violation(validate_model(model),
                        Violation::Kind::MissingMechanism));
  }
  SUBCASE("duplicate") {
    model.mechanisms.push_back(model.mechanisms.back());
    CHECK(has_violation(validate_model(model),
                        Violation::Kind::DuplicateMechanism));
  }
  SUBCASE("for an exogenous variable") {
    Mechanism m;
    m.target = "U_L";
    m.body = Expr::constant(0);
    model.mechanisms.push_back(m);
    CHECK(has_violation(validate_model(model),
                        Violation::Kind::ExtraMechanism));
  }
}

TEST_CASE("out-of-range mechanism carries an input witness") {
  CausalModel model = parse_document(R"(model m {
    exogenous { U: {0,1} }
    endogenous { X: {0,1} }
    equations { X = U + 1 }
  })").model;
  std::vector<Violation> report = validate_model(model);
  REQUIRE(report.size() == 1);
  CHECK(report[0].kind == Violation::Kind::OutOfRangeMechanism);
  CHECK(report[0].variable == "X");
  CHECK(report[0].witness.at("U") == 1);
}

TEST_CASE("totality cap trips loudly instead of guessing") {
  std::string big = "model m {\n  exogenous {\n";
  for (int i = 0; i < 25; ++i) {
    big += "    U" + std::to_string(i) + ": {0,1}\n";
  }
  big += "  }\n  endogenous { X: {0,1} }\n  equations { X = min(1, U0";
  for (int i = 1; i < 25; ++i) big += " + U" + std::to_string(i);
  big += ") }\n}\n";
  CausalModel model = parse_document(big).model;
  CHECK(has_violation(validate_model(model),
                      Violation::Kind::TotalityUnverified));
}

TEST_CASE("dependency graph lists syntactic edges in declaration order") {
  CausalModel model = load_fixture("rock-throw-5var").document.model;
  auto edges = dependency_graph(model);
  std::vector<std::pair<std::string, std::string>> expected = {
      {"U_ST", "ST"}, {"U_BT", "BT"}, {"ST", "SH"},
      {"BT", "BH"},   {"SH", "BH"},   {"SH", "BS"},
      {"BH", "BS"},
  };
  CHECK(edges == expected);
}

TEST_CASE("topological order respects dependencies with declaration ties") {
  CausalModel model = load_fixture("rock-throw-5var").document.model;
  std::vector<std::string> expected = {"ST", "BT", "SH", "BH", "BS"};
  CHECK(topological_order(model) == expected);
}

TEST_CASE("validation accepts arbitrary broken input as data") {
  CausalModel model;
  model.name = "broken";
  model.variables.push_back({"9bad", {}, VarKind::Endogenous, {}});
  model.variables.push_back({"9bad", {1, 1}, VarKind::Endogenous, {}});
  std::vector<Violation> report = validate_model(model);
  CHECK(has_violation(report, Violation::Kind::BadIdentifier));
  CHECK(has_violation(report, Violation::Kind::DuplicateId));
  CHECK(has_violation(report, Violation::Kind::EmptyRange));
  CHECK(has_violation(report, Violation::Kind::DuplicateRangeValue));
  CHECK(has_violation(report, Violation::Kind::MissingMechanism));
}
