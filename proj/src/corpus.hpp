#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dsl.hpp"
#include "normality.hpp"

namespace causet {

/// One documented query outcome, asserted by the test suite.
struct ExpectedVerdict {
  std::string context_name;
  std::string candidate;
  std::string effect;
  bool extended = false;  // check against the fixture's ranking
  NormalitySemantics semantics = NormalitySemantics::Literal;
  bool is_cause = false;
  std::string note;
};

struct Fixture {
  std::string name;
  std::string source;
  ModelDocument document;
  bool valid = true;  // camping-cyclic is shipped broken on purpose
  std::vector<std::pair<std::string, Context>> contexts;
  std::vector<ExpectedVerdict> expected;
};

/// Registry order; parameterized entries appear under their default name.
std::vector<std::string> fixture_names();

/// Loads a built-in fixture. "doctors" takes an optional count suffix:
/// "doctors(4)". Unknown names raise Error(UnknownFixture) listing the
/// registry.
Fixture load_fixture(const std::string& name);

}  // namespace causet
