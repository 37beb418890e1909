#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "expr.hpp"

namespace causet {

enum class VarKind { Exogenous, Endogenous };

struct Variable {
  std::string name;
  std::vector<std::int64_t> range;  // sorted ascending, distinct
  VarKind kind = VarKind::Endogenous;
  SourceLoc loc;
};

struct Mechanism {
  std::string target;
  Expr body;
  SourceLoc loc;
};

/// A finite acyclic structural causal model: a signature (variables with
/// finite integer ranges, exogenous declared before endogenous) plus one
/// mechanism per endogenous variable. Declaration order is the canonical
/// variable order and drives every deterministic tie-break.
struct CausalModel {
  std::string name;
  std::vector<Variable> variables;    // declaration order
  std::vector<Mechanism> mechanisms;  // declaration order

  int index_of(const std::string& var) const;  // -1 if absent
  const Variable* find(const std::string& var) const;
  const Mechanism* mechanism_for(const std::string& var) const;
  bool in_range(const std::string& var, std::int64_t value) const;
  std::vector<std::string> exogenous_names() const;
  std::vector<std::string> endogenous_names() const;

  bool operator==(const CausalModel& other) const;
};

using Context = std::map<std::string, std::int64_t>;
using World = std::map<std::string, std::int64_t>;

struct Violation {
  enum class Kind {
    NoEndogenous,
    BadIdentifier,
    DuplicateId,
    EmptyRange,
    DuplicateRangeValue,
    MissingMechanism,
    ExtraMechanism,
    DuplicateMechanism,
    UnknownReference,
    OutOfRangeMechanism,
    Cycle,
    TotalityUnverified,
  };
  Kind kind;
  std::string variable;            // offending variable/mechanism target
  std::string message;
  Env witness;                     // OutOfRangeMechanism: an input assignment
  std::vector<std::string> cycle;  // Cycle: the path, first == last
};

const char* violation_kind_name(Violation::Kind kind);

/// Accepts arbitrary candidate models; violations are data, not failures.
/// Totality of each mechanism is checked by exhaustive enumeration over the
/// referenced variables' ranges, up to totality_cap input combinations.
std::vector<Violation> validate_model(const CausalModel& model,
                                      std::size_t totality_cap = 1u << 20);

/// Edge (Y, X) iff Y occurs syntactically in X's mechanism body.
/// Sorted by declaration order of (from, to).
std::vector<std::pair<std::string, std::string>> dependency_graph(
    const CausalModel& model);

/// Endogenous variables, dependencies first; ties broken by declaration
/// order. Throws Error(InvalidModel) on a cycle.
std::vector<std::string> topological_order(const CausalModel& model);

}  // namespace causet
