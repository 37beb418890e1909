#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "model.hpp"

namespace causet {

struct PrimitiveEvent {
  std::string var;
  std::int64_t value = 0;

  bool operator==(const PrimitiveEvent&) const = default;
};

struct BoolFormula {
  enum class Kind { Event, And, Or, Not };
  Kind kind = Kind::Event;
  PrimitiveEvent event;              // Event only
  std::vector<BoolFormula> children; // And/Or: 2, Not: 1

  static BoolFormula leaf(std::string var, std::int64_t value);
  static BoolFormula make(Kind kind, std::vector<BoolFormula> children);

  bool operator==(const BoolFormula&) const = default;
};

/// [Y1<-y1, ..., Yk<-yk] phi; an empty intervention list is plain phi.
struct CausalFormula {
  std::vector<std::pair<std::string, std::int64_t>> interventions;
  BoolFormula body;
};

std::string to_string(const BoolFormula& formula);
std::string to_string(const CausalFormula& formula);

/// Throws Error(UnknownVariable/OutOfRange) on a leaf that does not fit the
/// signature; endogenous_only additionally rejects exogenous leaves.
void check_formula(const CausalModel& model, const BoolFormula& formula,
                   bool endogenous_only);

bool eval_formula(const BoolFormula& formula, const World& world);

/// Surgery: each listed endogenous variable's mechanism becomes the constant
/// of its value. The input model is unchanged.
CausalModel intervene(
    const CausalModel& model,
    const std::vector<std::pair<std::string, std::int64_t>>& settings);

/// The unique world extending the context that satisfies every mechanism;
/// computed in topological order. Context must be total and in range.
World solve(const CausalModel& model, const Context& context);

/// (M, u) |= [Y<-y] phi.
bool satisfies(const CausalModel& model, const Context& context,
               const CausalFormula& formula);

/// (M, u) |= formula for every context u. Throws Error(SearchSpaceExceeded)
/// if the exogenous product space exceeds cap.
bool satisfies_all_contexts(const CausalModel& model,
                            const CausalFormula& formula,
                            std::size_t cap = 1u << 20);

}  // namespace causet
