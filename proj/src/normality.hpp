#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "semantics.hpp"

namespace causet {

/// A rank: a natural number or infinity. Infinity compares greater than
/// every natural number.
struct Rank {
  std::uint64_t v = 0;

  static constexpr Rank finite(std::uint64_t n) { return Rank{n}; }
  static constexpr Rank infinity() {
    return Rank{std::numeric_limits<std::uint64_t>::max()};
  }
  bool is_infinite() const {
    return v == std::numeric_limits<std::uint64_t>::max();
  }
  auto operator<=>(const Rank&) const = default;
};

std::string to_string(Rank rank);

struct RankingRule {
  std::map<std::string, std::int64_t> pattern;  // partial world assignment
  Rank rank;

  bool operator==(const RankingRule&) const = default;
};

/// Ordered first-match-wins rules with a mandatory default, so every world
/// receives exactly one rank.
struct RankingFunction {
  std::vector<RankingRule> rules;
  Rank default_rank = Rank::finite(0);

  bool operator==(const RankingFunction&) const = default;
};

/// (S, F, kappa): a causal model plus a ranking over worlds.
struct ExtendedCausalModel {
  CausalModel base;
  RankingFunction ranking;
};

/// Rank of the first rule (in list order) whose pattern the world extends;
/// default_rank if none matches.
Rank rank_world(const RankingFunction& ranking, const World& world);

/// "If antecedent then typically consequent": true iff the consequent holds
/// at every least-rank antecedent world. Worlds range over the full
/// assignment space, including worlds violating the equations; vacuously
/// true when no world satisfies the antecedent.
bool typically(const ExtendedCausalModel& extended,
               const BoolFormula& antecedent, const BoolFormula& consequent,
               std::size_t cap = 1u << 20);

/// How the normality side condition on AC2(a) picks the comparison world.
enum class NormalitySemantics {
  /// Some world of the full assignment space satisfying X=x' and W=w has
  /// rank <= rank of the actual world.
  Literal,
  /// The solution world under the intervention X<-x', W<-w has rank <=
  /// rank of the actual world.
  Solution,
};

/// Enumerates every world of the model (full assignment space). fn returns
/// false to stop early. Throws Error(SearchSpaceExceeded) past cap.
void for_each_world(const CausalModel& model,
                    const std::function<bool(const World&)>& fn,
                    std::size_t cap = 1u << 20);

}  // namespace causet
