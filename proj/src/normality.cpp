#include "normality.hpp"

#include "errors.hpp"

namespace causet {

std::string to_string(Rank rank) {
  return rank.is_infinite() ? "inf" : std::to_string(rank.v);
}

Rank rank_world(const RankingFunction& ranking, const World& world) {
  for (const RankingRule& rule : ranking.rules) {
    bool matches = true;
    for (const auto& [var, value] : rule.pattern) {
      auto it = world.find(var);
      if (it == world.end() || it->second != value) {
        matches = false;
        break;
      }
    }
    if (matches) return rule.rank;
  }
  return ranking.default_rank;
}

void for_each_world(const CausalModel& model,
                    const std::function<bool(const World&)>& fn,
                    std::size_t cap) {
  std::size_t total = 1;
  for (const Variable& v : model.variables) {
    if (v.range.empty()) return;
    if (total > cap / v.range.size()) {
      throw Error(ErrorKind::SearchSpaceExceeded,
                  "world space too large to enumerate");
    }
    total *= v.range.size();
  }
  std::vector<std::size_t> idx(model.variables.size(), 0);
  World world;
  for (;;) {
    for (std::size_t i = 0; i < model.variables.size(); ++i) {
      world[model.variables[i].name] = model.variables[i].range[idx[i]];
    }
    if (!fn(world)) return;
    std::size_t i = model.variables.size();
    for (;;) {
      if (i == 0) return;
      --i;
      if (++idx[i] < model.variables[i].range.size()) break;
      idx[i] = 0;
    }
  }
}

bool typically(const ExtendedCausalModel& extended,
               const BoolFormula& antecedent, const BoolFormula& consequent,
               std::size_t cap) {
  check_formula(extended.base, antecedent, /*endogenous_only=*/false);
  check_formula(extended.base, consequent, /*endogenous_only=*/false);
  bool any = false;
  Rank least = Rank::infinity();
  bool consequent_at_least = true;
  for_each_world(
      extended.base,
      [&](const World& world) {
        if (!eval_formula(antecedent, world)) return true;
        Rank r = rank_world(extended.ranking, world);
        if (!any || r < least) {
          any = true;
          least = r;
          consequent_at_least = eval_formula(consequent, world);
        } else if (r == least && consequent_at_least) {
          consequent_at_least = eval_formula(consequent, world);
        }
        return true;
      },
      cap);
  return !any || consequent_at_least;
}

}  // namespace causet
