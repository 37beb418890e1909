#include "oracle.hpp"

#include <functional>
#include <set>
#include <stdexcept>

namespace causet::oracle {

namespace {

// All assignments of vars to values from their ranges, in bitmask-free
// plain product order.
void product(const CausalModel& model, const std::vector<std::string>& vars,
             const std::function<void(const Env&)>& fn) {
  std::vector<std::size_t> idx(vars.size(), 0);
  for (;;) {
    Env env;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      env[vars[i]] = model.find(vars[i])->range[idx[i]];
    }
    fn(env);
    std::size_t i = vars.size();
    for (;;) {
      if (i == 0) return;
      --i;
      if (++idx[i] < model.find(vars[i])->range.size()) break;
      idx[i] = 0;
    }
  }
}

bool holds(const CausalModel& model, const Context& context,
           const std::vector<std::pair<std::string, std::int64_t>>& settings,
           const BoolFormula& formula) {
  CausalFormula f;
  f.interventions = settings;
  f.body = formula;
  return satisfies(model, context, f);
}

bool candidate_actual(const CausalModel& model, const Context& context,
                      const CauseCandidate& candidate,
                      const BoolFormula& effect) {
  World actual = solve(model, context);
  for (const auto& [var, value] : candidate.conjuncts) {
    if (actual.at(var) != value) return false;
  }
  return eval_formula(effect, actual);
}

bool ac2_exists(const CausalModel& model, const Context& context,
                const CauseCandidate& candidate, const BoolFormula& effect) {
  World actual = solve(model, context);
  std::set<std::string> x_vars;
  std::vector<std::string> x_order;
  for (const auto& [var, value] : candidate.conjuncts) {
    x_vars.insert(var);
    x_order.push_back(var);
  }
  std::vector<std::string> others;
  for (const std::string& name : model.endogenous_names()) {
    if (x_vars.count(name) == 0) others.push_back(name);
  }

  const std::size_t n = others.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::string> w_set;
    std::vector<std::string> z_rest;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::size_t{1} << i)) {
        w_set.push_back(others[i]);
      } else {
        z_rest.push_back(others[i]);
      }
    }

    bool found = false;
    product(model, x_order, [&](const Env& x_prime) {
      if (found) return;
      product(model, w_set, [&](const Env& w_values) {
        if (found) return;
        std::vector<std::pair<std::string, std::int64_t>> setting;
        for (const auto& [var, value] : x_prime) setting.emplace_back(var, value);
        for (const auto& [var, value] : w_values) setting.emplace_back(var, value);
        if (holds(model, context, setting, effect)) return;  // AC2(a) fails

        // AC2(b): every sub-reset of W and Z must keep the effect.
        const std::size_t wn = w_set.size();
        const std::size_t zn = z_rest.size();
        for (std::size_t wm = 0; wm < (std::size_t{1} << wn); ++wm) {
          for (std::size_t zm = 0; zm < (std::size_t{1} << zn); ++zm) {
            std::vector<std::pair<std::string, std::int64_t>> back;
            for (const auto& [var, value] : candidate.conjuncts) {
              back.emplace_back(var, value);
            }
            for (std::size_t i = 0; i < wn; ++i) {
              if (wm & (std::size_t{1} << i)) {
                back.emplace_back(w_set[i], w_values.at(w_set[i]));
              }
            }
            for (std::size_t i = 0; i < zn; ++i) {
              if (zm & (std::size_t{1} << i)) {
                back.emplace_back(z_rest[i], actual.at(z_rest[i]));
              }
            }
            if (!holds(model, context, back, effect)) return;
          }
        }
        found = true;
      });
    });
    if (found) return true;
  }
  return false;
}

bool is_cause_recursive(const CausalModel& model, const Context& context,
                        const CauseCandidate& candidate,
                        const BoolFormula& effect) {
  if (!candidate_actual(model, context, candidate, effect)) return false;
  if (!ac2_exists(model, context, candidate, effect)) return false;
  const std::size_t k = candidate.conjuncts.size();
  for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << k); ++mask) {
    CauseCandidate sub;
    for (std::size_t i = 0; i < k; ++i) {
      if (mask & (std::size_t{1} << i)) {
        sub.conjuncts.push_back(candidate.conjuncts[i]);
      }
    }
    if (candidate_actual(model, context, sub, effect) &&
        ac2_exists(model, context, sub, effect)) {
      return false;  // a strict sub-conjunction already qualifies
    }
  }
  return true;
}

}  // namespace

World solve_by_enumeration(const CausalModel& model, const Context& context) {
  std::vector<std::string> endo = model.endogenous_names();
  World base;
  for (const auto& [var, value] : context) base[var] = value;

  std::vector<World> solutions;
  product(model, endo, [&](const Env& assignment) {
    World world = base;
    for (const auto& [var, value] : assignment) world[var] = value;
    for (const Mechanism& m : model.mechanisms) {
      if (eval_expression(m.body, world) != world.at(m.target)) return;
    }
    solutions.push_back(world);
  });
  if (solutions.size() != 1) {
    throw std::logic_error("expected exactly one solution, found " +
                           std::to_string(solutions.size()));
  }
  return solutions.front();
}

bool is_cause_brute(const CausalModel& model, const Context& context,
                    const CauseCandidate& candidate,
                    const BoolFormula& effect) {
  return is_cause_recursive(model, context, candidate, effect);
}

}  // namespace causet::oracle
