#include "causality.hpp"

#include <algorithm>
#include <set>

#include "errors.hpp"

namespace causet {

const char* clause_name(Clause clause) {
  switch (clause) {
    case Clause::None: return "none";
    case Clause::AC1: return "AC1";
    case Clause::AC2: return "AC2";
    case Clause::AC3: return "AC3";
  }
  return "none";
}

namespace {

void check_candidate(const CausalModel& model, const CauseCandidate& candidate) {
  if (candidate.conjuncts.empty()) {
    throw Error(ErrorKind::Precondition, "cause candidate is empty");
  }
  std::set<std::string> seen;
  for (const auto& [var, value] : candidate.conjuncts) {
    const Variable* v = model.find(var);
    if (v == nullptr) {
      throw Error(ErrorKind::UnknownVariable,
                  "unknown variable '" + var + "' in cause candidate");
    }
    if (v->kind == VarKind::Exogenous) {
      throw Error(ErrorKind::Precondition,
                  "cause candidate variable '" + var + "' is exogenous");
    }
    if (!model.in_range(var, value)) {
      throw Error(ErrorKind::OutOfRange,
                  "value " + std::to_string(value) +
                      " is outside the range of '" + var + "'");
    }
    if (!seen.insert(var).second) {
      throw Error(ErrorKind::DuplicateVariable,
                  "duplicate variable '" + var + "' in cause candidate");
    }
  }
}

BoolFormula candidate_formula(const CauseCandidate& candidate) {
  BoolFormula f = BoolFormula::leaf(candidate.conjuncts[0].first,
                                    candidate.conjuncts[0].second);
  for (std::size_t i = 1; i < candidate.conjuncts.size(); ++i) {
    f = BoolFormula::make(
        BoolFormula::Kind::And,
        {std::move(f), BoolFormula::leaf(candidate.conjuncts[i].first,
                                         candidate.conjuncts[i].second)});
  }
  return f;
}

BoolFormula negate(const BoolFormula& f) {
  return BoolFormula::make(BoolFormula::Kind::Not, {f});
}

/// All subsets of items, ordered by cardinality then position-lexicographic.
/// Preserves the element order of items within each subset.
std::vector<std::vector<std::string>> subsets_card_lex(
    const std::vector<std::string>& items) {
  std::vector<std::vector<std::string>> out;
  const std::size_t n = items.size();
  out.push_back({});
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
      std::vector<std::string> subset(k);
      for (std::size_t i = 0; i < k; ++i) subset[i] = items[idx[i]];
      out.push_back(std::move(subset));
      std::size_t i = k;
      for (;;) {
        if (i == 0) goto next_k;
        --i;
        if (idx[i] != i + n - k) break;
      }
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  next_k:;
    (void)0;
  }
  return out;
}

/// Lexicographic product over the ranges of vars. fn returns false to stop;
/// returns false iff stopped early.
bool for_each_value_product(
    const CausalModel& model, const std::vector<std::string>& vars,
    const std::function<bool(const std::map<std::string, std::int64_t>&)>& fn) {
  std::vector<const std::vector<std::int64_t>*> ranges;
  ranges.reserve(vars.size());
  for (const std::string& v : vars) ranges.push_back(&model.find(v)->range);
  std::vector<std::size_t> idx(vars.size(), 0);
  for (;;) {
    std::map<std::string, std::int64_t> values;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      values[vars[i]] = (*ranges[i])[idx[i]];
    }
    if (!fn(values)) return false;
    std::size_t i = vars.size();
    for (;;) {
      if (i == 0) return true;
      --i;
      if (++idx[i] < ranges[i]->size()) break;
      idx[i] = 0;
    }
  }
}

std::vector<std::pair<std::string, std::int64_t>> to_settings(
    const std::map<std::string, std::int64_t>& m) {
  return {m.begin(), m.end()};
}

/// The exhaustive AC2(b) sweep: for every subset W' of wSet and Z' of
/// zSet \ X, [X<-x, W'<-w, Z'<-z*] phi must hold. Returns the first failing
/// pair in card-lex order, if any.
bool sweep_ac2b(const CausalModel& model, const Context& context,
                const CauseCandidate& candidate, const BoolFormula& effect,
                const std::vector<std::string>& w_set,
                const std::map<std::string, std::int64_t>& w_values,
                const std::vector<std::string>& z_rest,
                const std::map<std::string, std::int64_t>& z_star,
                SearchStats* stats, std::vector<std::string>* bad_w_prime,
                std::vector<std::string>* bad_z_prime) {
  const auto w_subsets = subsets_card_lex(w_set);
  const auto z_subsets = subsets_card_lex(z_rest);
  for (const auto& w_prime : w_subsets) {
    for (const auto& z_prime : z_subsets) {
      if (stats != nullptr) ++stats->subset_checks;
      CausalFormula f;
      f.interventions.assign(candidate.conjuncts.begin(),
                             candidate.conjuncts.end());
      for (const std::string& v : w_prime) {
        f.interventions.emplace_back(v, w_values.at(v));
      }
      for (const std::string& v : z_prime) {
        f.interventions.emplace_back(v, z_star.at(v));
      }
      f.body = effect;
      if (!satisfies(model, context, f)) {
        if (bad_w_prime != nullptr) *bad_w_prime = w_prime;
        if (bad_z_prime != nullptr) *bad_z_prime = z_prime;
        return false;
      }
    }
  }
  return true;
}

bool check_ac2a(const CausalModel& model, const Context& context,
                const std::map<std::string, std::int64_t>& x_prime,
                const std::map<std::string, std::int64_t>& w_values,
                const BoolFormula& effect) {
  CausalFormula f;
  for (const auto& [var, value] : x_prime) f.interventions.emplace_back(var, value);
  for (const auto& [var, value] : w_values) f.interventions.emplace_back(var, value);
  f.body = negate(effect);
  return satisfies(model, context, f);
}

}  // namespace

bool check_ac1(const CausalModel& model, const Context& context,
               const CauseCandidate& candidate, const BoolFormula& effect) {
  check_candidate(model, candidate);
  check_formula(model, effect, /*endogenous_only=*/true);
  World actual = solve(model, context);
  for (const auto& [var, value] : candidate.conjuncts) {
    if (actual.at(var) != value) return false;
  }
  return eval_formula(effect, actual);
}

WitnessCheck verify_witness(const CausalModel& model, const Context& context,
                            const CauseCandidate& candidate,
                            const BoolFormula& effect, const Witness& witness) {
  check_candidate(model, candidate);
  check_formula(model, effect, /*endogenous_only=*/true);

  std::vector<std::string> endo = model.endogenous_names();
  std::set<std::string> z(witness.z_set.begin(), witness.z_set.end());
  std::set<std::string> w(witness.w_set.begin(), witness.w_set.end());
  if (z.size() != witness.z_set.size() || w.size() != witness.w_set.size()) {
    throw Error(ErrorKind::Structural, "witness partition lists a variable twice");
  }
  for (const std::string& name : witness.z_set) {
    if (w.count(name) != 0) {
      throw Error(ErrorKind::Structural,
                  "variable '" + name + "' is in both zSet and wSet");
    }
  }
  if (z.size() + w.size() != endo.size()) {
    throw Error(ErrorKind::Structural,
                "witness partition does not cover the endogenous variables");
  }
  for (const std::string& name : endo) {
    if (z.count(name) == 0 && w.count(name) == 0) {
      throw Error(ErrorKind::Structural,
                  "endogenous variable '" + name + "' missing from the partition");
    }
  }
  for (const auto& [var, value] : candidate.conjuncts) {
    if (z.count(var) == 0) {
      throw Error(ErrorKind::Structural,
                  "cause variable '" + var + "' is not in zSet");
    }
    auto it = witness.x_prime.find(var);
    if (it == witness.x_prime.end()) {
      throw Error(ErrorKind::Structural,
                  "witness does not give an alternative value for '" + var + "'");
    }
    if (!model.in_range(var, it->second)) {
      throw Error(ErrorKind::OutOfRange,
                  "witness value for '" + var + "' is out of range");
    }
  }
  if (witness.x_prime.size() != candidate.conjuncts.size()) {
    throw Error(ErrorKind::Structural,
                "witness sets variables outside the cause candidate");
  }
  for (const std::string& name : witness.w_set) {
    auto it = witness.w_values.find(name);
    if (it == witness.w_values.end()) {
      throw Error(ErrorKind::Structural,
                  "witness does not set wSet variable '" + name + "'");
    }
    if (!model.in_range(name, it->second)) {
      throw Error(ErrorKind::OutOfRange,
                  "witness value for '" + name + "' is out of range");
    }
  }
  if (witness.w_values.size() != witness.w_set.size()) {
    throw Error(ErrorKind::Structural, "wValues sets variables outside wSet");
  }

  World actual = solve(model, context);
  std::map<std::string, std::int64_t> z_star;
  for (const std::string& name : witness.z_set) z_star[name] = actual.at(name);
  if (!witness.z_star.empty() && witness.z_star != z_star) {
    throw Error(ErrorKind::Structural,
                "zStar does not match the actual values of zSet");
  }

  std::set<std::string> x_vars;
  for (const auto& [var, value] : candidate.conjuncts) x_vars.insert(var);
  std::vector<std::string> z_rest;
  for (const std::string& name : witness.z_set) {
    if (x_vars.count(name) == 0) z_rest.push_back(name);
  }

  WitnessCheck result;
  result.ac2a =
      check_ac2a(model, context, witness.x_prime, witness.w_values, effect);
  result.ac2b = sweep_ac2b(model, context, candidate, effect, witness.w_set,
                           witness.w_values, z_rest, z_star, nullptr,
                           &result.w_prime, &result.z_prime);
  result.ok = result.ac2a && result.ac2b;
  return result;
}

std::optional<Witness> find_witness(
    const CausalModel& model, const Context& context,
    const CauseCandidate& candidate, const BoolFormula& effect,
    const HpOptions& options, SearchStats* stats,
    std::vector<AttemptFailure>* near_misses,
    const AdmissibilityCheck& admissible) {
  check_candidate(model, candidate);
  check_formula(model, effect, /*endogenous_only=*/true);
  std::vector<std::string> endo = model.endogenous_names();
  if (endo.size() > options.max_vars) {
    throw Error(ErrorKind::SearchSpaceExceeded,
                "model has " + std::to_string(endo.size()) +
                    " endogenous variables; the witness search is capped at " +
                    std::to_string(options.max_vars));
  }

  World actual = solve(model, context);
  std::set<std::string> x_vars;
  std::map<std::string, std::int64_t> x_actual;
  std::vector<std::string> x_order;
  for (const auto& [var, value] : candidate.conjuncts) {
    x_vars.insert(var);
    x_actual[var] = value;
    x_order.push_back(var);
  }

  std::vector<std::string> others;
  for (const std::string& name : endo) {
    if (x_vars.count(name) == 0) others.push_back(name);
  }

  for (const auto& w_set : subsets_card_lex(others)) {
    if (stats != nullptr) ++stats->partitions;
    std::set<std::string> w(w_set.begin(), w_set.end());
    std::vector<std::string> z_set;
    std::vector<std::string> z_rest;
    std::map<std::string, std::int64_t> z_star;
    for (const std::string& name : endo) {
      if (w.count(name) != 0) continue;
      z_set.push_back(name);
      z_star[name] = actual.at(name);
      if (x_vars.count(name) == 0) z_rest.push_back(name);
    }

    std::optional<Witness> found;
    for_each_value_product(model, x_order, [&](const auto& x_prime) {
      if (x_prime == x_actual) return true;
      return for_each_value_product(model, w_set, [&](const auto& w_values) {
        if (stats != nullptr) ++stats->settings;
        if (!check_ac2a(model, context, x_prime, w_values, effect)) return true;
        if (admissible && !admissible(x_prime, w_set, w_values)) {
          if (near_misses != nullptr &&
              near_misses->size() < options.near_miss_cap) {
            AttemptFailure f;
            f.reason = AttemptFailure::Reason::Normality;
            f.w_set = w_set;
            f.w_values = w_values;
            f.x_prime = x_prime;
            near_misses->push_back(std::move(f));
          }
          return true;
        }
        std::vector<std::string> bad_w_prime;
        std::vector<std::string> bad_z_prime;
        if (!sweep_ac2b(model, context, candidate, effect, w_set, w_values,
                        z_rest, z_star, stats, &bad_w_prime, &bad_z_prime)) {
          if (near_misses != nullptr &&
              near_misses->size() < options.near_miss_cap) {
            AttemptFailure f;
            f.reason = AttemptFailure::Reason::Ac2b;
            f.w_set = w_set;
            f.w_values = w_values;
            f.x_prime = x_prime;
            f.w_prime = std::move(bad_w_prime);
            f.z_prime = std::move(bad_z_prime);
            near_misses->push_back(std::move(f));
          }
          return true;
        }
        Witness witness;
        witness.z_set = z_set;
        witness.w_set = w_set;
        witness.x_prime = x_prime;
        witness.w_values = w_values;
        witness.z_star = z_star;
        found = std::move(witness);
        return false;
      });
    });
    if (found) return found;
  }
  return std::nullopt;
}

namespace {

Verdict decide(const CausalModel& model, const Context& context,
               const CauseCandidate& candidate, const BoolFormula& effect,
               const HpOptions& options, const AdmissibilityCheck& admissible) {
  Verdict verdict;
  if (!check_ac1(model, context, candidate, effect)) {
    verdict.failed_clause = Clause::AC1;
    return verdict;
  }

  // AC3: no nonempty strict sub-conjunction may itself satisfy AC1 and AC2.
  if (candidate.conjuncts.size() > 1) {
    std::vector<std::string> names;
    for (const auto& [var, value] : candidate.conjuncts) names.push_back(var);
    for (const auto& subset : subsets_card_lex(names)) {
      if (subset.empty() || subset.size() == candidate.conjuncts.size()) {
        continue;
      }
      CauseCandidate sub;
      for (const std::string& name : subset) {
        for (const auto& [var, value] : candidate.conjuncts) {
          if (var == name) sub.conjuncts.emplace_back(var, value);
        }
      }
      if (check_ac1(model, context, sub, effect) &&
          find_witness(model, context, sub, effect, options, &verdict.stats,
                       nullptr, admissible)) {
        verdict.failed_clause = Clause::AC3;
        verdict.ac3_subcause = std::move(sub);
        return verdict;
      }
    }
  }

  verdict.witness = find_witness(model, context, candidate, effect, options,
                                 &verdict.stats, &verdict.near_misses,
                                 admissible);
  if (verdict.witness) {
    verdict.is_cause = true;
  } else {
    verdict.failed_clause = Clause::AC2;
  }
  return verdict;
}

}  // namespace

Verdict is_actual_cause(const CausalModel& model, const Context& context,
                        const CauseCandidate& candidate,
                        const BoolFormula& effect, const HpOptions& options) {
  return decide(model, context, candidate, effect, options, nullptr);
}

Verdict is_actual_cause_extended(const ExtendedCausalModel& extended,
                                 const Context& context,
                                 const CauseCandidate& candidate,
                                 const BoolFormula& effect,
                                 NormalitySemantics semantics,
                                 const HpOptions& options) {
  const CausalModel& model = extended.base;
  World actual = solve(model, context);
  Rank actual_rank = rank_world(extended.ranking, actual);

  AdmissibilityCheck admissible =
      [&extended, &model, &context, actual_rank, semantics](
          const std::map<std::string, std::int64_t>& x_prime,
          const std::vector<std::string>& w_set,
          const std::map<std::string, std::int64_t>& w_values) {
        (void)w_set;
        if (semantics == NormalitySemantics::Solution) {
          std::vector<std::pair<std::string, std::int64_t>> settings =
              to_settings(x_prime);
          for (const auto& [var, value] : w_values) {
            settings.emplace_back(var, value);
          }
          World world = solve(intervene(model, settings), context);
          return rank_world(extended.ranking, world) <= actual_rank;
        }
        // Literal: some world of the full assignment space agreeing with
        // x' and w is at least as normal as the actual world.
        bool found = false;
        for_each_world(model, [&](const World& world) {
          for (const auto& [var, value] : x_prime) {
            if (world.at(var) != value) return true;
          }
          for (const auto& [var, value] : w_values) {
            if (world.at(var) != value) return true;
          }
          if (rank_world(extended.ranking, world) <= actual_rank) {
            found = true;
            return false;
          }
          return true;
        });
        return found;
      };
  return decide(model, context, candidate, effect, options, admissible);
}

bool but_for(const CausalModel& model, const Context& context,
             const CauseCandidate& candidate, const BoolFormula& effect) {
  if (!check_ac1(model, context, candidate, effect)) {
    throw Error(ErrorKind::Precondition,
                "cause candidate or effect does not hold at the actual world");
  }
  std::map<std::string, std::int64_t> x_actual;
  std::vector<std::string> x_order;
  for (const auto& [var, value] : candidate.conjuncts) {
    x_actual[var] = value;
    x_order.push_back(var);
  }
  bool dependent = false;
  for_each_value_product(model, x_order, [&](const auto& x_prime) {
    if (x_prime == x_actual) return true;
    CausalFormula f;
    f.interventions = to_settings(x_prime);
    f.body = negate(effect);
    if (satisfies(model, context, f)) {
      dependent = true;
      return false;
    }
    return true;
  });
  return dependent;
}

std::vector<std::pair<CauseCandidate, Witness>> enumerate_causes(
    const CausalModel& model, const Context& context, const BoolFormula& effect,
    std::size_t max_conjuncts, bool exclude_effect_variables,
    const HpOptions& options, const ExtendedCausalModel* extended,
    NormalitySemantics semantics) {
  check_formula(model, effect, /*endogenous_only=*/true);
  World actual = solve(model, context);
  if (!eval_formula(effect, actual)) {
    throw Error(ErrorKind::Precondition,
                "effect does not hold at the actual world");
  }

  std::set<std::string> effect_vars;
  std::function<void(const BoolFormula&)> collect = [&](const BoolFormula& f) {
    if (f.kind == BoolFormula::Kind::Event) {
      effect_vars.insert(f.event.var);
      return;
    }
    for (const BoolFormula& c : f.children) collect(c);
  };
  collect(effect);

  std::vector<std::string> pool;
  for (const std::string& name : model.endogenous_names()) {
    if (exclude_effect_variables && effect_vars.count(name) != 0) continue;
    pool.push_back(name);
  }

  std::vector<std::pair<CauseCandidate, Witness>> out;
  for (const auto& subset : subsets_card_lex(pool)) {
    if (subset.empty() || subset.size() > max_conjuncts) continue;
    CauseCandidate candidate;
    for (const std::string& name : subset) {
      candidate.conjuncts.emplace_back(name, actual.at(name));
    }
    Verdict verdict =
        extended != nullptr
            ? is_actual_cause_extended(*extended, context, candidate, effect,
                                       semantics, options)
            : is_actual_cause(model, context, candidate, effect, options);
    if (verdict.is_cause) {
      out.emplace_back(std::move(candidate), std::move(*verdict.witness));
    }
  }
  return out;
}

std::vector<std::vector<std::string>> directed_paths(const CausalModel& model,
                                                     const std::string& from,
                                                     const std::string& to) {
  if (model.find(from) == nullptr) {
    throw Error(ErrorKind::UnknownVariable, "unknown variable '" + from + "'");
  }
  if (model.find(to) == nullptr) {
    throw Error(ErrorKind::UnknownVariable, "unknown variable '" + to + "'");
  }
  auto edges = dependency_graph(model);
  std::map<std::string, std::vector<std::string>> succ;
  for (const auto& [src, dst] : edges) succ[src].push_back(dst);

  std::vector<std::vector<std::string>> paths;
  std::vector<std::string> path{from};
  std::set<std::string> on_path{from};
  std::function<void(const std::string&)> dfs = [&](const std::string& node) {
    if (node == to && path.size() > 1) {
      paths.push_back(path);
      return;
    }
    for (const std::string& next : succ[node]) {
      if (on_path.count(next) != 0) continue;
      path.push_back(next);
      on_path.insert(next);
      dfs(next);
      on_path.erase(next);
      path.pop_back();
    }
  };
  if (from == to) {
    // A path from a variable to itself would be a cycle; none in a valid
    // model, but handle the trivial single-node case uniformly.
    return paths;
  }
  dfs(from);

  std::map<std::string, std::size_t> order;
  for (std::size_t i = 0; i < model.variables.size(); ++i) {
    order[model.variables[i].name] = i;
  }
  std::sort(paths.begin(), paths.end(), [&](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] != b[i]) return order[a[i]] < order[b[i]];
    }
    return false;
  });
  return paths;
}

Comparison compare_verdicts(const std::vector<CausalModel>& models,
                            const std::vector<Context>& contexts,
                            const CauseCandidate& candidate,
                            const BoolFormula& effect,
                            const HpOptions& options) {
  if (models.empty() || models.size() != contexts.size()) {
    throw Error(ErrorKind::Precondition,
                "comparison needs one context per model");
  }
  Comparison cmp;
  for (std::size_t i = 0; i < models.size(); ++i) {
    ComparisonRow row;
    try {
      row.verdict =
          is_actual_cause(models[i], contexts[i], candidate, effect, options);
    } catch (const Error& e) {
      row.error = e.what();
    }
    cmp.rows.push_back(std::move(row));
  }

  cmp.stable = cmp.rows[0].verdict.has_value();
  for (const ComparisonRow& row : cmp.rows) {
    if (!row.verdict ||
        row.verdict->is_cause != cmp.rows[0].verdict->is_cause) {
      cmp.stable = false;
      break;
    }
  }

  std::set<std::string> effect_vars;
  std::function<void(const BoolFormula&)> collect = [&](const BoolFormula& f) {
    if (f.kind == BoolFormula::Kind::Event) {
      effect_vars.insert(f.event.var);
      return;
    }
    for (const BoolFormula& c : f.children) collect(c);
  };
  collect(effect);

  auto topology = [&](const CausalModel& model) {
    std::set<std::vector<std::string>> paths;
    for (const auto& [var, value] : candidate.conjuncts) {
      for (const std::string& ev : effect_vars) {
        if (model.find(var) == nullptr || model.find(ev) == nullptr) continue;
        for (auto& p : directed_paths(model, var, ev)) {
          paths.insert(std::move(p));
        }
      }
    }
    return paths;
  };
  for (std::size_t i = 0; i + 1 < models.size(); ++i) {
    cmp.topology_changed.push_back(topology(models[i]) !=
                                   topology(models[i + 1]));
  }
  return cmp;
}

}  // namespace causet
