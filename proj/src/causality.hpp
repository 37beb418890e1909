#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "normality.hpp"
#include "semantics.hpp"

namespace causet {

/// Conjunction of primitive events X1=x1 & ... & Xk=xk over distinct
/// endogenous variables.
struct CauseCandidate {
  std::vector<std::pair<std::string, std::int64_t>> conjuncts;

  bool operator==(const CauseCandidate&) const = default;
};

/// The (Z, W, x', w, z*) tuple certifying AC2.
struct Witness {
  std::vector<std::string> z_set;  // declaration order; contains candidate vars
  std::vector<std::string> w_set;  // complement of z_set in V
  std::map<std::string, std::int64_t> x_prime;   // alternative candidate values
  std::map<std::string, std::int64_t> w_values;  // setting of w_set
  std::map<std::string, std::int64_t> z_star;    // actual solved values on z_set

  bool operator==(const Witness&) const = default;
};

struct SearchStats {
  std::uint64_t partitions = 0;     // (Z, W) splits examined
  std::uint64_t settings = 0;       // (x', w) pairs examined
  std::uint64_t subset_checks = 0;  // AC2(b) formula evaluations

  bool operator==(const SearchStats&) const = default;
};

enum class Clause { None, AC1, AC2, AC3 };

const char* clause_name(Clause clause);

/// A witness attempt that passed AC2(a) but was rejected; kept for
/// diagnostics. For Ac2b the counterexample subsets are recorded.
struct AttemptFailure {
  enum class Reason { Ac2b, Normality };
  Reason reason = Reason::Ac2b;
  std::vector<std::string> w_set;
  std::map<std::string, std::int64_t> w_values;
  std::map<std::string, std::int64_t> x_prime;
  std::vector<std::string> w_prime;  // Ac2b only
  std::vector<std::string> z_prime;  // Ac2b only
};

struct Verdict {
  bool is_cause = false;
  Clause failed_clause = Clause::None;
  std::optional<Witness> witness;
  SearchStats stats;
  std::vector<AttemptFailure> near_misses;
  std::optional<CauseCandidate> ac3_subcause;  // witness of non-minimality
};

struct HpOptions {
  std::size_t max_vars = 16;       // endogenous-variable cap on the search
  std::size_t near_miss_cap = 16;  // recorded AttemptFailures
};

/// AC2(a)'s admissibility hook; preliminary causation passes nullptr.
using AdmissibilityCheck = std::function<bool(
    const std::map<std::string, std::int64_t>& x_prime,
    const std::vector<std::string>& w_set,
    const std::map<std::string, std::int64_t>& w_values)>;

/// AC1: X=x and phi both hold at (M, u).
bool check_ac1(const CausalModel& model, const Context& context,
               const CauseCandidate& candidate, const BoolFormula& effect);

struct WitnessCheck {
  bool ok = false;
  bool ac2a = false;
  bool ac2b = false;
  // First failing AC2(b) instance, when ac2b is false.
  std::vector<std::string> w_prime;
  std::vector<std::string> z_prime;
};

/// Checks AC2(a) and the exhaustive AC2(b) subset sweep for a concrete
/// witness. Throws Error(Structural) if the witness does not fit the model
/// (partition not total, z_star mismatch, values out of range).
WitnessCheck verify_witness(const CausalModel& model, const Context& context,
                            const CauseCandidate& candidate,
                            const BoolFormula& effect, const Witness& witness);

/// Canonical-order exhaustive search for an AC2 witness: wSet by increasing
/// cardinality then lexicographic by declaration order; x' lexicographic
/// excluding the actual values; w lexicographic. Requires AC1.
std::optional<Witness> find_witness(const CausalModel& model,
                                    const Context& context,
                                    const CauseCandidate& candidate,
                                    const BoolFormula& effect,
                                    const HpOptions& options = {},
                                    SearchStats* stats = nullptr,
                                    std::vector<AttemptFailure>* near_misses = nullptr,
                                    const AdmissibilityCheck& admissible = nullptr);

/// The preliminary actual-cause definition: AC1, then AC3 (every nonempty
/// strict sub-conjunction must fail AC1 and AC2), then AC2 by witness search.
Verdict is_actual_cause(const CausalModel& model, const Context& context,
                        const CauseCandidate& candidate,
                        const BoolFormula& effect,
                        const HpOptions& options = {});

/// Same, except AC2(a) witnesses must additionally satisfy the ranking-based
/// normality condition under the selected semantics.
Verdict is_actual_cause_extended(
    const ExtendedCausalModel& extended, const Context& context,
    const CauseCandidate& candidate, const BoolFormula& effect,
    NormalitySemantics semantics = NormalitySemantics::Literal,
    const HpOptions& options = {});

/// Naive counterfactual dependence (W = empty): some alternative setting of
/// the candidate variables falsifies the effect. Requires AC1.
bool but_for(const CausalModel& model, const Context& context,
             const CauseCandidate& candidate, const BoolFormula& effect);

/// All actual-valued candidates of at most max_conjuncts conjuncts that are
/// actual causes of the effect, ordered by conjunct count then declaration
/// order. Requires the effect to hold at (M, u).
std::vector<std::pair<CauseCandidate, Witness>> enumerate_causes(
    const CausalModel& model, const Context& context, const BoolFormula& effect,
    std::size_t max_conjuncts, bool exclude_effect_variables = true,
    const HpOptions& options = {},
    const ExtendedCausalModel* extended = nullptr,
    NormalitySemantics semantics = NormalitySemantics::Literal);

/// All simple directed paths in the dependency graph, shortest first, then
/// lexicographic by declaration order.
std::vector<std::vector<std::string>> directed_paths(const CausalModel& model,
                                                     const std::string& from,
                                                     const std::string& to);

struct ComparisonRow {
  std::optional<Verdict> verdict;
  std::string error;  // nonempty when the check failed for this model
};

struct Comparison {
  std::vector<ComparisonRow> rows;
  bool stable = false;
  // rows.size()-1 entries: did the candidate-to-effect path topology change
  // between adjacent models?
  std::vector<bool> topology_changed;
};

/// Per-model verdicts for the same causal query, with a stability flag and
/// path-topology change notes. Per-model errors are reported inline.
Comparison compare_verdicts(const std::vector<CausalModel>& models,
                            const std::vector<Context>& contexts,
                            const CauseCandidate& candidate,
                            const BoolFormula& effect,
                            const HpOptions& options = {});

}  // namespace causet
