#include "jsonio.hpp"

namespace causet {

namespace {

Json assignment_json(const std::map<std::string, std::int64_t>& values) {
  Json out = Json::object();
  for (const auto& [var, value] : values) out[var] = value;
  return out;
}

Json stats_json(const SearchStats& stats) {
  Json out;
  out["partitions"] = stats.partitions;
  out["settings"] = stats.settings;
  out["subsetChecks"] = stats.subset_checks;
  return out;
}

Json candidate_json(const CauseCandidate& candidate) {
  Json out = Json::array();
  for (const auto& [var, value] : candidate.conjuncts) {
    Json c;
    c["var"] = var;
    c["value"] = value;
    out.push_back(std::move(c));
  }
  return out;
}

Json near_miss_json(const AttemptFailure& failure) {
  Json out;
  out["reason"] =
      failure.reason == AttemptFailure::Reason::Ac2b ? "ac2b" : "normality";
  out["wSet"] = failure.w_set;
  out["wValues"] = assignment_json(failure.w_values);
  out["xPrime"] = assignment_json(failure.x_prime);
  if (failure.reason == AttemptFailure::Reason::Ac2b) {
    out["wPrime"] = failure.w_prime;
    out["zPrime"] = failure.z_prime;
  }
  return out;
}

}  // namespace

Json rank_json(Rank rank) {
  if (rank.is_infinite()) return Json("inf");
  return Json(rank.v);
}

Json witness_json(const Witness& witness) {
  Json out;
  out["zSet"] = witness.z_set;
  out["wSet"] = witness.w_set;
  out["xPrime"] = assignment_json(witness.x_prime);
  out["wValues"] = assignment_json(witness.w_values);
  out["zStar"] = assignment_json(witness.z_star);
  return out;
}

Json verdict_json(const Verdict& verdict) {
  Json out;
  out["isCause"] = verdict.is_cause;
  out["failedClause"] = clause_name(verdict.failed_clause);
  if (verdict.witness) {
    out["witness"] = witness_json(*verdict.witness);
  } else {
    out["witness"] = nullptr;
  }
  if (verdict.ac3_subcause) {
    out["ac3Subcause"] = candidate_json(*verdict.ac3_subcause);
  }
  out["statistics"] = stats_json(verdict.stats);
  Json misses = Json::array();
  for (const AttemptFailure& f : verdict.near_misses) {
    misses.push_back(near_miss_json(f));
  }
  out["nearMisses"] = std::move(misses);
  return out;
}

Json violations_json(const std::vector<Violation>& violations) {
  Json out = Json::array();
  for (const Violation& v : violations) {
    Json item;
    item["kind"] = violation_kind_name(v.kind);
    item["variable"] = v.variable;
    item["message"] = v.message;
    if (!v.witness.empty()) item["witness"] = assignment_json(v.witness);
    if (!v.cycle.empty()) item["cycle"] = v.cycle;
    out.push_back(std::move(item));
  }
  return out;
}

Json comparison_json(const Comparison& comparison) {
  Json out;
  Json rows = Json::array();
  for (const ComparisonRow& row : comparison.rows) {
    Json item;
    if (row.verdict) {
      item["verdict"] = verdict_json(*row.verdict);
    } else {
      item["error"] = row.error;
    }
    rows.push_back(std::move(item));
  }
  out["verdicts"] = std::move(rows);
  out["stable"] = comparison.stable;
  out["topologyChanged"] = comparison.topology_changed;
  return out;
}

Json causes_json(
    const std::vector<std::pair<CauseCandidate, Witness>>& causes) {
  Json out = Json::array();
  for (const auto& [candidate, witness] : causes) {
    Json item;
    item["candidate"] = candidate_json(candidate);
    item["witness"] = witness_json(witness);
    out.push_back(std::move(item));
  }
  return out;
}

}  // namespace causet
