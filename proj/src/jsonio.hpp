#pragma once

#include "json.hpp"

#include "causality.hpp"
#include "model.hpp"

namespace causet {

using Json = nlohmann::ordered_json;

Json witness_json(const Witness& witness);
Json verdict_json(const Verdict& verdict);
Json violations_json(const std::vector<Violation>& violations);
Json comparison_json(const Comparison& comparison);
Json causes_json(const std::vector<std::pair<CauseCandidate, Witness>>& causes);
Json rank_json(Rank rank);  // "inf" or a number

}  // namespace causet
