#include "crfuzzy/arbitration.hpp"

#include <algorithm>
#include <unordered_set>

namespace crfuzzy {

bool admit(const DecisionResult& result, double threshold) noexcept { return result.possibility >= threshold; }

ArbitrationOutcome rank_scored(std::vector<RankedCandidate> scored, double threshold) {
    if (scored.empty()) {
        throw BatchError("empty candidate batch");
    }
    if (!(threshold >= 0.0 && threshold <= 1.0)) {
        throw BatchError("threshold must lie in [0,1]");
    }
    std::unordered_set<std::string> ids;
    for (const auto& c : scored) {
        if (c.id.empty()) throw BatchError("candidate with empty id");
        if (!ids.insert(c.id).second) throw BatchError("duplicate candidate id '" + c.id + "'");
    }
    std::sort(scored.begin(), scored.end(), [](const RankedCandidate& a, const RankedCandidate& b) {
        if (a.possibility != b.possibility) return a.possibility > b.possibility;
        if (a.distance_m != b.distance_m) return a.distance_m < b.distance_m;
        return a.id < b.id;
    });

    ArbitrationOutcome outcome;
    outcome.threshold = threshold;
    if (scored.front().possibility >= threshold) outcome.winner_id = scored.front().id;
    outcome.ranking = std::move(scored);
    return outcome;
}

ArbitrationOutcome arbitrate(std::span<const Candidate> candidates, const FuzzyModel& model, double threshold) {
    if (candidates.empty()) {
        throw BatchError("empty candidate batch");
    }
    std::vector<RankedCandidate> scored;
    scored.reserve(candidates.size());
    for (const auto& c : candidates) {
        const auto result = decision_possibility(c, model, false, threshold);
        scored.push_back({c.id, result.possibility, c.distance_m});
    }
    return rank_scored(std::move(scored), threshold);
}

}  // namespace crfuzzy
