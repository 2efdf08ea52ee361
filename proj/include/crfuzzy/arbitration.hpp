#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "crfuzzy/cr_model.hpp"

namespace crfuzzy {

struct RankedCandidate {
    std::string id;
    double possibility = 0.0;
    double distance_m = 0.0;

    bool operator==(const RankedCandidate&) const = default;
};

struct ArbitrationOutcome {
    std::optional<std::string> winner_id;
    std::vector<RankedCandidate> ranking;  // best first
    double threshold = kDefaultAdmissionThreshold;

    bool operator==(const ArbitrationOutcome&) const = default;
};

/// Inclusive: possibility >= threshold.
bool admit(const DecisionResult& result, double threshold) noexcept;

/// Orders already-scored candidates (possibility desc, then distance asc,
/// then id asc) and picks the head as winner if it clears the threshold.
/// Throws BatchError on an empty batch or a repeated id.
ArbitrationOutcome rank_scored(std::vector<RankedCandidate> scored, double threshold);

/// Scores every candidate with decision_possibility and ranks them.
ArbitrationOutcome arbitrate(std::span<const Candidate> candidates, const FuzzyModel& model,
                             double threshold = kDefaultAdmissionThreshold);

}  // namespace crfuzzy
