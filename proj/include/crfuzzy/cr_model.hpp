#pragma once

// The spectrum-access decision model: four Gaussian Low/Medium/High inputs,
// a Low/Medium/High decision output on [0,1], and the 81-rule table.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "crfuzzy/engine.hpp"

namespace crfuzzy {

/// Input order used by every rule and by infer().
inline constexpr std::array<const char*, 4> kInputNames = {"signal_dbm", "velocity_kmh", "spectrum_ratio",
                                                          "distance_m"};
inline constexpr const char* kOutputName = "decision";
inline constexpr std::array<const char*, 3> kTermNames = {"Low", "Medium", "High"};

inline constexpr double kDefaultAdmissionThreshold = 0.5;

/// One secondary user contending for vacant spectrum.
struct Candidate {
    std::string id;
    double signal_dbm = 0.0;
    double velocity_kmh = 0.0;
    double spectrum_ratio = 0.0;  // required channels / available free channels
    double distance_m = 0.0;

    std::array<double, 4> inputs() const { return {signal_dbm, velocity_kmh, spectrum_ratio, distance_m}; }
};

struct DecisionResult {
    std::string candidate_id;
    double possibility = 0.0;
    bool admitted = false;
    std::optional<InferenceTrace> trace;
};

/// Three terms with centers at lo, midpoint and hi; sigma chosen so that
/// neighbouring terms cross at membership 0.5.
FuzzyVariable three_term_variable(const std::string& name, double lo, double hi);

/// Sigma giving a 0.5 crossover for centers `spacing` apart.
double crossover_sigma(double spacing) noexcept;

/// The decision table as (signal, velocity, ratio, distance, decision) term
/// indices, 0 = Low, 1 = Medium, 2 = High, in table row order.
const std::vector<std::array<std::size_t, 5>>& decision_table();

/// Variables: signal_dbm [-100,-20], velocity_kmh [0,100], spectrum_ratio
/// [0,1], distance_m [0,100]; decision [0,1]. 81 rules, weight 1.
FuzzyModel default_model(std::size_t grid_points = kDefaultGridPoints);

/// Possibility of granting access to `candidate`: the crisp output of
/// infer() on its four inputs. Admission uses `threshold` inclusively.
DecisionResult decision_possibility(const Candidate& candidate, const FuzzyModel& model, bool with_trace = false,
                                    double threshold = kDefaultAdmissionThreshold);

struct ValidationFailure {
    enum class Kind { RuleCount, DuplicateCombination, MissingCombination, Weight, TermOrder, Universe };

    Kind kind;
    std::optional<std::size_t> rule;  // 1-based row, when the failure belongs to one rule
    std::string message;
};

struct ValidationReport {
    std::vector<ValidationFailure> failures;

    bool ok() const noexcept { return failures.empty(); }
};

/// Completeness checks for a full-grid rule base: rule count equals the
/// product of term counts, each antecedent combination exactly once, every
/// weight 1, term centers increasing, non-degenerate universes.
ValidationReport validate_model(const FuzzyModel& model);

std::string to_string(ValidationFailure::Kind kind);

}  // namespace crfuzzy
