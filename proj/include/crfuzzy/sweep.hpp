#pragma once

// Two-dimensional decision surfaces: sweep two inputs across a grid while
// holding the other two fixed.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "crfuzzy/engine.hpp"

namespace crfuzzy {

struct SweepAxis {
    std::string variable;
    double lo = 0.0;
    double hi = 0.0;
    std::size_t steps = 2;

    /// Equally spaced, endpoints inclusive.
    std::vector<double> samples() const;

    bool operator==(const SweepAxis&) const = default;
};

struct SweepSpec {
    SweepAxis axis1;  // rows
    SweepAxis axis2;  // columns
    std::map<std::string, double> fixed;

    bool operator==(const SweepSpec&) const = default;
};

struct SweepResult {
    SweepSpec spec;
    std::vector<double> axis1_samples;
    std::vector<double> axis2_samples;
    std::vector<std::vector<double>> grid;  // grid[i][j]: axis1 sample i, axis2 sample j
};

inline constexpr std::size_t kPresetSteps = 41;

/// Throws SweepSpecError unless the axes name distinct inputs, `fixed`
/// covers exactly the remaining ones, steps >= 2, and both axes lie inside
/// their universes.
void validate_sweep(const SweepSpec& spec, const FuzzyModel& model);

SweepResult run_sweep(const SweepSpec& spec, const FuzzyModel& model);

/// Configurations of the published decision-surface figures 7 to 11, with
/// full-universe axes of `steps` samples each. Throws SweepSpecError for
/// any other figure number.
SweepSpec figure_preset(int figure, std::size_t steps = kPresetSteps);

}  // namespace crfuzzy
