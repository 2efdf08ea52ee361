#pragma once

// Mamdani inference over Gaussian linguistic terms: fuzzify, fire rules with
// weight * min, aggregate min-clipped consequents with max, defuzzify by
// trapezoidal centroid. Nothing in here knows about radios.

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "crfuzzy/error.hpp"

namespace crfuzzy {

struct GaussianTerm {
    std::string name;
    double center = 0.0;
    double sigma = 1.0;

    bool operator==(const GaussianTerm&) const = default;
};

/// A linguistic variable: bounded universe plus terms with strictly
/// increasing centers. Invariants are checked on construction.
class FuzzyVariable {
public:
    FuzzyVariable(std::string name, double lo, double hi, std::vector<GaussianTerm> terms);

    const std::string& name() const noexcept { return name_; }
    double lo() const noexcept { return lo_; }
    double hi() const noexcept { return hi_; }
    const std::vector<GaussianTerm>& terms() const noexcept { return terms_; }
    std::size_t term_count() const noexcept { return terms_.size(); }

    /// Index of the term called `term_name`; throws ModelError if absent.
    std::size_t term_index(const std::string& term_name) const;

    double clamp(double x) const noexcept;

    bool operator==(const FuzzyVariable&) const = default;

private:
    std::string name_;
    double lo_;
    double hi_;
    std::vector<GaussianTerm> terms_;
};

struct Rule {
    std::vector<std::size_t> antecedents;  // one term index per input, model input order
    std::size_t consequent = 0;
    double weight = 1.0;

    bool operator==(const Rule&) const = default;
};

inline constexpr std::size_t kDefaultGridPoints = 1001;

/// Immutable after construction. The constructor checks that every rule has
/// one valid antecedent per input, a valid consequent and a weight in [0,1].
class FuzzyModel {
public:
    FuzzyModel(std::vector<FuzzyVariable> inputs, FuzzyVariable output, std::vector<Rule> rules,
               std::size_t grid_points = kDefaultGridPoints);

    const std::vector<FuzzyVariable>& inputs() const noexcept { return inputs_; }
    const FuzzyVariable& output() const noexcept { return output_; }
    const std::vector<Rule>& rules() const noexcept { return rules_; }
    std::size_t grid_points() const noexcept { return grid_points_; }

    /// Output-universe sample points, equally spaced, both bounds included.
    const std::vector<double>& grid() const noexcept { return grid_; }

    /// Index of the input called `name`; throws ModelError if absent.
    std::size_t input_index(const std::string& name) const;

    /// Same variables and rules, different output discretization.
    FuzzyModel with_grid_points(std::size_t grid_points) const;

    bool operator==(const FuzzyModel& other) const {
        return inputs_ == other.inputs_ && output_ == other.output_ && rules_ == other.rules_ &&
               grid_points_ == other.grid_points_;
    }

private:
    std::vector<FuzzyVariable> inputs_;
    FuzzyVariable output_;
    std::vector<Rule> rules_;
    std::size_t grid_points_;
    std::vector<double> grid_;
};

struct CurvePoint {
    double x = 0.0;
    double degree = 0.0;

    bool operator==(const CurvePoint&) const = default;
};

using Memberships = std::vector<std::vector<double>>;
using Curve = std::vector<CurvePoint>;

struct InferenceTrace {
    Memberships memberships;            // [input][term]
    std::vector<double> firing_strengths;  // one per rule, rule order
    Curve aggregated_curve;
    double crisp_output = 0.0;

    bool operator==(const InferenceTrace&) const = default;
};

/// Total trapezoidal mass below which a curve counts as empty.
inline constexpr double kMinCurveMass = 1e-12;

/// exp(-(x - center)^2 / (2 sigma^2)).
double gaussian_membership(double x, const GaussianTerm& term) noexcept;

/// Degrees of every term of `var` at `x`, in term order. Throws
/// InvalidInputError for non-finite x. Does not clamp.
std::vector<double> fuzzify(const FuzzyVariable& var, double x);

/// weight * min over inputs of the antecedent term's degree.
double firing_strength(const Rule& rule, const Memberships& memberships);

/// Max over rules of min(strength, consequent membership), sampled on the
/// model's output grid.
Curve aggregate(const FuzzyModel& model, std::span<const double> firing_strengths);

/// Trapezoidal centroid, summed left to right. Throws NoRuleFiredError when
/// the mass is below kMinCurveMass, ModelError for an empty or unsorted curve.
double defuzzify_centroid(std::span<const CurvePoint> curve);

/// Full pipeline. Inputs are clamped to their universes first.
InferenceTrace infer(const FuzzyModel& model, std::span<const double> inputs);

}  // namespace crfuzzy
