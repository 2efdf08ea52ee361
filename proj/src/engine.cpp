#include "crfuzzy/engine.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace crfuzzy {

namespace {

std::vector<double> make_grid(double lo, double hi, std::size_t n) {
    std::vector<double> grid(n);
    const double step = (hi - lo) / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        grid[i] = lo + step * static_cast<double>(i);
    }
    grid.back() = hi;
    return grid;
}

}  // namespace

FuzzyVariable::FuzzyVariable(std::string name, double lo, double hi, std::vector<GaussianTerm> terms)
    : name_(std::move(name)), lo_(lo), hi_(hi), terms_(std::move(terms)) {
    if (!std::isfinite(lo_) || !std::isfinite(hi_) || !(lo_ < hi_)) {
        throw ModelError("variable '" + name_ + "': universe lower bound must be below upper bound");
    }
    if (terms_.empty()) {
        throw ModelError("variable '" + name_ + "' has no terms");
    }
    std::set<std::string> seen;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        const auto& t = terms_[i];
        if (!seen.insert(t.name).second) {
            throw ModelError("variable '" + name_ + "': duplicate term '" + t.name + "'");
        }
        if (!(t.sigma > 0.0) || !std::isfinite(t.sigma)) {
            throw ModelError("variable '" + name_ + "', term '" + t.name + "': sigma must be positive");
        }
        if (!(t.center >= lo_ && t.center <= hi_)) {
            throw ModelError("variable '" + name_ + "', term '" + t.name + "': center outside universe");
        }
        if (i > 0 && !(terms_[i - 1].center < t.center)) {
            throw ModelError("variable '" + name_ + "': term centers must be strictly increasing");
        }
    }
}

std::size_t FuzzyVariable::term_index(const std::string& term_name) const {
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (terms_[i].name == term_name) return i;
    }
    throw ModelError("variable '" + name_ + "' has no term '" + term_name + "'");
}

double FuzzyVariable::clamp(double x) const noexcept { return std::clamp(x, lo_, hi_); }

FuzzyModel::FuzzyModel(std::vector<FuzzyVariable> inputs, FuzzyVariable output, std::vector<Rule> rules,
                       std::size_t grid_points)
    : inputs_(std::move(inputs)), output_(std::move(output)), rules_(std::move(rules)), grid_points_(grid_points) {
    if (inputs_.empty()) {
        throw ModelError("model needs at least one input variable");
    }
    if (grid_points_ < 2) {
        throw ModelError("grid_points must be at least 2");
    }
    for (std::size_t r = 0; r < rules_.size(); ++r) {
        const auto& rule = rules_[r];
        const auto where = "rule " + std::to_string(r + 1) + ": ";
        if (rule.antecedents.size() != inputs_.size()) {
            throw ModelError(where + "expected " + std::to_string(inputs_.size()) + " antecedents, got " +
                             std::to_string(rule.antecedents.size()));
        }
        for (std::size_t v = 0; v < inputs_.size(); ++v) {
            if (rule.antecedents[v] >= inputs_[v].term_count()) {
                throw ModelError(where + "antecedent index out of range for '" + inputs_[v].name() + "'");
            }
        }
        if (rule.consequent >= output_.term_count()) {
            throw ModelError(where + "consequent index out of range");
        }
        if (!(rule.weight >= 0.0 && rule.weight <= 1.0)) {
            throw ModelError(where + "weight must lie in [0,1]");
        }
    }
    grid_ = make_grid(output_.lo(), output_.hi(), grid_points_);
}

std::size_t FuzzyModel::input_index(const std::string& name) const {
    for (std::size_t i = 0; i < inputs_.size(); ++i) {
        if (inputs_[i].name() == name) return i;
    }
    throw ModelError("model has no input variable '" + name + "'");
}

FuzzyModel FuzzyModel::with_grid_points(std::size_t grid_points) const {
    return FuzzyModel(inputs_, output_, rules_, grid_points);
}

double gaussian_membership(double x, const GaussianTerm& term) noexcept {
    const double d = x - term.center;
    return std::exp(-(d * d) / (2.0 * term.sigma * term.sigma));
}

std::vector<double> fuzzify(const FuzzyVariable& var, double x) {
    if (!std::isfinite(x)) {
        throw InvalidInputError("non-finite value for '" + var.name() + "'");
    }
    std::vector<double> degrees;
    degrees.reserve(var.term_count());
    for (const auto& term : var.terms()) {
        degrees.push_back(gaussian_membership(x, term));
    }
    return degrees;
}

double firing_strength(const Rule& rule, const Memberships& memberships) {
    if (rule.antecedents.size() != memberships.size()) {
        throw ModelError("rule antecedent count does not match the number of fuzzified inputs");
    }
    double strength = 1.0;
    for (std::size_t v = 0; v < memberships.size(); ++v) {
        const auto idx = rule.antecedents[v];
        if (idx >= memberships[v].size()) {
            throw ModelError("antecedent term index out of range for input " + std::to_string(v));
        }
        strength = std::min(strength, memberships[v][idx]);
    }
    return rule.weight * strength;
}

Curve aggregate(const FuzzyModel& model, std::span<const double> firing_strengths) {
    const auto& rules = model.rules();
    if (firing_strengths.size() != rules.size()) {
        throw ModelError("expected one firing strength per rule");
    }
    const auto& grid = model.grid();
    const auto& out_terms = model.output().terms();

    Curve curve(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        curve[i].x = grid[i];
    }
    // Clip height per consequent term; rules sharing a consequent collapse
    // under max, so only the strongest one matters.
    std::vector<double> clip(out_terms.size(), 0.0);
    for (std::size_t r = 0; r < rules.size(); ++r) {
        clip[rules[r].consequent] = std::max(clip[rules[r].consequent], firing_strengths[r]);
    }
    for (std::size_t t = 0; t < out_terms.size(); ++t) {
        if (clip[t] <= 0.0) continue;
        for (auto& p : curve) {
            p.degree = std::max(p.degree, std::min(clip[t], gaussian_membership(p.x, out_terms[t])));
        }
    }
    return curve;
}

double defuzzify_centroid(std::span<const CurvePoint> curve) {
    if (curve.empty()) {
        throw ModelError("cannot defuzzify an empty curve");
    }
    if (curve.size() == 1) {
        if (curve[0].degree < kMinCurveMass) throw NoRuleFiredError("no rule fired");
        return curve[0].x;
    }
    double moment = 0.0;
    double mass = 0.0;
    for (std::size_t i = 0; i < curve.size(); ++i) {
        if (i > 0 && !(curve[i - 1].x < curve[i].x)) {
            throw ModelError("curve points must be strictly increasing");
        }
        double w = 0.0;
        if (i > 0) w += curve[i].x - curve[i - 1].x;
        if (i + 1 < curve.size()) w += curve[i + 1].x - curve[i].x;
        w *= 0.5;
        const double m = curve[i].degree * w;
        mass += m;
        moment += curve[i].x * m;
    }
    if (mass < kMinCurveMass) {
        throw NoRuleFiredError("no rule fired: aggregated output has no mass");
    }
    return std::clamp(moment / mass, curve.front().x, curve.back().x);
}

InferenceTrace infer(const FuzzyModel& model, std::span<const double> inputs) {
    const auto& vars = model.inputs();
    if (inputs.size() != vars.size()) {
        throw InvalidInputError("expected " + std::to_string(vars.size()) + " inputs, got " +
                                std::to_string(inputs.size()));
    }
    InferenceTrace trace;
    trace.memberships.reserve(vars.size());
    for (std::size_t v = 0; v < vars.size(); ++v) {
        if (!std::isfinite(inputs[v])) {
            throw InvalidInputError("non-finite value for '" + vars[v].name() + "'");
        }
        trace.memberships.push_back(fuzzify(vars[v], vars[v].clamp(inputs[v])));
    }
    trace.firing_strengths.reserve(model.rules().size());
    for (const auto& rule : model.rules()) {
        trace.firing_strengths.push_back(firing_strength(rule, trace.memberships));
    }
    trace.aggregated_curve = aggregate(model, trace.firing_strengths);
    trace.crisp_output = defuzzify_centroid(trace.aggregated_curve);
    return trace;
}

}  // namespace crfuzzy
