#include "crfuzzy/sweep.hpp"

#include <array>
#include <cmath>

#include "crfuzzy/cr_model.hpp"

namespace crfuzzy {

std::vector<double> SweepAxis::samples() const {
    std::vector<double> out(steps);
    if (steps == 0) return out;
    if (steps == 1) {
        out[0] = lo;
        return out;
    }
    const double span = hi - lo;
    const double denom = static_cast<double>(steps - 1);
    for (std::size_t i = 0; i < steps; ++i) {
        out[i] = lo + span * static_cast<double>(i) / denom;
    }
    out.back() = hi;
    return out;
}

void validate_sweep(const SweepSpec& spec, const FuzzyModel& model) {
    auto lookup = [&](const std::string& name) -> const FuzzyVariable& {
        for (const auto& v : model.inputs()) {
            if (v.name() == name) return v;
        }
        throw SweepSpecError("unknown input variable '" + name + "'");
    };
    for (const auto* axis : {&spec.axis1, &spec.axis2}) {
        const auto& var = lookup(axis->variable);
        if (axis->steps < 2) {
            throw SweepSpecError("axis '" + axis->variable + "' needs at least 2 steps");
        }
        if (!std::isfinite(axis->lo) || !std::isfinite(axis->hi) || axis->lo > axis->hi) {
            throw SweepSpecError("axis '" + axis->variable + "' has an invalid range");
        }
        if (axis->lo < var.lo() || axis->hi > var.hi()) {
            throw SweepSpecError("axis '" + axis->variable + "' range leaves the universe [" +
                                 std::to_string(var.lo()) + ", " + std::to_string(var.hi()) + "]");
        }
    }
    if (spec.axis1.variable == spec.axis2.variable) {
        throw SweepSpecError("both axes sweep '" + spec.axis1.variable + "'");
    }
    for (const auto& [name, value] : spec.fixed) {
        lookup(name);
        if (name == spec.axis1.variable || name == spec.axis2.variable) {
            throw SweepSpecError("'" + name + "' is both swept and fixed");
        }
        if (!std::isfinite(value)) {
            throw SweepSpecError("fixed value for '" + name + "' is not finite");
        }
    }
    for (const auto& v : model.inputs()) {
        if (v.name() != spec.axis1.variable && v.name() != spec.axis2.variable && !spec.fixed.contains(v.name())) {
            throw SweepSpecError("no fixed value for '" + v.name() + "'");
        }
    }
}

SweepResult run_sweep(const SweepSpec& spec, const FuzzyModel& model) {
    validate_sweep(spec, model);

    SweepResult result;
    result.spec = spec;
    result.axis1_samples = spec.axis1.samples();
    result.axis2_samples = spec.axis2.samples();

    const auto row_var = model.input_index(spec.axis1.variable);
    const auto col_var = model.input_index(spec.axis2.variable);
    std::vector<double> point(model.inputs().size(), 0.0);
    for (const auto& [name, value] : spec.fixed) {
        point[model.input_index(name)] = value;
    }

    result.grid.assign(result.axis1_samples.size(), std::vector<double>(result.axis2_samples.size(), 0.0));
    for (std::size_t i = 0; i < result.axis1_samples.size(); ++i) {
        point[row_var] = result.axis1_samples[i];
        for (std::size_t j = 0; j < result.axis2_samples.size(); ++j) {
            point[col_var] = result.axis2_samples[j];
            result.grid[i][j] = infer(model, point).crisp_output;
        }
    }
    return result;
}

SweepSpec figure_preset(int figure, std::size_t steps) {
    struct Preset {
        int figure;
        const char* axis1;
        const char* axis2;
        std::array<std::pair<const char*, double>, 2> fixed;
    };
    static const std::array<Preset, 5> presets = {{
        {7, "signal_dbm", "distance_m", {{{"velocity_kmh", 50.0}, {"spectrum_ratio", 0.5}}}},
        {8, "velocity_kmh", "spectrum_ratio", {{{"distance_m", 50.0}, {"signal_dbm", -60.0}}}},
        {9, "signal_dbm", "spectrum_ratio", {{{"distance_m", 50.0}, {"velocity_kmh", 50.0}}}},
        {10, "velocity_kmh", "distance_m", {{{"spectrum_ratio", 0.5}, {"signal_dbm", -60.0}}}},
        {11, "signal_dbm", "velocity_kmh", {{{"distance_m", 50.0}, {"spectrum_ratio", 0.5}}}},
    }};
    for (const auto& p : presets) {
        if (p.figure != figure) continue;
        const auto model = default_model(2);
        auto axis = [&](const char* name) {
            const auto& var = model.inputs()[model.input_index(name)];
            return SweepAxis{name, var.lo(), var.hi(), steps};
        };
        SweepSpec spec{axis(p.axis1), axis(p.axis2), {}};
        for (const auto& [name, value] : p.fixed) spec.fixed.emplace(name, value);
        return spec;
    }
    throw SweepSpecError("no preset for figure " + std::to_string(figure) + " (expected 7 to 11)");
}

}  // namespace crfuzzy
