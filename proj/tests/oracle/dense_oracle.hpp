#pragma once

// Straight-line Mamdani reference used only by the tests. It reads the
// model's parameters but shares no code with the library's inference path:
// its own Gaussian, its own grid, a naive per-point max over every rule, and
// a plain trapezoid centroid.

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "crfuzzy/engine.hpp"

namespace crfuzzy::oracle {

inline constexpr std::size_t kDenseGridPoints = 10001;

inline double gauss(double x, double c, double s) {
    return std::exp(-((x - c) * (x - c)) / (2.0 * s * s));
}

/// Trapezoid-rule centroid of samples (xs[i], ys[i]).
inline double centroid(const std::vector<double>& xs, const std::vector<double>& ys) {
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
        const double h = xs[i + 1] - xs[i];
        num += 0.5 * h * (xs[i] * ys[i] + xs[i + 1] * ys[i + 1]);
        den += 0.5 * h * (ys[i] + ys[i + 1]);
    }
    if (den < 1e-12) throw std::runtime_error("oracle: empty output set");
    return num / den;
}

/// Crisp output of the model at `inputs`, defuzzified on `grid_points`
/// equally spaced output samples.
inline double infer(const FuzzyModel& model, const std::vector<double>& inputs,
                    std::size_t grid_points = kDenseGridPoints) {
    const auto& vars = model.inputs();
    const auto& rules = model.rules();

    std::vector<double> strength(rules.size());
    for (std::size_t r = 0; r < rules.size(); ++r) {
        double s = 1.0;
        for (std::size_t v = 0; v < vars.size(); ++v) {
            double x = inputs[v];
            if (x < vars[v].lo()) x = vars[v].lo();
            if (x > vars[v].hi()) x = vars[v].hi();
            const auto& t = vars[v].terms()[rules[r].antecedents[v]];
            const double mu = gauss(x, t.center, t.sigma);
            if (mu < s) s = mu;
        }
        strength[r] = rules[r].weight * s;
    }

    const double lo = model.output().lo();
    const double hi = model.output().hi();
    std::vector<double> xs(grid_points);
    std::vector<double> ys(grid_points);
    for (std::size_t i = 0; i < grid_points; ++i) {
        xs[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(grid_points - 1);
        double y = 0.0;
        for (std::size_t r = 0; r < rules.size(); ++r) {
            const auto& t = model.output().terms()[rules[r].consequent];
            double clipped = gauss(xs[i], t.center, t.sigma);
            if (strength[r] < clipped) clipped = strength[r];
            if (clipped > y) y = clipped;
        }
        ys[i] = y;
    }
    return centroid(xs, ys);
}

}  // namespace crfuzzy::oracle
