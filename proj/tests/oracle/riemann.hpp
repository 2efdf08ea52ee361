#pragma once

// Brute-force centroid of a continuous membership curve, for checking the
// library's trapezoidal defuzzifier.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <random>
#include <vector>

#include "crfuzzy/engine.hpp"

namespace crfuzzy::oracle {

/// A random curve on [lo, hi]: max of a few clipped Gaussian bumps.
struct RandomCurve {
    double lo = 0.0;
    double hi = 1.0;
    std::vector<double> centers, widths, heights;

    double operator()(double x) const {
        double y = 0.0;
        for (std::size_t k = 0; k < centers.size(); ++k) {
            const double d = (x - centers[k]) / widths[k];
            y = std::max(y, std::min(heights[k], std::exp(-0.5 * d * d)));
        }
        return y;
    }

    static RandomCurve draw(std::mt19937_64& rng) {
        std::uniform_real_distribution<double> u(0.0, 1.0);
        RandomCurve c;
        c.lo = -10.0 + 20.0 * u(rng);
        c.hi = c.lo + 0.5 + 10.0 * u(rng);
        const int bumps = 1 + static_cast<int>(4 * u(rng));
        for (int k = 0; k < bumps; ++k) {
            c.centers.push_back(c.lo + (c.hi - c.lo) * u(rng));
            c.widths.push_back((c.hi - c.lo) * (0.05 + 0.3 * u(rng)));
            c.heights.push_back(0.1 + 0.9 * u(rng));
        }
        return c;
    }

    Curve sample(std::size_t n) const {
        Curve out;
        for (std::size_t i = 0; i < n; ++i) {
            const double x = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
            out.push_back({x, (*this)(x)});
        }
        return out;
    }
};

/// Midpoint Riemann sum of x*f(x) over f(x) with `cells` equal cells.
template <class F>
double riemann_centroid(const F& f, double lo, double hi, std::size_t cells) {
    const double h = (hi - lo) / static_cast<double>(cells);
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < cells; ++i) {
        const double x = lo + (static_cast<double>(i) + 0.5) * h;
        const double y = f(x);
        num += x * y;
        den += y;
    }
    return num / den;
}

}  // namespace crfuzzy::oracle
