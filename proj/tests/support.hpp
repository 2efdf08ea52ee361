#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "crfuzzy/cr_model.hpp"

namespace crfuzzy::testing {

inline std::filesystem::path source_dir() { return CRFUZZY_SOURCE_DIR; }
inline std::filesystem::path data_dir() { return source_dir() / "tests" / "data"; }

inline std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Rows of the transcribed decision table fixture: four antecedent term
/// names then the decision term name.
inline std::vector<std::array<std::string, 5>> load_table_fixture() {
    std::istringstream in(slurp(data_dir() / "table1.csv"));
    std::string line;
    std::getline(in, line);
    std::vector<std::array<std::string, 5>> rows;
    while (std::getline(in, line)) {
        std::istringstream fields(line);
        std::string row;
        std::getline(fields, row, ',');
        std::array<std::string, 5> r;
        for (auto& f : r) std::getline(fields, f, ',');
        rows.push_back(r);
    }
    return rows;
}

/// Uniform input vector over the default model's universes, optionally
/// spilling past the bounds by `spill` of each range.
inline std::vector<double> random_inputs(std::mt19937_64& rng, double spill = 0.0) {
    static constexpr std::array<std::array<double, 2>, 4> ranges = {
        {{-100.0, -20.0}, {0.0, 100.0}, {0.0, 1.0}, {0.0, 100.0}}};
    std::vector<double> out;
    for (const auto& r : ranges) {
        const double w = r[1] - r[0];
        out.push_back(std::uniform_real_distribution<double>(r[0] - spill * w, r[1] + spill * w)(rng));
    }
    return out;
}

/// Input vector sitting on the term centers given by `terms` (0 = Low).
inline std::vector<double> center_vector(const FuzzyModel& model, const std::vector<std::size_t>& terms) {
    std::vector<double> v;
    for (std::size_t i = 0; i < terms.size(); ++i) v.push_back(model.inputs()[i].terms()[terms[i]].center);
    return v;
}

inline Candidate candidate_at(std::string id, const std::vector<double>& x) {
    return Candidate{std::move(id), x[0], x[1], x[2], x[3]};
}

/// Random well-formed model: 1-4 inputs with 2-4 terms each, up to
/// `max_rules` random rules with weights in (0,1].
inline FuzzyModel random_model(std::mt19937_64& rng, std::size_t max_rules, std::size_t grid_points) {
    std::uniform_int_distribution<int> n_inputs(1, 4);
    std::uniform_int_distribution<int> n_terms(2, 4);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    auto make_var = [&](const std::string& name) {
        const double lo = -50.0 + 100.0 * unit(rng);
        const double hi = lo + 1.0 + 100.0 * unit(rng);
        const int k = n_terms(rng);
        std::vector<GaussianTerm> terms;
        for (int t = 0; t < k; ++t) {
            const double center = lo + (hi - lo) * (t + 0.1 + 0.8 * unit(rng)) / k;
            terms.push_back({"t" + std::to_string(t), center, (hi - lo) * (0.15 + 0.35 * unit(rng))});
        }
        return FuzzyVariable(name, lo, hi, std::move(terms));
    };

    std::vector<FuzzyVariable> inputs;
    const int n = n_inputs(rng);
    for (int i = 0; i < n; ++i) inputs.push_back(make_var("in" + std::to_string(i)));
    auto output = make_var("out");

    std::uniform_int_distribution<std::size_t> n_rules(1, max_rules);
    std::vector<Rule> rules(n_rules(rng));
    for (auto& r : rules) {
        for (const auto& v : inputs) {
            r.antecedents.push_back(std::uniform_int_distribution<std::size_t>(0, v.term_count() - 1)(rng));
        }
        r.consequent = std::uniform_int_distribution<std::size_t>(0, output.term_count() - 1)(rng);
        r.weight = 0.2 + 0.8 * unit(rng);
    }
    return FuzzyModel(std::move(inputs), std::move(output), std::move(rules), grid_points);
}

inline std::vector<double> random_point(std::mt19937_64& rng, const FuzzyModel& model) {
    std::vector<double> x;
    for (const auto& v : model.inputs()) {
        x.push_back(std::uniform_real_distribution<double>(v.lo(), v.hi())(rng));
    }
    return x;
}

}  // namespace crfuzzy::testing
