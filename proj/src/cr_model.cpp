#include "crfuzzy/cr_model.hpp"

#include <cmath>
#include <map>
#include <numbers>

namespace crfuzzy {

namespace {

constexpr std::size_t L = 0;
constexpr std::size_t M = 1;
constexpr std::size_t H = 2;

// Signal, velocity, spectrum ratio, distance -> decision.
const std::vector<std::array<std::size_t, 5>> kDecisionTable = {
    {L, L, L, L, H},  // 1
    {L, L, L, M, H},  // 2
    {L, L, L, H, M},  // 3
    {L, L, M, L, H},  // 4
    {L, L, M, M, H},  // 5
    {L, L, M, H, M},  // 6
    {L, L, H, L, M},  // 7
    {L, L, H, M, M},  // 8
    {L, L, H, H, L},  // 9
    {L, M, L, L, H},  // 10
    {L, M, L, M, H},  // 11
    {L, M, L, H, L},  // 12
    {L, M, M, L, H},  // 13
    {L, M, M, M, H},  // 14
    {L, M, M, H, M},  // 15
    {L, M, H, L, M},  // 16
    {L, M, H, M, L},  // 17
    {L, M, H, H, L},  // 18
    {L, H, L, L, H},  // 19
    {L, H, L, M, H},  // 20
    {L, H, L, H, H},  // 21
    {L, H, M, L, H},  // 22
    {L, H, M, M, H},  // 23
    {L, H, M, H, H},  // 24
    {L, H, H, L, H},  // 25
    {L, H, H, M, M},  // 26
    {L, H, H, H, M},  // 27
    {M, L, L, L, H},  // 28
    {M, L, L, M, M},  // 29
    {M, L, L, H, M},  // 30
    {M, L, M, L, M},  // 31
    {M, L, M, M, M},  // 32
    {M, L, M, H, M},  // 33
    {M, L, H, L, M},  // 34
    {M, L, H, M, M},  // 35
    {M, L, H, H, M},  // 36
    {M, M, L, L, M},  // 37
    {M, M, L, M, M},  // 38
    {M, M, L, H, M},  // 39
    {M, M, M, L, M},  // 40
    {M, M, M, M, M},  // 41
    {M, M, M, H, M},  // 42
    {M, M, H, L, M},  // 43
    {M, M, H, M, M},  // 44
    {M, M, H, H, M},  // 45
    {M, H, L, L, H},  // 46
    {M, H, L, M, H},  // 47
    {M, H, L, H, M},  // 48
    {M, H, M, L, H},  // 49
    {M, H, M, M, H},  // 50
    {M, H, M, H, M},  // 51
    {M, H, H, L, M},  // 52
    {M, H, H, M, M},  // 53
    {M, H, H, H, M},  // 54
    {H, L, L, L, L},  // 55
    {H, L, L, M, L},  // 56
    {H, L, L, H, L},  // 57
    {H, L, M, L, L},  // 58
    {H, L, M, M, L},  // 59
    {H, L, M, H, L},  // 60
    {H, L, H, L, L},  // 61
    {H, L, H, M, L},  // 62
    {H, L, H, H, L},  // 63
    {H, M, L, L, L},  // 64
    {H, M, L, M, L},  // 65
    {H, M, L, H, L},  // 66
    {H, M, M, L, L},  // 67
    {H, M, M, M, L},  // 68
    {H, M, M, H, L},  // 69
    {H, M, H, L, L},  // 70
    {H, M, H, M, L},  // 71
    {H, M, H, H, L},  // 72
    {H, H, L, L, L},  // 73
    {H, H, L, M, L},  // 74
    {H, H, L, H, L},  // 75
    {H, H, M, L, L},  // 76
    {H, H, M, M, L},  // 77
    {H, H, M, H, L},  // 78
    {H, H, H, L, L},  // 79
    {H, H, H, M, L},  // 80
    {H, H, H, H, L},  // 81
};

std::string describe_combination(const FuzzyModel& model, const std::vector<std::size_t>& combo) {
    std::string s = "(";
    for (std::size_t v = 0; v < combo.size(); ++v) {
        if (v > 0) s += ", ";
        s += model.inputs()[v].terms()[combo[v]].name;
    }
    return s + ")";
}

}  // namespace

double crossover_sigma(double spacing) noexcept {
    return spacing / (2.0 * std::sqrt(2.0 * std::numbers::ln2));
}

FuzzyVariable three_term_variable(const std::string& name, double lo, double hi) {
    const double mid = 0.5 * (lo + hi);
    const double sigma = crossover_sigma(mid - lo);
    return FuzzyVariable(name, lo, hi,
                         {{kTermNames[0], lo, sigma}, {kTermNames[1], mid, sigma}, {kTermNames[2], hi, sigma}});
}

const std::vector<std::array<std::size_t, 5>>& decision_table() { return kDecisionTable; }

FuzzyModel default_model(std::size_t grid_points) {
    std::vector<FuzzyVariable> inputs = {
        three_term_variable(kInputNames[0], -100.0, -20.0),
        three_term_variable(kInputNames[1], 0.0, 100.0),
        three_term_variable(kInputNames[2], 0.0, 1.0),
        three_term_variable(kInputNames[3], 0.0, 100.0),
    };
    std::vector<Rule> rules;
    rules.reserve(kDecisionTable.size());
    for (const auto& row : kDecisionTable) {
        rules.push_back(Rule{{row[0], row[1], row[2], row[3]}, row[4], 1.0});
    }
    return FuzzyModel(std::move(inputs), three_term_variable(kOutputName, 0.0, 1.0), std::move(rules),
                      grid_points);
}

DecisionResult decision_possibility(const Candidate& candidate, const FuzzyModel& model, bool with_trace,
                                    double threshold) {
    const auto inputs = candidate.inputs();
    auto trace = infer(model, inputs);
    DecisionResult result;
    result.candidate_id = candidate.id;
    result.possibility = trace.crisp_output;
    result.admitted = result.possibility >= threshold;
    if (with_trace) result.trace = std::move(trace);
    return result;
}

ValidationReport validate_model(const FuzzyModel& model) {
    using Kind = ValidationFailure::Kind;
    ValidationReport report;
    auto fail = [&](Kind kind, std::optional<std::size_t> rule, std::string message) {
        report.failures.push_back({kind, rule, std::move(message)});
    };

    std::vector<const FuzzyVariable*> vars;
    for (const auto& v : model.inputs()) vars.push_back(&v);
    vars.push_back(&model.output());
    for (const auto* var : vars) {
        if (!(var->lo() < var->hi())) {
            fail(Kind::Universe, std::nullopt, "variable '" + var->name() + "' has a degenerate universe");
        }
        const auto& terms = var->terms();
        for (std::size_t i = 1; i < terms.size(); ++i) {
            if (!(terms[i - 1].center < terms[i].center)) {
                fail(Kind::TermOrder, std::nullopt,
                     "variable '" + var->name() + "': term '" + terms[i].name + "' center not above '" +
                         terms[i - 1].name + "'");
            }
        }
    }

    std::size_t expected = 1;
    for (const auto& v : model.inputs()) expected *= v.term_count();
    const auto& rules = model.rules();
    if (rules.size() != expected) {
        fail(Kind::RuleCount, std::nullopt,
             "expected " + std::to_string(expected) + " rules, found " + std::to_string(rules.size()));
    }

    std::map<std::vector<std::size_t>, std::size_t> first_seen;
    for (std::size_t r = 0; r < rules.size(); ++r) {
        const auto [it, inserted] = first_seen.emplace(rules[r].antecedents, r + 1);
        if (!inserted) {
            fail(Kind::DuplicateCombination, r + 1,
                 "rule " + std::to_string(r + 1) + " repeats combination " +
                     describe_combination(model, rules[r].antecedents) + " of rule " + std::to_string(it->second));
        }
        if (rules[r].weight != 1.0) {
            fail(Kind::Weight, r + 1,
                 "rule " + std::to_string(r + 1) + " has weight " + std::to_string(rules[r].weight) +
                     ", expected 1");
        }
    }

    // Walk every combination in table order (last input varies fastest).
    std::vector<std::size_t> combo(model.inputs().size(), 0);
    for (std::size_t n = 0; n < expected; ++n) {
        if (!first_seen.contains(combo)) {
            fail(Kind::MissingCombination, std::nullopt, "missing combination " + describe_combination(model, combo));
        }
        for (std::size_t v = combo.size(); v-- > 0;) {
            if (++combo[v] < model.inputs()[v].term_count()) break;
            combo[v] = 0;
        }
    }
    return report;
}

std::string to_string(ValidationFailure::Kind kind) {
    switch (kind) {
        case ValidationFailure::Kind::RuleCount: return "rule-count";
        case ValidationFailure::Kind::DuplicateCombination: return "duplicate-combination";
        case ValidationFailure::Kind::MissingCombination: return "missing-combination";
        case ValidationFailure::Kind::Weight: return "weight";
        case ValidationFailure::Kind::TermOrder: return "term-order";
        case ValidationFailure::Kind::Universe: return "universe";
    }
    return "unknown";
}

}  // namespace crfuzzy
