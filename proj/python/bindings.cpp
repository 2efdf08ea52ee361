#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/operators.h>

#include "crfuzzy/arbitration.hpp"
#include "crfuzzy/cr_model.hpp"
#include "crfuzzy/engine.hpp"
#include "crfuzzy/io.hpp"
#include "crfuzzy/sweep.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace crfuzzy;

namespace {

std::vector<std::pair<double, double>> curve_pairs(const Curve& curve) {
    std::vector<std::pair<double, double>> out;
    out.reserve(curve.size());
    for (const auto& p : curve) out.emplace_back(p.x, p.degree);
    return out;
}

Curve to_curve(const std::vector<std::pair<double, double>>& pairs) {
    Curve curve;
    curve.reserve(pairs.size());
    for (const auto& [x, d] : pairs) curve.push_back({x, d});
    return curve;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Mamdani fuzzy spectrum-access decisions for cognitive radio";

    auto base = py::register_exception<Error>(m, "Error");
    py::register_exception<InvalidInputError>(m, "InvalidInputError", base.ptr());
    py::register_exception<ModelError>(m, "ModelError", base.ptr());
    py::register_exception<NoRuleFiredError>(m, "NoRuleFiredError", base.ptr());
    py::register_exception<SweepSpecError>(m, "SweepSpecError", base.ptr());
    py::register_exception<BatchError>(m, "BatchError", base.ptr());
    py::register_exception<ParseError>(m, "ParseError", base.ptr());

    // engine
    py::class_<GaussianTerm>(m, "GaussianTerm")
        .def(py::init([](std::string name, double center, double sigma) {
                 return GaussianTerm{std::move(name), center, sigma};
             }),
             "name"_a, "center"_a, "sigma"_a)
        .def_readwrite("name", &GaussianTerm::name)
        .def_readwrite("center", &GaussianTerm::center)
        .def_readwrite("sigma", &GaussianTerm::sigma)
        .def("__repr__", [](const GaussianTerm& t) {
            return "GaussianTerm(" + t.name + ", center=" + std::to_string(t.center) +
                   ", sigma=" + std::to_string(t.sigma) + ")";
        });

    py::class_<FuzzyVariable>(m, "FuzzyVariable")
        .def(py::init<std::string, double, double, std::vector<GaussianTerm>>(), "name"_a, "lo"_a, "hi"_a,
             "terms"_a)
        .def_property_readonly("name", &FuzzyVariable::name)
        .def_property_readonly("lo", &FuzzyVariable::lo)
        .def_property_readonly("hi", &FuzzyVariable::hi)
        .def_property_readonly("terms", &FuzzyVariable::terms)
        .def("term_index", &FuzzyVariable::term_index, "name"_a);

    py::class_<Rule>(m, "Rule")
        .def(py::init([](std::vector<std::size_t> antecedents, std::size_t consequent, double weight) {
                 return Rule{std::move(antecedents), consequent, weight};
             }),
             "antecedents"_a, "consequent"_a, "weight"_a = 1.0)
        .def_readwrite("antecedents", &Rule::antecedents)
        .def_readwrite("consequent", &Rule::consequent)
        .def_readwrite("weight", &Rule::weight)
        .def(py::self == py::self);

    py::class_<FuzzyModel>(m, "FuzzyModel")
        .def(py::init<std::vector<FuzzyVariable>, FuzzyVariable, std::vector<Rule>, std::size_t>(), "inputs"_a,
             "output"_a, "rules"_a, "grid_points"_a = kDefaultGridPoints)
        .def_property_readonly("inputs", &FuzzyModel::inputs)
        .def_property_readonly("output", &FuzzyModel::output)
        .def_property_readonly("rules", &FuzzyModel::rules)
        .def_property_readonly("grid_points", &FuzzyModel::grid_points)
        .def_property_readonly("grid", &FuzzyModel::grid)
        .def("with_grid_points", &FuzzyModel::with_grid_points, "grid_points"_a)
        .def(py::self == py::self);

    py::class_<InferenceTrace>(m, "InferenceTrace")
        .def_readonly("memberships", &InferenceTrace::memberships)
        .def_readonly("firing_strengths", &InferenceTrace::firing_strengths)
        .def_property_readonly("aggregated_curve",
                               [](const InferenceTrace& t) { return curve_pairs(t.aggregated_curve); })
        .def_readonly("crisp_output", &InferenceTrace::crisp_output);

    m.def("gaussian_membership", &gaussian_membership, "x"_a, "term"_a);
    m.def("fuzzify", &fuzzify, "var"_a, "x"_a);
    m.def("firing_strength", &firing_strength, "rule"_a, "memberships"_a);
    m.def(
        "aggregate",
        [](const FuzzyModel& model, const std::vector<double>& strengths) {
            return curve_pairs(aggregate(model, strengths));
        },
        "model"_a, "firing_strengths"_a);
    m.def(
        "defuzzify_centroid", [](const std::vector<std::pair<double, double>>& c) {
            return defuzzify_centroid(to_curve(c));
        },
        "curve"_a);
    m.def(
        "infer", [](const FuzzyModel& model, const std::vector<double>& inputs) { return infer(model, inputs); },
        "model"_a, "inputs"_a);

    // cr-model
    py::class_<Candidate>(m, "Candidate")
        .def(py::init([](std::string id, double signal, double velocity, double ratio, double distance) {
                 return Candidate{std::move(id), signal, velocity, ratio, distance};
             }),
             "id"_a, "signal_dbm"_a, "velocity_kmh"_a, "spectrum_ratio"_a, "distance_m"_a)
        .def_readwrite("id", &Candidate::id)
        .def_readwrite("signal_dbm", &Candidate::signal_dbm)
        .def_readwrite("velocity_kmh", &Candidate::velocity_kmh)
        .def_readwrite("spectrum_ratio", &Candidate::spectrum_ratio)
        .def_readwrite("distance_m", &Candidate::distance_m);

    py::class_<DecisionResult>(m, "DecisionResult")
        .def_readonly("candidate_id", &DecisionResult::candidate_id)
        .def_readonly("possibility", &DecisionResult::possibility)
        .def_readonly("admitted", &DecisionResult::admitted)
        .def_readonly("trace", &DecisionResult::trace);

    py::class_<ValidationFailure>(m, "ValidationFailure")
        .def_property_readonly("kind", [](const ValidationFailure& f) { return to_string(f.kind); })
        .def_readonly("rule", &ValidationFailure::rule)
        .def_readonly("message", &ValidationFailure::message);

    py::class_<ValidationReport>(m, "ValidationReport")
        .def_readonly("failures", &ValidationReport::failures)
        .def("ok", &ValidationReport::ok);

    m.attr("DEFAULT_ADMISSION_THRESHOLD") = kDefaultAdmissionThreshold;
    m.def("default_model", &default_model, "grid_points"_a = kDefaultGridPoints);
    m.def("decision_table", &decision_table);
    m.def("decision_possibility", &decision_possibility, "candidate"_a, "model"_a, "with_trace"_a = false,
          "threshold"_a = kDefaultAdmissionThreshold);
    m.def("validate_model", &validate_model, "model"_a);

    // arbitration
    py::class_<RankedCandidate>(m, "RankedCandidate")
        .def_readonly("id", &RankedCandidate::id)
        .def_readonly("possibility", &RankedCandidate::possibility)
        .def_readonly("distance_m", &RankedCandidate::distance_m);

    py::class_<ArbitrationOutcome>(m, "ArbitrationOutcome")
        .def_readonly("winner_id", &ArbitrationOutcome::winner_id)
        .def_readonly("ranking", &ArbitrationOutcome::ranking)
        .def_readonly("threshold", &ArbitrationOutcome::threshold);

    m.def("admit", &admit, "result"_a, "threshold"_a);
    m.def(
        "arbitrate",
        [](const std::vector<Candidate>& candidates, const FuzzyModel& model, double threshold) {
            return arbitrate(candidates, model, threshold);
        },
        "candidates"_a, "model"_a, "threshold"_a = kDefaultAdmissionThreshold);

    // sweep
    py::class_<SweepAxis>(m, "SweepAxis")
        .def(py::init([](std::string variable, double lo, double hi, std::size_t steps) {
                 return SweepAxis{std::move(variable), lo, hi, steps};
             }),
             "variable"_a, "lo"_a, "hi"_a, "steps"_a)
        .def_readwrite("variable", &SweepAxis::variable)
        .def_readwrite("lo", &SweepAxis::lo)
        .def_readwrite("hi", &SweepAxis::hi)
        .def_readwrite("steps", &SweepAxis::steps)
        .def("samples", &SweepAxis::samples);

    py::class_<SweepSpec>(m, "SweepSpec")
        .def(py::init([](SweepAxis a1, SweepAxis a2, std::map<std::string, double> fixed) {
                 return SweepSpec{std::move(a1), std::move(a2), std::move(fixed)};
             }),
             "axis1"_a, "axis2"_a, "fixed"_a)
        .def_readwrite("axis1", &SweepSpec::axis1)
        .def_readwrite("axis2", &SweepSpec::axis2)
        .def_readwrite("fixed", &SweepSpec::fixed);

    py::class_<SweepResult>(m, "SweepResult")
        .def_readonly("spec", &SweepResult::spec)
        .def_readonly("axis1_samples", &SweepResult::axis1_samples)
        .def_readonly("axis2_samples", &SweepResult::axis2_samples)
        .def_readonly("grid", &SweepResult::grid);

    m.def("run_sweep", &run_sweep, "spec"_a, "model"_a);
    m.def("figure_preset", &figure_preset, "figure"_a, "steps"_a = kPresetSteps);

    // formats
    m.def(
        "serialize_model",
        [](const FuzzyModel& model, double threshold) { return serialize_model({model, threshold}); }, "model"_a,
        "admission_threshold"_a = kDefaultAdmissionThreshold);
    m.def(
        "parse_model",
        [](const std::string& text) {
            auto doc = parse_model(text);
            return py::make_tuple(doc.model, doc.admission_threshold);
        },
        "text"_a, "Returns (model, admission_threshold).");
    m.def("parse_candidates_csv", [](const std::string& text) { return parse_candidates_csv(text); }, "text"_a);
    m.def("format_surface_csv", &format_surface_csv, "result"_a);
    m.def(
        "format_rules",
        [](const FuzzyModel& model, const std::string& format) {
            return format_rules(model, format == "csv" ? RuleFormat::Csv : RuleFormat::Table);
        },
        "model"_a, "format"_a = "table");
}
