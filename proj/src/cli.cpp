#include "crfuzzy/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "crfuzzy/arbitration.hpp"
#include "crfuzzy/io.hpp"
#include "crfuzzy/sweep.hpp"

namespace crfuzzy {

namespace {

struct GlobalOptions {
    std::string model_path;
    std::optional<double> threshold;
    std::optional<std::size_t> grid_points;
    std::string output_path;
    std::string format = "human";
};

struct EvalOptions {
    std::string signal, velocity, ratio, distance;
    bool trace = false;
    std::size_t top_k = 5;
};

struct SweepOptions {
    std::optional<int> preset;
    std::string axis1, axis2;
    std::vector<std::string> fixed;
    std::optional<std::size_t> steps;
};

double parse_cli_number(const std::string& text, const std::string& what) {
    double value = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    if (first != last && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (text.empty() || ec != std::errc() || ptr != last || !std::isfinite(value)) {
        throw ParseError("invalid number for " + what + ": '" + text + "'");
    }
    return value;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string part;
    std::istringstream in(s);
    while (std::getline(in, part, sep)) parts.push_back(part);
    if (!s.empty() && s.back() == sep) parts.emplace_back();
    return parts;
}

/// Document from --model (or the built-in one) with flag overrides applied.
ModelDocument resolve_model(const GlobalOptions& g) {
    auto doc = g.model_path.empty() ? default_document() : load_model_file(g.model_path);
    if (g.grid_points) {
        doc.model = doc.model.with_grid_points(*g.grid_points);
    }
    if (g.threshold) doc.admission_threshold = *g.threshold;
    return doc;
}

bool csv_format(const GlobalOptions& g) { return g.format == "csv"; }

std::string term_list(const FuzzyModel& model, const Rule& rule) {
    std::string s;
    for (std::size_t v = 0; v < rule.antecedents.size(); ++v) {
        if (v > 0) s += ", ";
        s += model.inputs()[v].terms()[rule.antecedents[v]].name;
    }
    return s + " → " + model.output().terms()[rule.consequent].name;
}

void cmd_eval(const GlobalOptions& g, const EvalOptions& e, std::ostream& out) {
    const auto doc = resolve_model(g);
    Candidate c;
    c.id = "eval";
    c.signal_dbm = parse_cli_number(e.signal, "signal_dbm");
    c.velocity_kmh = parse_cli_number(e.velocity, "velocity_kmh");
    c.spectrum_ratio = parse_cli_number(e.ratio, "spectrum_ratio");
    c.distance_m = parse_cli_number(e.distance, "distance_m");
    const auto result = decision_possibility(c, doc.model, e.trace, doc.admission_threshold);
    const char* admitted = result.admitted ? "yes" : "no";

    if (csv_format(g)) {
        out << "signal_dbm,velocity_kmh,spectrum_ratio,distance_m,possibility,admitted\n"
            << format_fixed(c.signal_dbm) << ',' << format_fixed(c.velocity_kmh) << ','
            << format_fixed(c.spectrum_ratio) << ',' << format_fixed(c.distance_m) << ','
            << format_fixed(result.possibility) << ',' << admitted << '\n';
    } else {
        out << "possibility " << format_fixed(result.possibility) << '\n'
            << "admitted    " << admitted << " (threshold " << format_fixed(doc.admission_threshold) << ")\n";
    }
    if (!result.trace) return;

    const auto& model = doc.model;
    const auto& trace = *result.trace;
    const auto inputs = c.inputs();
    out << "memberships\n";
    for (std::size_t v = 0; v < model.inputs().size(); ++v) {
        const auto& var = model.inputs()[v];
        out << "  " << var.name() << " = " << format_fixed(var.clamp(inputs[v])) << ':';
        for (std::size_t t = 0; t < var.term_count(); ++t) {
            out << (t == 0 ? " " : ", ") << var.terms()[t].name << ' ' << format_fixed(trace.memberships[v][t]);
        }
        out << '\n';
    }
    std::vector<std::size_t> order(trace.firing_strengths.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return trace.firing_strengths[a] > trace.firing_strengths[b];
    });
    order.resize(std::min(order.size(), e.top_k));
    out << "top rules\n";
    for (auto r : order) {
        char row[16];
        std::snprintf(row, sizeof row, "%3zu", r + 1);
        out << "  row " << row << "  strength " << format_fixed(trace.firing_strengths[r]) << "  "
            << term_list(model, model.rules()[r]) << '\n';
    }
}

void cmd_arbitrate(const GlobalOptions& g, const std::string& csv_path, std::ostream& out) {
    const auto doc = resolve_model(g);
    const auto candidates = parse_candidates_csv(read_text_file(csv_path));
    const auto outcome = arbitrate(candidates, doc.model, doc.admission_threshold);

    if (csv_format(g)) {
        out << "rank,id,possibility,admitted\n";
        for (std::size_t i = 0; i < outcome.ranking.size(); ++i) {
            const auto& r = outcome.ranking[i];
            out << i + 1 << ',' << r.id << ',' << format_fixed(r.possibility) << ','
                << (r.possibility >= outcome.threshold ? "yes" : "no") << '\n';
        }
        return;
    }
    out << "rank  possibility  admitted  id\n";
    for (std::size_t i = 0; i < outcome.ranking.size(); ++i) {
        const auto& r = outcome.ranking[i];
        char rank[16];
        std::snprintf(rank, sizeof rank, "%4zu", i + 1);
        out << rank << "  " << format_fixed(r.possibility) << "     "
            << (r.possibility >= outcome.threshold ? "yes" : "no ") << "       " << r.id << '\n';
    }
    if (outcome.winner_id) {
        out << "winner: " << *outcome.winner_id << '\n';
    } else {
        out << "no candidate admitted (threshold " << format_fixed(outcome.threshold) << ")\n";
    }
}

SweepAxis parse_axis(const std::string& text, std::optional<std::size_t> steps) {
    const auto parts = split(text, ':');
    if (parts.size() != 3 && parts.size() != 4) {
        throw SweepSpecError("axis '" + text + "': expected name:lo:hi[:steps]");
    }
    SweepAxis axis{parts[0], parse_cli_number(parts[1], "axis lower bound"),
                   parse_cli_number(parts[2], "axis upper bound"), steps.value_or(kPresetSteps)};
    if (parts.size() == 4) {
        const double n = parse_cli_number(parts[3], "axis steps");
        if (n < 0 || n != std::floor(n)) throw SweepSpecError("axis '" + text + "': steps must be an integer");
        axis.steps = static_cast<std::size_t>(n);
    }
    return axis;
}

SweepSpec build_sweep_spec(const SweepOptions& s) {
    const bool explicit_spec = !s.axis1.empty() || !s.axis2.empty() || !s.fixed.empty();
    if (s.preset && explicit_spec) {
        throw SweepSpecError("--preset cannot be combined with --axis1/--axis2/--fix");
    }
    if (s.preset) return figure_preset(*s.preset, s.steps.value_or(kPresetSteps));
    if (s.axis1.empty() || s.axis2.empty()) {
        throw SweepSpecError("give either --preset or both --axis1 and --axis2 with --fix values");
    }
    SweepSpec spec{parse_axis(s.axis1, s.steps), parse_axis(s.axis2, s.steps), {}};
    for (const auto& f : s.fixed) {
        const auto eq = f.find('=');
        if (eq == std::string::npos) throw SweepSpecError("--fix '" + f + "': expected name=value");
        const auto name = f.substr(0, eq);
        if (!spec.fixed.emplace(name, parse_cli_number(f.substr(eq + 1), name)).second) {
            throw SweepSpecError("'" + name + "' fixed twice");
        }
    }
    return spec;
}

void cmd_sweep(const GlobalOptions& g, const SweepOptions& s, std::ostream& out) {
    const auto doc = resolve_model(g);
    const auto spec = build_sweep_spec(s);
    out << format_surface_csv(run_sweep(spec, doc.model));
}

int cmd_validate(const GlobalOptions& g, const std::string& path, std::ostream& out) {
    auto opts = g;
    if (!path.empty()) opts.model_path = path;
    const auto doc = resolve_model(opts);
    const auto report = validate_model(doc.model);
    if (report.ok()) {
        out << doc.model.rules().size() << " rules, complete\n";
        return 0;
    }
    for (const auto& f : report.failures) {
        out << to_string(f.kind) << ": " << f.message << '\n';
    }
    out << report.failures.size() << " problem(s) found\n";
    return 1;
}

void cmd_dump_rules(const GlobalOptions& g, std::ostream& out) {
    const auto doc = resolve_model(g);
    out << format_rules(doc.model, csv_format(g) ? RuleFormat::Csv : RuleFormat::Table);
}

void cmd_dump_model(const GlobalOptions& g, std::ostream& out) { out << serialize_model(resolve_model(g)); }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Fuzzy spectrum-access decisions for cognitive radio secondary users", "crfuzzy"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions g;
    app.add_option("--model", g.model_path, "Model document (JSON); built-in model when omitted");
    app.add_option("--threshold", g.threshold, "Admission threshold in [0,1]")->check(CLI::Range(0.0, 1.0));
    app.add_option("--grid-points", g.grid_points, "Output-universe samples for defuzzification")
        ->check(CLI::Range(std::size_t{2}, std::size_t{10'000'000}));
    app.add_option("--output", g.output_path, "Write results to this file instead of stdout");
    app.add_option("--format", g.format, "Output format")
        ->check(CLI::IsMember({"human", "csv", "table"}));

    EvalOptions e;
    auto* eval = app.add_subcommand("eval", "Spectrum-access possibility for one secondary user");
    eval->add_option("--signal", e.signal, "Signal strength (dBm)")->required();
    eval->add_option("--velocity", e.velocity, "Velocity (km/hr)")->required();
    eval->add_option("--ratio", e.ratio, "Required / available spectrum")->required();
    eval->add_option("--distance", e.distance, "Distance to the primary user (m)")->required();
    eval->add_flag("--trace", e.trace, "Print memberships and the strongest rules");
    eval->add_option("--top-k", e.top_k, "Rules listed with --trace")->check(CLI::PositiveNumber);

    std::string candidates_path;
    auto* arb = app.add_subcommand("arbitrate", "Pick the secondary user granted the vacant spectrum");
    arb->add_option("candidates", candidates_path, "Candidates CSV")->required();

    SweepOptions s;
    auto* sweep = app.add_subcommand("sweep", "Decision surface over two inputs (surface CSV)");
    sweep->add_option("--preset", s.preset, "Figure preset")->check(CLI::Range(7, 11));
    sweep->add_option("--axis1", s.axis1, "Row axis name:lo:hi[:steps]");
    sweep->add_option("--axis2", s.axis2, "Column axis name:lo:hi[:steps]");
    sweep->add_option("--fix", s.fixed, "Fixed input name=value (repeatable)");
    sweep->add_option("--steps", s.steps, "Samples per axis")->check(CLI::Range(std::size_t{2}, std::size_t{100000}));

    std::string validate_path;
    auto* validate = app.add_subcommand("validate", "Check a model document's rule base for completeness");
    validate->add_option("path", validate_path, "Model document; defaults to --model or the built-in model");

    auto* dump_rules = app.add_subcommand("dump-rules", "List the rule base with row numbers");
    auto* dump_model = app.add_subcommand("dump-model", "Write the model document (JSON)");

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& ex) {
        return app.exit(ex, out, err);
    }

    try {
        std::ostringstream buffer;
        int status = 0;
        if (*eval) {
            cmd_eval(g, e, buffer);
        } else if (*arb) {
            cmd_arbitrate(g, candidates_path, buffer);
        } else if (*sweep) {
            cmd_sweep(g, s, buffer);
        } else if (*validate) {
            status = cmd_validate(g, validate_path, buffer);
        } else if (*dump_rules) {
            cmd_dump_rules(g, buffer);
        } else if (*dump_model) {
            cmd_dump_model(g, buffer);
        }
        if (g.output_path.empty()) {
            out << buffer.str();
        } else {
            std::ofstream file(g.output_path, std::ios::binary);
            if (!(file << buffer.str()) || !file.flush()) {
                err << "error: cannot write '" << g.output_path << "'\n";
                return 1;
            }
        }
        return status;
    } catch (const Error& ex) {
        err << "error: " << ex.what() << '\n';
        return 1;
    }
}

}  // namespace crfuzzy
