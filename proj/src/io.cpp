#include "crfuzzy/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace crfuzzy {

using json = nlohmann::ordered_json;

namespace {

// Schema walking ------------------------------------------------------------

void require_object(const json& j, const std::string& where) {
    if (!j.is_object()) throw ParseError(where + ": expected an object");
}

void reject_unknown(const json& j, const std::string& where, std::initializer_list<std::string_view> allowed) {
    for (const auto& [key, _] : j.items()) {
        bool known = false;
        for (auto a : allowed) known = known || key == a;
        if (!known) throw ParseError(where + ": unknown field '" + key + "'");
    }
}

const json& field(const json& j, const std::string& where, const std::string& key) {
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(where + ": missing field '" + key + "'");
    return *it;
}

double number_field(const json& j, const std::string& where, const std::string& key) {
    const auto& v = field(j, where, key);
    if (!v.is_number()) throw ParseError(where + "/" + key + ": expected a number");
    const double d = v.get<double>();
    if (!std::isfinite(d)) throw ParseError(where + "/" + key + ": not finite");
    return d;
}

std::string string_field(const json& j, const std::string& where, const std::string& key) {
    const auto& v = field(j, where, key);
    if (!v.is_string()) throw ParseError(where + "/" + key + ": expected a string");
    return v.get<std::string>();
}

const json& array_field(const json& j, const std::string& where, const std::string& key) {
    const auto& v = field(j, where, key);
    if (!v.is_array()) throw ParseError(where + "/" + key + ": expected an array");
    return v;
}

FuzzyVariable parse_variable(const json& j, const std::string& where) {
    require_object(j, where);
    reject_unknown(j, where, {"name", "lo", "hi", "terms"});
    std::vector<GaussianTerm> terms;
    const auto& jt = array_field(j, where, "terms");
    for (std::size_t i = 0; i < jt.size(); ++i) {
        const auto at = where + "/terms/" + std::to_string(i);
        require_object(jt[i], at);
        reject_unknown(jt[i], at, {"name", "center", "sigma"});
        terms.push_back({string_field(jt[i], at, "name"), number_field(jt[i], at, "center"),
                         number_field(jt[i], at, "sigma")});
    }
    try {
        return FuzzyVariable(string_field(j, where, "name"), number_field(j, where, "lo"),
                             number_field(j, where, "hi"), std::move(terms));
    } catch (const ModelError& e) {
        throw ParseError(where + ": " + e.what());
    }
}

json variable_to_json(const FuzzyVariable& var) {
    json terms = json::array();
    for (const auto& t : var.terms()) {
        terms.push_back(json{{"name", t.name}, {"center", t.center}, {"sigma", t.sigma}});
    }
    return json{{"name", var.name()}, {"lo", var.lo()}, {"hi", var.hi()}, {"terms", std::move(terms)}};
}

// CSV helpers ---------------------------------------------------------------

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    while (!text.empty()) {
        auto nl = text.find('\n');
        auto line = text.substr(0, nl);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        if (nl == std::string_view::npos) break;
        text.remove_prefix(nl + 1);
    }
    // A trailing newline does not start another row.
    while (!lines.empty() && lines.back().empty()) lines.pop_back();
    return lines;
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        auto comma = line.find(',', start);
        fields.push_back(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return fields;
}

double parse_number(std::string_view s, const std::string& where) {
    double value = 0.0;
    const auto* first = s.data();
    const auto* last = s.data() + s.size();
    if (!s.empty() && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (s.empty() || ec != std::errc() || ptr != last || !std::isfinite(value)) {
        throw ParseError(where + ": '" + std::string(s) + "' is not a finite number");
    }
    return value;
}

}  // namespace

ModelDocument default_document() { return {default_model(), kDefaultAdmissionThreshold}; }

std::string serialize_model(const ModelDocument& doc) {
    const auto& model = doc.model;
    json inputs = json::array();
    for (const auto& v : model.inputs()) inputs.push_back(variable_to_json(v));

    json rules = json::array();
    for (const auto& r : model.rules()) {
        json names = json::array();
        for (std::size_t v = 0; v < r.antecedents.size(); ++v) {
            names.push_back(model.inputs()[v].terms()[r.antecedents[v]].name);
        }
        rules.push_back(json{{"if", std::move(names)},
                             {"then", model.output().terms()[r.consequent].name},
                             {"weight", r.weight}});
    }

    json j;
    j["schema_version"] = kSchemaVersion;
    j["variables"] = json{{"inputs", std::move(inputs)}, {"output", variable_to_json(model.output())}};
    j["rules"] = std::move(rules);
    j["settings"] = json{{"grid_points", model.grid_points()}, {"admission_threshold", doc.admission_threshold}};
    return j.dump(2) + "\n";
}

ModelDocument parse_model(std::string_view text) {
    json j;
    try {
        j = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("model document: ") + e.what());
    }
    require_object(j, "/");
    reject_unknown(j, "/", {"schema_version", "variables", "rules", "settings"});

    const auto& version = field(j, "/", "schema_version");
    if (!version.is_number_integer() || version.get<int>() != kSchemaVersion) {
        throw ParseError("/schema_version: unsupported version, expected " + std::to_string(kSchemaVersion));
    }

    const auto& jv = field(j, "/", "variables");
    require_object(jv, "/variables");
    reject_unknown(jv, "/variables", {"inputs", "output"});
    std::vector<FuzzyVariable> inputs;
    const auto& ji = array_field(jv, "/variables", "inputs");
    for (std::size_t i = 0; i < ji.size(); ++i) {
        inputs.push_back(parse_variable(ji[i], "/variables/inputs/" + std::to_string(i)));
    }
    auto output = parse_variable(field(jv, "/variables", "output"), "/variables/output");

    std::vector<Rule> rules;
    const auto& jr = array_field(j, "/", "rules");
    for (std::size_t r = 0; r < jr.size(); ++r) {
        const auto at = "/rules/" + std::to_string(r);
        require_object(jr[r], at);
        reject_unknown(jr[r], at, {"if", "then", "weight"});
        const auto& names = array_field(jr[r], at, "if");
        if (names.size() != inputs.size()) {
            throw ParseError(at + "/if: expected " + std::to_string(inputs.size()) + " term names");
        }
        Rule rule;
        try {
            for (std::size_t v = 0; v < names.size(); ++v) {
                if (!names[v].is_string()) throw ParseError(at + "/if/" + std::to_string(v) + ": expected a string");
                rule.antecedents.push_back(inputs[v].term_index(names[v].get<std::string>()));
            }
            rule.consequent = output.term_index(string_field(jr[r], at, "then"));
        } catch (const ModelError& e) {
            throw ParseError(at + ": " + e.what());
        }
        rule.weight = number_field(jr[r], at, "weight");
        rules.push_back(std::move(rule));
    }

    const auto& js = field(j, "/", "settings");
    require_object(js, "/settings");
    reject_unknown(js, "/settings", {"grid_points", "admission_threshold"});
    const auto& gp = field(js, "/settings", "grid_points");
    if (!gp.is_number_unsigned()) throw ParseError("/settings/grid_points: expected a positive integer");
    const double threshold = number_field(js, "/settings", "admission_threshold");
    if (threshold < 0.0 || threshold > 1.0) {
        throw ParseError("/settings/admission_threshold: must lie in [0,1]");
    }

    try {
        return {FuzzyModel(std::move(inputs), std::move(output), std::move(rules), gp.get<std::size_t>()),
                threshold};
    } catch (const ModelError& e) {
        throw ParseError(std::string("model document: ") + e.what());
    }
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ModelDocument load_model_file(const std::filesystem::path& path) {
    const auto text = read_text_file(path);
    try {
        return parse_model(text);
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

std::vector<Candidate> parse_candidates_csv(std::string_view text) {
    const auto lines = split_lines(text);
    if (lines.empty() || lines.front() != kCandidatesHeader) {
        throw ParseError("candidates CSV: expected header '" + std::string(kCandidatesHeader) + "'");
    }
    std::vector<Candidate> out;
    for (std::size_t n = 1; n < lines.size(); ++n) {
        const auto where = "candidates CSV line " + std::to_string(n + 1);
        const auto f = split_fields(lines[n]);
        if (f.size() != 5) throw ParseError(where + ": expected 5 fields, got " + std::to_string(f.size()));
        Candidate c;
        c.id = std::string(f[0]);
        if (c.id.empty()) throw ParseError(where + ": empty id");
        c.signal_dbm = parse_number(f[1], where + ", signal_dbm");
        c.velocity_kmh = parse_number(f[2], where + ", velocity_kmh");
        c.spectrum_ratio = parse_number(f[3], where + ", spectrum_ratio");
        c.distance_m = parse_number(f[4], where + ", distance_m");
        if (c.velocity_kmh < 0.0) throw ParseError(where + ": velocity_kmh must be non-negative");
        if (c.spectrum_ratio < 0.0) throw ParseError(where + ": spectrum_ratio must be non-negative");
        if (c.distance_m < 0.0) throw ParseError(where + ": distance_m must be non-negative");
        out.push_back(std::move(c));
    }
    return out;
}

std::string format_fixed(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", value);
    return buf;
}

std::string format_rules(const FuzzyModel& model, RuleFormat format) {
    std::string out;
    if (format == RuleFormat::Csv) {
        out += "row";
        for (const auto& v : model.inputs()) out += "," + v.name();
        out += "," + model.output().name() + ",weight\n";
    }
    const auto& rules = model.rules();
    for (std::size_t r = 0; r < rules.size(); ++r) {
        const auto& rule = rules[r];
        const auto& then = model.output().terms()[rule.consequent].name;
        if (format == RuleFormat::Csv) {
            out += std::to_string(r + 1);
            for (std::size_t v = 0; v < rule.antecedents.size(); ++v) {
                out += "," + model.inputs()[v].terms()[rule.antecedents[v]].name;
            }
            out += "," + then + "," + format_fixed(rule.weight) + "\n";
        } else {
            char num[16];
            std::snprintf(num, sizeof num, "%3zu  ", r + 1);
            out += num;
            for (std::size_t v = 0; v < rule.antecedents.size(); ++v) {
                if (v > 0) out += ", ";
                out += model.inputs()[v].terms()[rule.antecedents[v]].name;
            }
            out += " → " + then;
            if (rule.weight != 1.0) out += "  (weight " + format_fixed(rule.weight) + ")";
            out += "\n";
        }
    }
    return out;
}

FuzzyModel parse_rules_csv(std::string_view text, const FuzzyModel& base) {
    const auto lines = split_lines(text);
    const std::size_t width = base.inputs().size() + 3;
    if (lines.empty()) throw ParseError("rules CSV: missing header");
    const auto header = split_fields(lines.front());
    if (header.size() != width || header.front() != "row") {
        throw ParseError("rules CSV: unexpected header");
    }
    std::vector<Rule> rules;
    for (std::size_t n = 1; n < lines.size(); ++n) {
        const auto where = "rules CSV line " + std::to_string(n + 1);
        const auto f = split_fields(lines[n]);
        if (f.size() != width) throw ParseError(where + ": expected " + std::to_string(width) + " fields");
        if (parse_number(f[0], where + ", row") != static_cast<double>(n)) {
            throw ParseError(where + ": rows must be numbered consecutively from 1");
        }
        Rule rule;
        try {
            for (std::size_t v = 0; v < base.inputs().size(); ++v) {
                rule.antecedents.push_back(base.inputs()[v].term_index(std::string(f[v + 1])));
            }
            rule.consequent = base.output().term_index(std::string(f[width - 2]));
        } catch (const ModelError& e) {
            throw ParseError(where + ": " + e.what());
        }
        rule.weight = parse_number(f[width - 1], where + ", weight");
        rules.push_back(std::move(rule));
    }
    try {
        return FuzzyModel(base.inputs(), base.output(), std::move(rules), base.grid_points());
    } catch (const ModelError& e) {
        throw ParseError(std::string("rules CSV: ") + e.what());
    }
}

std::string format_surface_csv(const SweepResult& result) {
    std::string out;
    for (double x : result.axis2_samples) out += "," + format_fixed(x);
    out += "\n";
    for (std::size_t i = 0; i < result.axis1_samples.size(); ++i) {
        out += format_fixed(result.axis1_samples[i]);
        for (double v : result.grid[i]) out += "," + format_fixed(v);
        out += "\n";
    }
    return out;
}

}  // namespace crfuzzy
