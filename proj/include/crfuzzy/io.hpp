#pragma once

// File formats: the JSON model document, the candidates CSV, the rule
// listing (table or CSV) and the surface CSV. All numeric text output uses
// six fractional digits, fixed point.

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "crfuzzy/cr_model.hpp"
#include "crfuzzy/sweep.hpp"

namespace crfuzzy {

inline constexpr int kSchemaVersion = 1;

struct ModelDocument {
    FuzzyModel model;
    double admission_threshold = kDefaultAdmissionThreshold;

    bool operator==(const ModelDocument&) const = default;
};

ModelDocument default_document();

std::string serialize_model(const ModelDocument& doc);

/// Throws ParseError naming the offending location (byte offset for syntax
/// errors, a JSON pointer for schema errors). Structural model errors are
/// rethrown as ParseError too.
ModelDocument parse_model(std::string_view text);

ModelDocument load_model_file(const std::filesystem::path& path);

inline constexpr std::string_view kCandidatesHeader = "id,signal_dbm,velocity_kmh,spectrum_ratio,distance_m";

/// Header row is mandatory and must match kCandidatesHeader exactly. A
/// header-only file yields an empty list.
std::vector<Candidate> parse_candidates_csv(std::string_view text);

std::string format_fixed(double value);

enum class RuleFormat { Table, Csv };

/// One line per rule with its 1-based row number, in rule order.
std::string format_rules(const FuzzyModel& model, RuleFormat format);

/// Inverse of format_rules(model, RuleFormat::Csv): term names are resolved
/// against the variables of `base`, whose rules are replaced.
FuzzyModel parse_rules_csv(std::string_view text, const FuzzyModel& base);

/// First cell empty, first row axis2 samples, first column axis1 samples.
std::string format_surface_csv(const SweepResult& result);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace crfuzzy
