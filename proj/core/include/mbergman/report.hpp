// Structured verification records. Checks never throw on mathematical
// failure; they return a report with lhs/rhs/margin and a pass flag so a
// whole suite can run to completion and be aggregated.

#pragma once

#include <string>
#include <utility>
#include <vector>

namespace mbergman {

enum class Outcome {
    Pass,
    Fail,
    Info,  // exploratory checks carry no pass/fail claim
};

struct CheckReport {
    std::string check_id;
    std::vector<std::pair<std::string, std::string>> params;  // ordered k=v pairs
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;  // rhs - lhs
    Outcome outcome = Outcome::Pass;
    std::string provenance;
    long long runtime_ms = 0;

    // optional curve payload for SVG plots; not part of the CSV schema
    std::string curve_x_label;
    std::string curve_y_label;
    std::vector<std::pair<double, double>> curve;

    bool passed() const { return outcome != Outcome::Fail; }
    bool informational() const { return outcome == Outcome::Info; }

    CheckReport& param(const std::string& key, const std::string& value);
    CheckReport& param(const std::string& key, double value);
    CheckReport& param(const std::string& key, int value);

    /// Sets margin = rhs - lhs and pass iff margin >= -tol_abs; records the
    /// tolerance as a param.
    CheckReport& finalize(double tol_abs);
};

/// Shortest round-trippable decimal form (17 significant digits).
std::string format_real(double v);

/// `check_id,params,lhs,rhs,margin,pass,provenance,runtime_ms`
const std::string& csv_header();

std::string to_csv_row(const CheckReport& report);

/// Inverse of to_csv_row for schema round-trips (curve payload excluded).
CheckReport report_from_csv_row(const std::string& line);

/// Canonical report order: by check_id, then serialized params.
void sort_reports(std::vector<CheckReport>& reports);

}  // namespace mbergman
