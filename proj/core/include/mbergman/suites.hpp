// Verification suites run over a parameter grid, plus report emission
// (canonical CSV, optional self-contained SVG plots). The CLI front end is a
// thin wrapper around run_suite / emit_reports.

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mbergman/report.hpp"

namespace mbergman::suites {

struct RunConfig {
    std::vector<double> alphas{0.0, 1.0, 2.5};
    std::vector<double> betas{-0.5, 0.0, 1.5};
    std::vector<double> ps{1.0, 2.0, 3.0};
    int n_r = 64;
    int n_theta = 64;
    std::uint64_t seed = 42;  // fully determines the random test functions
    std::string out_csv;
    std::string svg_dir;
    std::map<std::string, double> tol_overrides;  // check_id -> tolerance
    bool runtime_in_csv = false;  // measured runtimes break byte-level reproducibility

    /// Throws std::invalid_argument with a diagnostic on any out-of-domain
    /// grid value; called before any computation.
    void validate() const;
};

enum class Suite {
    Basis,
    Kernel,
    Inequalities,
    Operators,
    Toeplitz,
    Asymptotics,
    Zeros,  // informational: no pass/fail claim
    All,
};

Suite suite_from_name(const std::string& name);  // throws on unknown names
std::string suite_name(Suite suite);

/// Runs the named suite across the configured grid. Deterministic given the
/// seed; individual check failures never abort the run. Reports come back in
/// canonical order (check_id, then params).
std::vector<CheckReport> run_suite(const RunConfig& config, Suite suite);

/// Writes the canonical CSV (exact header
/// `check_id,params,lhs,rhs,margin,pass,provenance,runtime_ms`) and, when
/// svg_dir is nonempty, one self-contained SVG line plot per report that
/// carries curve data. Throws std::runtime_error on I/O failure.
void emit_reports(const std::vector<CheckReport>& reports, const std::string& csv_path,
                  const std::string& svg_dir);

/// 0 iff every non-informational report passes.
int exit_status(const std::vector<CheckReport>& reports);

/// Minimal self-contained SVG line plot (used by emit_reports; exposed for
/// tests).
std::string render_svg_line_plot(const std::string& title, const std::string& x_label,
                                 const std::string& y_label,
                                 const std::vector<std::pair<double, double>>& curve);

}  // namespace mbergman::suites
