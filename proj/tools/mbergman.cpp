// Verification CLI: runs check suites over a parameter grid and writes the
// canonical CSV report (plus optional SVG plots).
//
//   mbergman verify all --alpha 0,1,2.5 --beta -0.5,0,1.5 --p 1,2,3 \
//       --nr 64 --ntheta 64 --seed 42 --out report.csv --svg-dir plots/
//
// Exit status: 0 all checks pass, 1 at least one non-informational check
// failed, 2 configuration error, 3 I/O error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mbergman/report.hpp"
#include "mbergman/suites.hpp"

namespace {

using mbergman::suites::RunConfig;

void apply_config_file(RunConfig& config, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file '" + path + "'");
    nlohmann::json doc = nlohmann::json::parse(in);
    if (doc.contains("alpha")) config.alphas = doc["alpha"].get<std::vector<double>>();
    if (doc.contains("beta")) config.betas = doc["beta"].get<std::vector<double>>();
    if (doc.contains("p")) config.ps = doc["p"].get<std::vector<double>>();
    if (doc.contains("nr")) config.n_r = doc["nr"].get<int>();
    if (doc.contains("ntheta")) config.n_theta = doc["ntheta"].get<int>();
    if (doc.contains("seed")) config.seed = doc["seed"].get<std::uint64_t>();
    if (doc.contains("out")) config.out_csv = doc["out"].get<std::string>();
    if (doc.contains("svg_dir")) config.svg_dir = doc["svg_dir"].get<std::string>();
    if (doc.contains("runtime_in_csv")) config.runtime_in_csv = doc["runtime_in_csv"].get<bool>();
    if (doc.contains("tol_overrides"))
        for (const auto& [key, value] : doc["tol_overrides"].items())
            config.tol_overrides[key] = value.get<double>();
}

void apply_tol_override(RunConfig& config, const std::string& spec) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos)
        throw std::invalid_argument("--tol-override expects check_id=value, got '" + spec + "'");
    config.tol_overrides[spec.substr(0, eq)] = std::stod(spec.substr(eq + 1));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical verification suites for weighted Bergman-type spaces "
                 "on the punctured disc"};
    app.require_subcommand(1);

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite_name = "all";
    std::string config_path;
    std::vector<double> alphas, betas, ps;
    std::vector<std::string> overrides;
    RunConfig config;
    int n_r = -1, n_theta = -1;
    std::uint64_t seed = 0;
    bool seed_set = false, runtime_in_csv = false;
    std::string out_csv, svg_dir;

    verify->add_option("suite", suite_name,
                       "basis|kernel|inequalities|operators|toeplitz|asymptotics|zeros|all")
        ->required();
    verify->add_option("--config", config_path, "JSON config file (flags override it)");
    verify->add_option("--alpha", alphas, "alpha grid values")->delimiter(',');
    verify->add_option("--beta", betas, "beta grid values")->delimiter(',');
    verify->add_option("--p", ps, "integrability exponents")->delimiter(',');
    verify->add_option("--nr", n_r, "radial quadrature points");
    verify->add_option("--ntheta", n_theta, "angular quadrature points");
    verify->add_option("--seed", seed, "64-bit seed for the random test functions")
        ->each([&](const std::string&) { seed_set = true; });
    verify->add_option("--out", out_csv, "CSV report path");
    verify->add_option("--svg-dir", svg_dir, "directory for SVG plots (must exist)");
    verify->add_option("--tol-override", overrides,
                       "check_id=value pass-tolerance override (repeatable)");
    verify->add_flag("--runtime-in-csv", runtime_in_csv,
                     "emit measured runtimes (breaks byte-level reproducibility)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (!config_path.empty()) apply_config_file(config, config_path);
        if (!alphas.empty()) config.alphas = alphas;
        if (!betas.empty()) config.betas = betas;
        if (!ps.empty()) config.ps = ps;
        if (n_r > 0) config.n_r = n_r;
        if (n_theta > 0) config.n_theta = n_theta;
        if (seed_set) config.seed = seed;
        if (!out_csv.empty()) config.out_csv = out_csv;
        if (!svg_dir.empty()) config.svg_dir = svg_dir;
        if (runtime_in_csv) config.runtime_in_csv = true;
        for (const auto& spec : overrides) apply_tol_override(config, spec);
        config.validate();
    } catch (const std::exception& e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return 2;
    }

    std::vector<mbergman::CheckReport> reports;
    try {
        reports = mbergman::suites::run_suite(config,
                                              mbergman::suites::suite_from_name(suite_name));
    } catch (const std::invalid_argument& e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return 2;
    }

    if (!config.runtime_in_csv)
        for (auto& report : reports) report.runtime_ms = 0;

    try {
        mbergman::suites::emit_reports(reports, config.out_csv, config.svg_dir);
    } catch (const std::exception& e) {
        std::cerr << "i/o error: " << e.what() << '\n';
        return 3;
    }

    int failed = 0, info = 0;
    for (const auto& report : reports) {
        if (report.informational()) ++info;
        else if (!report.passed()) {
            ++failed;
            std::cout << "FAIL " << mbergman::to_csv_row(report) << '\n';
        }
    }
    std::cout << suite_name << ": " << reports.size() << " checks, " << failed << " failed, "
              << info << " informational\n";
    if (!config.out_csv.empty()) std::cout << "report: " << config.out_csv << '\n';
    return mbergman::suites::exit_status(reports);
}
