#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qho {

struct ExperimentConfig {
    std::string suite = "all";
    int dim = 64;
    double cs_eps = 1e-14;
    int n_r = 64;
    int n_theta = 32;
    int n_phi = 8;
    int n_psi = 8;
    int samples = 200;
    std::uint64_t seed = 20260819;
    double q_radius = 1.0;
    std::string out_dir = "reports";
    bool parallel = true;
};

// JSON config file loader.  Unknown keys are ignored; wrong types,
// non-positive counts or an unknown suite name throw ConfigParseError.
ExperimentConfig load_config(const std::string& path);

// Throws ConfigParseError if the config is unusable.
void validate_config(const ExperimentConfig& cfg);

struct ReportRecord {
    std::string suite;
    std::string case_id;
    std::string params;
    double value = 0.0;
    double expected = 0.0;
    double bound = 0.0;
    // The mathematical statement being checked.  Prefixes classify it:
    //   "identity: ..."    gated, |value - expected| <= bound
    //   "bound: ..."       gated, value <= bound
    //   "measurement: ..." not gated; pass stays empty in the CSV
    std::string claim;
    int pass = -1; // 1 pass, 0 fail, -1 measurement-only
};

struct SweepRecord {
    double qn = 0.0; // |q|
    double pn = 0.0; // |p|
    int slice_flag = 0;
    std::string residual_kind;
    double value = 0.0;
};

struct ExperimentResult {
    std::vector<ReportRecord> records;
    std::vector<SweepRecord> sweep;
    std::vector<std::string> failures;
    bool all_pass() const { return failures.empty(); }
};

// Runs the suites selected by config.suite: one of "uncertainty",
// "resolution", "quantize", "liealg", "displacement", or "all".
ExperimentResult run_suites(const ExperimentConfig& cfg);

// %.17g, the shared float format of every report writer.
std::string format_double(double v);

std::string render_csv(const ExperimentResult& r);
std::string render_sweep_csv(const ExperimentResult& r);
std::string render_json(const ExperimentConfig& cfg, const ExperimentResult& r);
std::string render_summary(const ExperimentConfig& cfg,
                           const ExperimentResult& r);

// Runs the suites and writes report.csv, report.json, summary.txt (plus
// displacement_sweep.csv when pair sweeps ran) into config.out_dir.
// Returns 0 when every gated record passed, 2 otherwise; throws IoError
// when the output directory is unusable.
int run_experiment(const ExperimentConfig& cfg);

} // namespace qho
