#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "qho/errors.hpp"
#include "qho/experiment.hpp"

namespace {

struct CliOverrides {
    std::string config;
    std::string suite;
    std::string out_dir;
    long long dim = -1;
    long long samples = -1;
    long long seed = -1;
    long long n_r = -1;
    long long n_theta = -1;
    long long n_phi = -1;
    long long n_psi = -1;
    double q_radius = -1.0;
    double cs_eps = -1.0;
    bool flag_parallel = false;
    bool flag_serial = false;
};

void add_common(CLI::App* app, CliOverrides& o) {
    app->add_option("--config", o.config, "JSON config file");
    app->add_option("--dim", o.dim, "Fock truncation dimension");
    app->add_option("--samples", o.samples, "random draws per check family");
    app->add_option("--seed", o.seed, "RNG seed");
    app->add_option("--n-r", o.n_r, "radial quadrature order");
    app->add_option("--n-theta", o.n_theta, "slice-angle quadrature order");
    app->add_option("--n-phi", o.n_phi, "polar sphere quadrature order");
    app->add_option("--n-psi", o.n_psi, "azimuthal sphere quadrature order");
    app->add_option("--q-radius", o.q_radius, "sampling ball radius");
    app->add_option("--cs-eps", o.cs_eps, "coherent-state tail tolerance");
    app->add_option("--out", o.out_dir, "report output directory");
    app->add_flag("--parallel", o.flag_parallel,
                  "parallel entry partitioning (default)");
    app->add_flag("--serial", o.flag_serial,
                  "force the serial reference kernels");
}

qho::ExperimentConfig merge(const CliOverrides& o) {
    qho::ExperimentConfig cfg;
    if (!o.config.empty()) cfg = qho::load_config(o.config);
    if (!o.suite.empty()) cfg.suite = o.suite;
    if (o.dim >= 0) cfg.dim = static_cast<int>(o.dim);
    if (o.samples >= 0) cfg.samples = static_cast<int>(o.samples);
    if (o.seed >= 0) cfg.seed = static_cast<std::uint64_t>(o.seed);
    if (o.n_r >= 0) cfg.n_r = static_cast<int>(o.n_r);
    if (o.n_theta >= 0) cfg.n_theta = static_cast<int>(o.n_theta);
    if (o.n_phi >= 0) cfg.n_phi = static_cast<int>(o.n_phi);
    if (o.n_psi >= 0) cfg.n_psi = static_cast<int>(o.n_psi);
    if (o.q_radius > 0) cfg.q_radius = o.q_radius;
    if (o.cs_eps > 0) cfg.cs_eps = o.cs_eps;
    if (!o.out_dir.empty()) cfg.out_dir = o.out_dir;
    if (o.flag_serial) cfg.parallel = false;
    if (o.flag_parallel) cfg.parallel = true;
    return cfg;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quaternionic oscillator identity checks"};
    app.require_subcommand(0, 1);

    CliOverrides o;
    add_common(&app, o);

    const char* suites[] = {"uncertainty", "resolution",   "quantize",
                            "liealg",      "displacement", "all"};
    for (const char* s : suites) {
        CLI::App* sub = app.add_subcommand(
            s, std::string("run the ") + s +
                   (std::string(s) == "all" ? " suites" : " suite"));
        sub->parse_complete_callback([&o, s]() { o.suite = s; });
        add_common(sub, o);
    }

    CLI11_PARSE(app, argc, argv);

    try {
        qho::ExperimentConfig cfg = merge(o);
        int rc = qho::run_experiment(cfg);
        std::ifstream in(std::filesystem::path(cfg.out_dir) / "summary.txt");
        std::ostringstream ss;
        ss << in.rdbuf();
        std::fputs(ss.str().c_str(), stdout);
        std::printf("reports written to %s\n", cfg.out_dir.c_str());
        return rc;
    } catch (const qho::ConfigParseError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 1;
    } catch (const qho::IoError& e) {
        std::fprintf(stderr, "io error: %s\n", e.what());
        return 1;
    } catch (const qho::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
