// Command-line front end: single-instance analysis, randomized verification
// sweeps, and Monte Carlo phase-transition experiments.
//
// Exit codes
//   analyze:    0 ok, 2 dimension mismatch, 3 unreadable file, 4 j out of range
//   verify:     0 ok, 1 at least one applicable check failed, 2 config error
//   experiment: 0 ok, 2 config error

#include "eigenpert/bounds.hpp"
#include "eigenpert/config.hpp"
#include "eigenpert/instance_gen.hpp"
#include "eigenpert/montecarlo.hpp"
#include "eigenpert/oracles.hpp"
#include "eigenpert/serialize.hpp"
#include "eigenpert/series.hpp"
#include "eigenpert/sweep.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

namespace fs = std::filesystem;
using namespace eigenpert;

namespace {

struct GlobalOpts {
    std::optional<std::uint64_t> seed;
    int threads = 1;
};

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write file: " + path);
    out << content;
}

RunManifest begin_manifest(const std::string& command, const Config& cfg, std::uint64_t seed) {
    RunManifest m;
    m.command = command;
    m.config = cfg;
    m.seed = seed;
    m.started_at = iso8601_now();
    return m;
}

void finish_manifest(RunManifest& m, std::chrono::steady_clock::time_point t0,
                     const std::string& path) {
    m.finished_at = iso8601_now();
    m.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    write_text_file(path, manifest_json(m));
}

// ---------------------------------------------------------------- analyze --

int run_analyze(const std::string& sigma_path, const std::string& e_path, Index j, int p,
                const std::string& out_path, const GlobalOpts&) {
    const auto t0 = std::chrono::steady_clock::now();
    SymmetricMatrix sigma = SymmetricMatrix::zero(1), e = SymmetricMatrix::zero(1);
    try {
        sigma = load_matrix(sigma_path);
        e = load_matrix(e_path);
    } catch (const InputError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 3;
    }
    if (sigma.dim() != e.dim()) {
        std::cerr << "error: dimension mismatch: sigma is " << sigma.dim() << "x" << sigma.dim()
                  << ", e is " << e.dim() << "x" << e.dim() << "\n";
        return 2;
    }
    if (j < 1 || j > sigma.dim()) {
        std::cerr << "error: j = " << j << " out of range [1, " << sigma.dim() << "]\n";
        return 4;
    }

    const SpectralModel model = decompose_symmetric(sigma);
    const PerturbationInstance inst(model, e);
    const SeriesExpansion se = partial_sums(inst, j, p);
    const ExactPerturbed exact = exact_perturbed(inst);
    const double lhat = exact.model.eigenvalue(j);
    const Matrix phat = projector(exact.model, j);

    std::ostringstream tbl;
    tbl << "analyze  d=" << sigma.dim() << "  j=" << j << "  p=" << p << "\n";
    tbl << "  delta      = " << format_double(se.delta_report.delta) << "\n";
    tbl << "  delta'     = " << format_double(se.delta_report.delta_prime) << "\n";
    tbl << "  gap        = " << format_double(se.delta_report.gap) << "\n";
    tbl << "  norm_rr    = " << format_double(se.delta_report.norm_rr)
        << "  norm_rp = " << format_double(se.delta_report.norm_rp)
        << "  norm_pp = " << format_double(se.delta_report.norm_pp) << "\n";
    tbl << "coefficients (n, lambda^(n), ||P^(n)||_2):\n";
    for (int n = 0; n < p; ++n)
        tbl << "  " << n << "  " << format_double(se.eval_coeffs[static_cast<std::size_t>(n)])
            << "  " << format_double(hs_norm(se.proj_coeffs[static_cast<std::size_t>(n)])) << "\n";
    tbl << "partial sums vs exact re-diagonalization:\n";
    tbl << "  lambda_hat           = " << format_double(lhat) << "\n";
    tbl << "  |lambda_hat - sum|   = " << format_double(std::abs(lhat - se.eval_partial_sum))
        << "\n";
    tbl << "  ||P_hat - sum||_2    = " << format_double(hs_norm(phat - se.proj_partial_sum))
        << "\n";
    tbl << "remainder bounds at order p:\n";
    for (const auto& [name, bv] : se.bounds) {
        tbl << "  " << name << " = " << format_double(bv.value) << "  "
            << (bv.applicable ? "[applicable]" : "[not applicable: " + bv.reason + "]") << "\n";
    }
    std::cout << tbl.str();

    write_text_file(out_path, series_expansion_json(se));
    Config cfg;
    cfg.set("sigma", sigma_path);
    cfg.set("e", e_path);
    cfg.set("j", std::to_string(j));
    cfg.set("p", std::to_string(p));
    RunManifest m = begin_manifest("analyze", cfg, 0);
    m.outputs = {out_path};
    finish_manifest(m, t0, out_path + ".manifest.json");
    return 0;
}

// ----------------------------------------------------------------- verify --

int run_verify(const std::string& config_path, const std::string& out_path, bool corrupt_bound,
               const GlobalOpts& g) {
    const auto t0 = std::chrono::steady_clock::now();
    Config cfg;
    try {
        cfg = Config::parse_file(config_path);
    } catch (const InputError& ex) {
        std::cerr << "config error: " << ex.what() << "\n";
        return 2;
    }
    SweepOptions opts;
    opts.instances = cfg.get_int("instances", 1000);
    opts.d = cfg.get_int("d", 15);
    opts.delta_targets = cfg.get_double_list("delta_targets", {0.05, 0.2, 0.45});
    opts.seed = g.seed.value_or(cfg.get_u64("seed", 20260801));
    opts.p_max = static_cast<int>(cfg.get_int("p_max", 6));
    opts.min_gap = cfg.get_double("min_gap", 0.05);
    opts.threads = g.threads;
    opts.corrupt_bound = corrupt_bound;

    const SweepResult result = run_invariant_sweep(opts);
    write_text_file(out_path, sweep_csv(result));
    cfg.set("seed", std::to_string(opts.seed));  // manifest config must reproduce the run
    RunManifest m = begin_manifest("verify", cfg, opts.seed);
    m.outputs = {out_path};
    finish_manifest(m, t0, out_path + ".manifest.json");

    std::cout << "verify: " << opts.instances << " instances, " << result.applicable
              << " applicable checks, " << result.failures << " failures -> " << out_path
              << "\n";
    return result.failures == 0 ? 0 : 1;
}

// -------------------------------------------------------------- experiment --

int run_experiment(const std::string& config_path, const std::string& out_dir, bool emit_gnuplot,
                   const GlobalOpts& g) {
    const auto t0 = std::chrono::steady_clock::now();
    Config cfg;
    try {
        cfg = Config::parse_file(config_path);
    } catch (const InputError& ex) {
        std::cerr << "config error: " << ex.what() << "\n";
        return 2;
    }
    const double alpha = cfg.get_double("alpha", 1.0);
    const Index d = cfg.get_int("d", 40);
    const Index n = cfg.get_int("n", 500);
    const Index m_replicates = cfg.get_int("m_replicates", 300);
    const Dist dist = parse_dist(cfg.get_string("dist", "gaussian"));
    const std::uint64_t seed = g.seed.value_or(cfg.get_u64("seed", 20260801));
    const Index j_min = cfg.get_int("j_min", 3);
    const Index j_max = cfg.get_int("j_max", 20);
    const bool allow_bias = cfg.get_int("allow_truncation_bias", 0) != 0;
    const bool out_of_assumption = cfg.get_int("out_of_assumption", 0) != 0;

    fs::create_directories(out_dir);
    const PhaseTable table =
        phase_transition_experiment(alpha, d, n, j_min, j_max, m_replicates, dist, seed,
                                    g.threads, allow_bias, out_of_assumption);
    const std::string csv_path = (fs::path(out_dir) / "phase.csv").string();
    write_text_file(csv_path, phase_table_csv(table));

    cfg.set("seed", std::to_string(seed));  // manifest config must reproduce the run
    RunManifest m = begin_manifest("experiment", cfg, seed);
    m.outputs = {csv_path};

    if (emit_gnuplot) {
        std::ostringstream ev, proj;
        for (const PhaseRow& r : table.rows) {
            ev << r.j << ' ' << format_double(r.rel_ev_err) << '\n';
            proj << r.j << ' ' << format_double(r.proj_err) << '\n';
        }
        const std::string ev_path = (fs::path(out_dir) / "ev_curve.dat").string();
        const std::string proj_path = (fs::path(out_dir) / "proj_curve.dat").string();
        write_text_file(ev_path, ev.str());
        write_text_file(proj_path, proj.str());
        m.outputs.push_back(ev_path);
        m.outputs.push_back(proj_path);
    }
    finish_manifest(m, t0, (fs::path(out_dir) / "manifest.json").string());
    std::cout << "experiment: " << table.rows.size() << " rows -> " << csv_path << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"matrix perturbation engine: weighted-condition eigenvalue/eigenprojection "
                 "series, remainder bounds, oracles, and covariance Monte Carlo"};
    app.require_subcommand(1);

    GlobalOpts g;
    std::uint64_t seed_flag = 0;
    auto* seed_opt = app.add_option("--seed", seed_flag, "override the config seed");
    app.add_option("--threads", g.threads, "worker threads for sweeps")->default_val(1);
    std::string out_path;
    app.add_option("--out", out_path,
                   "output path (analyze: JSON file, verify: CSV file, experiment: directory)");

    // analyze
    std::string sigma_path, e_path;
    Index j = 1;
    int p = 3;
    auto* analyze = app.add_subcommand("analyze", "single-instance series and bounds");
    analyze->fallthrough();
    analyze->add_option("sigma", sigma_path, "base matrix file (text or json)")->required();
    analyze->add_option("e", e_path, "perturbation matrix file")->required();
    analyze->add_option("--j", j, "1-based eigenvalue index")->required();
    analyze->add_option("--p", p, "expansion order (number of coefficients)")->default_val(3);

    // verify
    std::string verify_cfg;
    bool corrupt_bound = false;
    auto* verify = app.add_subcommand("verify", "randomized invariant sweep");
    verify->fallthrough();
    verify->add_option("config", verify_cfg, "sweep config file")->required();
    verify->add_flag("--corrupt-bound", corrupt_bound,
                     "harness self-test: corrupt one bound so the sweep must fail");

    // experiment
    std::string exp_cfg;
    bool emit_gnuplot = false;
    auto* experiment = app.add_subcommand("experiment", "phase-transition Monte Carlo");
    experiment->fallthrough();
    experiment->add_option("config", exp_cfg, "experiment config file")->required();
    experiment->add_flag("--emit-gnuplot-style", emit_gnuplot,
                         "also write two-column .dat files per curve");

    CLI11_PARSE(app, argc, argv);
    if (seed_opt->count() > 0) g.seed = seed_flag;

    try {
        if (app.got_subcommand(analyze))
            return run_analyze(sigma_path, e_path, j, p,
                               out_path.empty() ? "series.json" : out_path, g);
        if (app.got_subcommand(verify))
            return run_verify(verify_cfg, out_path.empty() ? "sweep.csv" : out_path,
                              corrupt_bound, g);
        if (app.got_subcommand(experiment))
            return run_experiment(exp_cfg, out_path.empty() ? "experiment_out" : out_path,
                                  emit_gnuplot, g);
    } catch (const InputError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    return 1;
}
