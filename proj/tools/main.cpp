// spinwork command-line tool: kernel profiles, work sweeps, spin-echo
// ensembles, pulse optimization, and the finite-bath verification battery.
// Output is CSV (or a text report for oracle-verify) to --out or stdout.
//
// Exit codes: 0 success, 1 strict verification failure or runtime error,
// 2 configuration error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "spinwork/sweep.hpp"

namespace {

struct CommonFlags {
    std::string config_path;
    std::string out_path;
    std::optional<double> T, ts, sz0, eps, omega0, d, gamma, cutoff;
    std::optional<double> tau_start, tau_stop, prep_time, simplex_tol, tol;
    std::optional<int> tau_count, max_iter;
    std::optional<std::uint64_t> seed;
    bool tau_log = false;
    std::optional<std::string> pulse1, pulse2, modes, cutoffs;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--config", f.config_path, "key = value parameter file");
    cmd->add_option("--out", f.out_path, "output path (default: stdout)");
    cmd->add_option("--seed", f.seed, "RNG seed (fixes all stochastic behavior)");
    cmd->add_option("--T", f.T, "bath temperature");
    cmd->add_option("--ts", f.ts, "spin temperature T_S");
    cmd->add_option("--sz0", f.sz0, "initial <sigma_z> (alternative to --ts)");
    cmd->add_option("--eps", f.eps, "spin gap");
    cmd->add_option("--omega0", f.omega0, "ensemble mean gap Omega_0");
    cmd->add_option("--disorder-var", f.d, "gaussian gap variance d");
    cmd->add_option("--gamma", f.gamma, "dimensionless bath coupling");
    cmd->add_option("--cutoff", f.cutoff, "ohmic cutoff frequency");
    cmd->add_option("--pulse1", f.pulse1,
                    "first pulse: rot:<deg>:<axis> | euler:<phi>:<psi>:<theta> | pi");
    cmd->add_option("--pulse2", f.pulse2, "second pulse");
    cmd->add_option("--tau-start", f.tau_start, "grid start");
    cmd->add_option("--tau-stop", f.tau_stop, "grid stop");
    cmd->add_option("--tau-count", f.tau_count, "grid points");
    cmd->add_flag("--tau-log", f.tau_log, "logarithmic grid");
    cmd->add_option("--prep-time", f.prep_time,
                    "finite preparation time (default: ergodic)");
    cmd->add_option("--max-iter", f.max_iter, "optimizer iteration budget");
    cmd->add_option("--simplex-tol", f.simplex_tol, "optimizer stall tolerance");
    cmd->add_option("--modes", f.modes, "oracle bath: g:omega,g:omega,...");
    cmd->add_option("--cutoffs", f.cutoffs, "oracle Fock cutoffs (default: auto)");
    cmd->add_option("--tol", f.tol, "oracle strict tolerance");
}

spinwork::RunConfig build_config(const CommonFlags& f, const std::string& sub) {
    spinwork::RunConfig cfg;
    cfg.subcommand = sub;
    if (sub == "kernels") cfg.grid.start = 0.0;
    if (!f.config_path.empty()) spinwork::load_config_file(cfg, f.config_path);
    if (f.T) cfg.bath_temp = *f.T;
    if (f.ts) cfg.spin_temp = *f.ts;
    if (f.sz0) cfg.sz0 = *f.sz0;
    if (f.eps) cfg.spin_gap = *f.eps;
    if (f.omega0) cfg.mean_gap = *f.omega0;
    if (f.d) cfg.disorder_var = *f.d;
    if (f.gamma) cfg.coupling = *f.gamma;
    if (f.cutoff) cfg.cutoff = *f.cutoff;
    if (f.pulse1) cfg.pulse1 = *f.pulse1;
    if (f.pulse2) cfg.pulse2 = *f.pulse2;
    if (f.tau_start) cfg.grid.start = *f.tau_start;
    if (f.tau_stop) cfg.grid.stop = *f.tau_stop;
    if (f.tau_count) cfg.grid.count = *f.tau_count;
    if (f.tau_log) cfg.grid.log_spacing = true;
    if (f.prep_time) cfg.prep_time = *f.prep_time;
    if (f.max_iter) cfg.max_iterations = *f.max_iter;
    if (f.simplex_tol) cfg.simplex_tol = *f.simplex_tol;
    if (f.seed) cfg.seed = *f.seed;
    if (f.modes) cfg.oracle_modes = *f.modes;
    if (f.cutoffs) cfg.oracle_cutoffs = *f.cutoffs;
    if (f.tol) cfg.oracle_tol = *f.tol;
    return cfg;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw spinwork::ConfigError("cannot open output '" + out_path + "'");
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pulsed work extraction from a spin-boson bath"};
    app.require_subcommand(1);

    CommonFlags fk, fw, fe, fo, fv;
    auto* kernels = app.add_subcommand("kernels", "bath kernel profiles");
    add_common(kernels, fk);
    auto* work2 = app.add_subcommand("work2", "two-pulse work sweep");
    add_common(work2, fw);
    auto* echo3 = app.add_subcommand("echo3", "spin-echo ensemble sweep");
    add_common(echo3, fe);
    auto* optimize = app.add_subcommand("optimize", "work optimization");
    add_common(optimize, fo);
    auto* verify = app.add_subcommand("oracle-verify",
                                      "finite-bath verification battery");
    add_common(verify, fv);
    std::string preset_name;
    std::string preset_out;
    auto* preset = app.add_subcommand("preset", "figure parameter presets");
    preset->add_option("name", preset_name, "fig1..fig6")->required();
    preset->add_option("--out", preset_out, "output path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (kernels->parsed())
            emit(spinwork::cmd_kernels(build_config(fk, "kernels")), fk.out_path);
        else if (work2->parsed())
            emit(spinwork::cmd_work2(build_config(fw, "work2")), fw.out_path);
        else if (echo3->parsed())
            emit(spinwork::cmd_echo3(build_config(fe, "echo3")), fe.out_path);
        else if (optimize->parsed())
            emit(spinwork::cmd_optimize(build_config(fo, "optimize")).csv(),
                 fo.out_path);
        else if (verify->parsed()) {
            const auto [text, code] =
                spinwork::cmd_oracle_verify(build_config(fv, "oracle-verify"));
            emit(text, fv.out_path);
            return code;
        } else if (preset->parsed()) {
            emit(spinwork::run_preset(preset_name), preset_out);
        }
    } catch (const spinwork::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
