// sweep.hpp — run configurations, CSV sweeps, figure presets and the
// derivative-free optimizer behind the command-line tool.
//
// CSV contract: header row, comma separator, '.' decimal point, LF line
// endings, every number with 17 significant digits. Identical RunConfig
// (including the seed) produces byte-identical output.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "spinwork/disorder.hpp"
#include "spinwork/thermo.hpp"
#include "spinwork/verify.hpp"
#include "spinwork/work.hpp"

namespace spinwork {

struct TauGrid {
    double start = 1e-3;
    double stop = 20.0;
    int count = 2000;
    bool log_spacing = false;

    std::vector<double> points() const {
        if (count < 1) throw ConfigError("tau grid: count must be >= 1");
        if (!(stop > start)) throw ConfigError("tau grid: need stop > start");
        if (log_spacing && !(start > 0.0))
            throw ConfigError("tau grid: log spacing needs start > 0");
        std::vector<double> out(static_cast<std::size_t>(count));
        for (int i = 0; i < count; ++i) {
            const double f = count == 1 ? 0.0 : double(i) / (count - 1);
            out[static_cast<std::size_t>(i)] =
                log_spacing ? start * std::pow(stop / start, f)
                            : start + (stop - start) * f;
        }
        return out;
    }
};

struct RunConfig {
    std::string subcommand;  // kernels | work2 | echo3 | optimize | oracle-verify
    // physical parameters (natural units, frequencies in units of the cutoff)
    double bath_temp = 10.0;
    std::optional<double> spin_temp;
    std::optional<double> sz0;
    double spin_gap = 0.01;    // eps, two-pulse runs
    double mean_gap = 8.0;     // Omega_0, echo runs
    double disorder_var = 0.0; // d
    double coupling = 1.0;     // gamma
    double cutoff = 1.0;       // Gc
    std::string pulse1 = "rot:90:y";
    std::string pulse2 = "rot:90:x";
    TauGrid grid;
    std::optional<double> prep_time;  // empty = ergodic
    // optimizer
    int max_iterations = 400;
    double simplex_tol = 1e-10;
    std::uint64_t seed = 12345;
    // oracle-verify
    std::string oracle_modes = "0.18:1.0,0.12:1.6";  // g:omega pairs
    std::string oracle_cutoffs;                      // comma ints; empty = auto
    double oracle_tol = 1e-8;
};

// ---- config file ("key = value" lines, '#' comments) ------------------------

namespace detail_sweep {

inline std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

inline double to_num(const std::string& key, const std::string& v) {
    char* end = nullptr;
    const double x = std::strtod(v.c_str(), &end);
    if (end == v.c_str() || *end != '\0')
        throw ConfigError("config: bad number for '" + key + "': " + v);
    return x;
}

}  // namespace detail_sweep

inline void apply_setting(RunConfig& cfg, const std::string& key,
                          const std::string& value) {
    using detail_sweep::to_num;
    if (key == "T") cfg.bath_temp = to_num(key, value);
    else if (key == "Ts") cfg.spin_temp = to_num(key, value);
    else if (key == "sz0") cfg.sz0 = to_num(key, value);
    else if (key == "eps") cfg.spin_gap = to_num(key, value);
    else if (key == "omega0") cfg.mean_gap = to_num(key, value);
    else if (key == "d") cfg.disorder_var = to_num(key, value);
    else if (key == "gamma") cfg.coupling = to_num(key, value);
    else if (key == "cutoff") cfg.cutoff = to_num(key, value);
    else if (key == "pulse1") cfg.pulse1 = value;
    else if (key == "pulse2") cfg.pulse2 = value;
    else if (key == "tau-start") cfg.grid.start = to_num(key, value);
    else if (key == "tau-stop") cfg.grid.stop = to_num(key, value);
    else if (key == "tau-count") cfg.grid.count = static_cast<int>(to_num(key, value));
    else if (key == "tau-log") cfg.grid.log_spacing = value == "1" || value == "true";
    else if (key == "prep-time") cfg.prep_time = to_num(key, value);
    else if (key == "max-iter") cfg.max_iterations = static_cast<int>(to_num(key, value));
    else if (key == "simplex-tol") cfg.simplex_tol = to_num(key, value);
    else if (key == "seed") cfg.seed = static_cast<std::uint64_t>(to_num(key, value));
    else if (key == "modes") cfg.oracle_modes = value;
    else if (key == "cutoffs") cfg.oracle_cutoffs = value;
    else if (key == "tol") cfg.oracle_tol = to_num(key, value);
    else throw ConfigError("config: unknown key '" + key + "'");
}

inline void load_config_file(RunConfig& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open '" + path + "'");
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = detail_sweep::trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config: expected 'key = value', got '" + line + "'");
        apply_setting(cfg, detail_sweep::trim(line.substr(0, eq)),
                      detail_sweep::trim(line.substr(eq + 1)));
    }
}

// ---- CSV -------------------------------------------------------------------

inline std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::string fmtg(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

class CsvWriter {
  public:
    explicit CsvWriter(std::vector<std::string> columns)
        : ncols_(columns.size()) {
        for (std::size_t i = 0; i < columns.size(); ++i) {
            if (i) body_ += ',';
            body_ += columns[i];
        }
        body_ += '\n';
    }
    void row(const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) body_ += ',';
            body_ += cells[i];
        }
        body_ += '\n';
    }
    const std::string& str() const { return body_; }
    std::size_t columns() const { return ncols_; }

  private:
    std::string body_;
    std::size_t ncols_;
};

// ---- command implementations -------------------------------------------------

namespace detail_sweep {

inline std::pair<double, double> resolve_spin_state(const RunConfig& cfg) {
    // returns (sz0, spin_temperature)
    if (cfg.sz0 && cfg.spin_temp)
        throw ConfigError("give either sz0 or Ts, not both");
    if (cfg.sz0) {
        const double sz = *cfg.sz0;
        if (!(sz >= -1.0 && sz < 1.0))
            throw ConfigError("sz0 must lie in [-1, 1)");
        const double ts = sz == 0.0 ? std::numeric_limits<double>::infinity()
                                    : cfg.spin_gap / (2.0 * std::atanh(-sz));
        return {sz, ts};
    }
    if (cfg.spin_temp) return {initial_sz(cfg.spin_gap, *cfg.spin_temp), *cfg.spin_temp};
    throw ConfigError("missing spin state: set sz0 or Ts");
}

inline void guard_slacks(const EfficiencyReport& rep, double tau) {
    if (rep.slack_spin < -1e-12 || rep.slack_bath < -1e-12) {
        std::ostringstream os;
        os << "restriction violated at tau=" << tau
           << ": slacks " << rep.slack_spin << ", " << rep.slack_bath
           << " (these are theorems; this indicates a bug)";
        throw Error(os.str());
    }
    if (rep.extraction && rep.eta > rep.carnot + 1e-12) {
        std::ostringstream os;
        os << "Carnot bound violated at tau=" << tau << ": eta=" << rep.eta
           << " carnot=" << rep.carnot;
        throw Error(os.str());
    }
}

}  // namespace detail_sweep

// kernels: t, K, xi, xi_dot, G, F over the grid (grid.start may be 0)
inline std::string cmd_kernels(const RunConfig& cfg) {
    const KernelSet ks(SpectralDensity::ohmic(cfg.coupling, cfg.cutoff),
                       cfg.bath_temp);
    CsvWriter csv({"t", "K", "xi", "xi_dot", "G", "F"});
    TauGrid grid = cfg.grid;
    std::vector<double> ts;
    if (grid.start == 0.0 && grid.log_spacing)
        throw ConfigError("kernels: log grid needs start > 0");
    ts = grid.points();
    for (double t : ts) {
        csv.row({fmt17(t), fmt17(ks.noise_kernel(t)), fmt17(ks.xi(t)),
                 fmt17(ks.xi_dot(t)), fmt17(ks.backreaction_g(t)),
                 fmt17(ks.backreaction_f(t))});
    }
    return csv.str();
}

inline const std::vector<std::string>& work2_columns() {
    static const std::vector<std::string> cols = {
        "tau_gc", "w",      "W",      "W1",     "W2",     "dHS",
        "dHIB",   "eta",    "carnot", "slack1", "slack2", "power"};
    return cols;
}

inline std::string cmd_work2(const RunConfig& cfg) {
    const auto [sz, ts] = detail_sweep::resolve_spin_state(cfg);
    const KernelSet ks(SpectralDensity::ohmic(cfg.coupling, cfg.cutoff),
                       cfg.bath_temp);
    const auto sys = SystemConfig::with_sz0(cfg.spin_gap, sz, ks);
    const auto p1 = coefficients(parse_pulse(cfg.pulse1));
    const auto p2 = coefficients(parse_pulse(cfg.pulse2));
    const PrepTime prep = cfg.prep_time ? PrepTime(*cfg.prep_time) : kErgodic;
    CsvWriter csv(work2_columns());
    for (double tau : cfg.grid.points()) {
        const auto b = work_two_pulse(sys, p1, p2, tau, prep);
        const auto rep = efficiency(b, cfg.bath_temp, ts);
        detail_sweep::guard_slacks(rep, tau);
        csv.row({fmt17(tau * cfg.cutoff), fmt17(b.dimensionless), fmt17(b.total),
                 fmt17(b.per_pulse[0]), fmt17(b.per_pulse[1]), fmt17(b.spin_part),
                 fmt17(b.bath_int_part), fmt17(rep.eta), fmt17(rep.carnot),
                 fmt17(rep.slack_spin), fmt17(rep.slack_bath),
                 fmt17(std::abs(b.total) / tau)});
    }
    return csv.str();
}

inline const std::vector<std::string>& echo3_columns() {
    static const std::vector<std::string> cols = {
        "tau_gc", "w",      "W",      "W1",     "Wpi",    "W2",    "dHS",
        "dHIB",   "eta",    "carnot", "slack1", "slack2", "power", "w_avg2p"};
    return cols;
}

// echo3: ensemble spin-echo sweep; the w_avg2p column is the disorder-averaged
// plain two-pulse work, showing that without the pi pulse nothing is
// extracted once tau >> T2*.
inline std::string cmd_echo3(const RunConfig& cfg) {
    if (!cfg.spin_temp) throw ConfigError("echo3 needs Ts");
    const KernelSet ks(SpectralDensity::ohmic(cfg.coupling, cfg.cutoff),
                       cfg.bath_temp);
    const auto dm =
        DisorderModel::make(cfg.mean_gap, cfg.disorder_var, *cfg.spin_temp);
    const auto moments = ensemble_moments(dm);
    const auto p1 = coefficients(parse_pulse(cfg.pulse1));
    const auto p2 = coefficients(parse_pulse(cfg.pulse2));
    CsvWriter csv(echo3_columns());
    for (double tau : cfg.grid.points()) {
        const auto b = work_echo_ensemble(ks, moments, cfg.mean_gap, p1, p2, tau);
        const auto rep = efficiency(b, cfg.bath_temp, *cfg.spin_temp);
        detail_sweep::guard_slacks(rep, tau);
        const double avg2 = averaged_two_pulse_work(dm, ks, p1, p2, tau);
        const double ginf = ks.g_inf();
        csv.row({fmt17(tau * cfg.cutoff), fmt17(b.dimensionless), fmt17(b.total),
                 fmt17(b.per_pulse[0]), fmt17(b.per_pulse[1]),
                 fmt17(b.per_pulse[2]), fmt17(b.spin_part),
                 fmt17(b.bath_int_part), fmt17(rep.eta), fmt17(rep.carnot),
                 fmt17(rep.slack_spin), fmt17(rep.slack_bath),
                 fmt17(std::abs(b.total) / tau),
                 fmt17(ginf > 0.0 ? 2.0 * avg2 / ginf : 0.0)});
    }
    return csv.str();
}

// ---- optimizer ----------------------------------------------------------------

struct OptimizeResult {
    bool no_extraction = false;
    // stage results
    double baseline_tau = 0.0, baseline_work = 0.0, baseline_eta = 0.0;
    double best_tau = 0.0, best_work = 0.0, best_eta = 0.0;
    std::array<double, 3> best_euler1{}, best_euler2{};

    std::string csv() const {
        CsvWriter out({"stage", "tau_gc", "phi1", "psi1", "theta1", "phi2",
                       "psi2", "theta2", "W", "eta", "no_extraction"});
        out.row({"baseline", fmt17(baseline_tau), "", "", "", "", "", "",
                 fmt17(baseline_work), fmt17(baseline_eta),
                 no_extraction ? "1" : "0"});
        out.row({"optimized", fmt17(best_tau), fmt17(best_euler1[0]),
                 fmt17(best_euler1[1]), fmt17(best_euler1[2]),
                 fmt17(best_euler2[0]), fmt17(best_euler2[1]),
                 fmt17(best_euler2[2]), fmt17(best_work), fmt17(best_eta),
                 no_extraction ? "1" : "0"});
        return out.str();
    }
};

namespace detail_sweep {

// euler angles (phi, psi, theta) of a det-1 pulse unitary
inline std::array<double, 3> euler_of(const PulseUnitary& u) {
    const Complex a = u(0, 0), b = u(0, 1);
    const double theta = std::atan2(std::abs(b), std::abs(a));
    const double phi = std::abs(a) > 1e-14 ? std::arg(a) : 0.0;
    const double psi = std::abs(b) > 1e-14 ? -std::arg(b) : 0.0;
    return {phi, psi, theta};
}

inline double golden_min(const std::function<double(double)>& f, double a,
                         double b, double tol, double& xmin) {
    const double r = 0.6180339887498949, c = 1.0 - r;
    double x1 = r * a + c * b, x2 = c * a + r * b;
    double f1 = f(x1), f2 = f(x2);
    while (std::abs(b - a) > tol * (std::abs(x1) + std::abs(x2) + 1e-12)) {
        if (f1 < f2) {
            b = x2; x2 = x1; f2 = f1;
            x1 = r * a + c * b; f1 = f(x1);
        } else {
            a = x1; x1 = x2; f1 = f2;
            x2 = c * a + r * b; f2 = f(x2);
        }
    }
    if (f1 < f2) { xmin = x1; return f1; }
    xmin = x2; return f2;
}

// Nelder-Mead with seeded restarts; deterministic for a fixed seed.
inline std::vector<double> nelder_mead(
    const std::function<double(const std::vector<double>&)>& f,
    std::vector<double> x0, double scale, int max_iter, double tol,
    std::uint64_t seed, double& fbest) {
    const std::size_t n = x0.size();
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> jitter(-0.05, 0.05);
    std::vector<double> best = x0;
    fbest = f(x0);
    for (int restart = 0; restart < 3; ++restart) {
        std::vector<std::vector<double>> simplex(n + 1, best);
        std::vector<double> fx(n + 1);
        for (std::size_t i = 0; i < n; ++i)
            simplex[i + 1][i] += scale * (1.0 + jitter(rng));
        for (std::size_t i = 0; i <= n; ++i) fx[i] = f(simplex[i]);
        for (int it = 0; it < max_iter; ++it) {
            // order
            std::vector<std::size_t> idx(n + 1);
            for (std::size_t i = 0; i <= n; ++i) idx[i] = i;
            std::sort(idx.begin(), idx.end(),
                      [&](std::size_t a, std::size_t b) { return fx[a] < fx[b]; });
            if (fx[idx[0]] < fbest) { fbest = fx[idx[0]]; best = simplex[idx[0]]; }
            if (std::abs(fx[idx[n]] - fx[idx[0]]) <
                tol * (1.0 + std::abs(fx[idx[0]])))
                break;
            std::vector<double> centroid(n, 0.0);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t k = 0; k < n; ++k)
                    centroid[k] += simplex[idx[i]][k] / double(n);
            auto point = [&](double alpha) {
                std::vector<double> p(n);
                for (std::size_t k = 0; k < n; ++k)
                    p[k] = centroid[k] + alpha * (simplex[idx[n]][k] - centroid[k]);
                return p;
            };
            const auto xr = point(-1.0);
            const double fr = f(xr);
            if (fr < fx[idx[0]]) {
                const auto xe = point(-2.0);
                const double fe = f(xe);
                if (fe < fr) { simplex[idx[n]] = xe; fx[idx[n]] = fe; }
                else { simplex[idx[n]] = xr; fx[idx[n]] = fr; }
            } else if (fr < fx[idx[n - 1]]) {
                simplex[idx[n]] = xr; fx[idx[n]] = fr;
            } else {
                const auto xc = point(0.5);
                const double fc = f(xc);
                if (fc < fx[idx[n]]) { simplex[idx[n]] = xc; fx[idx[n]] = fc; }
                else {
                    for (std::size_t i = 1; i <= n; ++i) {
                        for (std::size_t k = 0; k < n; ++k)
                            simplex[idx[i]][k] =
                                0.5 * (simplex[idx[i]][k] + simplex[idx[0]][k]);
                        fx[idx[i]] = f(simplex[idx[i]]);
                    }
                }
            }
        }
        scale *= 0.35;  // restart around the incumbent with a tighter simplex
    }
    return best;
}

}  // namespace detail_sweep

// golden-section over tau with the configured pulses, then joint simplex
// refinement over both pulse parametrizations and tau.
inline OptimizeResult cmd_optimize(const RunConfig& cfg) {
    const auto [sz, ts] = detail_sweep::resolve_spin_state(cfg);
    const KernelSet ks(SpectralDensity::ohmic(cfg.coupling, cfg.cutoff),
                       cfg.bath_temp);
    const auto sys = SystemConfig::with_sz0(cfg.spin_gap, sz, ks);
    const PrepTime prep = cfg.prep_time ? PrepTime(*cfg.prep_time) : kErgodic;
    const auto u1 = parse_pulse(cfg.pulse1);
    const auto u2 = parse_pulse(cfg.pulse2);
    const auto p1 = coefficients(u1), p2 = coefficients(u2);

    auto work_fixed = [&](double tau) {
        return work_two_pulse(sys, p1, p2, tau, prep).total;
    };
    const auto taus = cfg.grid.points();
    std::size_t imin = 0;
    double wmin = work_fixed(taus[0]);
    for (std::size_t i = 1; i < taus.size(); ++i) {
        const double w = work_fixed(taus[i]);
        if (w < wmin) { wmin = w; imin = i; }
    }
    const double lo = taus[imin > 0 ? imin - 1 : 0];
    const double hi = taus[std::min(imin + 1, taus.size() - 1)];
    OptimizeResult res;
    if (hi > lo) {
        res.baseline_work =
            detail_sweep::golden_min(work_fixed, lo, hi, 1e-12, res.baseline_tau);
    } else {
        res.baseline_tau = taus[imin];
        res.baseline_work = wmin;
    }
    res.baseline_work = std::min(res.baseline_work, wmin);
    {
        const auto b = work_two_pulse(sys, p1, p2, res.baseline_tau, prep);
        res.baseline_eta = efficiency(b, cfg.bath_temp, ts).eta;
    }

    // joint refinement: (phi, psi, theta) x 2 and ln tau
    const auto e1 = detail_sweep::euler_of(u1);
    const auto e2 = detail_sweep::euler_of(u2);
    std::vector<double> x0 = {e1[0], e1[1], e1[2], e2[0],
                              e2[1], e2[2], std::log(res.baseline_tau)};
    auto objective = [&](const std::vector<double>& x) {
        const auto q1 = coefficients(PulseUnitary::from_euler(x[0], x[1], x[2]));
        const auto q2 = coefficients(PulseUnitary::from_euler(x[3], x[4], x[5]));
        return work_two_pulse(sys, q1, q2, std::exp(x[6]), prep).total;
    };
    double fbest = 0.0;
    const auto xb = detail_sweep::nelder_mead(objective, x0, 0.15,
                                              cfg.max_iterations,
                                              cfg.simplex_tol, cfg.seed, fbest);
    // the simplex starts at the baseline, so the optimum can only improve it
    res.best_work = std::min(fbest, res.baseline_work);
    if (fbest <= res.baseline_work) {
        res.best_tau = std::exp(xb[6]);
        res.best_euler1 = {xb[0], xb[1], xb[2]};
        res.best_euler2 = {xb[3], xb[4], xb[5]};
    } else {
        res.best_tau = res.baseline_tau;
        res.best_euler1 = e1;
        res.best_euler2 = e2;
    }
    {
        const auto q1 = coefficients(
            PulseUnitary::from_euler(res.best_euler1[0], res.best_euler1[1],
                                     res.best_euler1[2]));
        const auto q2 = coefficients(
            PulseUnitary::from_euler(res.best_euler2[0], res.best_euler2[1],
                                     res.best_euler2[2]));
        const auto b = work_two_pulse(sys, q1, q2, res.best_tau, prep);
        res.best_eta = efficiency(b, cfg.bath_temp, ts).eta;
    }
    res.no_extraction = res.best_work >= 0.0;
    return res;
}

// ---- oracle verification delegate ---------------------------------------------

inline std::pair<std::string, int> cmd_oracle_verify(const RunConfig& cfg) {
    oracle::VerifyConfig vc;
    vc.modes.clear();
    std::stringstream ss(cfg.oracle_modes);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        const auto colon = tok.find(':');
        if (colon == std::string::npos)
            throw ConfigError("oracle-verify: modes must be 'g:omega,...'");
        vc.modes.push_back(
            {detail_sweep::to_num("modes", tok.substr(0, colon)),
             detail_sweep::to_num("modes", tok.substr(colon + 1))});
    }
    if (!cfg.oracle_cutoffs.empty()) {
        std::stringstream sc(cfg.oracle_cutoffs);
        while (std::getline(sc, tok, ','))
            vc.cutoffs.push_back(
                static_cast<int>(detail_sweep::to_num("cutoffs", tok)));
    }
    vc.tol = cfg.oracle_tol;
    vc.seed = cfg.seed;
    const auto rep = oracle::verify(vc);
    return {rep.text(), rep.all_strict_pass() ? 0 : 1};
}

// ---- figure presets -------------------------------------------------------------

struct Preset {
    std::string name;
    std::vector<std::string> labels;
    std::vector<RunConfig> curves;
};

inline Preset preset(const std::string& name) {
    auto work2_base = [] {
        RunConfig c;
        c.subcommand = "work2";
        c.bath_temp = 10.0;
        c.coupling = 1.0;
        c.cutoff = 1.0;
        c.spin_gap = 0.01;
        c.sz0 = -0.8;
        c.pulse1 = "rot:90:y";
        c.pulse2 = "rot:90:x";
        return c;
    };
    Preset p;
    p.name = name;
    if (name == "fig1") {
        for (double sz : {-0.8, -0.5, -0.4, -0.3}) {
            auto c = work2_base();
            c.sz0 = sz;
            p.labels.push_back("sz0=" + fmtg(sz));
            p.curves.push_back(c);
        }
    } else if (name == "fig2") {
        for (double g : {4.0, 2.0, 0.5, 0.1}) {
            auto c = work2_base();
            c.coupling = g;
            p.labels.push_back("gamma=" + fmtg(g));
            p.curves.push_back(c);
        }
    } else if (name == "fig3" || name == "fig5") {
        const double temps[3] = {0.1, 0.1, 1.0};
        const double gaps[3] = {3.0, 2.0, 3.0};
        const int ncurves = name == "fig3" ? 3 : 1;
        for (int i = 0; i < ncurves; ++i) {
            auto c = work2_base();
            c.bath_temp = temps[i];
            c.coupling = 0.1;
            c.spin_gap = gaps[i];
            c.sz0 = -0.01;
            c.pulse1 = "rot:-90:x";
            c.pulse2 = "rot:-90:y";
            p.labels.push_back("T=" + fmtg(temps[i]) + ";eps=" + fmtg(gaps[i]));
            p.curves.push_back(c);
        }
    } else if (name == "fig4") {
        p.labels.push_back("sz0=-0.8");
        p.curves.push_back(work2_base());
    } else if (name == "fig6") {
        for (double T : {10.0, 5.0, 1.0, 0.5}) {
            RunConfig c;
            c.subcommand = "echo3";
            c.bath_temp = T;
            c.spin_temp = 1000.0;
            c.disorder_var = 100.0;
            c.mean_gap = 8.0;
            c.coupling = 0.1;
            c.cutoff = 1.0;
            c.pulse1 = "rot:90:x";
            c.pulse2 = "rot:-90:y";
            p.labels.push_back("T=" + fmtg(T));
            p.curves.push_back(c);
        }
    } else {
        throw ConfigError("unknown preset '" + name + "' (fig1..fig6)");
    }
    return p;
}

// Runs every curve of a preset into one CSV with a leading label column.
inline std::string run_preset(const std::string& name) {
    const Preset p = preset(name);
    std::string out;
    for (std::size_t i = 0; i < p.curves.size(); ++i) {
        const auto& c = p.curves[i];
        const std::string csv =
            c.subcommand == "work2" ? cmd_work2(c) : cmd_echo3(c);
        std::stringstream ss(csv);
        std::string line;
        bool header = true;
        while (std::getline(ss, line)) {
            if (header) {
                if (i == 0) out += "label," + line + "\n";
                header = false;
            } else {
                out += p.labels[i] + "," + line + "\n";
            }
        }
    }
    return out;
}

}  // namespace spinwork
