// Acceptance suite: one criterion per section, each printing a PASS/FAIL line
// with the measured numbers. Run with no arguments for the full battery or
// with criterion numbers (1..11) to select. Exit code 0 iff every selected
// strict criterion passed (criterion 10 is soft and only warns).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "spinwork/disorder.hpp"
#include "spinwork/oracle.hpp"
#include "spinwork/sweep.hpp"
#include "spinwork/thermo.hpp"
#include "spinwork/verify.hpp"
#include "spinwork/work.hpp"

#include "../support/kernel_oracles.hpp"

using namespace spinwork;
namespace orc = spinwork::oracle;

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Outcome {
    bool pass = true;
    bool soft = false;
    std::string detail;
};

double now_s() {
    using clock = std::chrono::steady_clock;
    static const auto t0 = clock::now();
    return std::chrono::duration<double>(clock::now() - t0).count();
}

KernelSet ohmic(double g, double gc, double T) {
    return KernelSet(SpectralDensity::ohmic(g, gc), T);
}

PulseUnitary random_pulse(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> uang(0.0, 2.0 * kPi);
    std::uniform_real_distribution<double> uth(0.0, kPi / 2.0);
    return PulseUnitary::from_euler(uang(rng), uang(rng), uth(rng));
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

// shared 3-mode bath for criteria 3 and 4
orc::FiniteBathSpec three_mode_spec() {
    orc::FiniteBathSpec spec;
    spec.modes = {{0.22, 1.00}, {0.15, 1.57}, {0.10, 2.31}};
    spec.bath_temp = 0.25;
    spec.spin_temp = 0.80;
    spec.spin_gap = 0.65;
    spec.tail_tol = 1e-12;
    spec.cutoffs = orc::suggest_cutoffs(spec.modes, spec.bath_temp, 1e-12, 4);
    return spec;
}

double min_w_two_pulse(const SystemConfig& sys, const PulseCoefficients& p1,
                       const PulseCoefficients& p2, int npts = 2000) {
    double best = 1e300;
    for (int i = 1; i <= npts; ++i) {
        const double tau = 20.0 * i / npts;
        best = std::min(best, work_two_pulse(sys, p1, p2, tau).dimensionless);
    }
    return best;
}

// ---- criterion 1: kernel closed forms vs quadrature -------------------------
Outcome criterion1() {
    Outcome out;
    {
        const double g = 0.7, gc = 1.3, T = 1.3e-4;
        const double want = g * gc * gc + g * kPi * kPi * T * T / 3.0;
        const double got = ohmic(g, gc, T).noise_kernel(0.0);
        const double rel = std::abs(got - want) / want;
        if (rel > 1e-10) {
            out.pass = false;
            out.detail += " K(0) identity rel=" + fmt(rel);
        }
    }
    std::mt19937_64 rng(811);
    std::uniform_real_distribution<double> ug(0.1, 2.0), ugc(0.5, 2.0),
        uT(0.0, 3.0), uu(0.05, 20.0);
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
        const double g = ug(rng), gc = ugc(rng), T = uT(rng);
        const swtest::OhmicQuad q{g, gc, T};
        const auto ks = ohmic(g, gc, T);
        double t = uu(rng) / gc;
        double kref = q.K(t);
        // keep clear of the isolated zero crossings of K, where a pointwise
        // relative comparison is meaningless
        while (std::abs(kref) < 1e-4 * q.K(0.0)) {
            t = uu(rng) / gc;
            kref = q.K(t);
        }
        worst = std::max(worst, std::abs(ks.noise_kernel(t) - kref) / std::abs(kref));
        const double xr = q.xi(t);
        worst = std::max(worst, std::abs(ks.xi(t) - xr) / std::abs(xr));
        const double xdr = q.xi_dot(t);
        worst = std::max(worst, std::abs(ks.xi_dot(t) - xdr) / std::abs(xdr));
        const double gr = q.G(t);
        worst = std::max(worst, std::abs(ks.backreaction_g(t) - gr) / gr);
        const double fr = q.F(t);
        worst = std::max(worst, std::abs(ks.backreaction_f(t) - fr) / fr);
    }
    out.detail += " quadrature max_rel=" + fmt(worst) + " (tol 1e-8)";
    if (worst > 1e-8) out.pass = false;
    return out;
}

// ---- criterion 2: asymptotic T2 rates ---------------------------------------
Outcome criterion2() {
    Outcome out;
    const double g = 1.0;
    {
        const double T = 0.01;
        const auto ks = ohmic(g, 1.0, T);
        const double slope = (ks.xi(10.0 / T) - ks.xi(5.0 / T)) / (5.0 / T);
        const double rel = std::abs(slope / (g * kPi * T) - 1.0);
        out.detail += " low-T slope/(g*pi*T)=" + fmt(slope / (g * kPi * T));
        if (rel > 0.01) out.pass = false;
    }
    {
        // High-T branch as specified: fitted slope on t in [5, 10]/Gc equals
        // 2 gamma T within 1%. The exact xi of this very model has tail rate
        // gamma pi T at every temperature, so the 2 gamma T target cannot be
        // met; the slope is reported against both references.
        const double T = 100.0;
        const auto ks = ohmic(g, 1.0, T);
        const double slope = (ks.xi(10.0) - ks.xi(5.0)) / 5.0;
        const double rel2 = std::abs(slope / (2.0 * g * T) - 1.0);
        out.detail += "; high-T slope/(2*g*T)=" + fmt(slope / (2.0 * g * T)) +
                      " slope/(g*pi*T)=" + fmt(slope / (g * kPi * T)) +
                      " [window 5..10/Gc]";
        const double slope_late = (ks.xi(10.0 / T) - ks.xi(5.0 / T)) / (5.0 / T);
        out.detail += " alt-window[5..10/T] slope/(2*g*T)=" +
                      fmt(slope_late / (2.0 * g * T));
        if (rel2 > 0.01) out.pass = false;
    }
    return out;
}

// ---- criterion 3: oracle equivalence, two pulses ----------------------------
Outcome criterion3() {
    Outcome out;
    const auto spec = three_mode_spec();
    const orc::FiniteBathModel model(spec);
    const KernelSet ks(SpectralDensity::discrete(spec.modes), spec.bath_temp);
    const auto cfg = SystemConfig::with_spin_temperature(spec.spin_gap,
                                                         spec.spin_temp, ks);
    std::mt19937_64 rng(90210);
    std::uniform_real_distribution<double> ut(0.4, 2.5), utau(0.25, 2.0);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        const auto u1 = random_pulse(rng), u2 = random_pulse(rng);
        const double t = ut(rng), tau = utau(rng);
        const auto res = orc::run_sequence(
            model, orc::initial_state(model, orc::InitialKind::Factorized),
            {{t, u1}, {tau, u2}});
        const auto b = work_two_pulse(cfg, coefficients(u1), coefficients(u2),
                                      tau, PrepTime(t));
        const double wtot = res.works[0] + res.works[1];
        worst = std::max(worst,
                         std::abs(wtot - b.total) / std::max(1.0, std::abs(b.total)));
        for (int k = 0; k < 2; ++k)
            worst = std::max(worst, std::abs(res.works[k] - b.per_pulse[k]) /
                                        std::max(1.0, std::abs(b.total)));
    }
    out.detail = " max|dW|/max(1,|W|)=" + fmt(worst) + " over 20 cases (tol 1e-8)";
    out.pass = worst <= 1e-8;
    return out;
}

// ---- criterion 4: oracle equivalence, spin echo ------------------------------
Outcome criterion4() {
    Outcome out;
    const auto spec = three_mode_spec();
    const orc::FiniteBathModel model(spec);
    const KernelSet ks(SpectralDensity::discrete(spec.modes), spec.bath_temp);
    const auto cfg = SystemConfig::with_spin_temperature(spec.spin_gap,
                                                         spec.spin_temp, ks);
    std::mt19937_64 rng(424242);
    std::uniform_real_distribution<double> ut(0.4, 2.0), utau(0.25, 1.5);
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) {
        const auto u1 = random_pulse(rng), u2 = random_pulse(rng);
        const double t = ut(rng), tau = utau(rng);
        const auto res = orc::run_sequence(
            model, orc::initial_state(model, orc::InitialKind::Factorized),
            {{t, u1}, {tau, PulseUnitary::pi_pulse()}, {tau, u2}});
        const auto b =
            work_echo_finite_t(cfg, coefficients(u1), coefficients(u2), tau, t);
        const double wtot = res.works[0] + res.works[1] + res.works[2];
        worst = std::max(worst,
                         std::abs(wtot - b.total) / std::max(1.0, std::abs(b.total)));
        for (int k = 0; k < 3; ++k)
            worst = std::max(worst, std::abs(res.works[k] - b.per_pulse[k]) /
                                        std::max(1.0, std::abs(b.total)));
    }
    out.detail = " max|dW|/max(1,|W|)=" + fmt(worst) + " over 10 cases (tol 1e-7)";
    out.pass = worst <= 1e-7;
    return out;
}

// ---- criterion 5: Pi correlators ---------------------------------------------
Outcome criterion5() {
    Outcome out;
    orc::FiniteBathSpec spec;
    spec.modes = {{0.20, 1.00}, {0.13, 1.61}};
    spec.bath_temp = 0.30;
    spec.spin_temp = 1.0;
    spec.spin_gap = 0.5;
    spec.tail_tol = 1e-12;
    spec.cutoffs = orc::suggest_cutoffs(spec.modes, spec.bath_temp, 1e-12, 4);
    const orc::FiniteBathModel model(spec);
    const KernelSet ks(SpectralDensity::discrete(spec.modes), spec.bath_temp);
    std::mt19937_64 rng(5150);
    std::uniform_real_distribution<double> utt(0.0, 4.0);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        double ts[4] = {utt(rng), utt(rng), utt(rng), utt(rng)};
        std::sort(ts, ts + 4);
        const int s = (i % 2 == 0) ? +1 : -1;
        auto up = [&](Complex got, Complex ref) {
            worst = std::max(worst, std::abs(got - ref) / std::abs(ref));
        };
        up(orc::pi_average(model, s, ts[0], ts[1]),
           pi_average_formula(ks, ts[0], ts[1]));
        up(orc::eta_pi(model, ts[2], s, ts[0], ts[1]),
           eta_pi_formula(ks, s, ts[2], ts[0], ts[1]));
        up(orc::pi_eta(model, s, ts[0], ts[1], ts[2]),
           pi_eta_formula(ks, s, ts[0], ts[1], ts[2]));
        up(orc::pi_pi(model, s, ts[2], ts[3], ts[0], ts[1]),
           pi_pi_formula(ks, ts[0], ts[1], ts[2], ts[3]));
    }
    out.detail = " max rel err=" + fmt(worst) + " over 20 tuples x 4 kinds (tol 1e-8)";
    out.pass = worst <= 1e-8;
    return out;
}

// ---- criterion 6: Thomson + Carnot/restrictions on all figure sweeps ---------
Outcome criterion6() {
    Outcome out;
    std::mt19937_64 rng(112358);
    std::uniform_real_distribution<double> ug(0.05, 3.0), uT(0.05, 20.0),
        ue(0.005, 4.0), utau(1e-3, 20.0);
    double worst_w = 1e300;
    for (int i = 0; i < 1000; ++i) {
        const double T = uT(rng);
        const auto sys =
            SystemConfig::with_spin_temperature(ue(rng), T, ohmic(ug(rng), 1.0, T));
        const auto b = work_two_pulse(sys, coefficients(random_pulse(rng)),
                                      coefficients(random_pulse(rng)), utau(rng));
        worst_w = std::min(worst_w, b.total);
    }
    out.detail = " Thomson min W=" + fmt(worst_w);
    if (worst_w < -1e-12) out.pass = false;

    // Carnot and both restriction slacks across the figure-regime sweeps
    double worst_slack = 1e300, worst_carnot_gap = 1e300;
    auto scan_work2 = [&](const RunConfig& rc) {
        const auto [sz, ts] = detail_sweep::resolve_spin_state(rc);
        const auto sys = SystemConfig::with_sz0(
            rc.spin_gap, sz, ohmic(rc.coupling, rc.cutoff, rc.bath_temp));
        const auto p1 = coefficients(parse_pulse(rc.pulse1));
        const auto p2 = coefficients(parse_pulse(rc.pulse2));
        for (double tau : rc.grid.points()) {
            const auto rep =
                efficiency(work_two_pulse(sys, p1, p2, tau), rc.bath_temp, ts);
            worst_slack = std::min({worst_slack, rep.slack_spin, rep.slack_bath});
            if (rep.extraction)
                worst_carnot_gap = std::min(worst_carnot_gap, rep.carnot - rep.eta);
        }
    };
    auto scan_echo3 = [&](const RunConfig& rc) {
        const auto ks = ohmic(rc.coupling, rc.cutoff, rc.bath_temp);
        const auto dm = DisorderModel::make(rc.mean_gap, rc.disorder_var,
                                            *rc.spin_temp);
        const auto mom = ensemble_moments(dm);
        const auto p1 = coefficients(parse_pulse(rc.pulse1));
        const auto p2 = coefficients(parse_pulse(rc.pulse2));
        for (double tau : rc.grid.points()) {
            const auto rep = efficiency(
                work_echo_ensemble(ks, mom, rc.mean_gap, p1, p2, tau),
                rc.bath_temp, *rc.spin_temp);
            worst_slack = std::min({worst_slack, rep.slack_spin, rep.slack_bath});
            if (rep.extraction)
                worst_carnot_gap = std::min(worst_carnot_gap, rep.carnot - rep.eta);
        }
    };
    for (const char* name : {"fig1", "fig2", "fig3"})
        for (auto rc : preset(name).curves) scan_work2(rc);
    for (auto rc : preset("fig6").curves) scan_echo3(rc);
    out.detail += "; min slack=" + fmt(worst_slack) +
                  " min (carnot-eta)=" + fmt(worst_carnot_gap);
    if (worst_slack < -1e-12 || worst_carnot_gap < -1e-12) out.pass = false;
    return out;
}

// ---- criterion 7: figure 1 / figure 2 regimes --------------------------------
Outcome criterion7() {
    Outcome out;
    const auto p1 = coefficients(PulseUnitary::rotation(kPi / 2, Axis::Y));
    const auto p2 = coefficients(PulseUnitary::rotation(kPi / 2, Axis::X));
    std::vector<double> mins;
    for (double sz : {-0.8, -0.5, -0.4, -0.3}) {
        const auto sys = SystemConfig::with_sz0(0.01, sz, ohmic(1.0, 1.0, 10.0));
        mins.push_back(min_w_two_pulse(sys, p1, p2));
    }
    out.detail = " fig1 min_w:";
    for (double m : mins) out.detail += " " + fmt(m);
    if (!(mins[0] < 0.0)) out.pass = false;
    for (std::size_t i = 1; i < mins.size(); ++i)
        if (!(mins[i] >= mins[i - 1])) out.pass = false;

    std::vector<double> maxext;
    for (double g : {0.1, 0.5, 2.0, 4.0}) {
        const auto sys = SystemConfig::with_sz0(0.01, -0.8, ohmic(g, 1.0, 10.0));
        double best = 1e300;
        for (int i = 1; i <= 2000; ++i)
            best = std::min(best,
                            work_two_pulse(sys, p1, p2, 20.0 * i / 2000.0).total);
        maxext.push_back(std::max(0.0, -best));
    }
    out.detail += "; fig2 max|W| over gamma:";
    for (double m : maxext) out.detail += " " + fmt(m);
    bool nondec = true, noninc = true;
    for (std::size_t i = 1; i < maxext.size(); ++i) {
        nondec = nondec && maxext[i] >= maxext[i - 1];
        noninc = noninc && maxext[i] <= maxext[i - 1];
    }
    if (nondec || noninc) out.pass = false;  // must be non-monotonic
    return out;
}

// ---- criterion 8: figure 3 regime ---------------------------------------------
Outcome criterion8() {
    Outcome out;
    const auto p1 = coefficients(PulseUnitary::rotation(-kPi / 2, Axis::X));
    const auto p2 = coefficients(PulseUnitary::rotation(-kPi / 2, Axis::Y));
    const auto sys_big =
        SystemConfig::with_sz0(3.0, -0.01, ohmic(0.1, 1.0, 0.1));
    const double w_big = min_w_two_pulse(sys_big, p1, p2, 4000);
    const auto sys_small =
        SystemConfig::with_sz0(0.01, -0.01, ohmic(0.1, 1.0, 0.1));
    const double w_small = min_w_two_pulse(sys_small, p1, p2, 4000);
    out.detail = " min_w(eps=3)=" + fmt(w_big) +
                 " min_w(eps=0.01)=" + fmt(w_small);
    out.pass = w_big < 0.0 && w_small >= 0.0;
    return out;
}

// ---- criterion 9: figure 6 echo regime -----------------------------------------
Outcome criterion9() {
    Outcome out;
    const auto p1 = coefficients(PulseUnitary::rotation(kPi / 2, Axis::X));
    const auto p2 = coefficients(PulseUnitary::rotation(-kPi / 2, Axis::Y));
    const auto dm = DisorderModel::make(8.0, 100.0, 1000.0);
    const auto mom = ensemble_moments(dm);
    std::vector<double> mins;
    for (double T : {10.0, 5.0, 1.0, 0.5}) {
        const auto ks = ohmic(0.1, 1.0, T);
        double best = 1e300;
        for (int i = 1; i <= 2000; ++i)
            best = std::min(best, work_echo_ensemble(ks, mom, 8.0, p1, p2,
                                                     20.0 * i / 2000.0)
                                      .dimensionless);
        mins.push_back(best);
    }
    out.detail = " min_w by T {10,5,1,0.5}:";
    for (double m : mins) out.detail += " " + fmt(m);
    // extraction must exist at T/Gc = 10 per the criterion; the validated
    // formulas put the extraction window at the colder baths instead
    if (!(mins[0] < 0.0)) {
        out.pass = false;
        out.detail += " [no extraction at T=10]";
    }
    for (std::size_t i = 1; i < mins.size(); ++i)
        if (!(mins[i] <= mins[i - 1])) {
            out.pass = false;
            out.detail += " [ordering violated]";
        }
    const auto ks = ohmic(0.1, 1.0, 10.0);
    double worst_avg = 1e300;
    for (double tsd : {10.0, 13.0, 16.0, 20.0}) {
        const double tau = tsd / std::sqrt(dm.variance);
        worst_avg =
            std::min(worst_avg, averaged_two_pulse_work(dm, ks, p1, p2, tau));
    }
    out.detail += "; dephased two-pulse min=" + fmt(worst_avg);
    if (worst_avg < -1e-10) out.pass = false;
    return out;
}

// ---- criterion 10 (soft): efficiency co-location -------------------------------
Outcome criterion10() {
    Outcome out;
    out.soft = true;
    auto ratio = [](const SystemConfig& sys, const PulseCoefficients& p1,
                    const PulseCoefficients& p2, double T, double ts) {
        double best_w = 1e300, eta_at_best = 0.0, eta_max = 0.0;
        for (int i = 1; i <= 4000; ++i) {
            const double tau = 20.0 * i / 4000.0;
            const auto b = work_two_pulse(sys, p1, p2, tau);
            const auto rep = efficiency(b, T, ts);
            eta_max = std::max(eta_max, rep.eta);
            if (b.total < best_w) {
                best_w = b.total;
                eta_at_best = rep.eta;
            }
        }
        return eta_max > 0.0 ? eta_at_best / eta_max : 1.0;
    };
    const auto y90 = coefficients(PulseUnitary::rotation(kPi / 2, Axis::Y));
    const auto x90 = coefficients(PulseUnitary::rotation(kPi / 2, Axis::X));
    const auto sys4 = SystemConfig::with_sz0(0.01, -0.8, ohmic(1.0, 1.0, 10.0));
    const double r4 = ratio(sys4, y90, x90, 10.0, sys4.spin_temperature());
    const auto xm90 = coefficients(PulseUnitary::rotation(-kPi / 2, Axis::X));
    const auto ym90 = coefficients(PulseUnitary::rotation(-kPi / 2, Axis::Y));
    const auto sys5 = SystemConfig::with_sz0(3.0, -0.01, ohmic(0.1, 1.0, 0.1));
    const double r5 = ratio(sys5, xm90, ym90, 0.1, sys5.spin_temperature());
    out.detail = " eta(argmin W)/max eta: fig4=" + fmt(r4) + " fig5=" + fmt(r5) +
                 " (soft threshold 0.9)";
    out.pass = r4 >= 0.9 && r5 >= 0.9;
    return out;
}

// ---- criterion 11: determinism ---------------------------------------------------
Outcome criterion11() {
    Outcome out;
    const auto a1 = run_preset("fig1");
    const auto a2 = run_preset("fig1");
    const auto b1 = run_preset("fig6");
    const auto b2 = run_preset("fig6");
    out.pass = (a1 == a2) && (b1 == b2);
    out.detail = " fig1 bytes=" + std::to_string(a1.size()) +
                 " fig6 bytes=" + std::to_string(b1.size()) +
                 (out.pass ? " identical across repeated runs"
                           : " MISMATCH between repeated runs");
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    std::set<int> selected;
    for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));
    const struct {
        int id;
        const char* name;
        Outcome (*fn)();
        double budget_s;
    } table[] = {
        {1, "kernel closed forms vs quadrature", criterion1, 10.0},
        {2, "asymptotic T2 rates", criterion2, 10.0},
        {3, "oracle equivalence, two pulses", criterion3, 300.0},
        {4, "oracle equivalence, spin echo", criterion4, 300.0},
        {5, "Pi correlators vs oracle", criterion5, 120.0},
        {6, "Thomson / Carnot / restrictions", criterion6, 0.0},
        {7, "figure 1-2 regimes", criterion7, 0.0},
        {8, "figure 3 regime", criterion8, 0.0},
        {9, "figure 6 echo regime", criterion9, 0.0},
        {10, "efficiency co-location (soft)", criterion10, 0.0},
        {11, "deterministic CSV", criterion11, 0.0},
    };
    bool all_pass = true;
    for (const auto& row : table) {
        if (!selected.empty() && !selected.count(row.id)) continue;
        const double t0 = now_s();
        Outcome o;
        try {
            o = row.fn();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string(" exception: ") + e.what();
        }
        const double dt = now_s() - t0;
        if (row.budget_s > 0.0 && dt > row.budget_s) {
            o.pass = false;
            o.detail += " [over runtime budget " + fmt(row.budget_s) + "s]";
        }
        const char* tag = o.pass ? "PASS" : (o.soft ? "WARN" : "FAIL");
        std::printf("criterion %2d [%s] %s:%s (%.1fs)\n", row.id, tag, row.name,
                    o.detail.c_str(), dt);
        std::fflush(stdout);
        if (!o.pass && !o.soft) all_pass = false;
    }
    return all_pass ? 0 : 1;
}
