// disorder.hpp — gaussian frequency disorder over an ensemble of spins.
//
// P(Omega) = exp(-(Omega-Omega_0)^2 / 2d) / sqrt(2 pi d). Ensemble averages
// use Gauss-Hermite quadrature with Omega = Omega_0 + sqrt(2d) x; the node
// count doubles until the result is stable to 1e-10 relative. The gaussian
// is left unclipped: negative-Omega tail included as-is.

#pragma once

#include <cmath>
#include <limits>
#include <utility>

#include "spinwork/quadrature.hpp"
#include "spinwork/work.hpp"

namespace spinwork {

struct DisorderModel {
    double mean_gap;   // Omega_0
    double variance;   // d >= 0 (frequency^2)
    double spin_temp;  // T_S > 0

    static DisorderModel make(double mean_gap, double variance, double spin_temp) {
        if (!(variance >= 0.0))
            throw DomainError("DisorderModel: variance must be >= 0");
        if (!(spin_temp > 0.0))
            throw DomainError("DisorderModel: spin temperature must be > 0");
        return DisorderModel{mean_gap, variance, spin_temp};
    }
};

struct T2Star {
    double value;
    bool infinite;  // d = 0: no inhomogeneous dephasing
};

inline T2Star t2_star(const DisorderModel& dm) {
    if (dm.variance == 0.0) return {std::numeric_limits<double>::infinity(), true};
    return {1.0 / std::sqrt(dm.variance), false};
}

namespace detail_disorder {

inline constexpr double kSqrtPi = 1.7724538509055160273;
inline constexpr int kMinNodes = 64;
inline constexpr int kMaxNodes = 1024;

// <f(Omega)>_P at a fixed node count.
template <typename F>
auto gh_average(const DisorderModel& dm, int n, F&& f) {
    const auto rule = gauss_hermite(n);
    const double width = std::sqrt(2.0 * dm.variance);
    using R = decltype(f(0.0));
    R acc{};
    for (int i = 0; i < n; ++i) {
        const std::size_t k = static_cast<std::size_t>(i);
        acc += f(dm.mean_gap + width * rule.nodes[k]) * rule.weights[k];
    }
    return acc * (1.0 / kSqrtPi);
}

// Doubles nodes until consecutive estimates agree to 1e-10 relative.
template <typename F, typename Dist>
auto converged_average(const DisorderModel& dm, F&& f, Dist&& distance) {
    auto prev = gh_average(dm, kMinNodes, f);
    for (int n = 2 * kMinNodes; n <= kMaxNodes; n *= 2) {
        auto cur = gh_average(dm, n, f);
        if (distance(prev, cur) <= 1e-10) return cur;
        prev = cur;
    }
    throw QuadratureNotConvergedError(
        "disorder average did not stabilize under node doubling");
}

}  // namespace detail_disorder

// E = -(1/2) <Omega tanh(Omega / 2 T_S)>_P and m = -<tanh(Omega / 2 T_S)>_P.
inline EnsembleMoments ensemble_moments(const DisorderModel& dm) {
    if (std::isinf(dm.spin_temp)) return {0.0, 0.0};
    auto th = [&](double om) { return std::tanh(om / (2.0 * dm.spin_temp)); };
    if (dm.variance == 0.0)
        return {-0.5 * dm.mean_gap * th(dm.mean_gap), -th(dm.mean_gap)};
    struct EM {
        double e, m;
        EM operator+(const EM& o) const { return {e + o.e, m + o.m}; }
        EM& operator+=(const EM& o) { e += o.e; m += o.m; return *this; }
        EM operator*(double s) const { return {e * s, m * s}; }
    };
    auto f = [&](double om) { return EM{-0.5 * om * th(om), -th(om)}; };
    auto dist = [](const EM& a, const EM& b) {
        const double scale =
            std::max({std::abs(b.e), std::abs(b.m), 1e-16});
        return std::max(std::abs(a.e - b.e), std::abs(a.m - b.m)) / scale;
    };
    const auto em = detail_disorder::converged_average(dm, f, dist);
    return {em.e, em.m};
}

// <W_two_pulse(Omega)>_P with eps = Omega and sz0 = -tanh(Omega / 2 T_S)
// pointwise. The work splits into a smooth part and Re(C(Omega) e^{i Omega
// tau}); the oscillatory piece is averaged on the shifted contour
// Omega -> Omega + i d tau, where the phase factor becomes the explicit
// damping e^{-d tau^2 / 2} and the integrand is smooth again. Everything is
// entire in Omega apart from the tanh poles at i pi T_S (1 + 2k), so the
// shift is legitimate while d tau < pi T_S; past that the plain real-axis
// average is used.
inline double averaged_two_pulse_work(const DisorderModel& dm,
                                      const KernelSet& kernels,
                                      const PulseCoefficients& p1,
                                      const PulseCoefficients& p2, double tau) {
    if (!(tau > 0.0))
        throw DomainError("averaged_two_pulse_work: tau must be > 0");
    auto sz_of = [&](Complex om) { return -std::tanh(om / (2.0 * dm.spin_temp)); };
    auto work_at = [&](double om) {
        // aggregate init bypasses the eps > 0 gate of with_sz0: the gaussian
        // tail legitimately reaches om <= 0
        const SystemConfig cfg{om, std::real(sz_of(om)), kernels};
        return work_two_pulse(cfg, p1, p2, tau).total;
    };
    if (dm.variance == 0.0) return work_at(dm.mean_gap);

    const auto terms = detail_work::two_pulse_terms(kernels, tau, kErgodic);
    auto dist_r = [](double a, double b) {
        return std::abs(a - b) / std::max(std::abs(b), 1e-14);
    };
    const double shift = dm.variance * tau;
    const bool contour_ok =
        shift < 0.9 * 3.14159265358979323846 * dm.spin_temp;
    if (!contour_ok) {
        // rare corner (very cold ensemble): fall back to the direct average
        return detail_disorder::converged_average(dm, work_at, dist_r);
    }

    auto static_at = [&](double om) {
        return detail_work::two_pulse_static_part(terms, p1, p2, om,
                                                  std::real(sz_of(om)));
    };
    const double smooth = detail_disorder::converged_average(dm, static_at, dist_r);

    const double damp_exp = -0.5 * dm.variance * tau * tau;
    if (damp_exp < -745.0) return smooth;  // oscillatory part underflows

    auto amp_at = [&](double u) {
        const Complex om(u, shift);
        return detail_work::two_pulse_osc_amplitude(terms, p1, p2, om,
                                                    sz_of(om));
    };
    auto dist_c = [](Complex a, Complex b) {
        return std::abs(a - b) / std::max(std::abs(b), 1e-14);
    };
    const Complex amp_avg =
        detail_disorder::converged_average(dm, amp_at, dist_c);
    const Complex phase =
        std::exp(Complex(damp_exp, dm.mean_gap * tau));
    return smooth + std::real(phase * amp_avg);
}

}  // namespace spinwork
