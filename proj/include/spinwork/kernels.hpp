// kernels.hpp — bath spectral densities and the derived time kernels.
//
// Natural units hbar = k_B = 1 throughout: energies and frequencies share one
// unit, times its reciprocal. The ohmic spectrum is J(w) = gamma w e^{-w/Gc};
// a discrete bath is a list of (g_k, w_k) with J(w) = sum g_k^2 delta(w-w_k).
//
// Kernels:
//   K(t)   symmetrized noise correlator  sum g^2 coth(w/2T) cos(wt)
//   xi(t)  decoherence exponent, xi'' = K, xi(0) = xi'(0) = 0
//   G(t)   backreaction   sum (g^2/w)(1 - cos wt)
//   F(t)   int_0^t G
// plus the pulse-sequence factors g2, chi2, g3, chi3. Ohmic evaluation goes
// through the closed forms built on complex digamma/trigamma; discrete baths
// use the exact per-mode sums.

#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "spinwork/complex_gamma.hpp"
#include "spinwork/errors.hpp"
#include "spinwork/quadrature.hpp"

namespace spinwork {

struct DiscreteMode {
    double g;      // coupling (frequency units)
    double omega;  // mode frequency, > 0
};

struct OhmicSpectrum {
    double coupling;  // gamma, dimensionless, >= 0
    double cutoff;    // Gc, > 0
};

class SpectralDensity {
  public:
    static SpectralDensity ohmic(double coupling, double cutoff) {
        if (!(coupling >= 0.0))
            throw DomainError("SpectralDensity: ohmic coupling must be >= 0");
        if (!(cutoff > 0.0))
            throw DomainError("SpectralDensity: ohmic cutoff must be > 0");
        return SpectralDensity(OhmicSpectrum{coupling, cutoff});
    }

    static SpectralDensity discrete(std::vector<DiscreteMode> modes) {
        if (modes.empty())
            throw DomainError("SpectralDensity: discrete mode list is empty");
        for (const auto& m : modes)
            if (!(m.omega > 0.0))
                throw DomainError("SpectralDensity: mode frequencies must be > 0");
        return SpectralDensity(std::move(modes));
    }

    // Gauss-Laguerre discretization of the ohmic spectrum into n modes:
    // w_k = Gc x_k, g_k^2 = gamma Gc^2 w_k x_k with (x_k, w_k) the rule for
    // weight e^{-x}. Reproduces the continuum kernels for t*Gc not too large.
    static SpectralDensity discretized_ohmic(double coupling, double cutoff, int n) {
        const QuadratureRule rule = gauss_laguerre(n);
        std::vector<DiscreteMode> modes(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k) {
            const double x = rule.nodes[static_cast<std::size_t>(k)];
            const double w = rule.weights[static_cast<std::size_t>(k)];
            modes[static_cast<std::size_t>(k)] = {
                std::sqrt(coupling * cutoff * cutoff * w * x), cutoff * x};
        }
        return discrete(std::move(modes));
    }

    bool is_ohmic() const { return std::holds_alternative<OhmicSpectrum>(spec_); }
    const OhmicSpectrum& ohmic_params() const {
        return std::get<OhmicSpectrum>(spec_);
    }
    const std::vector<DiscreteMode>& modes() const {
        return std::get<std::vector<DiscreteMode>>(spec_);
    }

  private:
    explicit SpectralDensity(OhmicSpectrum s) : spec_(s) {}
    explicit SpectralDensity(std::vector<DiscreteMode> m) : spec_(std::move(m)) {}
    std::variant<OhmicSpectrum, std::vector<DiscreteMode>> spec_;
};

struct DecayRegimeReport {
    enum class Regime { PowerLaw, Gaussian, Exponential };
    Regime regime;
    double t2;           // transverse decay time (tail scale)
    bool capped;         // true when the spin is effectively decoupled
    std::string description;
};

class KernelSet {
  public:
    KernelSet(SpectralDensity spectral, double temperature)
        : spectral_(std::move(spectral)), temp_(temperature) {
        if (!(temperature >= 0.0))
            throw DomainError("KernelSet: temperature must be >= 0");
    }

    const SpectralDensity& spectral() const { return spectral_; }
    double temperature() const { return temp_; }

    // K(t); even in t, defined for all t.
    double noise_kernel(double t) const {
        if (!std::isfinite(t)) throw DomainError("noise_kernel: non-finite t");
        if (spectral_.is_ohmic()) {
            const auto& [g, gc] = spectral_.ohmic_params();
            const double u = gc * t;
            const double lorentz =
                g * gc * gc * (1.0 - u * u) / ((1.0 + u * u) * (1.0 + u * u));
            if (temp_ == 0.0) return lorentz;
            const Complex a(1.0 + temp_ / gc, temp_ * t);
            return lorentz + 2.0 * g * temp_ * temp_ * trigamma(a).real();
        }
        double sum = 0.0;
        for (const auto& m : spectral_.modes())
            sum += m.g * m.g * coth_half(m.omega) * std::cos(m.omega * t);
        return sum;
    }

    // xi(t), t >= 0
    double xi(double t) const {
        require_time(t, "xi");
        if (spectral_.is_ohmic()) {
            const auto& [g, gc] = spectral_.ohmic_params();
            const double u = gc * t;
            if (temp_ == 0.0) return 0.5 * g * std::log1p(u * u);
            const double a = 1.0 + temp_ / gc;
            const double lg_real = log_gamma(Complex(a, 0.0)).real();
            const double lg_shift = log_gamma(Complex(a, temp_ * t)).real();
            return g * (2.0 * lg_real + 0.5 * std::log1p(u * u) - 2.0 * lg_shift);
        }
        double sum = 0.0;
        for (const auto& m : spectral_.modes())
            sum += m.g * m.g * coth_half(m.omega) * (1.0 - std::cos(m.omega * t)) /
                   (m.omega * m.omega);
        return sum;
    }

    // xi'(t) = int_0^t K
    double xi_dot(double t) const {
        require_time(t, "xi_dot");
        if (spectral_.is_ohmic()) {
            const auto& [g, gc] = spectral_.ohmic_params();
            const double u = gc * t;
            const double stat = g * gc * u / (1.0 + u * u);
            if (temp_ == 0.0) return stat;
            const Complex a(1.0 + temp_ / gc, temp_ * t);
            return stat + 2.0 * g * temp_ * digamma(a).imag();
        }
        double sum = 0.0;
        for (const auto& m : spectral_.modes())
            sum += m.g * m.g * coth_half(m.omega) * std::sin(m.omega * t) / m.omega;
        return sum;
    }

    double backreaction_g(double t) const {
        require_time(t, "backreaction_g");
        if (spectral_.is_ohmic()) {
            const auto& [g, gc] = spectral_.ohmic_params();
            const double u = gc * t;
            return g * gc * (1.0 - 1.0 / (1.0 + u * u));
        }
        double sum = 0.0;
        for (const auto& m : spectral_.modes())
            sum += m.g * m.g / m.omega * (1.0 - std::cos(m.omega * t));
        return sum;
    }

    double backreaction_f(double t) const {
        require_time(t, "backreaction_f");
        if (spectral_.is_ohmic()) {
            const auto& [g, gc] = spectral_.ohmic_params();
            return g * (gc * t - std::atan(gc * t));
        }
        double sum = 0.0;
        for (const auto& m : spectral_.modes())
            sum += m.g * m.g / m.omega * (t - std::sin(m.omega * t) / m.omega);
        return sum;
    }

    // G as t -> infinity for ohmic; sum g^2/w for discrete baths.
    double g_inf() const {
        if (spectral_.is_ohmic()) {
            const auto& [g, gc] = spectral_.ohmic_params();
            return g * gc;
        }
        double sum = 0.0;
        for (const auto& m : spectral_.modes()) sum += m.g * m.g / m.omega;
        return sum;
    }

    // Ergodic two-pulse backreaction factors; chi2 has no discrete analogue.
    std::pair<double, double> g2_chi2(double tau) const {
        require_time(tau, "g2_chi2");
        require_ohmic("g2_chi2");
        const auto& [g, gc] = spectral_.ohmic_params();
        return {g_inf() - backreaction_g(tau), -g * std::atan(tau * gc)};
    }

    // Ergodic spin-echo factors: g3 = G_inf - G(2 tau), chi3 = 2F(tau) - F(2 tau).
    std::pair<double, double> g3_chi3(double tau) const {
        require_time(tau, "g3_chi3");
        require_ohmic("g3_chi3");
        const auto& [g, gc] = spectral_.ohmic_params();
        return {g_inf() - backreaction_g(2.0 * tau),
                g * (std::atan(2.0 * tau * gc) - 2.0 * std::atan(tau * gc))};
    }

    // Finite-preparation-time phases.
    double chi2_finite(double tau, double t) const {
        require_time(tau, "chi2_finite");
        require_time(t, "chi2_finite");
        return backreaction_f(t) + backreaction_f(tau) - backreaction_f(t + tau);
    }

    double chi3_finite(double tau, double t) const {
        require_time(tau, "chi3_finite");
        require_time(t, "chi3_finite");
        return 2.0 * backreaction_f(tau) - backreaction_f(2.0 * tau) -
               2.0 * backreaction_f(t + tau) + backreaction_f(t) +
               backreaction_f(t + 2.0 * tau);
    }

    DecayRegimeReport decay_regimes() const {
        require_ohmic("decay_regimes");
        const auto& [g, gc] = spectral_.ohmic_params();
        DecayRegimeReport rep{};
        if (g * temp_ == 0.0) {
            rep.capped = true;
            rep.t2 = kCapSentinel;
            if (g > 0.0 && temp_ == 0.0) {
                rep.regime = DecayRegimeReport::Regime::PowerLaw;
                rep.description =
                    "T = 0: pure power-law decay (1 + Gc^2 t^2)^(-gamma/2), no "
                    "exponential tail";
            } else {
                rep.regime = DecayRegimeReport::Regime::Exponential;
                rep.description = "decoupled spin (gamma = 0): no transverse decay";
            }
            return rep;
        }
        rep.capped = false;
        if (temp_ <= gc) {
            rep.regime = DecayRegimeReport::Regime::Exponential;
            rep.t2 = 1.0 / (g * kPiConst * temp_);
            rep.description =
                "low temperature (T <= Gc): power-law prelude for t << 1/T, "
                "exponential tail with T2 = 1/(gamma pi T)";
        } else {
            rep.regime = DecayRegimeReport::Regime::Gaussian;
            rep.t2 = 1.0 / (2.0 * g * temp_);
            rep.description =
                "high temperature (T > Gc): gaussian decay on t <~ 1/Gc with "
                "scale sqrt(1/(gamma T Gc)), exponential tail reported as "
                "T2 = 1/(2 gamma T)";
        }
        return rep;
    }

  private:
    static constexpr double kPiConst = 3.14159265358979323846;
    static constexpr double kCapSentinel = 1e300;

    double coth_half(double omega) const {
        return temp_ == 0.0 ? 1.0 : 1.0 / std::tanh(omega / (2.0 * temp_));
    }

    static void require_time(double t, const char* fn) {
        if (!(t >= 0.0))
            throw DomainError(std::string(fn) + ": time must be >= 0");
    }

    void require_ohmic(const char* fn) const {
        if (!spectral_.is_ohmic())
            throw UnsupportedSpectrumError(std::string(fn) +
                                           ": needs an ohmic spectrum");
    }

    SpectralDensity spectral_;
    double temp_;
};

// ---- thermal correlators of the noise exponentials -------------------------
//
// Pi_s(t1, t2) = T exp[ s i int_{t1}^{t2} eta(u) du ], s = +-1, averaged over
// the Gibbs bath. Valid for any spectrum; arguments must be time-ordered.

// <Pi_s(t1, t2)> = exp(-xi + i F) at the interval length (s-independent).
inline Complex pi_average_formula(const KernelSet& ks, double t1, double t2) {
    if (!(t2 >= t1)) throw DomainError("pi_average_formula: need t2 >= t1");
    const double dt = t2 - t1;
    return std::exp(Complex(-ks.xi(dt), ks.backreaction_f(dt)));
}

// <eta(t3) Pi_s(t1, t2)> for t3 >= t2 >= t1.
inline Complex eta_pi_formula(const KernelSet& ks, int s, double t3, double t1,
                              double t2) {
    if (!(t3 >= t2 && t2 >= t1))
        throw DomainError("eta_pi_formula: need t3 >= t2 >= t1");
    const Complex bracket(ks.backreaction_g(t3 - t1) - ks.backreaction_g(t3 - t2),
                          ks.xi_dot(t3 - t1) - ks.xi_dot(t3 - t2));
    return static_cast<double>(s) * bracket * pi_average_formula(ks, t1, t2);
}

// <Pi_s(t1, t2) eta(t3)>: same with the sign of the G terms flipped.
inline Complex pi_eta_formula(const KernelSet& ks, int s, double t1, double t2,
                              double t3) {
    if (!(t3 >= t2 && t2 >= t1))
        throw DomainError("pi_eta_formula: need t3 >= t2 >= t1");
    const Complex bracket(ks.backreaction_g(t3 - t2) - ks.backreaction_g(t3 - t1),
                          ks.xi_dot(t3 - t1) - ks.xi_dot(t3 - t2));
    return static_cast<double>(s) * bracket * pi_average_formula(ks, t1, t2);
}

// <Pi_s(t3, t4) Pi_{-s}(t1, t2)> for t4 >= t3 >= t2 >= t1 (s-independent).
inline Complex pi_pi_formula(const KernelSet& ks, double t1, double t2, double t3,
                             double t4) {
    if (!(t4 >= t3 && t3 >= t2 && t2 >= t1))
        throw DomainError("pi_pi_formula: need t4 >= t3 >= t2 >= t1");
    const double re = -ks.xi(t2 - t1) - ks.xi(t4 - t3) - ks.xi(t4 - t2) +
                      ks.xi(t4 - t1) + ks.xi(t3 - t2) - ks.xi(t3 - t1);
    const double im = ks.backreaction_f(t2 - t1) + ks.backreaction_f(t4 - t3) +
                      ks.backreaction_f(t4 - t2) - ks.backreaction_f(t4 - t1) -
                      ks.backreaction_f(t3 - t2) + ks.backreaction_f(t3 - t1);
    return std::exp(Complex(re, im));
}

}  // namespace spinwork
