#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <random>

#include "spinwork/complex_gamma.hpp"
#include "support/special_oracles.hpp"

using spinwork::Complex;
using spinwork::digamma;
using spinwork::log_gamma;
using spinwork::trigamma;

namespace {
constexpr double kPi = 3.14159265358979323846;

double rel_err(Complex got, Complex want) {
    return std::abs(got - want) / std::max(1e-300, std::abs(want));
}
}  // namespace

TEST_CASE("log_gamma basic values and poles", "[cgamma]") {
    CHECK(std::abs(log_gamma(Complex(1.0, 0.0))) < 1e-14);
    CHECK(std::abs(log_gamma(Complex(2.0, 0.0))) < 1e-14);
    // Gamma(1/2) = sqrt(pi)
    CHECK(rel_err(std::exp(log_gamma(Complex(0.5, 0.0))), std::sqrt(kPi)) < 1e-13);

    CHECK_THROWS_AS(log_gamma(Complex(0.0, 0.0)), spinwork::PoleError);
    CHECK_THROWS_AS(log_gamma(Complex(-5.0, 0.0)), spinwork::PoleError);
    CHECK_THROWS_AS(digamma(Complex(-1.0, 0.0)), spinwork::PoleError);
    CHECK_THROWS_AS(trigamma(Complex(-2.0, 0.0)), spinwork::PoleError);
    CHECK_THROWS_AS(log_gamma(Complex(std::nan(""), 0.0)), spinwork::DomainError);
}

TEST_CASE("|Gamma(1+i)|^2 = pi/sinh(pi), both sides of the reflection identity",
          "[cgamma]") {
    // closed side
    const double closed = kPi / std::sinh(kPi);
    // library side
    const double lib = std::exp(2.0 * log_gamma(Complex(1.0, 1.0)).real());
    CHECK(rel_err(lib, closed) < 1e-12);
    // independent integral oracle
    const Complex g = swtest::gamma_integral(Complex(1.0, 1.0));
    CHECK(rel_err(std::norm(g), closed) < 1e-10);
}

TEST_CASE("gamma integral oracle agreement at generic complex points", "[cgamma]") {
    for (Complex z : {Complex(2.3, 1.7), Complex(0.7, 0.2), Complex(5.0, 5.0),
                      Complex(1.0, -3.0), Complex(9.5, 0.0)}) {
        const Complex want = swtest::gamma_integral(z);
        const Complex got = std::exp(log_gamma(z));
        CHECK(rel_err(got, want) < 1e-10);
    }
}

TEST_CASE("digamma values", "[cgamma]") {
    // psi(1) = -euler_mascheroni; oracle = partial-sum limit
    const double gamma_e = swtest::euler_mascheroni_partial_sum();
    CHECK(rel_err(digamma(Complex(1.0, 0.0)), -gamma_e) < 1e-11);
    CHECK(rel_err(digamma(Complex(1.0, 0.0)), -0.57721566490153286) < 1e-13);

    // recurrence at the spec'd point
    const Complex z(2.5, 0.3);
    CHECK(std::abs(digamma(z + 1.0) - digamma(z) - 1.0 / z) < 1e-13);

    // integral-representation oracle at generic points
    for (Complex p : {Complex(0.8, 0.5), Complex(3.1, -2.0), Complex(6.0, 6.0)}) {
        CHECK(rel_err(digamma(p), swtest::digamma_integral(p)) < 1e-10);
    }
}

TEST_CASE("trigamma values", "[cgamma]") {
    CHECK(rel_err(trigamma(Complex(1.0, 0.0)), kPi * kPi / 6.0) < 1e-12);

    const Complex z(3.0, 2.0);
    CHECK(std::abs(trigamma(z + 1.0) - trigamma(z) + 1.0 / (z * z)) < 1e-13);

    // psi'(1e5) ~ 1/1e5; oracle = Hurwitz partial sum with tail corrections
    const double want = swtest::trigamma_hurwitz_sum(1e5);
    CHECK(rel_err(trigamma(Complex(1e5, 0.0)), want) < 1e-12);
    CHECK(rel_err(trigamma(Complex(1e5, 0.0)), 1e-5) < 1e-4);  // leading term

    for (Complex p : {Complex(0.9, 1.2), Complex(4.4, -3.3), Complex(7.0, 0.5)}) {
        CHECK(rel_err(trigamma(p), swtest::trigamma_integral(p)) < 1e-10);
    }
}

TEST_CASE("large-argument accuracy via the recurrence identity", "[cgamma]") {
    // |z| up to 1e6: lnGamma(z+1) - lnGamma(z) = ln z to 1e-12 relative
    for (Complex z : {Complex(1e6, 0.0), Complex(7.3e5, 2.1e5),
                      Complex(12.0, 1e6)}) {
        const Complex resid = log_gamma(z + 1.0) - log_gamma(z) - std::log(z);
        CHECK(std::abs(resid) < 1e-12 * std::abs(log_gamma(z)));
        CHECK(std::abs(digamma(z + 1.0) - digamma(z) - 1.0 / z) <
              1e-12 * std::abs(digamma(z)));
    }
}

TEST_CASE("recurrence residuals on random strip", "[cgamma][prop]") {
    std::mt19937_64 rng(20240518);
    std::uniform_real_distribution<double> ure(1e-3, 50.0), uim(-50.0, 50.0);
    double worst_lg = 0, worst_dg = 0, worst_tg = 0;
    for (int i = 0; i < 10000; ++i) {
        const Complex z(ure(rng), uim(rng));
        const Complex lg = log_gamma(z);
        const Complex dg = digamma(z);
        const Complex tg = trigamma(z);
        worst_lg = std::max(worst_lg, std::abs(log_gamma(z + 1.0) - lg - std::log(z)) /
                                          (1.0 + std::abs(lg)));
        worst_dg = std::max(worst_dg, std::abs(digamma(z + 1.0) - dg - 1.0 / z) /
                                          (1.0 + std::abs(dg)));
        worst_tg = std::max(worst_tg, std::abs(trigamma(z + 1.0) - tg + 1.0 / (z * z)) /
                                          (1.0 + std::abs(tg)));
    }
    CHECK(worst_lg < 1e-11);
    CHECK(worst_dg < 1e-11);
    CHECK(worst_tg < 1e-11);
}

TEST_CASE("conjugation symmetry", "[cgamma][prop]") {
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> ure(1e-2, 50.0), uim(-50.0, 50.0);
    for (int i = 0; i < 2000; ++i) {
        const Complex z(ure(rng), uim(rng));
        CHECK(std::abs(log_gamma(std::conj(z)) - std::conj(log_gamma(z))) < 1e-13);
        CHECK(std::abs(digamma(std::conj(z)) - std::conj(digamma(z))) < 1e-13);
        CHECK(std::abs(trigamma(std::conj(z)) - std::conj(trigamma(z))) < 1e-13);
    }
}

TEST_CASE("Gamma(1-ix)Gamma(1+ix) = pi x / sinh(pi x)", "[cgamma][prop]") {
    std::mt19937_64 rng(1234);
    std::uniform_real_distribution<double> ux(1e-6, 20.0);
    for (int i = 0; i < 100; ++i) {
        const double x = ux(rng);
        const Complex prod =
            std::exp(log_gamma(Complex(1.0, -x)) + log_gamma(Complex(1.0, x)));
        const double want = kPi * x / std::sinh(kPi * x);
        CHECK(rel_err(prod, want) < 1e-10);
    }
}

TEST_CASE("reflection region stays on the principal branch", "[cgamma]") {
    // recurrence route evaluated by hand: lnGamma(z) = lnGamma(z+n) - sum ln(z+k)
    for (Complex z : {Complex(-3.3, 0.7), Complex(-0.4, 2.0), Complex(-17.2, 5.5),
                      Complex(-3.3, -0.7)}) {
        Complex shift = 0.0;
        Complex w = z;
        for (int k = 0; k < 40; ++k) {
            shift += std::log(w);
            w += 1.0;
        }
        const Complex via_recurrence = log_gamma(w) - shift;
        CHECK(std::abs(log_gamma(z) - via_recurrence) < 1e-10 * (1.0 + std::abs(via_recurrence)));
    }
}
