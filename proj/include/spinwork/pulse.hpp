// pulse.hpp — SU(2) pulse unitaries and their superoperator coefficients.
//
// A pulse acts on observables as P(A) = U^dag A U, with U the pulse
// evolution operator. Coefficients c_{a,b}, a,b in (+,-,z), expand
// P(sigma_a) = sum_b c_{a,b} sigma_b in the basis sigma_pm = sigma_x pm
// i sigma_y. Pulses are ideal (zero duration); the identity component of a
// conjugated Pauli operator vanishes, so the 3x3 coefficient array is the
// whole story.

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "spinwork/errors.hpp"

namespace spinwork {

using Complex = std::complex<double>;

enum class Axis { X, Y };

class PulseUnitary {
  public:
    // row-major entries u[0]=u00, u[1]=u01, u[2]=u10, u[3]=u11
    static PulseUnitary from_matrix(Complex u00, Complex u01, Complex u10,
                                    Complex u11) {
        PulseUnitary p;
        p.u_ = {u00, u01, u10, u11};
        p.validate();
        p.normalize_det();
        return p;
    }

    // Pulse whose inverse-conjugation matrix U^dag is
    //   [ e^{-i phi} cos th   -e^{-i psi} sin th ]
    //   [ e^{ i psi} sin th    e^{ i phi} cos th ],
    // phi, psi in [0, 2 pi), th in [0, pi/2].
    static PulseUnitary from_euler(double phi, double psi, double theta) {
        const Complex i(0.0, 1.0);
        const double ct = std::cos(theta), st = std::sin(theta);
        // U = (U^dag)^dag
        return from_matrix(std::exp(i * phi) * ct, std::exp(-i * psi) * st,
                           -std::exp(i * psi) * st, std::exp(-i * phi) * ct);
    }

    // U = exp(-i angle sigma_axis / 2); conjugation gives the textbook
    // rotation P(angle; axis) sigma -> e^{i angle s/2} sigma e^{-i angle s/2}.
    static PulseUnitary rotation(double angle, Axis axis) {
        const double c = std::cos(0.5 * angle), s = std::sin(0.5 * angle);
        const Complex i(0.0, 1.0);
        if (axis == Axis::X)
            return from_matrix(c, -i * s, -i * s, c);
        return from_matrix(c, -s, s, c);
    }

    // pi rotation about x: sigma_z -> -sigma_z, sigma_y -> -sigma_y.
    static PulseUnitary pi_pulse() { return rotation(3.14159265358979323846, Axis::X); }

    static PulseUnitary identity() { return from_matrix(1.0, 0.0, 0.0, 1.0); }

    Complex operator()(int r, int c) const { return u_[2 * r + c]; }

    double unitarity_residual() const {
        // || U^dag U - 1 ||_F
        const Complex a = u_[0], b = u_[1], c = u_[2], d = u_[3];
        const Complex e00 = std::conj(a) * a + std::conj(c) * c - 1.0;
        const Complex e01 = std::conj(a) * b + std::conj(c) * d;
        const Complex e11 = std::conj(b) * b + std::conj(d) * d - 1.0;
        return std::sqrt(std::norm(e00) + 2.0 * std::norm(e01) + std::norm(e11));
    }

  private:
    PulseUnitary() = default;

    void validate() const {
        for (const auto& v : u_)
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
                throw NotUnitaryError("PulseUnitary: non-finite entry");
        if (unitarity_residual() > 1e-12)
            throw NotUnitaryError("PulseUnitary: unitarity residual above 1e-12");
    }

    void normalize_det() {
        const Complex det = u_[0] * u_[3] - u_[1] * u_[2];
        const Complex root = std::sqrt(det);
        for (auto& v : u_) v /= root;
    }

    std::array<Complex, 4> u_;
};

// Apply `first`, then `second`; the combined evolution operator is
// U_second * U_first.
inline PulseUnitary compose(const PulseUnitary& first, const PulseUnitary& second) {
    Complex r[4];
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r[2 * i + j] = second(i, 0) * first(0, j) + second(i, 1) * first(1, j);
    return PulseUnitary::from_matrix(r[0], r[1], r[2], r[3]);
}

struct PulseCoefficients {
    // index order (+, -, z)
    static constexpr int kPlus = 0, kMinus = 1, kZ = 2;
    std::array<std::array<Complex, 3>, 3> c;

    Complex plus_z() const { return c[kPlus][kZ]; }
    Complex minus_z() const { return c[kMinus][kZ]; }
    Complex z_plus() const { return c[kZ][kPlus]; }
    double zz() const { return c[kZ][kZ].real(); }

    // composition rule: coefficients(compose(P1, P2)) = product(C2, C1)
    static PulseCoefficients product(const PulseCoefficients& inner,
                                     const PulseCoefficients& outer) {
        PulseCoefficients out{};
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b) {
                Complex s = 0.0;
                for (int k = 0; k < 3; ++k) s += inner.c[a][k] * outer.c[k][b];
                out.c[a][b] = s;
            }
        return out;
    }
};

// c_{a,b} with U^dag sigma_a U = sum_b c_{a,b} sigma_b. The conjugated
// operator is traceless, so the expansion of [[p, q], [r, -p]] is
// c_z = p, c_+ = q/2, c_- = r/2.
inline PulseCoefficients coefficients(const PulseUnitary& u) {
    if (u.unitarity_residual() > 1e-10)
        throw NotUnitaryError("coefficients: pulse is not unitary");
    PulseCoefficients out{};
    const Complex a = u(0, 0), b = u(0, 1), c = u(1, 0), d = u(1, 1);
    // columns of U^dag M U for M in (sigma_+, sigma_-, sigma_z):
    // sigma_+ = [[0,2],[0,0]], sigma_- = [[0,0],[2,0]], sigma_z = diag(1,-1)
    const std::array<std::array<Complex, 4>, 3> sigma = {{
        {0.0, 2.0, 0.0, 0.0},
        {0.0, 0.0, 2.0, 0.0},
        {1.0, 0.0, 0.0, -1.0},
    }};
    for (int s = 0; s < 3; ++s) {
        const auto& m = sigma[s];
        // t = M U
        const Complex t00 = m[0] * a + m[1] * c;
        const Complex t01 = m[0] * b + m[1] * d;
        const Complex t10 = m[2] * a + m[3] * c;
        const Complex t11 = m[2] * b + m[3] * d;
        // r = U^dag t
        const Complex r00 = std::conj(a) * t00 + std::conj(c) * t10;
        const Complex r01 = std::conj(a) * t01 + std::conj(c) * t11;
        const Complex r10 = std::conj(b) * t00 + std::conj(d) * t10;
        out.c[s][PulseCoefficients::kZ] = r00;
        out.c[s][PulseCoefficients::kPlus] = 0.5 * r01;
        out.c[s][PulseCoefficients::kMinus] = 0.5 * r10;
    }
    return out;
}

// "rot:<angle_deg>:<axis>" | "euler:<phi>:<psi>:<theta>" (radians) | "pi"
inline PulseUnitary parse_pulse(const std::string& spec) {
    if (spec == "pi") return PulseUnitary::pi_pulse();
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ':')) parts.push_back(tok);
    auto num = [&](const std::string& s) {
        char* end = nullptr;
        const double v = std::strtod(s.c_str(), &end);
        if (end == s.c_str() || *end != '\0')
            throw ConfigError("parse_pulse: bad number '" + s + "'");
        return v;
    };
    if (parts.size() == 3 && parts[0] == "rot") {
        const double angle = num(parts[1]) * 3.14159265358979323846 / 180.0;
        if (parts[2] == "x") return PulseUnitary::rotation(angle, Axis::X);
        if (parts[2] == "y") return PulseUnitary::rotation(angle, Axis::Y);
        throw ConfigError("parse_pulse: axis must be x or y");
    }
    if (parts.size() == 4 && parts[0] == "euler")
        return PulseUnitary::from_euler(num(parts[1]), num(parts[2]), num(parts[3]));
    throw ConfigError("parse_pulse: unrecognized pulse spec '" + spec + "'");
}

}  // namespace spinwork
