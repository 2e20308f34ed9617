// oracle.hpp — brute-force ground truth: exact quantum simulation of the spin
// plus a few truncated bosonic modes.
//
// sigma_z is conserved, so H splits into the two spin sectors
//     H_s = H_B + s X/2 + s eps/2,   s = +-1,
// each a dense hermitian matrix on the truncated Fock product space. Both
// blocks are eigendecomposed once at construction; free evolution and thermal
// states come from the spectral data. Work is measured directly as the energy
// change across each instantaneous pulse, tr[rho (P H - H)].
//
// Pi-factor correlators use the Magnus construction, exact here because the
// noise commutator is a c-number: the time-ordered exponential equals a
// displacement operator exp(s int eta) times the phase e^{i F}. A Trotter
// product is kept as a coarse secondary check on that construction.

#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <array>
#include <limits>
#include <deque>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "spinwork/errors.hpp"
#include "spinwork/kernels.hpp"
#include "spinwork/pulse.hpp"
#include "spinwork/work.hpp"

namespace spinwork::oracle {

using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXd;

struct FiniteBathSpec {
    std::vector<DiscreteMode> modes;
    std::vector<int> cutoffs;  // retained Fock states per mode
    double spin_gap = 1.0;
    double bath_temp = 0.0;
    double spin_temp = 1.0;
    std::size_t dimension_cap = 20000;  // bound on 2 * prod(cutoffs)
    double tail_tol = 1e-10;            // Gibbs mass allowed above each cutoff
};

// Smallest cutoffs obeying the thermal tail rule, plus headroom levels for
// the displacement the dynamics adds on top of the Gibbs occupation.
inline std::vector<int> suggest_cutoffs(const std::vector<DiscreteMode>& modes,
                                        double temp, double tail_tol,
                                        int headroom) {
    std::vector<int> out;
    out.reserve(modes.size());
    for (const auto& m : modes) {
        int base = 1;
        if (temp > 0.0) {
            const double lq = -m.omega / temp;  // ln q
            base = static_cast<int>(std::ceil(std::log(tail_tol) / lq));
            base = std::max(base, 1);
        }
        out.push_back(base + headroom);
    }
    return out;
}

namespace detail {

inline MatrixXcd kron(const MatrixXcd& a, const MatrixXcd& b) {
    MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

inline MatrixXcd annihilation(int levels) {
    MatrixXcd a = MatrixXcd::Zero(levels, levels);
    for (int n = 1; n < levels; ++n) a(n - 1, n) = std::sqrt(double(n));
    return a;
}

// exp(M) for anti-hermitian M via the hermitian eigenproblem of -iM.
inline MatrixXcd expm_antihermitian(const MatrixXcd& m) {
    const MatrixXcd k = Complex(0.0, -1.0) * m;
    Eigen::SelfAdjointEigenSolver<MatrixXcd> es(k);
    const auto& v = es.eigenvectors();
    Eigen::VectorXcd phases(es.eigenvalues().size());
    for (Eigen::Index i = 0; i < phases.size(); ++i)
        phases(i) = std::exp(Complex(0.0, es.eigenvalues()(i)));
    return v * phases.asDiagonal() * v.adjoint();
}

// tr(diag(w) * P * Q) without forming P*Q.
inline Complex weighted_trace(const VectorXd& w, const MatrixXcd& p,
                              const MatrixXcd& q) {
    return ((w.cast<Complex>().asDiagonal() * p).cwiseProduct(q.transpose()))
        .sum();
}

}  // namespace detail

class FiniteBathModel {
  public:
    explicit FiniteBathModel(FiniteBathSpec spec) : spec_(std::move(spec)) {
        if (spec_.modes.empty())
            throw DomainError("FiniteBathModel: empty mode list");
        if (spec_.modes.size() != spec_.cutoffs.size())
            throw DomainError(
                "FiniteBathModel: modes and cutoffs differ in length");
        if (!(spec_.bath_temp >= 0.0) || !(spec_.spin_temp >= 0.0))
            throw DomainError("FiniteBathModel: temperatures must be >= 0");
        std::size_t dim = 1;
        for (int c : spec_.cutoffs) {
            if (c < 1) throw DomainError("FiniteBathModel: cutoff < 1");
            dim *= static_cast<std::size_t>(c);
        }
        if (2 * dim > spec_.dimension_cap)
            throw DomainError("FiniteBathModel: dimension exceeds the cap");
        check_tail_rule();
        n_ = static_cast<Eigen::Index>(dim);
        build_operators();
        diagonalize();
    }

    const FiniteBathSpec& spec() const { return spec_; }
    Eigen::Index bath_dim() const { return n_; }
    const MatrixXcd& collective_x() const { return x_; }
    const VectorXd& bath_energies() const { return hb_; }
    const MatrixXcd& hamiltonian_block(int s) const { return s > 0 ? hp_ : hm_; }
    const VectorXd& block_evals(int s) const { return s > 0 ? ep_ : em_; }
    const MatrixXcd& block_evecs(int s) const { return s > 0 ? vp_ : vm_; }
    const MatrixXcd& mode_annihilation(std::size_t k) const { return a_[k]; }

    // Gibbs weights of the bare bath, normalized.
    VectorXd thermal_bath_weights() const {
        VectorXd w(n_);
        if (spec_.bath_temp == 0.0) {
            Eigen::Index ground;
            hb_.minCoeff(&ground);
            w.setZero();
            w(ground) = 1.0;
            return w;
        }
        const double hmin = hb_.minCoeff();
        for (Eigen::Index i = 0; i < n_; ++i)
            w(i) = std::exp(-(hb_(i) - hmin) / spec_.bath_temp);
        w /= w.sum();
        return w;
    }

    // Block propagators e^{-i H_s t}; a small bounded cache keyed by duration.
    std::pair<const MatrixXcd*, const MatrixXcd*> propagator(double t) const {
        for (auto& e : prop_cache_)
            if (e.t == t) return {&e.up, &e.um};
        if (prop_cache_.size() >= 6) prop_cache_.pop_front();
        prop_cache_.push_back(
            {t, block_propagator(ep_, vp_, t), block_propagator(em_, vm_, t)});
        auto& e = prop_cache_.back();
        return {&e.up, &e.um};
    }

    // diagnostic: occupation of the top Fock level of each mode
    std::vector<double> top_level_weight(const MatrixXcd& bath_block_sum) const {
        std::vector<double> out(spec_.modes.size(), 0.0);
        for (Eigen::Index idx = 0; idx < n_; ++idx) {
            Eigen::Index rem = idx;
            for (std::size_t k = spec_.modes.size(); k-- > 0;) {
                const int c = spec_.cutoffs[k];
                const int nk = static_cast<int>(rem % c);
                rem /= c;
                if (nk == c - 1)
                    out[k] += std::real(bath_block_sum(idx, idx));
            }
        }
        return out;
    }

  private:
    struct PropEntry {
        double t;
        MatrixXcd up, um;
    };

    void check_tail_rule() const {
        if (spec_.bath_temp == 0.0) return;
        for (std::size_t k = 0; k < spec_.modes.size(); ++k) {
            const double q = std::exp(-spec_.modes[k].omega / spec_.bath_temp);
            const double tail = std::pow(q, spec_.cutoffs[k]);
            if (tail > spec_.tail_tol) {
                std::ostringstream os;
                os << "FiniteBathModel: mode " << k << " thermal tail " << tail
                   << " exceeds " << spec_.tail_tol << "; raise the cutoff";
                throw CutoffTooSmallError(os.str());
            }
        }
    }

    void build_operators() {
        const std::size_t nm = spec_.modes.size();
        a_.resize(nm);
        for (std::size_t k = 0; k < nm; ++k) {
            MatrixXcd op = MatrixXcd::Identity(1, 1);
            for (std::size_t j = 0; j < nm; ++j) {
                const int c = spec_.cutoffs[j];
                op = detail::kron(op, j == k ? detail::annihilation(c)
                                             : MatrixXcd::Identity(c, c));
            }
            a_[k] = std::move(op);
        }
        x_ = MatrixXcd::Zero(n_, n_);
        MatrixXcd number_sum = MatrixXcd::Zero(n_, n_);
        for (std::size_t k = 0; k < nm; ++k) {
            x_ += spec_.modes[k].g * (a_[k] + a_[k].adjoint());
            number_sum += spec_.modes[k].omega * (a_[k].adjoint() * a_[k]);
        }
        hb_ = number_sum.diagonal().real();
        const MatrixXcd hbm = hb_.cast<Complex>().asDiagonal();
        hp_ = hbm + 0.5 * x_ +
              0.5 * spec_.spin_gap * MatrixXcd::Identity(n_, n_);
        hm_ = hbm - 0.5 * x_ -
              0.5 * spec_.spin_gap * MatrixXcd::Identity(n_, n_);
    }

    void diagonalize() {
        Eigen::SelfAdjointEigenSolver<MatrixXcd> es(hp_);
        ep_ = es.eigenvalues();
        vp_ = es.eigenvectors();
        es.compute(hm_);
        em_ = es.eigenvalues();
        vm_ = es.eigenvectors();
    }

    static MatrixXcd block_propagator(const VectorXd& evals, const MatrixXcd& v,
                                      double t) {
        Eigen::VectorXcd ph(evals.size());
        for (Eigen::Index i = 0; i < evals.size(); ++i)
            ph(i) = std::exp(Complex(0.0, -evals(i) * t));
        return v * ph.asDiagonal() * v.adjoint();
    }

    FiniteBathSpec spec_;
    Eigen::Index n_ = 0;
    std::vector<MatrixXcd> a_;
    MatrixXcd x_, hp_, hm_;
    VectorXd hb_, ep_, em_;
    MatrixXcd vp_, vm_;
    mutable std::deque<PropEntry> prop_cache_;
};

// Full 2N x 2N density operator; basis spin (+, -) (x) Fock.
struct DenseState {
    MatrixXcd rho;

    Eigen::Index bath_dim() const { return rho.rows() / 2; }
    auto block(int s, int sp) {
        const Eigen::Index n = bath_dim();
        return rho.block((s > 0 ? 0 : n), (sp > 0 ? 0 : n), n, n);
    }
    auto block(int s, int sp) const {
        const Eigen::Index n = bath_dim();
        return rho.block((s > 0 ? 0 : n), (sp > 0 ? 0 : n), n, n);
    }

    double trace() const { return rho.trace().real(); }
    double hermiticity_residual() const { return (rho - rho.adjoint()).norm(); }
    double min_eigenvalue() const {
        Eigen::SelfAdjointEigenSolver<MatrixXcd> es(rho,
                                                    Eigen::EigenvaluesOnly);
        return es.eigenvalues().minCoeff();
    }
    double sz_expectation() const {
        return (block(+1, +1).trace() - block(-1, -1).trace()).real();
    }
};

enum class InitialKind { Factorized, Correlated };

inline DenseState initial_state(const FiniteBathModel& m, InitialKind kind) {
    const Eigen::Index n = m.bath_dim();
    const double eps = m.spec().spin_gap;
    const double ts = m.spec().spin_temp;
    DenseState st;
    st.rho = MatrixXcd::Zero(2 * n, 2 * n);

    // log spin weights, s = +1 / -1
    auto spin_logw = [&](int s) {
        if (std::isinf(ts)) return 0.0;
        if (ts == 0.0) return s > 0 ? -std::numeric_limits<double>::infinity() : 0.0;
        return -s * eps / (2.0 * ts);
    };

    if (kind == InitialKind::Factorized) {
        const VectorXd wb = m.thermal_bath_weights();
        const double lp = spin_logw(+1), lm = spin_logw(-1);
        const double lmax = std::max(lp, lm);
        const double zp = std::exp(lp - lmax), zm = std::exp(lm - lmax);
        const double z = zp + zm;
        st.block(+1, +1) = (zp / z) * wb.cast<Complex>().asDiagonal();
        st.block(-1, -1) = (zm / z) * wb.cast<Complex>().asDiagonal();
        return st;
    }

    // correlated: block s is exp(-beta_S s eps/2) exp(-beta (H_B + s X/2)),
    // built from the H_s spectra (bath part = evals - s eps/2)
    const double tb = m.spec().bath_temp;
    double bmin = std::numeric_limits<double>::infinity();
    for (int s : {+1, -1})
        bmin = std::min(bmin, m.block_evals(s).minCoeff() - s * eps / 2.0);
    double lmax = -std::numeric_limits<double>::infinity();
    std::array<VectorXd, 2> logw;
    for (int bi = 0; bi < 2; ++bi) {
        const int s = bi == 0 ? +1 : -1;
        const VectorXd& ev = m.block_evals(s);
        VectorXd lw(n);
        for (Eigen::Index i = 0; i < n; ++i) {
            const double de = ev(i) - s * eps / 2.0 - bmin;  // >= 0
            const double bath_term =
                tb > 0.0 ? de / tb
                         : (de > 1e-12 ? std::numeric_limits<double>::infinity()
                                       : 0.0);
            lw(i) = spin_logw(s) - bath_term;
            lmax = std::max(lmax, lw(i));
        }
        logw[static_cast<std::size_t>(bi)] = lw;
    }
    double total = 0.0;
    for (int bi = 0; bi < 2; ++bi) {
        const int s = bi == 0 ? +1 : -1;
        Eigen::VectorXcd w(n);
        for (Eigen::Index i = 0; i < n; ++i)
            w(i) = std::exp(logw[static_cast<std::size_t>(bi)](i) - lmax);
        const MatrixXcd blk =
            m.block_evecs(s) * w.asDiagonal() * m.block_evecs(s).adjoint();
        st.block(s, s) = blk;
        total += blk.trace().real();
    }
    st.rho /= total;
    return st;
}

inline double energy(const FiniteBathModel& m, const DenseState& st) {
    const Complex ep =
        st.block(+1, +1).cwiseProduct(m.hamiltonian_block(+1).transpose()).sum();
    const Complex em =
        st.block(-1, -1).cwiseProduct(m.hamiltonian_block(-1).transpose()).sum();
    return (ep + em).real();
}

struct PulseEvent {
    double wait;  // free evolution before the pulse
    PulseUnitary pulse;
};

struct SequenceResult {
    std::vector<double> works;
    DenseState state;
};

inline void evolve(const FiniteBathModel& m, DenseState& st, double t) {
    if (!(t >= 0.0)) throw DomainError("oracle::evolve: negative wait");
    if (t == 0.0) return;
    const auto [up, um] = m.propagator(t);
    const Eigen::Index n = m.bath_dim();
    MatrixXcd out(2 * n, 2 * n);
    out.topLeftCorner(n, n) = (*up) * st.block(+1, +1) * up->adjoint();
    out.topRightCorner(n, n) = (*up) * st.block(+1, -1) * um->adjoint();
    out.bottomLeftCorner(n, n) = out.topRightCorner(n, n).adjoint();
    out.bottomRightCorner(n, n) = (*um) * st.block(-1, -1) * um->adjoint();
    st.rho = std::move(out);
}

inline void apply_pulse(const FiniteBathModel& m, DenseState& st,
                        const PulseUnitary& u) {
    if (u.unitarity_residual() > 1e-10)
        throw NotUnitaryError("oracle::apply_pulse: pulse is not unitary");
    const Eigen::Index n = m.bath_dim();
    MatrixXcd out = MatrixXcd::Zero(2 * n, 2 * n);
    const int sign_of[2] = {+1, -1};
    for (int si = 0; si < 2; ++si)
        for (int spj = 0; spj < 2; ++spj) {
            auto dst = out.block(si * n, spj * n, n, n);
            for (int ri = 0; ri < 2; ++ri)
                for (int rpj = 0; rpj < 2; ++rpj) {
                    const Complex coef = u(si, ri) * std::conj(u(spj, rpj));
                    if (coef != Complex(0.0, 0.0))
                        dst += coef *
                               st.block(sign_of[ri], sign_of[rpj]);
                }
        }
    st.rho = std::move(out);
}

inline SequenceResult run_sequence(const FiniteBathModel& m, DenseState st,
                                   const std::vector<PulseEvent>& schedule) {
    SequenceResult res;
    res.works.reserve(schedule.size());
    for (const auto& ev : schedule) {
        evolve(m, st, ev.wait);
        const double before = energy(m, st);
        apply_pulse(m, st, ev.pulse);
        res.works.push_back(energy(m, st) - before);
    }
    res.state = std::move(st);
    return res;
}

// ---- bath-only noise operators and Pi correlators ---------------------------

inline MatrixXcd eta_operator(const FiniteBathModel& m, double t) {
    const Eigen::Index n = m.bath_dim();
    MatrixXcd out = MatrixXcd::Zero(n, n);
    for (std::size_t k = 0; k < m.spec().modes.size(); ++k) {
        const auto& mode = m.spec().modes[k];
        const Complex ph = std::exp(Complex(0.0, mode.omega * t));
        out += mode.g * (ph * m.mode_annihilation(k).adjoint() +
                         std::conj(ph) * m.mode_annihilation(k));
    }
    return out;
}

namespace detail {

inline double f_phase(const FiniteBathModel& m, double dt) {
    double f = 0.0;
    for (const auto& mode : m.spec().modes)
        f += mode.g * mode.g / mode.omega *
             (dt - std::sin(mode.omega * dt) / mode.omega);
    return f;
}

}  // namespace detail

// Magnus form: Pi_s(t1,t2) = e^{i F(t2-t1)} exp(s M), M = i int_{t1}^{t2} eta.
inline MatrixXcd pi_operator(const FiniteBathModel& m, int s, double t1,
                             double t2) {
    if (!(t2 >= t1)) throw DomainError("pi_operator: need t2 >= t1");
    const Eigen::Index n = m.bath_dim();
    MatrixXcd disp = MatrixXcd::Zero(n, n);
    for (std::size_t k = 0; k < m.spec().modes.size(); ++k) {
        const auto& mode = m.spec().modes[k];
        const Complex alpha =
            mode.g / mode.omega *
            (std::exp(Complex(0.0, mode.omega * t2)) -
             std::exp(Complex(0.0, mode.omega * t1)));
        disp += alpha * m.mode_annihilation(k).adjoint() -
                std::conj(alpha) * m.mode_annihilation(k);
    }
    const MatrixXcd d = detail::expm_antihermitian(static_cast<double>(s) * disp);
    return std::exp(Complex(0.0, detail::f_phase(m, t2 - t1))) * d;
}

// Ordered Trotter product over midpoints; coarse cross-check of the Magnus
// construction.
inline MatrixXcd pi_operator_trotter(const FiniteBathModel& m, int s, double t1,
                                     double t2, int steps) {
    const Eigen::Index n = m.bath_dim();
    MatrixXcd out = MatrixXcd::Identity(n, n);
    const double dt = (t2 - t1) / steps;
    for (int j = 0; j < steps; ++j) {
        const double u = t1 + (j + 0.5) * dt;
        const MatrixXcd step = detail::expm_antihermitian(
            Complex(0.0, s * dt) * eta_operator(m, u));
        out = step * out;  // later times to the left
    }
    return out;
}

inline Complex thermal_expectation(const FiniteBathModel& m, const MatrixXcd& op) {
    const VectorXd w = m.thermal_bath_weights();
    Complex acc = 0.0;
    for (Eigen::Index i = 0; i < m.bath_dim(); ++i) acc += w(i) * op(i, i);
    return acc;
}

inline Complex pi_average(const FiniteBathModel& m, int s, double t1, double t2) {
    return thermal_expectation(m, pi_operator(m, s, t1, t2));
}

inline Complex eta_pi(const FiniteBathModel& m, double t3, int s, double t1,
                      double t2) {
    return detail::weighted_trace(m.thermal_bath_weights(), eta_operator(m, t3),
                                  pi_operator(m, s, t1, t2));
}

inline Complex pi_eta(const FiniteBathModel& m, int s, double t1, double t2,
                      double t3) {
    return detail::weighted_trace(m.thermal_bath_weights(),
                                  pi_operator(m, s, t1, t2),
                                  eta_operator(m, t3));
}

inline Complex pi_pi(const FiniteBathModel& m, int s, double t3, double t4,
                     double t1, double t2) {
    return detail::weighted_trace(m.thermal_bath_weights(),
                                  pi_operator(m, s, t3, t4),
                                  pi_operator(m, -s, t1, t2));
}

}  // namespace spinwork::oracle
