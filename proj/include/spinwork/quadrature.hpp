// quadrature.hpp — Gauss-Hermite and Gauss-Laguerre rules via Golub-Welsch.

#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <vector>

#include "spinwork/errors.hpp"

namespace spinwork {

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

namespace detail {

// Eigenvalues/first components of the symmetric tridiagonal Jacobi matrix.
inline QuadratureRule golub_welsch(const Eigen::VectorXd& diag,
                                   const Eigen::VectorXd& subdiag, double mu0) {
    const int n = static_cast<int>(diag.size());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, subdiag, Eigen::ComputeEigenvectors);
    QuadratureRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        rule.nodes[i] = es.eigenvalues()(i);
        const double v0 = es.eigenvectors()(0, i);
        rule.weights[i] = mu0 * v0 * v0;
    }
    return rule;
}

}  // namespace detail

// Nodes/weights for int_{-inf}^{inf} f(x) e^{-x^2} dx; weights sum to sqrt(pi).
inline QuadratureRule gauss_hermite(int n) {
    if (n < 1) throw DomainError("gauss_hermite: need n >= 1");
    Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
    Eigen::VectorXd sub(n - 1);
    for (int k = 1; k < n; ++k) sub(k - 1) = std::sqrt(0.5 * k);
    return detail::golub_welsch(diag, sub, std::sqrt(3.14159265358979323846));
}

// Nodes/weights for int_0^inf f(x) e^{-x} dx; weights sum to 1.
inline QuadratureRule gauss_laguerre(int n) {
    if (n < 1) throw DomainError("gauss_laguerre: need n >= 1");
    Eigen::VectorXd diag(n);
    Eigen::VectorXd sub(n - 1);
    for (int k = 0; k < n; ++k) diag(k) = 2.0 * k + 1.0;
    for (int k = 1; k < n; ++k) sub(k - 1) = static_cast<double>(k);
    return detail::golub_welsch(diag, sub, 1.0);
}

}  // namespace spinwork
