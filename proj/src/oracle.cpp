#include "cavent/oracle.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cavent {

namespace {
constexpr double kPi = std::numbers::pi;
}

Eigen::MatrixXd quadratic_form_matrix(const CavityParams& params, int n_modes) {
    params.validate();
    if (n_modes < 2)
        throw std::invalid_argument("quadratic_form_matrix: need n_modes >= 2");
    const double eta = std::sqrt(params.eta_squared());
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n_modes + 1, n_modes + 1);
    double m00 = params.omega0 * params.omega0;
    for (int k = 1; k <= n_modes; ++k) {
        const double wk = kPi * k / params.radius;
        const double ck = eta * wk;
        m(0, k) = m(k, 0) = ck;
        m(k, k) = wk * wk;
        m00 += ck * ck / (wk * wk);
    }
    m(0, 0) = m00;
    return m;
}

FiniteModeSystem finite_n_diagonalize(const CavityParams& params, int n_modes,
                                      bool with_vectors) {
    const Eigen::MatrixXd m = quadratic_form_matrix(params, n_modes);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
        m, with_vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("finite_n_diagonalize: eigensolver failed");

    FiniteModeSystem out;
    const auto& vals = solver.eigenvalues();
    out.frequencies.resize(vals.size());
    for (Eigen::Index r = 0; r < vals.size(); ++r) {
        if (!(vals[r] > 0.0))
            throw std::runtime_error(
                "finite_n_diagonalize: non-positive eigenvalue (renormalization term broken)");
        out.frequencies[r] = std::sqrt(vals[r]);
    }
    if (with_vectors) {
        out.vectors = solver.eigenvectors();
        // sign convention: center-of-mass overlap t0r > 0
        for (Eigen::Index r = 0; r < out.vectors.cols(); ++r)
            if (out.vectors(0, r) < 0.0) out.vectors.col(r) = -out.vectors.col(r);
    }
    return out;
}

std::complex<double> f00_oracle(const FiniteModeSystem& system, double t) {
    if (system.vectors.size() == 0)
        throw std::invalid_argument("f00_oracle: system computed without eigenvectors");
    double re = 0.0, im = 0.0;
    for (Eigen::Index r = 0; r < system.frequencies.size(); ++r) {
        const double w = system.vectors(0, r) * system.vectors(0, r);
        const double ph = system.frequencies[r] * t;
        re += w * std::cos(ph);
        im -= w * std::sin(ph);
    }
    return {re, im};
}

std::complex<double> f00_oracle(const CavityParams& params, int n_modes, double t) {
    return f00_oracle(finite_n_diagonalize(params, n_modes, true), t);
}

} // namespace cavent
