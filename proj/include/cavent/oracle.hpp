/*
 * oracle.hpp — brute-force finite-N validation of the spectral pipeline.
 *
 * The center-of-mass/field block of the Hamiltonian, truncated to N field
 * modes, is the (N+1)x(N+1) symmetric quadratic form
 *
 *   M[0,0] = omega0^2 + sum_k c_k^2/omega_k^2   (frequency renormalization)
 *   M[0,k] = c_k,  M[k,k] = omega_k^2,
 *
 * whose eigenfrequencies and eigenvector overlaps rebuild every spectrum and
 * dynamics quantity independently of the transcendental closed forms.
 * Validation only; not meant for production sweeps.
 */
#pragma once

#include "cavent/spectrum.hpp"

#include <Eigen/Core>

#include <complex>

namespace cavent {

/// Dense symmetric matrix of the truncated quadratic form.
Eigen::MatrixXd quadratic_form_matrix(const CavityParams& params, int n_modes);

struct FiniteModeSystem {
    Eigen::VectorXd frequencies;  ///< sorted sqrt(eigenvalues), size N+1
    Eigen::MatrixXd vectors;      ///< orthonormal columns, sign-fixed t0r > 0;
                                  ///< empty when computed values-only
};

/// Full eigendecomposition (with_vectors) or eigenvalues only. Throws
/// std::runtime_error on solver failure or on a non-positive eigenvalue.
FiniteModeSystem finite_n_diagonalize(const CavityParams& params, int n_modes,
                                      bool with_vectors = true);

/// f00 rebuilt from the finite-N eigensystem: sum_r (v[0,r])^2 e^{-i W_r t}.
/// Exact for the truncated model (no tail).
std::complex<double> f00_oracle(const FiniteModeSystem& system, double t);
std::complex<double> f00_oracle(const CavityParams& params, int n_modes, double t);

} // namespace cavent
