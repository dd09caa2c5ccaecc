/*
 * freespace.hpp — survival coefficient and long-time concurrence in the
 * infinite-cavity limit.
 *
 * For R -> infinity the mode sum becomes the integral
 *
 *   f00(t) = 2g int_0^inf x^2 e^{-ixt} / [ (x^2 - omega0^2)^2
 *            + pi^2 g^2 x^2 ] dx,
 *
 * which is proper on the real line for g > 0 (the integrand's poles sit off
 * axis). Evaluated by oscillation-aware adaptive panels plus an analytic
 * 1/x^2 tail handled by repeated integration by parts.
 */
#pragma once

#include <complex>

namespace cavent {

struct QuadratureConfig {
    double abs_tol = 1e-8;       ///< absolute accuracy target for f00_free
    double t_min = 1e-6;         ///< oscillation-period guard in panel sizing
    double tail_cutoff = 0.0;    ///< lower bound on the split point X (0 = automatic)
    int max_panel_depth = 40;

    void validate() const;  ///< throws std::invalid_argument
};

/// Free-space survival coefficient to absolute accuracy cfg.abs_tol.
/// Throws std::runtime_error if panel refinement fails to converge.
std::complex<double> f00_free(double omega0, double g, double t,
                              const QuadratureConfig& cfg = {});

/// Long-time limit of the concurrence for the superposition (xi, phi):
/// 1/2 - sqrt(xi (1 - xi)) cos(phi), clamped to [0, 1].
double asymptotic_concurrence(double xi, double phi);

} // namespace cavent
