/*
 * spectrum.hpp — normal modes of two identical atoms coupled to a scalar
 * field inside a spherical cavity of radius R (natural units, hbar = c = 1).
 *
 * The atoms sit at the cavity center and couple only through their
 * center-of-mass coordinate. Diagonalizing the center-of-mass/field block
 * of the quadratic Hamiltonian gives collective frequencies Omega_r, the
 * solutions of
 *
 *   cot(R Omega) = Omega/(pi g) + (1/(R Omega)) (1 - R omega0^2/(pi g)),
 *
 * with exactly one root per interval (k pi/R, (k+1) pi/R), k = 0, 1, 2, ...
 * The squared overlap of the center-of-mass coordinate with mode r is
 *
 *   (t0r)^2 = eta^2 Omega_r^2 / [ (Omega_r^2 - omega0^2)^2
 *             + (eta^2/2)(3 Omega_r^2 - omega0^2) + pi^2 g^2 Omega_r^2 ],
 *
 * eta^2 = 2 g dOmega, dOmega = pi/R. These weights sum to 1 over the full
 * spectrum; ModeSpectrum truncates once the accumulated sum reaches
 * 1 - truncation_eps and records the remainder as tail_mass.
 */
#pragma once

#include <cstddef>
#include <vector>

namespace cavent {

/// Physical configuration: atomic frequency omega0, coupling g (frequency
/// units), cavity radius R (units of 1/omega0). All must be positive.
struct CavityParams {
    double omega0 = 1.0;
    double g = 1.0;
    double radius = 1.0;

    /// Bare field mode spacing dOmega = pi/R.
    double mode_spacing() const;
    /// eta^2 = 2 g pi / R, the squared per-mode coupling scale.
    double eta_squared() const;

    void validate() const;  ///< throws std::invalid_argument on bad values
};

/// One bare field mode: omega_k = pi k / R and its coupling to the
/// center-of-mass coordinate, c_k = omega_k sqrt(2 g dOmega).
/// (k = 0 carries zero frequency and zero coupling and is excluded.)
struct BareMode {
    int k = 0;
    double omega = 0.0;
    double coupling = 0.0;
};

std::vector<BareMode> bare_modes(const CavityParams& params, int count);

/// Residual of the secular equation,
///   F(Omega) = cot(R Omega) - Omega/(pi g) - (1/(R Omega))(1 - R omega0^2/(pi g)).
/// Roots of F are the collective frequencies. Throws std::domain_error when
/// Omega is within the guard band of a cotangent pole (R Omega ~ k pi).
double secular_residual(const CavityParams& params, double omega);

/// First r_max + 1 collective frequencies, one bracketed root per interval
/// (k pi/R, (k+1) pi/R), located by Brent's method to relative tolerance
/// rel_tol. Strictly increasing. Throws std::runtime_error if an interval
/// fails to bracket a sign change (guard-band bug, never silently skipped).
std::vector<double> normal_mode_frequencies(const CavityParams& params,
                                            int r_max, double rel_tol = 1e-12);

/// Spectral weight (t0r)^2 of a collective root. Meaningful only when
/// omega_r solves the secular equation.
double spectral_weight(const CavityParams& params, double omega_r);

/// Mixing coefficient t_k^r = c_k/(omega_k^2 - Omega_r^2) * t0r.
/// Throws std::domain_error if the denominator is resonantly small
/// (cannot happen for genuine roots at g > 0).
double mixing_coefficient(const CavityParams& params, double omega_r, int k);

struct SpectrumOptions {
    double truncation_eps = 1e-6;  ///< stop once sum of weights >= 1 - eps
    double root_rel_tol = 1e-12;
    std::size_t max_roots = 40'000'000;

    void validate() const;
};

/// Truncated collective-mode spectrum: frequencies, weights, and the
/// unresolved tail. Immutable once built; safe for concurrent reads.
class ModeSpectrum {
public:
    ModeSpectrum(CavityParams params, SpectrumOptions options,
                 std::vector<double> frequencies, std::vector<double> weights);

    const CavityParams& params() const { return params_; }
    const SpectrumOptions& options() const { return options_; }
    const std::vector<double>& frequencies() const { return frequencies_; }
    const std::vector<double>& weights() const { return weights_; }

    int r_max() const { return static_cast<int>(frequencies_.size()) - 1; }
    double weight_sum() const { return weight_sum_; }
    /// 1 - sum of retained weights (>= 0, < truncation_eps by construction).
    double tail_mass() const { return tail_mass_; }
    /// Analytic estimate of the dropped mass, sum_{r > r_max} eta^2/Omega_r^2.
    double tail_estimate() const;

private:
    CavityParams params_;
    SpectrumOptions options_;
    std::vector<double> frequencies_;
    std::vector<double> weights_;
    double weight_sum_ = 0.0;
    double tail_mass_ = 0.0;
};

/// Enumerate roots and weights until the completeness sum reaches
/// 1 - truncation_eps. Throws std::runtime_error if max_roots is hit first.
ModeSpectrum build_spectrum(const CavityParams& params, const SpectrumOptions& options = {});

} // namespace cavent
