/*
 * entanglement.hpp — two-atom reduced density matrix and concurrence.
 *
 * The initial state is the one-excitation superposition
 *   |psi(0)> = sqrt(xi) |1,0> + sqrt(1-xi) e^{i phi} |0,1>,
 * which evolves into A(t)|1,0> + B(t)|0,1> + sum_k C_k(t)|0,0;1_k>.
 * Tracing out the field leaves a rank-structured 4x4 density matrix in the
 * basis {|0,0>, |1,0>, |0,1>, |1,1>} whose concurrence has the closed form
 * C = 2|A B|; the Wootters eigenvalue construction is kept alongside as an
 * independent route to the same number.
 */
#pragma once

#include <Eigen/Core>

#include <complex>
#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace cavent {

struct InitialState {
    double xi = 0.5;   ///< population share of |1,0>, in [0, 1]
    double phi = 0.0;  ///< relative phase, in [0, 2 pi)

    void validate() const;  ///< throws std::invalid_argument
};

/// Atom-pair amplitudes and aggregate field weight E = 1 - |A|^2 - |B|^2.
struct AtomPairAmplitudes {
    std::complex<double> a;  ///< excitation on atom A
    std::complex<double> b;  ///< excitation on atom B
    double field_weight = 0.0;
};

/// Combine a survival coefficient f00(t) with the initial superposition:
///   A = sqrt(xi) stay + sqrt(1-xi) e^{i phi} swap,
///   B = sqrt(xi) swap + sqrt(1-xi) e^{i phi} stay,
/// with stay/swap = (e^{-i omega0 t} +- f00)/2.
AtomPairAmplitudes atom_amplitudes(std::complex<double> f00_value, double t,
                                   double omega0, const InitialState& state);

/// Closed-form concurrence 2|A B|, clamped to [0, 1]. When `raw` is non-null
/// the unclamped value is stored there (diagnostic for roundoff excursions).
double concurrence(const AtomPairAmplitudes& amps, double* raw = nullptr);

/// 4x4 reduced density matrix diag(E, |A|^2, |B|^2, 0) with coherences
/// A B* / A* B in the one-excitation block.
Eigen::Matrix4cd reduced_density(const AtomPairAmplitudes& amps);

/// Wootters construction: R = rho (sigma_y x sigma_y) rho* (sigma_y x sigma_y),
/// C = max(0, l1 - l2 - l3 - l4) with l_i the descending square roots of the
/// eigenvalues of R. Independent cross-check of concurrence().
double concurrence_wootters(const Eigen::Matrix4cd& rho);

/// Survival coefficient source: cavity f00(spectrum, .) or f00_free(...).
using SurvivalAmplitudeFn = std::function<std::complex<double>(double)>;

struct ConcurrencePoint {
    double t = 0.0;
    double value = 0.0;
};

std::vector<ConcurrencePoint> concurrence_series(const SurvivalAmplitudeFn& f00_fn,
                                                 double omega0,
                                                 const InitialState& state,
                                                 std::span<const double> t_grid);

/// A located concurrence zero with its certificate residuals:
///  - balance_residual: |(2 xi - 1)(|f00|^2 + 1) +- 2 Re(f00 e^{i omega0 t})|,
///    the modulus-balance condition for A = 0 (upper sign) or B = 0 (lower);
///  - phase_residual: |sqrt(1-xi) e^{i phi}(f00 - e^{-i omega0 t})
///                     +- sqrt(xi)(f00 + e^{-i omega0 t})|, the cross-
///    multiplied phase-matching condition (equals 2|A| resp. 2|B|).
struct DisentanglementEvent {
    double t = 0.0;
    double concurrence = 0.0;
    double balance_residual = 0.0;
    double phase_residual = 0.0;
};

struct ZeroScanOptions {
    int samples_per_period = 2000;  ///< scan resolution per atomic period 2 pi/omega0
    double refine_tol = 1e-12;      ///< golden-section width, relative to |t|
};

/// All t in [t_begin, t_end] where C(t) < tol, found by scanning |A(t) B(t)|
/// on a dense grid and refining each local minimum by golden section.
/// An empty list is a valid outcome.
std::vector<DisentanglementEvent> find_disentanglement_times(
    const SurvivalAmplitudeFn& f00_fn, double omega0, const InitialState& state,
    double t_begin, double t_end, double tol, const ZeroScanOptions& opt = {});

} // namespace cavent
