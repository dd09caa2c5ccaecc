/*
 * dynamics.hpp — time-evolution coefficients of the one-excitation sector.
 *
 * f00(t) = sum_r (t0r)^2 e^{-i Omega_r t} is the survival coefficient of the
 * dressed center-of-mass excitation; f0k(t) = sum_r t0r t_k^r e^{-i Omega_r t}
 * transfers it to field mode k. The three dressed-state amplitudes for
 * "atom A excited, atom B and field in vacuum" are
 *
 *   stay(t) = (e^{-i omega0 t} + f00(t)) / 2     A remains excited
 *   swap(t) = (f00(t) - e^{-i omega0 t}) / 2     excitation moved to B
 *   emit_k(t) = f0k(t) / sqrt(2)                 one quantum in mode k
 *
 * all defined up to the common global phase e^{-i E0 t}, which cancels in
 * every probability and in the concurrence and is therefore dropped.
 */
#pragma once

#include "cavent/spectrum.hpp"

#include <complex>
#include <vector>

namespace cavent {

using Amplitude = std::complex<double>;

/// Truncated survival coefficient sum_{r <= r_max} (t0r)^2 e^{-i Omega_r t}.
/// Absolute truncation error is bounded by spectrum.tail_mass(). Defined for
/// any finite t; f00(-t) = conj(f00(t)).
Amplitude f00(const ModeSpectrum& spectrum, double t);

/// Truncated transfer coefficient to bare mode k >= 1.
Amplitude f0k(const ModeSpectrum& spectrum, int k, double t);

struct AmplitudeSet {
    double t = 0.0;
    Amplitude stay;
    Amplitude swap;
    std::vector<Amplitude> emit;  ///< emit[k-1] for k = 1..r_max when requested
};

/// Dressed-state amplitudes at time t. When include_emit is set, the emit
/// list covers k = 1..r_max (the k-truncation matched to the spectrum), so
/// |stay|^2 + |swap|^2 + sum_k |emit_k|^2 = 1 up to truncation.
AmplitudeSet amplitudes(const ModeSpectrum& spectrum, double t, bool include_emit = false);

} // namespace cavent
