#include "cavent/dynamics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cavent {

namespace {
constexpr double kPi = std::numbers::pi;
}

Amplitude f00(const ModeSpectrum& spectrum, double t) {
    if (!std::isfinite(t)) throw std::invalid_argument("f00: t must be finite");
    const auto& W = spectrum.frequencies();
    const auto& wt = spectrum.weights();
    double re = 0.0, im = 0.0;
    for (std::size_t r = 0; r < W.size(); ++r) {
        const double ph = W[r] * t;
        re += wt[r] * std::cos(ph);
        im -= wt[r] * std::sin(ph);
    }
    return {re, im};
}

Amplitude f0k(const ModeSpectrum& spectrum, int k, double t) {
    if (k < 1) throw std::invalid_argument("f0k: k must be >= 1");
    if (!std::isfinite(t)) throw std::invalid_argument("f0k: t must be finite");
    const auto& p = spectrum.params();
    const double wk = kPi * k / p.radius;
    const double wk2 = wk * wk;
    const double ck = std::sqrt(p.eta_squared()) * wk;
    const auto& W = spectrum.frequencies();
    const auto& wt = spectrum.weights();
    // t0r t_k^r = ck (t0r)^2 / (omega_k^2 - Omega_r^2)
    double re = 0.0, im = 0.0;
    for (std::size_t r = 0; r < W.size(); ++r) {
        const double c = wt[r] / (wk2 - W[r] * W[r]);
        const double ph = W[r] * t;
        re += c * std::cos(ph);
        im -= c * std::sin(ph);
    }
    return Amplitude{re, im} * ck;
}

AmplitudeSet amplitudes(const ModeSpectrum& spectrum, double t, bool include_emit) {
    AmplitudeSet out;
    out.t = t;
    const Amplitude f = f00(spectrum, t);
    const Amplitude atomic = std::polar(1.0, -spectrum.params().omega0 * t);
    out.stay = 0.5 * (atomic + f);
    out.swap = 0.5 * (f - atomic);
    if (include_emit) {
        const auto& p = spectrum.params();
        const auto& W = spectrum.frequencies();
        const auto& wt = spectrum.weights();
        const std::size_t n = W.size();
        // phases evaluated once, reused for every mode k
        std::vector<double> ure(n), uim(n), w2(n);
        for (std::size_t r = 0; r < n; ++r) {
            ure[r] = wt[r] * std::cos(W[r] * t);
            uim[r] = -wt[r] * std::sin(W[r] * t);
            w2[r] = W[r] * W[r];
        }
        const int kmax = spectrum.r_max();
        const double eta = std::sqrt(p.eta_squared());
        const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
        out.emit.reserve(static_cast<std::size_t>(kmax));
        for (int k = 1; k <= kmax; ++k) {
            const double wk = kPi * k / p.radius;
            const double wk2 = wk * wk;
            double re = 0.0, im = 0.0;
            for (std::size_t r = 0; r < n; ++r) {
                const double c = 1.0 / (wk2 - w2[r]);
                re += ure[r] * c;
                im += uim[r] * c;
            }
            out.emit.push_back(Amplitude{re, im} * (eta * wk * inv_sqrt2));
        }
    }
    return out;
}

} // namespace cavent
