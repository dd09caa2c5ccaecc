#include "cavent/spectrum.hpp"
#include "cavent/roots.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace cavent {

namespace {
constexpr double kPi = std::numbers::pi;
// guard band around cotangent poles, in units of the pole spacing
constexpr double kPoleGuard = 1e-9;
}

double CavityParams::mode_spacing() const { return kPi / radius; }
double CavityParams::eta_squared() const { return 2.0 * g * mode_spacing(); }

void CavityParams::validate() const {
    if (!(omega0 > 0.0) || !std::isfinite(omega0))
        throw std::invalid_argument("CavityParams: omega0 must be positive and finite");
    if (!(g > 0.0) || !std::isfinite(g))
        throw std::invalid_argument("CavityParams: g must be positive and finite");
    if (!(radius > 0.0) || !std::isfinite(radius))
        throw std::invalid_argument("CavityParams: radius must be positive and finite");
}

void SpectrumOptions::validate() const {
    if (!(truncation_eps > 0.0) || truncation_eps > 1e-2)
        throw std::invalid_argument("SpectrumOptions: truncation_eps must lie in (0, 1e-2]");
    if (!(root_rel_tol > 0.0) || root_rel_tol > 1e-6)
        throw std::invalid_argument("SpectrumOptions: root_rel_tol must lie in (0, 1e-6]");
    if (max_roots < 2)
        throw std::invalid_argument("SpectrumOptions: max_roots too small");
}

std::vector<BareMode> bare_modes(const CavityParams& params, int count) {
    params.validate();
    if (count < 1) throw std::invalid_argument("bare_modes: count must be >= 1");
    const double eta = std::sqrt(params.eta_squared());
    std::vector<BareMode> modes;
    modes.reserve(static_cast<std::size_t>(count));
    for (int k = 1; k <= count; ++k) {
        const double wk = kPi * k / params.radius;
        modes.push_back({k, wk, eta * wk});
    }
    return modes;
}

double secular_residual(const CavityParams& params, double omega) {
    params.validate();
    if (!(omega > 0.0) || !std::isfinite(omega))
        throw std::invalid_argument("secular_residual: omega must be positive and finite");
    const double theta = params.radius * omega;
    const double s = std::sin(theta);
    if (std::fabs(s) < kPoleGuard)
        throw std::domain_error("secular_residual: omega within guard band of a cot pole");
    const double pig = kPi * params.g;
    return std::cos(theta) / s - omega / pig
         - (1.0 / theta) * (1.0 - params.radius * params.omega0 * params.omega0 / pig);
}

namespace {

// root of the secular equation inside ((k pi)/R, ((k+1) pi)/R)
double root_in_interval(const CavityParams& p, int k, double rel_tol) {
    const double dp = kPi / p.radius;
    // the root above pole k sits ~ g R/(k+1) away (in R*Omega units); in the
    // weak-coupling limit that distance undercuts the default guard band
    const double root_gap = 0.05 * p.g * p.radius / (k + 1.0);
    const double guard = std::max(std::min(kPoleGuard * kPi, root_gap),
                                  8.0 * 2.2e-16 * (k + 1.0) * kPi) / kPi;
    const double a = (k + guard) * dp;
    const double b = (k + 1.0 - guard) * dp;
    auto f = [&p](double w) {
        const double theta = p.radius * w;
        const double pig = kPi * p.g;
        return std::cos(theta) / std::sin(theta) - w / pig
             - (1.0 / theta) * (1.0 - p.radius * p.omega0 * p.omega0 / pig);
    };
    const double fa = f(a), fb = f(b);
    if ((fa > 0.0) == (fb > 0.0))
        throw std::runtime_error("normal_mode_frequencies: interval " + std::to_string(k)
                                 + " does not bracket a root (guard-band failure)");
    RootOptions opt;
    opt.rel_tol = rel_tol;
    return find_bracketed_root(f, a, b, opt);
}

} // namespace

std::vector<double> normal_mode_frequencies(const CavityParams& params,
                                            int r_max, double rel_tol) {
    params.validate();
    if (r_max < 0) throw std::invalid_argument("normal_mode_frequencies: r_max must be >= 0");
    std::vector<double> roots;
    roots.reserve(static_cast<std::size_t>(r_max) + 1);
    for (int k = 0; k <= r_max; ++k) {
        double w = root_in_interval(params, k, rel_tol);
        if (!roots.empty() && w <= roots.back())
            throw std::runtime_error("normal_mode_frequencies: roots not strictly increasing");
        roots.push_back(w);
    }
    return roots;
}

double spectral_weight(const CavityParams& params, double omega_r) {
    const double eta2 = params.eta_squared();
    const double w2 = omega_r * omega_r;
    const double w02 = params.omega0 * params.omega0;
    const double detune = w2 - w02;
    const double den = detune * detune + 0.5 * eta2 * (3.0 * w2 - w02)
                     + kPi * kPi * params.g * params.g * w2;
    return eta2 * w2 / den;
}

double mixing_coefficient(const CavityParams& params, double omega_r, int k) {
    if (k < 1) throw std::invalid_argument("mixing_coefficient: k must be >= 1");
    const double wk = kPi * k / params.radius;
    const double den = wk * wk - omega_r * omega_r;
    if (std::fabs(den) < 1e-12 * wk * wk)
        throw std::domain_error("mixing_coefficient: resonant denominator omega_k^2 ~ Omega_r^2");
    const double ck = std::sqrt(params.eta_squared()) * wk;
    return ck / den * std::sqrt(spectral_weight(params, omega_r));
}

ModeSpectrum::ModeSpectrum(CavityParams params, SpectrumOptions options,
                           std::vector<double> frequencies, std::vector<double> weights)
    : params_(params), options_(options),
      frequencies_(std::move(frequencies)), weights_(std::move(weights)) {
    if (frequencies_.empty() || frequencies_.size() != weights_.size())
        throw std::invalid_argument("ModeSpectrum: frequency/weight size mismatch");
    double sum = 0.0;
    for (std::size_t r = 0; r < frequencies_.size(); ++r) {
        if (r > 0 && frequencies_[r] <= frequencies_[r - 1])
            throw std::invalid_argument("ModeSpectrum: frequencies not strictly increasing");
        if (!(weights_[r] > 0.0) || !(weights_[r] < 1.0))
            throw std::invalid_argument("ModeSpectrum: weight outside (0, 1)");
        sum += weights_[r];
    }
    weight_sum_ = sum;
    tail_mass_ = std::max(0.0, 1.0 - sum);
}

double ModeSpectrum::tail_estimate() const {
    // sum_{r > r_max} eta^2 / Omega_r^2 with Omega_r ~ r pi / R
    const double eta2 = params_.eta_squared();
    const double r0 = static_cast<double>(frequencies_.size());
    const double scale = params_.radius / kPi;
    // sum_{r >= r0} 1/r^2 ~ 1/r0 + 1/(2 r0^2)
    return eta2 * scale * scale * (1.0 / r0 + 0.5 / (r0 * r0));
}

ModeSpectrum build_spectrum(const CavityParams& params, const SpectrumOptions& options) {
    params.validate();
    options.validate();
    std::vector<double> freqs, weights;
    // expected count ~ 2 g R / (pi eps); reserve with headroom
    const double est = 2.0 * params.g * params.radius / (kPi * options.truncation_eps);
    freqs.reserve(static_cast<std::size_t>(est * 1.1) + 64);
    weights.reserve(freqs.capacity());

    double sum = 0.0;
    for (std::size_t k = 0;; ++k) {
        if (k >= options.max_roots)
            throw std::runtime_error("build_spectrum: max_roots reached before completeness target");
        const double w = root_in_interval(params, static_cast<int>(k), options.root_rel_tol);
        const double wt = spectral_weight(params, w);
        freqs.push_back(w);
        weights.push_back(wt);
        sum += wt;
        if (sum >= 1.0 - options.truncation_eps) break;
    }
    return ModeSpectrum(params, options, std::move(freqs), std::move(weights));
}

} // namespace cavent
