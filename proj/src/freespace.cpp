#include "cavent/freespace.hpp"
#include "cavent/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace cavent {

namespace {
constexpr double kPi = std::numbers::pi;
// beyond X_end the integrand tail is treated analytically once t*X >= kTailPhase
constexpr double kTailPhase = 30.0;
}

void QuadratureConfig::validate() const {
    if (!(abs_tol > 0.0) || abs_tol > 1e-2)
        throw std::invalid_argument("QuadratureConfig: abs_tol must lie in (0, 1e-2]");
    if (!(t_min > 0.0))
        throw std::invalid_argument("QuadratureConfig: t_min must be positive");
    if (tail_cutoff < 0.0 || !std::isfinite(tail_cutoff))
        throw std::invalid_argument("QuadratureConfig: tail_cutoff must be finite and >= 0");
    if (max_panel_depth < 4)
        throw std::invalid_argument("QuadratureConfig: max_panel_depth must be >= 4");
}

std::complex<double> f00_free(double omega0, double g, double t,
                              const QuadratureConfig& cfg) {
    cfg.validate();
    if (!(omega0 > 0.0) || !(g > 0.0))
        throw std::invalid_argument("f00_free: omega0 and g must be positive");
    if (!(t >= 0.0) || !std::isfinite(t))
        throw std::invalid_argument("f00_free: t must be finite and >= 0");

    const double w02 = omega0 * omega0;
    const double pg2 = kPi * kPi * g * g;
    auto integrand = [=](double x) {
        const double d = x * x - w02;
        const double phi = 2.0 * g * x * x / (d * d + pg2 * x * x);
        return std::polar(phi, -x * t);
    };

    const double t_eff = std::max(t, cfg.t_min);
    // tail model psi(x) = 2g/x^2 + a4/x^4 (the two leading asymptotic orders
    // of the integrand); beyond X the residual phi - psi is O(1/x^6).
    // Choose X so the dropped residual integral is < abs_tol/16.
    const double b = pg2 - 2.0 * w02;
    const double a4 = -2.0 * g * b;
    const double c6 = 3.0 * g * (b * b + w02 * w02);
    const double x_core = std::max({6.0 * omega0, 6.0 * kPi * g, 10.0});
    const double x_sextic = std::pow(c6 * 16.0 / (5.0 * cfg.abs_tol), 0.2);
    double x_end = std::max({x_sextic, 2.0 * x_core, kTailPhase / t_eff, cfg.tail_cutoff});
    const bool series_tail = t > cfg.t_min;  // else t*x_end may fall below kTailPhase
    if (!series_tail) {
        // tail will be dropped, not summed: need |tail| ~ 2g/X < abs_tol/2
        x_end = std::max(x_end, 4.0 * g / cfg.abs_tol);
    }

    // panel bounds: short panels over the resonance core, then capped growth;
    // never longer than half an oscillation period pi/t
    const double h_osc = kPi / t_eff;
    std::vector<double> bounds{0.0};
    while (bounds.back() < x_end) {
        const double x = bounds.back();
        const double h = std::min(h_osc, std::max(x_core / 8.0, 0.5 * x));
        bounds.push_back(std::min(x + h, x_end));
    }
    std::complex<double> total =
        integrate_panels(integrand, bounds, 0.5 * cfg.abs_tol, cfg.max_panel_depth);

    // analytic tail of psi(x) = 2g/x^2 + a4/x^4 by repeated integration by
    // parts: int_X^inf psi e^{-ixt} dx = sum_j psi^(j)(X) e^{-iXt}/(it)^{j+1},
    // an asymptotic series valid for t X >> 1; otherwise (only reachable when
    // t <= t_min) the whole tail is dropped with |tail| ~ 2g/X < abs_tol/2.
    if (series_tail) {
        const std::complex<double> it(0.0, t);
        const std::complex<double> phase = std::polar(1.0, -x_end * t);
        std::complex<double> inv_pow = 1.0 / it;
        double d2 = 2.0 * g / (x_end * x_end);                          // (2g/x^2)^(j)
        double d4 = a4 / (x_end * x_end * x_end * x_end);               // (a4/x^4)^(j)
        std::complex<double> tail = 0.0;
        for (int j = 0; j < 16; ++j) {
            const std::complex<double> term = (d2 + d4) * inv_pow * phase;
            tail += term;
            if (std::abs(term) < cfg.abs_tol / 16.0) break;
            d2 *= -static_cast<double>(j + 2) / x_end;
            d4 *= -static_cast<double>(j + 4) / x_end;
            inv_pow /= it;
        }
        total += tail;
    }
    return total;
}

double asymptotic_concurrence(double xi, double phi) {
    if (!(xi >= 0.0) || !(xi <= 1.0))
        throw std::invalid_argument("asymptotic_concurrence: xi must lie in [0, 1]");
    const double c = 0.5 - std::sqrt(xi * (1.0 - xi)) * std::cos(phi);
    return std::clamp(c, 0.0, 1.0);
}

} // namespace cavent
