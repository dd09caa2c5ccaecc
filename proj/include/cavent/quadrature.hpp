/*
 * quadrature.hpp — adaptive Gauss-Kronrod (G7,K15) panels for complex-valued
 * integrands on the real line.
 */
#pragma once

#include <cmath>
#include <complex>
#include <span>
#include <stdexcept>

namespace cavent {

namespace gk {

// QUADPACK G7,K15 abscissae/weights on [-1, 1]
inline constexpr double kNodes[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};
inline constexpr double kKronrod[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
inline constexpr double kGauss[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

} // namespace gk

struct PanelEstimate {
    std::complex<double> value;
    double error;
};

template <class F>
PanelEstimate gk15(F&& f, double a, double b) {
    const double h = 0.5 * (b - a), c = 0.5 * (a + b);
    std::complex<double> res_k = 0.0, res_g = 0.0;
    for (int i = 0; i < 7; ++i) {
        const auto f1 = f(c - h * gk::kNodes[i]);
        const auto f2 = f(c + h * gk::kNodes[i]);
        res_k += gk::kKronrod[i] * (f1 + f2);
        if (i % 2 == 1) res_g += gk::kGauss[i / 2] * (f1 + f2);
    }
    const auto fc = f(c);
    res_k = (res_k + gk::kKronrod[7] * fc) * h;
    res_g = (res_g + gk::kGauss[3] * fc) * h;
    return {res_k, std::abs(res_k - res_g)};
}

/// Recursively bisect [a, b] until the Kronrod error estimate meets abs_tol.
/// Throws std::runtime_error once max_depth is exceeded.
template <class F>
std::complex<double> integrate_adaptive(F&& f, double a, double b,
                                        double abs_tol, int max_depth) {
    auto est = gk15(f, a, b);
    if (est.error <= abs_tol) return est.value;
    if (max_depth <= 0)
        throw std::runtime_error("integrate_adaptive: panel refinement depth exceeded");
    const double m = 0.5 * (a + b);
    return integrate_adaptive(f, a, m, 0.5 * abs_tol, max_depth - 1)
         + integrate_adaptive(f, m, b, 0.5 * abs_tol, max_depth - 1);
}

/// Integrate over consecutive panels given by `bounds` (ascending), with an
/// equal share of abs_tol per panel.
template <class F>
std::complex<double> integrate_panels(F&& f, std::span<const double> bounds,
                                      double abs_tol, int max_depth) {
    if (bounds.size() < 2)
        throw std::invalid_argument("integrate_panels: need at least two bounds");
    const double panel_tol = abs_tol / static_cast<double>(bounds.size() - 1);
    std::complex<double> total = 0.0;
    for (std::size_t i = 0; i + 1 < bounds.size(); ++i)
        total += integrate_adaptive(f, bounds[i], bounds[i + 1], panel_tol, max_depth);
    return total;
}

} // namespace cavent
