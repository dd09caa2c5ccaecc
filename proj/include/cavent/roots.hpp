#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace cavent {

struct RootOptions {
    double rel_tol = 1e-12;   ///< relative tolerance on the root location
    int max_iter = 128;
};

/// Brent's method on a bracketing interval [a, b] with f(a)·f(b) < 0.
///
/// Hybrid inverse-quadratic / secant / bisection; derivative-free and
/// guaranteed to stay inside the bracket. Throws std::invalid_argument
/// if the endpoints do not straddle a sign change.
template <class F>
double find_bracketed_root(F&& f, double a, double b, const RootOptions& opt = {}) {
    double fa = f(a), fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if ((fa > 0.0) == (fb > 0.0))
        throw std::invalid_argument("find_bracketed_root: endpoints do not bracket a sign change");

    double c = a, fc = fa;
    double d = b - a, e = d;
    const double eps = std::numeric_limits<double>::epsilon();

    for (int iter = 0; iter < opt.max_iter; ++iter) {
        if ((fb > 0.0) == (fc > 0.0)) { c = a; fc = fa; d = b - a; e = d; }
        if (std::fabs(fc) < std::fabs(fb)) {
            a = b; b = c; c = a;
            fa = fb; fb = fc; fc = fa;
        }
        double tol1 = 2.0 * eps * std::fabs(b) + 0.5 * opt.rel_tol * std::fabs(b);
        double xm = 0.5 * (c - b);
        if (std::fabs(xm) <= tol1 || fb == 0.0) return b;

        if (std::fabs(e) >= tol1 && std::fabs(fa) > std::fabs(fb)) {
            // inverse quadratic interpolation (secant when a == c)
            double s = fb / fa, p, q;
            if (a == c) {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                double qq = fa / fc, r = fb / fc;
                p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
                q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0) q = -q;
            p = std::fabs(p);
            if (2.0 * p < std::min(3.0 * xm * q - std::fabs(tol1 * q), std::fabs(e * q))) {
                e = d; d = p / q;
            } else {
                d = xm; e = d;
            }
        } else {
            d = xm; e = d;
        }
        a = b; fa = fb;
        b += (std::fabs(d) > tol1) ? d : std::copysign(tol1, xm);
        fb = f(b);
        if (fb == 0.0) return b;
    }
    return b;  // max_iter exhausted; best estimate
}

} // namespace cavent
