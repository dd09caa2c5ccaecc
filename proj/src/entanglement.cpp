#include "cavent/entanglement.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cavent {

namespace {
constexpr double kPi = std::numbers::pi;
using cplx = std::complex<double>;
}

void InitialState::validate() const {
    if (!(xi >= 0.0) || !(xi <= 1.0))
        throw std::invalid_argument("InitialState: xi must lie in [0, 1]");
    if (!(phi >= 0.0) || !(phi < 2.0 * kPi))
        throw std::invalid_argument("InitialState: phi must lie in [0, 2 pi)");
}

AtomPairAmplitudes atom_amplitudes(cplx f00_value, double t, double omega0,
                                   const InitialState& state) {
    state.validate();
    const cplx atomic = std::polar(1.0, -omega0 * t);
    const cplx stay = 0.5 * (atomic + f00_value);
    const cplx swap = 0.5 * (f00_value - atomic);
    const cplx ca = std::sqrt(state.xi);
    const cplx cb = std::sqrt(1.0 - state.xi) * std::polar(1.0, state.phi);
    AtomPairAmplitudes out;
    out.a = ca * stay + cb * swap;
    out.b = ca * swap + cb * stay;
    out.field_weight = 1.0 - std::norm(out.a) - std::norm(out.b);
    return out;
}

double concurrence(const AtomPairAmplitudes& amps, double* raw) {
    const double c = 2.0 * std::abs(amps.a * amps.b);
    if (raw) *raw = c;
    return std::clamp(c, 0.0, 1.0);
}

Eigen::Matrix4cd reduced_density(const AtomPairAmplitudes& amps) {
    Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
    rho(0, 0) = amps.field_weight;
    rho(1, 1) = std::norm(amps.a);
    rho(2, 2) = std::norm(amps.b);
    rho(1, 2) = amps.a * std::conj(amps.b);
    rho(2, 1) = std::conj(amps.a) * amps.b;
    return rho;
}

double concurrence_wootters(const Eigen::Matrix4cd& rho) {
    // sigma_y (x) sigma_y in the basis {|0,0>, |1,0>, |0,1>, |1,1>}
    Eigen::Matrix4cd flip = Eigen::Matrix4cd::Zero();
    flip(0, 3) = -1.0; flip(1, 2) = 1.0; flip(2, 1) = 1.0; flip(3, 0) = -1.0;
    const Eigen::Matrix4cd R = rho * flip * rho.conjugate() * flip;
    Eigen::ComplexEigenSolver<Eigen::Matrix4cd> solver(R, false);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("concurrence_wootters: eigensolver failed");
    // R has a nonnegative spectrum; eigenvalues within solver noise of zero
    // must be zeroed before the square root amplifies them to ~sqrt(eps)
    const double floor = 64.0 * 2.2e-16 * R.cwiseAbs().maxCoeff();
    std::array<double, 4> lam{};
    for (int i = 0; i < 4; ++i) {
        const double v = solver.eigenvalues()[i].real();
        lam[i] = v > floor ? std::sqrt(v) : 0.0;
    }
    std::sort(lam.begin(), lam.end(), std::greater<>());
    const double c = lam[0] - lam[1] - lam[2] - lam[3];
    return std::clamp(c, 0.0, 1.0);
}

std::vector<ConcurrencePoint> concurrence_series(const SurvivalAmplitudeFn& f00_fn,
                                                 double omega0,
                                                 const InitialState& state,
                                                 std::span<const double> t_grid) {
    state.validate();
    std::vector<ConcurrencePoint> out;
    out.reserve(t_grid.size());
    for (double t : t_grid) {
        const auto amps = atom_amplitudes(f00_fn(t), t, omega0, state);
        out.push_back({t, concurrence(amps)});
    }
    return out;
}

namespace {

struct ZeroCertificates {
    double balance;
    double phase;
};

// residuals of the modulus-balance and phase-matching zero conditions,
// evaluated for whichever amplitude (A or B) is closer to zero
ZeroCertificates certificates(cplx f, double t, double omega0, const InitialState& st,
                              const AtomPairAmplitudes& amps) {
    const cplx atomic = std::polar(1.0, -omega0 * t);
    const double mod2 = std::norm(f);
    const double cross = 2.0 * (f * std::conj(atomic)).real();  // 2 Re(f e^{i omega0 t})
    const double sign = (std::abs(amps.a) <= std::abs(amps.b)) ? +1.0 : -1.0;
    ZeroCertificates out;
    out.balance = std::fabs((2.0 * st.xi - 1.0) * (mod2 + 1.0) + sign * cross);
    const cplx lhs = std::sqrt(1.0 - st.xi) * std::polar(1.0, st.phi) * (f - atomic);
    const cplx rhs = std::sqrt(st.xi) * (f + atomic);
    out.phase = std::abs(lhs + sign * rhs);
    return out;
}

// golden-section minimization of s(t) on [a, b]
template <class S>
double golden_min(S&& s, double a, double b, double rel_tol) {
    constexpr double inv_phi = 0.6180339887498949;
    double x1 = b - inv_phi * (b - a), x2 = a + inv_phi * (b - a);
    double f1 = s(x1), f2 = s(x2);
    while (b - a > rel_tol * std::max(1.0, std::fabs(b))) {
        if (f1 < f2) {
            b = x2; x2 = x1; f2 = f1;
            x1 = b - inv_phi * (b - a); f1 = s(x1);
        } else {
            a = x1; x1 = x2; f1 = f2;
            x2 = a + inv_phi * (b - a); f2 = s(x2);
        }
    }
    return 0.5 * (a + b);
}

} // namespace

std::vector<DisentanglementEvent> find_disentanglement_times(
    const SurvivalAmplitudeFn& f00_fn, double omega0, const InitialState& state,
    double t_begin, double t_end, double tol, const ZeroScanOptions& opt) {
    state.validate();
    if (!(t_end > t_begin) || !std::isfinite(t_begin) || !std::isfinite(t_end))
        throw std::invalid_argument("find_disentanglement_times: bad window");
    if (!(tol > 0.0))
        throw std::invalid_argument("find_disentanglement_times: tol must be positive");

    auto product = [&](double t) {
        const auto amps = atom_amplitudes(f00_fn(t), t, omega0, state);
        return std::abs(amps.a) * std::abs(amps.b);
    };
    auto emit = [&](double t, std::vector<DisentanglementEvent>& events) {
        const cplx f = f00_fn(t);
        const auto amps = atom_amplitudes(f, t, omega0, state);
        const double c = concurrence(amps);
        if (c >= tol) return;
        if (!events.empty() && std::fabs(events.back().t - t) <
                8.0 * opt.refine_tol * std::max(1.0, std::fabs(t)))
            return;  // duplicate of the previous minimum
        const auto cert = certificates(f, t, omega0, state, amps);
        events.push_back({t, c, cert.balance, cert.phase});
    };

    const double period = 2.0 * kPi / omega0;
    const double dt = period / opt.samples_per_period;
    const std::size_t n = static_cast<std::size_t>(std::ceil((t_end - t_begin) / dt)) + 1;

    std::vector<DisentanglementEvent> events;
    double prev2 = product(t_begin);
    double prev1 = product(std::min(t_begin + dt, t_end));
    // window edges count as minima when the product already sits below tol
    emit(t_begin, events);
    for (std::size_t i = 2; i <= n; ++i) {
        const double t = std::min(t_begin + static_cast<double>(i) * dt, t_end);
        const double cur = product(t);
        if (prev1 <= prev2 && prev1 <= cur) {
            const double a = t - 2.0 * dt, b = t;
            const double tmin = golden_min(product, a, b, opt.refine_tol);
            emit(tmin, events);
        }
        prev2 = prev1;
        prev1 = cur;
        if (t >= t_end) break;
    }
    emit(t_end, events);
    return events;
}

} // namespace cavent
