#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cavent/dynamics.hpp"
#include "cavent/entanglement.hpp"
#include "cavent/freespace.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include <Eigen/Eigenvalues>

using namespace cavent;
using cplx = std::complex<double>;

namespace {
constexpr double kPi = std::numbers::pi;

AtomPairAmplitudes random_amps(std::mt19937& rng) {
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    const double pa = 0.98 * uni(rng);
    const double pb = (1.0 - pa) * uni(rng);
    return {std::polar(std::sqrt(pa), 2.0 * kPi * uni(rng)),
            std::polar(std::sqrt(pb), 2.0 * kPi * uni(rng)), 1.0 - pa - pb};
}
}

TEST_CASE("atom amplitudes: initial conditions and special states") {
    // t = 0 with exact f00 = 1: A = sqrt(xi), B = sqrt(1-xi) e^{i phi}, E = 0
    for (double xi : {0.0, 0.3, 0.5, 1.0}) {
        const InitialState st{xi, 1.1};
        const auto amps = atom_amplitudes(cplx(1.0, 0.0), 0.0, 1.0, st);
        CHECK(std::abs(amps.a - std::sqrt(xi)) < 1e-15);
        CHECK(std::abs(amps.b - std::sqrt(1.0 - xi) * std::polar(1.0, st.phi)) < 1e-15);
        CHECK(std::fabs(amps.field_weight) < 1e-15);
    }

    // xi = 0: A = swap, B = stay
    const cplx f{0.42, -0.33};
    const double t = 1.7, w0 = 1.0;
    const cplx atomic = std::polar(1.0, -w0 * t);
    const auto amps0 = atom_amplitudes(f, t, w0, {0.0, 0.0});
    CHECK(std::abs(amps0.a - 0.5 * (f - atomic)) < 1e-15);
    CHECK(std::abs(amps0.b - 0.5 * (f + atomic)) < 1e-15);

    // antisymmetric state: field never populated, |A| = |B| = 1/sqrt(2)
    const auto anti = atom_amplitudes(f, t, w0, {0.5, kPi});
    CHECK(std::fabs(std::abs(anti.a) - 1.0 / std::sqrt(2.0)) < 1e-12);
    CHECK(std::fabs(std::abs(anti.b) - 1.0 / std::sqrt(2.0)) < 1e-12);
    CHECK(std::fabs(anti.field_weight) < 1e-12);

    CHECK_THROWS_AS(atom_amplitudes(f, t, w0, InitialState{-0.1, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(atom_amplitudes(f, t, w0, InitialState{0.5, 7.0}), std::invalid_argument);
}

TEST_CASE("concurrence: closed form and special-case identities") {
    // t = 0: C = 2 sqrt(xi(1-xi))
    for (double xi : {0.0, 0.25, 0.5, 0.8}) {
        const auto amps = atom_amplitudes(cplx(1.0, 0.0), 0.0, 1.0, {xi, 0.4});
        CHECK(concurrence(amps) ==
              doctest::Approx(2.0 * std::sqrt(xi * (1.0 - xi))).epsilon(1e-12));
    }

    // identities against the same f00 input, pointwise to 1e-12
    const auto spec = build_spectrum({1.0, 1.0, 1.0}, {1e-3, 1e-12});
    for (double t : {0.0, 0.4, 1.1, 3.3, 7.9}) {
        const cplx f = f00(spec, t);
        const double c_sym = concurrence(atom_amplitudes(f, t, 1.0, {0.5, 0.0}));
        CHECK(std::fabs(c_sym - std::norm(f)) < 1e-12);
        const double c_anti = concurrence(atom_amplitudes(f, t, 1.0, {0.5, kPi}));
        CHECK(std::fabs(c_anti - 1.0) < 1e-12);
        const double c_dis = concurrence(atom_amplitudes(f, t, 1.0, {0.0, 0.0}));
        CHECK(std::fabs(c_dis - 0.5 * std::abs(f * f - std::polar(1.0, -2.0 * t))) < 1e-12);
    }

    // phase invariance and label-swap symmetry
    std::mt19937 rng(7);
    for (int i = 0; i < 200; ++i) {
        auto amps = random_amps(rng);
        const double c = concurrence(amps);
        const cplx phase = std::polar(1.0, 2.0);
        AtomPairAmplitudes rotated{amps.a * phase, amps.b * phase, amps.field_weight};
        CHECK(std::fabs(concurrence(rotated) - c) < 1e-14);
        AtomPairAmplitudes swapped{amps.b, amps.a, amps.field_weight};
        CHECK(std::fabs(concurrence(swapped) - c) < 1e-14);
    }

    // C(xi, phi) = C(1-xi, -phi) pointwise
    const cplx f = f00(spec, 2.2);
    for (double xi : {0.1, 0.35, 0.6}) {
        for (double phi : {0.3, 1.8, 4.0}) {
            const double c1 = concurrence(atom_amplitudes(f, 2.2, 1.0, {xi, phi}));
            const double c2 =
                concurrence(atom_amplitudes(f, 2.2, 1.0, {1.0 - xi, 2.0 * kPi - phi}));
            CHECK(std::fabs(c1 - c2) < 1e-13);
        }
    }
}

TEST_CASE("reduced density matrix: structure and positivity") {
    std::mt19937 rng(11);
    for (int i = 0; i < 200; ++i) {
        const auto amps = random_amps(rng);
        const Eigen::Matrix4cd rho = reduced_density(amps);
        CHECK(std::fabs(rho.trace().real() - 1.0) < 1e-12);
        CHECK(std::fabs(rho.trace().imag()) < 1e-15);
        CHECK((rho - rho.adjoint()).cwiseAbs().maxCoeff() < 1e-15);
        CHECK(std::fabs(rho(3, 3).real()) < 1e-15);
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(rho);
        CHECK(es.eigenvalues().minCoeff() > -1e-9);
    }

    // t = 0, symmetric state: one-excitation block = [[1,1],[1,1]]/2
    const auto amps = atom_amplitudes(cplx(1.0, 0.0), 0.0, 1.0, {0.5, 0.0});
    const Eigen::Matrix4cd rho = reduced_density(amps);
    CHECK(std::abs(rho(1, 1) - 0.5) < 1e-14);
    CHECK(std::abs(rho(2, 2) - 0.5) < 1e-14);
    CHECK(std::abs(rho(1, 2) - 0.5) < 1e-14);
    CHECK(std::abs(rho(2, 1) - 0.5) < 1e-14);
}

TEST_CASE("Wootters eigenvalue route equals the closed form") {
    std::mt19937 rng(13);
    double worst = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const auto amps = random_amps(rng);
        const double direct = concurrence(amps);
        const double wootters = concurrence_wootters(reduced_density(amps));
        worst = std::max(worst, std::fabs(direct - wootters));
    }
    CHECK(worst < 1e-10);

    // A B = 0: no coherence, concurrence zero
    AtomPairAmplitudes dead{cplx(0.0, 0.0), std::polar(0.6, 1.0), 1.0 - 0.36};
    CHECK(concurrence_wootters(reduced_density(dead)) == doctest::Approx(0.0));

    // maximally entangled antisymmetric state at t = 0
    const auto anti = atom_amplitudes(cplx(1.0, 0.0), 0.0, 1.0, {0.5, kPi});
    CHECK(concurrence_wootters(reduced_density(anti)) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("concurrence bounds on random draws") {
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    const auto spec_a = build_spectrum({1.0, 1.0, 1.0}, {1e-3, 1e-12});
    const auto spec_b = build_spectrum({1.0, 0.3, 0.4}, {1e-3, 1e-12});
    for (int i = 0; i < 10000; ++i) {
        const auto& spec = (i % 2 == 0) ? spec_a : spec_b;
        const double t = 20.0 * uni(rng);
        const InitialState st{uni(rng), 2.0 * kPi * uni(rng) * 0.999999};
        const double c = concurrence(atom_amplitudes(f00(spec, t), t, 1.0, st));
        CHECK(c >= 0.0);
        CHECK(c <= 1.0);
    }
}

TEST_CASE("concurrence series: limiting behaviours") {
    const auto spec = build_spectrum({1.0, 1.0, 1.0}, {1e-4, 1e-12});
    auto cavity_fn = [&spec](double t) { return f00(spec, t); };
    std::vector<double> grid;
    for (double t = 0.0; t <= 10.0 + 1e-9; t += 0.1) grid.push_back(t);

    // antisymmetric initial state: identically 1
    for (const auto& pt : concurrence_series(cavity_fn, 1.0, {0.5, kPi}, grid))
        CHECK(std::fabs(pt.value - 1.0) < 1e-12);

    // free space, symmetric state: decays from 1 toward 0
    auto free_fn = [](double t) { return f00_free(1.0, 1.0, t); };
    const auto sym = concurrence_series(free_fn, 1.0, {0.5, 0.0}, grid);
    CHECK(sym.front().value == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(sym.back().value < 0.05);

    // free space, disentangled start: rises from 0 toward 1/2
    const auto dis = concurrence_series(free_fn, 1.0, {0.0, 0.0}, grid);
    CHECK(dis.front().value < 1e-6);
    CHECK(dis.back().value == doctest::Approx(0.5).epsilon(0.02));
}

TEST_CASE("disentanglement times: certificates and edge handling") {
    auto free_fn = [](double t) { return f00_free(1.0, 1.0, t); };

    // antisymmetric state never disentangles
    CHECK(find_disentanglement_times(free_fn, 1.0, {0.5, kPi}, 0.0, 12.0, 1e-6).empty());

    // xi = 0 starts disentangled: t = 0 is reported
    const auto at_zero = find_disentanglement_times(free_fn, 1.0, {0.0, 0.0}, 0.0, 2.0, 1e-6);
    REQUIRE(!at_zero.empty());
    CHECK(at_zero.front().t == doctest::Approx(0.0));
    CHECK(at_zero.front().concurrence < 1e-6);

    // every reported zero carries small residuals of both zero conditions
    const double tol = 1e-6;
    const auto events =
        find_disentanglement_times(free_fn, 1.0, {0.5, kPi / 6.0}, 0.0, 12.0, tol);
    for (const auto& ev : events) {
        CHECK(ev.concurrence < tol);
        CHECK(ev.balance_residual < 10.0 * tol);
        CHECK(ev.phase_residual < 10.0 * tol);
    }

    CHECK_THROWS_AS(find_disentanglement_times(free_fn, 1.0, {0.5, 0.0}, 1.0, 1.0, 1e-6),
                    std::invalid_argument);
    CHECK_THROWS_AS(find_disentanglement_times(free_fn, 1.0, {0.5, 0.0}, 0.0, 1.0, 0.0),
                    std::invalid_argument);
}

TEST_CASE("disentanglement times: constructed interior zero") {
    // choose (xi, phi) so that A(t* = 1) = 0 exactly:
    //   e^{i phi} = -sqrt(xi/(1-xi)) (f00 + e^{-i t*})/(f00 - e^{-i t*})
    // with xi fixed by |e^{i phi}| = 1
    auto fn = [](double t) { return f00_free(1.0, 1.0, t); };
    const double tstar = 1.0;
    const cplx f = fn(tstar);
    const cplx atomic = std::polar(1.0, -tstar);
    const double ratio = std::abs(f - atomic) / std::abs(f + atomic);
    const double xi = ratio * ratio / (1.0 + ratio * ratio);
    cplx ephi = -std::sqrt(xi / (1.0 - xi)) * (f + atomic) / (f - atomic);
    double phi = std::arg(ephi);
    if (phi < 0.0) phi += 2.0 * kPi;

    const auto events =
        find_disentanglement_times(fn, 1.0, {xi, phi}, 0.5, 1.5, 1e-5);
    REQUIRE(!events.empty());
    bool found = false;
    for (const auto& ev : events) {
        if (std::fabs(ev.t - tstar) > 1e-3) continue;
        found = true;
        CHECK(ev.concurrence < 1e-5);
        CHECK(ev.balance_residual < 1e-4);
        CHECK(ev.phase_residual < 1e-4);
    }
    CHECK(found);
}
