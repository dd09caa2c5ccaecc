#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cavent/oracle.hpp"
#include "cavent/spectrum.hpp"

#include <cmath>
#include <numbers>

using namespace cavent;

namespace {
constexpr double kPi = std::numbers::pi;

// frozen roots/weights for (omega0=1, g=1, R=1), computed independently with
// 25-digit arithmetic from the secular equation and the weight closed form
constexpr double kRoots111[6] = {
    0.69298643152818256, 3.768510077122805, 6.7038020606524585,
    9.7305903911269091, 12.803991502038867, 15.901420676110235};
constexpr double kWeights111[4] = {
    0.47188420502081791, 0.20045094320047899, 0.10103583538569641,
    0.056121839763473506};
}

TEST_CASE("bare modes: frequencies and couplings") {
    // R = pi: omega_k = k, mode spacing 1, eta = sqrt(2 g)
    const CavityParams p{1.0, 1.0, kPi};
    const auto modes = bare_modes(p, 3);
    REQUIRE(modes.size() == 3);
    CHECK(modes[0].k == 1);
    CHECK(modes[0].omega == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(modes[0].coupling == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));

    // R = 1: omega_3 = 3 pi, c_3 = 3 pi sqrt(2 pi)
    const CavityParams q{1.0, 1.0, 1.0};
    const auto m3 = bare_modes(q, 3)[2];
    CHECK(m3.omega == doctest::Approx(3.0 * kPi).epsilon(1e-14));
    CHECK(m3.coupling == doctest::Approx(3.0 * kPi * std::sqrt(2.0 * kPi)).epsilon(1e-14));

    // c_k / omega_k is k-independent
    const auto many = bare_modes(q, 40);
    for (const auto& m : many)
        CHECK(m.coupling / m.omega == doctest::Approx(std::sqrt(2.0 * kPi)).epsilon(1e-13));

    CHECK_THROWS_AS(bare_modes(q, 0), std::invalid_argument);
    CHECK_THROWS_AS(bare_modes(CavityParams{-1.0, 1.0, 1.0}, 2), std::invalid_argument);
    CHECK_THROWS_AS(bare_modes(CavityParams{1.0, 0.0, 1.0}, 2), std::invalid_argument);
}

TEST_CASE("secular residual: roots, poles, sign structure") {
    const CavityParams p{1.0, 1.0, 1.0};

    // residual vanishes at the frozen roots
    for (double w : kRoots111)
        CHECK(std::fabs(secular_residual(p, w)) < 1e-10 * std::max(1.0, w / (kPi * p.g)));

    // sign flips across each cotangent pole
    for (int k = 1; k <= 5; ++k) {
        const double left = k * kPi - 1e-4, right = k * kPi + 1e-4;
        CHECK(secular_residual(p, left) < 0.0);
        CHECK(secular_residual(p, right) > 0.0);
    }

    // guard band around poles signals instead of returning garbage
    CHECK_THROWS_AS(secular_residual(p, kPi * (1.0 + 1e-13)), std::domain_error);
    CHECK_THROWS_AS(secular_residual(p, -1.0), std::invalid_argument);

    // sign-scan oracle: F changes sign exactly once on (0, pi)
    int flips = 0;
    double prev = secular_residual(p, 1e-4);
    for (int i = 1; i < 10000; ++i) {
        const double w = 1e-4 + (kPi - 2e-4) * i / 10000.0;
        const double cur = secular_residual(p, w);
        if ((cur > 0.0) != (prev > 0.0)) ++flips;
        prev = cur;
    }
    CHECK(flips == 1);
}

TEST_CASE("normal mode frequencies: interlacing and limits") {
    const CavityParams p{1.0, 1.0, 1.0};
    const auto roots = normal_mode_frequencies(p, 50);
    REQUIRE(roots.size() == 51);
    for (std::size_t r = 0; r < roots.size(); ++r) {
        if (r > 0) CHECK(roots[r] > roots[r - 1]);
        CHECK(roots[r] > r * kPi);
        CHECK(roots[r] < (r + 1) * kPi);
    }
    for (int r = 0; r < 6; ++r)
        CHECK(roots[r] == doctest::Approx(kRoots111[r]).epsilon(1e-12));

    // decoupled limit: one root pinned at omega0, the rest at the bare poles
    const CavityParams weak{1.0, 1e-8, 1.0};
    const auto wr = normal_mode_frequencies(weak, 4);
    CHECK(std::fabs(wr[0] - 1.0) < 1e-6);
    for (int r = 1; r <= 4; ++r) CHECK(std::fabs(wr[r] - r * kPi) < 1e-6);
}

TEST_CASE("spectral weights: frozen values, completeness, decay") {
    const CavityParams p{1.0, 1.0, 1.0};
    const auto roots = normal_mode_frequencies(p, 3);
    for (int r = 0; r < 4; ++r)
        CHECK(spectral_weight(p, roots[r]) == doctest::Approx(kWeights111[r]).epsilon(1e-12));

    SpectrumOptions opt;
    opt.truncation_eps = 1e-4;
    const ModeSpectrum spec = build_spectrum(p, opt);
    CHECK(spec.weight_sum() >= 1.0 - opt.truncation_eps);
    CHECK(spec.weight_sum() <= 1.0);
    CHECK(spec.tail_mass() >= 0.0);
    CHECK(spec.tail_mass() < opt.truncation_eps);
    // analytic tail estimate tracks the actual dropped mass
    CHECK(spec.tail_estimate() == doctest::Approx(spec.tail_mass()).epsilon(0.2));

    // weight decay: (t0r)^2 Omega_r^2 bounded by eta^2 (1 + o(1)) at large r
    const double eta2 = p.eta_squared();
    for (int r = spec.r_max() - 20; r <= spec.r_max(); ++r) {
        const double w = spec.frequencies()[r];
        CHECK(spec.weights()[r] * w * w <= eta2 * 1.01);
    }

    // decoupled limit: all weight on the root nearest omega0
    const CavityParams weak{1.0, 1e-8, 1.0};
    const auto wr = normal_mode_frequencies(weak, 0);
    CHECK(spectral_weight(weak, wr[0]) > 1.0 - 1e-6);
}

TEST_CASE("mixing coefficients: orthogonality sums") {
    const CavityParams p{1.0, 1.0, 1.0};
    SpectrumOptions opt;
    opt.truncation_eps = 1e-4;
    const ModeSpectrum spec = build_spectrum(p, opt);

    // sum_r t_k^r t_l^r -> delta_kl within truncation error for small k, l
    for (int k = 1; k <= 2; ++k) {
        for (int l = k; l <= 3; ++l) {
            double s = 0.0;
            for (int r = 0; r <= spec.r_max(); ++r) {
                const double w = spec.frequencies()[r];
                s += mixing_coefficient(p, w, k) * mixing_coefficient(p, w, l);
            }
            CHECK(std::fabs(s - (k == l ? 1.0 : 0.0)) < 5e-3);
        }
    }
    CHECK_THROWS_AS(mixing_coefficient(p, kPi * (1.0 + 1e-15), 1), std::domain_error);
    CHECK_THROWS_AS(mixing_coefficient(p, 1.0, 0), std::invalid_argument);
}

TEST_CASE("spectrum matches the finite-N matrix oracle") {
    const CavityParams p{1.0, 1.0, 1.0};
    const auto spec = build_spectrum(p, {1e-4, 1e-12});
    const auto sys = finite_n_diagonalize(p, 1500, true);

    for (int r = 0; r < 12; ++r) {
        CHECK(std::fabs(sys.frequencies[r] - spec.frequencies()[r]) /
                  spec.frequencies()[r] < 1e-3);
    }
    // (t00)^2 and t_1^0 against the oracle eigenvector; the per-mode sign of
    // t_k^r is a gauge (q_k -> -q_k), so magnitudes are compared
    const double v0 = sys.vectors(0, 0);
    CHECK(std::fabs(v0 * v0 - spec.weights()[0]) < 1e-3);
    const double t10 = mixing_coefficient(p, spec.frequencies()[0], 1);
    CHECK(std::fabs(std::fabs(sys.vectors(1, 0)) - std::fabs(t10)) < 1e-3);
}

TEST_CASE("spectrum construction is deterministic and validated") {
    const CavityParams p{1.0, 0.5, 2.0};
    const auto a = build_spectrum(p, {1e-4, 1e-12});
    const auto b = build_spectrum(p, {1e-4, 1e-12});
    REQUIRE(a.r_max() == b.r_max());
    for (int r = 0; r <= a.r_max(); ++r) {
        CHECK(a.frequencies()[r] == b.frequencies()[r]);
        CHECK(a.weights()[r] == b.weights()[r]);
    }
    for (double w : a.weights()) {
        CHECK(w > 0.0);
        CHECK(w < 1.0);
    }
    CHECK_THROWS_AS(build_spectrum(p, SpectrumOptions{0.0, 1e-12}), std::invalid_argument);
    CHECK_THROWS_AS(build_spectrum(p, SpectrumOptions{1e-4, 1e-12, 10}), std::runtime_error);
}
