#include <doctest.h>

#include <cmath>
#include <numbers>

#include "ductwave/coefficients.hpp"
#include "ductwave/errors.hpp"
#include "ductwave/kernels.hpp"
#include "ductwave/sine_kernel.hpp"
#include "ductwave/travwave.hpp"
#include "oracles.hpp"

using namespace ductwave;
constexpr double pi = std::numbers::pi;

// frozen against a high-precision quadrature oracle evaluated before the build
namespace {
constexpr double p_02 = 0.315354906415110822;
constexpr double p_06 = 0.979462150075851334;
constexpr double q_02 = 6.26732744557622061;
constexpr double q_06 = 6.12751267390720077;
constexpr double gamma_06 = 3.26487383358617111;
constexpr double s_06_b0 = -1.31856886081571706;         // with Gamma(0.4, 0)
constexpr double s_06_rounded = -1.31856890915821795;    // with the rounded Gamma 0.4141256
constexpr double amp_02 = 0.0924466500621776966;
constexpr double amp_06 = 0.301129429627187113;
constexpr double gamma_b0 = 0.414125584816973123;
} // namespace

TEST_CASE("quadrature endpoints and parity of P") {
    CHECK(quad_P(0.0) == 0.0);
    CHECK(quad_P(1.0) == doctest::Approx(4.0 * std::sqrt(2.0) / 3.0).epsilon(1e-11));
    CHECK(quad_P(0.2) == doctest::Approx(p_02).epsilon(1e-11));
    CHECK(quad_P(0.6) == doctest::Approx(p_06).epsilon(1e-11));
    CHECK(quad_P(-0.6) == doctest::Approx(-quad_P(0.6)).epsilon(1e-12));
    CHECK_THROWS_AS(quad_P(1.5), ParameterDomainError);
}

TEST_CASE("quadrature endpoints and parity of Q") {
    CHECK(quad_Q(0.0) == doctest::Approx(2.0 * pi).epsilon(1e-13));
    CHECK(quad_Q(1.0) == doctest::Approx(4.0 * std::sqrt(2.0)).epsilon(1e-11));
    CHECK(quad_Q(0.2) == doctest::Approx(q_02).epsilon(1e-11));
    CHECK(quad_Q(0.6) == doctest::Approx(q_06).epsilon(1e-11));
    CHECK(quad_Q(0.6) == doctest::Approx(quad_Q(-0.6)).epsilon(1e-12));
}

TEST_CASE("runtime cross-check against the independent Simpson oracle") {
    for (double alpha : {0.37, 0.81, 0.99}) {
        const long double p_ref = oracles::adaptive_simpson(
            [alpha](long double x) {
                return std::cos(x) * std::sqrt(1.0L + static_cast<long double>(alpha) * std::cos(x));
            },
            0.0L, 2.0L * pi, 1e-14L, {static_cast<long double>(pi)});
        const long double q_ref = oracles::adaptive_simpson(
            [alpha](long double x) {
                return std::sqrt(1.0L + static_cast<long double>(alpha) * std::cos(x));
            },
            0.0L, 2.0L * pi, 1e-14L, {static_cast<long double>(pi)});
        CHECK(std::abs(quad_P(alpha) - static_cast<double>(p_ref)) <= 1e-10);
        CHECK(std::abs(quad_Q(alpha) - static_cast<double>(q_ref)) <= 1e-10);
    }
}

TEST_CASE("gamma of alpha: endpoints, limit, parity") {
    CHECK(gamma_of_alpha(1.0) ==
          doctest::Approx(8.0 * std::sqrt(2.0) / 3.0).epsilon(1e-10)); // 3.7712362
    CHECK(gamma_of_alpha(0.0) == pi);
    CHECK(gamma_of_alpha(1e-5) == doctest::Approx(pi).epsilon(1e-8));
    CHECK(gamma_of_alpha(-0.6) == doctest::Approx(gamma_of_alpha(0.6)).epsilon(1e-12));
    CHECK(gamma_of_alpha(0.6) == doctest::Approx(gamma_06).epsilon(1e-11));
}

TEST_CASE("wave speed: endpoints and the dispersion limit") {
    CHECK(speed_of_alpha(1.0, gamma_b0) ==
          doctest::Approx(-32.0 * gamma_b0 / (3.0 * pi)).epsilon(1e-10)); // -1.4060829
    CHECK(speed_of_alpha(0.0, gamma_b0) == doctest::Approx(-gamma_b0 * pi).epsilon(1e-12));
    CHECK(speed_of_alpha(0.6, gamma_b0) == doctest::Approx(s_06_b0).epsilon(1e-10));
    CHECK(speed_of_alpha(0.6, 0.4141256) == doctest::Approx(s_06_rounded).epsilon(1e-10));
    // alpha -> 0 matches the linear phase speed omega(1)/1 of the single-mode kernel
    const double omega = dispersion_omega(SineKernel::single_mode(), 1, gamma_b0);
    CHECK(std::abs(speed_of_alpha(0.0, gamma_b0) - omega) <= 1e-10);
}

TEST_CASE("amplitude: trivial member, frozen values, cusped maximum") {
    const auto coeffs = compute_coefficients({0.4, 0.0});
    CHECK(amplitude_of_alpha(0.0, coeffs) == 0.0);
    CHECK(amplitude_of_alpha(0.2, coeffs) == doctest::Approx(amp_02).epsilon(1e-10));
    CHECK(amplitude_of_alpha(0.6, coeffs) == doctest::Approx(amp_06).epsilon(1e-10));
    // 8 Gamma / (3 Lambda) = 7/9 for delta = 0.4, independent of b
    for (double b : {0.0, 0.02, 0.04})
        CHECK(amplitude_of_alpha(1.0, compute_coefficients({0.4, b})) ==
              doctest::Approx(7.0 / 9.0).epsilon(1e-10));
}

TEST_CASE("family monotonicity on the sampled alpha grid") {
    const auto coeffs = compute_coefficients({0.4, 0.0});
    double prev_ratio = -1.0;
    for (double alpha = 0.01; alpha <= 1.0 + 1e-12; alpha += 0.0495) {
        const double q = quad_Q(alpha);
        const double ratio = alpha * quad_P(alpha) / (q * q * q);
        CHECK(ratio > prev_ratio);
        prev_ratio = ratio;
    }
    double prev_s = 1.0, prev_a = -1.0;
    for (int k = 1; k <= 20; ++k) {
        const double alpha = 0.05 * k;
        const double s = speed_of_alpha(alpha, coeffs.Gamma);
        const double a = amplitude_of_alpha(alpha, coeffs);
        CHECK(s < prev_s);
        CHECK(a > prev_a);
        prev_s = s;
        prev_a = a;
    }
    CHECK(speed_of_alpha(0.0, coeffs.Gamma) < 0.0);
}

TEST_CASE("sampled wave: trivial member, zero mean, corner at the cusp") {
    const auto coeffs = compute_coefficients({0.4, 0.0});

    const auto trivial = make_traveling_wave({0.0, 0.3, +1}, coeffs);
    const PeriodicField zero = sample_traveling_wave(trivial, coeffs, 64, 0.7);
    for (std::size_t i = 0; i < zero.size(); ++i) CHECK(std::abs(zero[i]) <= 1e-15);

    for (double alpha : {0.2, 0.6}) {
        const auto wave = make_traveling_wave({alpha, 0.0, +1}, coeffs);
        const PeriodicField f = sample_traveling_wave(wave, coeffs, 1024, 0.0);
        const double mean = kernels::ops().sum(f.data(), f.size()) / 1024.0;
        CHECK(std::abs(mean) <= 1e-10);
        CHECK(wave.gamma >= 0.0);
        CHECK(wave.s < 0.0);
        CHECK(wave.amplitude == amplitude_of_alpha(alpha, coeffs));
    }

    // the maximum-amplitude wave has its slope break exactly at x = pi
    const auto cusped = make_traveling_wave({1.0, 0.0, +1}, coeffs);
    const PeriodicField f = sample_traveling_wave(cusped, coeffs, 1024, 0.0);
    double worst = 0.0;
    std::size_t worst_i = 0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        const double second = std::abs(f.at_wrapped(static_cast<std::ptrdiff_t>(i) + 1) -
                                       2.0 * f[i] + f.at_wrapped(static_cast<std::ptrdiff_t>(i) - 1));
        if (second > worst) {
            worst = second;
            worst_i = i;
        }
    }
    CHECK(worst_i == 512); // x = pi
    CHECK(worst / f.dx() > 1.0); // O(1) slope jump survives the dx normalization
}

TEST_CASE("amplitude matches half the sampled peak-to-trough range") {
    const auto coeffs = compute_coefficients({0.4, 0.02});
    const auto wave = make_traveling_wave({0.6, 0.0, +1}, coeffs);
    const PeriodicField f = sample_traveling_wave(wave, coeffs, 8192, 0.0);
    double lo = f[0], hi = f[0];
    for (std::size_t i = 0; i < f.size(); ++i) {
        lo = std::min(lo, f[i]);
        hi = std::max(hi, f[i]);
    }
    CHECK(0.5 * (hi - lo) == doctest::Approx(wave.amplitude).epsilon(1e-9));
}

TEST_CASE("negating alpha equals a phase shift of pi") {
    const auto coeffs = compute_coefficients({0.4, 0.0});
    const auto plus = make_traveling_wave({0.6, 0.4, +1}, coeffs);
    const auto minus = make_traveling_wave({-0.6, 0.4 + pi, +1}, coeffs);
    const PeriodicField a = sample_traveling_wave(plus, coeffs, 256, 0.0);
    const PeriodicField b = sample_traveling_wave(minus, coeffs, 256, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == doctest::Approx(b[i]).epsilon(1e-12));
    CHECK(plus.s == doctest::Approx(minus.s).epsilon(1e-12));
}

TEST_CASE("semi-discrete residual of the sampled wave vanishes under refinement") {
    const auto coeffs = compute_coefficients({0.4, 0.0});
    const SineKernel kernel = SineKernel::single_mode();
    auto residual_norm = [&](std::size_t n) {
        const auto wave = make_traveling_wave({0.6, 0.0, +1}, coeffs);
        const PeriodicField f = sample_traveling_wave(wave, coeffs, n, 0.0);
        const PeriodicField conv = convolve(kernel, f, coeffs.Gamma);
        double ssq = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const auto ip = static_cast<std::ptrdiff_t>(i);
            const double fx = (f.at_wrapped(ip + 1) - f.at_wrapped(ip - 1)) / (2.0 * f.dx());
            const double r = -wave.s * fx + coeffs.Lambda * f[i] * fx + conv[i];
            ssq += r * r;
        }
        return std::sqrt(ssq * f.dx());
    };
    const double r1 = residual_norm(256);
    const double r2 = residual_norm(512);
    CHECK(r2 <= 0.3 * r1); // second-order decay
}

TEST_CASE("two-field family: trivial member and branch identities") {
    const auto coeffs = compute_coefficients({0.4, 0.0});
    const std::size_t n = 256;

    auto [z1, z2] = pair_traveling_waves(0.0, -1, coeffs, n);
    for (std::size_t i = 0; i < n; ++i) {
        CHECK(std::abs(z1[i]) <= 1e-15);
        CHECK(std::abs(z2[i]) <= 1e-15);
    }

    auto [u1p, u2p] = pair_traveling_waves(0.6, +1, coeffs, n);
    auto [u1m, u2m] = pair_traveling_waves(0.6, -1, coeffs, n);
    const auto& k = kernels::ops();
    CHECK(std::abs(k.sum(u1p.data(), n)) / n <= 1e-10);
    CHECK(std::abs(k.sum(u2p.data(), n)) / n <= 1e-10);
    CHECK(std::abs(k.sum(u1m.data(), n)) / n <= 1e-10);
    CHECK(std::abs(k.sum(u2m.data(), n)) / n <= 1e-10);
    for (std::size_t i = 0; i < n; ++i) {
        // + branch: both radicals coincide
        CHECK(u1p[i] == doctest::Approx(u2p[i]).epsilon(1e-14));
        // flipping the branch negates the profile (speed changes sign too)
        CHECK(u1m[i] == doctest::Approx(-u1p[i]).epsilon(1e-12));
        // - branch: u2(psi) = u1(psi + pi) via cos(psi + pi) = -cos(psi)
        CHECK(u2m[i] == doctest::Approx(u1m[(i + n / 2) % n]).epsilon(1e-12));
    }
}
