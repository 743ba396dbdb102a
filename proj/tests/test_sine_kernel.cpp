#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "ductwave/errors.hpp"
#include "ductwave/field.hpp"
#include "ductwave/kernels.hpp"
#include "ductwave/sine_kernel.hpp"
#include "oracles.hpp"

using namespace ductwave;
constexpr double pi = std::numbers::pi;

namespace {

PeriodicField random_band_limited(std::mt19937& rng, std::size_t n, int max_mode) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<std::pair<double, double>> coeffs(max_mode);
    for (auto& c : coeffs) c = {dist(rng), dist(rng)};
    return PeriodicField::from_function(n, [&](double x) {
        double v = 0.0;
        for (int m = 1; m <= max_mode; ++m)
            v += coeffs[m - 1].first * std::cos(m * x) + coeffs[m - 1].second * std::sin(m * x);
        return v;
    });
}

double grid_inner_product(const PeriodicField& a, const PeriodicField& b) {
    return kernels::ops().dot(a.data(), b.data(), a.size()) * a.dx();
}

} // namespace

TEST_CASE("pointwise kernel evaluation") {
    const SineKernel single = SineKernel::single_mode();
    CHECK(single.evaluate(pi / 2.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(single.evaluate(0.0) == 0.0);
    const SineKernel two({1.0, 0.5});
    CHECK(two.evaluate(pi / 4.0) ==
          doctest::Approx(std::sin(pi / 4.0) + 0.5).epsilon(1e-15)); // ~1.2071068
    // odd and 2pi-periodic
    for (double x : {0.3, 1.7, 2.9}) {
        CHECK(two.evaluate(-x) == doctest::Approx(-two.evaluate(x)).epsilon(1e-14));
        CHECK(two.evaluate(x + 2.0 * pi) == doctest::Approx(two.evaluate(x)).epsilon(1e-12));
    }
    CHECK_THROWS_AS(SineKernel({}), ParameterDomainError);
}

TEST_CASE("convolution reproduces the analytic single-mode integrals") {
    const SineKernel kernel = SineKernel::single_mode();
    const std::size_t n = 128;

    const auto sine = PeriodicField::from_function(n, [](double x) { return std::sin(x); });
    const PeriodicField conv_sine = convolve(kernel, sine, 1.0);
    for (std::size_t i = 0; i < n; ++i)
        CHECK(std::abs(conv_sine[i] - (-pi * std::cos(conv_sine.grid_point(i)))) <= 1e-12);

    const auto cosine = PeriodicField::from_function(n, [](double x) { return std::cos(x); });
    const PeriodicField conv_cos = convolve(kernel, cosine, 1.0);
    for (std::size_t i = 0; i < n; ++i)
        CHECK(std::abs(conv_cos[i] - pi * std::sin(conv_cos.grid_point(i))) <= 1e-12);

    const auto mode2 = PeriodicField::from_function(n, [](double x) { return std::cos(2.0 * x); });
    const PeriodicField conv2 = convolve(kernel, mode2, 1.0);
    for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(conv2[i]) <= 1e-13);
}

TEST_CASE("convolution equals the literal trapezoid sum") {
    std::mt19937 rng(7);
    for (const std::vector<double> coeffs : {std::vector<double>{1.0},
                                             std::vector<double>{0.7, -0.4, 0.2}}) {
        const SineKernel kernel(coeffs);
        for (std::size_t n : {32u, 129u}) {
            const PeriodicField field = random_band_limited(rng, n, 6);
            const PeriodicField fast = convolve(kernel, field, 0.83);
            const std::vector<double> v(field.data(), field.data() + n);
            const auto slow = oracles::trapezoid_convolve(coeffs, v, 0.83);
            for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(fast[i] - slow[i]) <= 1e-11);
        }
    }
}

TEST_CASE("grid too coarse for the kernel modes is rejected") {
    const SineKernel wide({1.0, 0.5, 0.25, 0.1, 0.05}); // M = 5
    PeriodicField field(16);                            // N < 4M = 20
    CHECK_THROWS_AS(convolve(wide, field, 1.0), ParameterDomainError);
    CHECK_NOTHROW(convolve(wide, PeriodicField(20), 1.0));
}

TEST_CASE("odd kernel makes the convolution skew-adjoint") {
    std::mt19937 rng(11);
    const SineKernel kernel({0.9, 0.3, -0.2});
    const std::size_t n = 256;
    for (int trial = 0; trial < 5; ++trial) {
        const PeriodicField u = random_band_limited(rng, n, 8);
        const PeriodicField v = random_band_limited(rng, n, 8);
        const PeriodicField ku = convolve(kernel, u, 1.0);
        const PeriodicField kv = convolve(kernel, v, 1.0);
        CHECK(std::abs(grid_inner_product(u, kv) + grid_inner_product(ku, v)) <= 1e-12);
    }
}

TEST_CASE("convolution preserves zero mean") {
    std::mt19937 rng(13);
    const SineKernel kernel({1.0, 0.25});
    const PeriodicField u = random_band_limited(rng, 200, 5);
    const PeriodicField ku = convolve(kernel, u, 2.3);
    const double mean = kernels::ops().sum(ku.data(), ku.size()) / static_cast<double>(ku.size());
    CHECK(std::abs(mean) <= 1e-13);
}

TEST_CASE("dispersion relation of the linearized equation") {
    const SineKernel kernel = SineKernel::single_mode();
    const double gamma = 0.414125584816973123; // Gamma(delta=0.4, b=0)
    CHECK(dispersion_omega(kernel, 1, gamma) ==
          doctest::Approx(-gamma * pi).epsilon(1e-14)); // ~ -1.3010139
    CHECK(dispersion_omega(kernel, 2, gamma) == 0.0);
    CHECK(dispersion_omega(kernel, -1, gamma) ==
          doctest::Approx(gamma * pi).epsilon(1e-14));

    // omega(-k) = -omega(k), and omega vanishes beyond the truncation order
    const SineKernel two({1.0, 0.5});
    for (int k = 1; k <= 6; ++k)
        CHECK(dispersion_omega(two, -k, 1.7) == doctest::Approx(-dispersion_omega(two, k, 1.7)));
    for (int k = 3; k <= 12; ++k) CHECK(dispersion_omega(two, k, 1.7) == 0.0);
    CHECK(dispersion_omega(two, 2, 1.0) == doctest::Approx(-0.5 * pi).epsilon(1e-14));
}
