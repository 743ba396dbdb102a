#include <doctest.h>

#include <cmath>
#include <numbers>

#include "ductwave/coefficients.hpp"
#include "ductwave/diagnostics.hpp"
#include "ductwave/errors.hpp"
#include "ductwave/field.hpp"
#include "ductwave/sine_kernel.hpp"
#include "ductwave/solver.hpp"
#include "ductwave/travwave.hpp"

using namespace ductwave;
constexpr double pi = std::numbers::pi;

namespace {
const ModelCoefficients coeffs_b0 = compute_coefficients({0.4, 0.0});
} // namespace

TEST_CASE("measure on the zero field") {
    const DiagnosticsRecord r = measure(PeriodicField(128), 3.0);
    CHECK(r.t == 3.0);
    CHECK(r.energy == 0.0);
    CHECK(r.mean == 0.0);
    CHECK(r.tv == 0.0);
    CHECK(r.max_gradient == 0.0);
    CHECK(!r.shock_flag);
    CHECK(!r.corner_flag);
}

TEST_CASE("measure computes the basic observables of sin x") {
    const std::size_t n = 1024;
    const auto f = PeriodicField::from_function(n, [](double x) { return std::sin(x); });
    const DiagnosticsRecord r = measure(f);
    CHECK(r.energy == doctest::Approx(pi).epsilon(1e-10));
    CHECK(std::abs(r.mean) <= 1e-15);
    CHECK(r.tv == doctest::Approx(4.0).epsilon(1e-5));
    CHECK(r.max_gradient == doctest::Approx(1.0).epsilon(1e-4));
    CHECK(!r.shock_flag);
    CHECK(!r.corner_flag);
}

TEST_CASE("cusped wave raises the corner flag, smooth wave raises none") {
    const auto cusped = make_traveling_wave({1.0, 0.0, +1}, coeffs_b0);
    const PeriodicField f1 = sample_traveling_wave(cusped, coeffs_b0, 1024, 0.0);
    const DiagnosticsRecord r1 = measure(f1);
    CHECK(r1.corner_flag);
    CHECK(!r1.shock_flag);

    const auto smooth = make_traveling_wave({0.6, 0.0, +1}, coeffs_b0);
    const PeriodicField f2 = sample_traveling_wave(smooth, coeffs_b0, 1024, 0.0);
    const DiagnosticsRecord r2 = measure(f2);
    CHECK(!r2.corner_flag);
    CHECK(!r2.shock_flag);
}

TEST_CASE("an entropy-satisfying jump raises the shock flag at any resolution") {
    for (std::size_t n : {512u, 1024u, 2048u}) {
        // sawtooth with a single downward jump of height 2
        const auto f = PeriodicField::from_function(n, [](double x) { return 1.0 - x / pi; });
        const DiagnosticsRecord r = measure(f);
        CHECK(r.shock_flag);
    }
}

TEST_CASE("flags are stable under grid refinement of fixed profiles") {
    const auto cusped = make_traveling_wave({1.0, 0.0, +1}, coeffs_b0);
    const auto smooth = make_traveling_wave({0.6, 0.0, +1}, coeffs_b0);
    for (std::size_t n : {512u, 1024u, 2048u, 4096u}) {
        const DiagnosticsRecord rc = measure(sample_traveling_wave(cusped, coeffs_b0, n, 0.0));
        CHECK(rc.corner_flag);
        CHECK(!rc.shock_flag);
        const DiagnosticsRecord rs = measure(sample_traveling_wave(smooth, coeffs_b0, n, 0.0));
        CHECK(!rs.corner_flag);
        CHECK(!rs.shock_flag);
    }
}

TEST_CASE("distance to the family recovers an exact member") {
    const auto wave = make_traveling_wave({0.6, 1.1, +1}, coeffs_b0);
    const PeriodicField f = sample_traveling_wave(wave, coeffs_b0, 256, 0.0);
    const AttractorReport report = distance_to_family(f, coeffs_b0);
    CHECK(report.distance <= 1e-8);
    CHECK(std::abs(report.best_alpha - 0.6) <= 1e-3);
}

TEST_CASE("distance to the family of the zero field is the trivial member") {
    const AttractorReport report = distance_to_family(PeriodicField(128), coeffs_b0);
    CHECK(report.distance <= 1e-6);
    CHECK(std::abs(report.best_alpha) <= 1e-4);
}

TEST_CASE("orthogonal perturbation shows up as its own norm") {
    const std::size_t n = 512;
    const auto wave = make_traveling_wave({0.6, 0.0, +1}, coeffs_b0);
    PeriodicField f = sample_traveling_wave(wave, coeffs_b0, n, 0.0);
    for (std::size_t i = 0; i < n; ++i) f[i] += 0.01 * std::sin(3.0 * f.grid_point(i));
    const AttractorReport report = distance_to_family(f, coeffs_b0);
    CHECK(report.distance == doctest::Approx(0.01 * std::sqrt(pi)).epsilon(0.2)); // ~0.0177
    CHECK(std::abs(report.best_alpha - 0.6) <= 2e-2);
}

TEST_CASE("family distance is invariant under grid rotation of the field") {
    const std::size_t n = 256;
    const auto wave = make_traveling_wave({0.45, 0.0, +1}, coeffs_b0);
    PeriodicField f = sample_traveling_wave(wave, coeffs_b0, n, 0.0);
    for (std::size_t i = 0; i < n; ++i) f[i] += 0.05 * std::sin(4.0 * f.grid_point(i));
    PeriodicField rotated(n);
    const std::size_t shift = 97;
    for (std::size_t i = 0; i < n; ++i) rotated[(i + shift) % n] = f[i];
    const AttractorReport a = distance_to_family(f, coeffs_b0);
    const AttractorReport b = distance_to_family(rotated, coeffs_b0);
    CHECK(std::abs(a.distance - b.distance) <= 1e-6);
    CHECK(std::abs(a.best_alpha - b.best_alpha) <= 1e-4);
}

TEST_CASE("empty search grids are rejected") {
    CHECK_THROWS_AS(distance_to_family(PeriodicField(64), coeffs_b0, {}, {}),
                    ParameterDomainError);
}

TEST_CASE("recurrence of an exact traveling wave: one period, no shape oscillation") {
    for (double alpha : {0.6, 1.0}) {
        const auto wave = make_traveling_wave({alpha, 0.0, +1}, coeffs_b0);
        const double period = PeriodicField::two_pi / std::abs(wave.s);
        std::vector<double> times;
        std::vector<PeriodicField> fields;
        for (int i = 0; i <= 400; ++i) {
            times.push_back(0.05 * i);
            fields.push_back(sample_traveling_wave(wave, coeffs_b0, 256, times.back()));
        }
        const auto periods = estimate_periods(times, fields, 0.0, 20.0);
        REQUIRE(periods.size() == 1);
        CHECK(periods[0].period == doctest::Approx(period).epsilon(0.01));
        CHECK(periods[0].confidence > 0.8);
    }
}

TEST_CASE("recurrence of a shape-oscillating wave reports two periods") {
    // synthetic quasiperiodic signal: traveling profile with a breathing mode
    const double s = -1.3;
    const double t_shape = 2.7;
    std::vector<double> times;
    std::vector<PeriodicField> fields;
    for (int i = 0; i <= 500; ++i) {
        const double t = 0.05 * i;
        times.push_back(t);
        fields.push_back(PeriodicField::from_function(256, [&](double x) {
            const double breath = 0.25 * std::sin(2.0 * pi * t / t_shape);
            return std::sin(x - s * t) + breath * std::cos(2.0 * (x - s * t));
        }));
    }
    const auto periods = estimate_periods(times, fields, 0.0, 25.0);
    REQUIRE(periods.size() == 2);
    CHECK(periods[1].period == doctest::Approx(t_shape).epsilon(0.02));
}

TEST_CASE("recurrence requires enough uniformly spaced snapshots") {
    std::vector<double> times{0.0, 0.1, 0.2};
    std::vector<PeriodicField> fields(3, PeriodicField(64));
    CHECK_THROWS_AS(estimate_periods(times, fields, 0.0, 1.0), ParameterDomainError);
}

TEST_CASE("pure Burgers run: energy strictly decreasing between post-shock snapshots") {
    SolverConfig config;
    config.n = 512;
    config.t_end = 3.0;
    for (double t = 0.1; t < 3.0; t += 0.1) config.snapshot_times.push_back(t);
    const SineKernel zero_kernel({0.0});
    const auto initial = PeriodicField::from_function(512, [](double x) { return std::sin(x); });
    const EvolutionRecord record = evolve(config, initial, zero_kernel, coeffs_b0);
    bool shock_seen = false;
    double prev = 0.0;
    int post_shock_snapshots = 0;
    for (const auto& d : record.diagnostics) {
        if (shock_seen) {
            CHECK(d.energy < prev);
            ++post_shock_snapshots;
        }
        if (d.shock_flag) shock_seen = true;
        prev = d.energy;
    }
    CHECK(post_shock_snapshots > 10);
}
