#include "ductwave/travwave.hpp"

#include <cmath>
#include <numbers>

#include "ductwave/errors.hpp"
#include "ductwave/quadrature.hpp"

namespace ductwave {
namespace {

constexpr double pi = std::numbers::pi;
constexpr double quad_tol = 1e-11;

void require_alpha(double alpha) {
    if (!(std::abs(alpha) <= 1.0))
        throw ParameterDomainError("alpha", "must lie in [-1, 1]");
}

void require_sign(int sign) {
    if (sign != 1 && sign != -1) throw ParameterDomainError("sign", "must be +1 or -1");
}

// The radicand 1 + alpha cos x vanishes at x = pi when |alpha| = 1 (corner of
// the integrand); splitting there keeps the panels on analytic pieces.
const double splits[] = {pi};

} // namespace

double quad_P(double alpha) {
    require_alpha(alpha);
    if (alpha == 0.0) return 0.0;
    return integrate([alpha](double x) { return std::cos(x) * std::sqrt(1.0 + alpha * std::cos(x)); },
                     0.0, 2.0 * pi, quad_tol, splits);
}

double quad_Q(double alpha) {
    require_alpha(alpha);
    return integrate([alpha](double x) { return std::sqrt(1.0 + alpha * std::cos(x)); }, 0.0,
                     2.0 * pi, quad_tol, splits);
}

double gamma_of_alpha(double alpha) {
    require_alpha(alpha);
    // removable singularity at alpha = 0: P(alpha) ~ pi alpha / 2
    if (alpha == 0.0) return pi;
    return 2.0 * quad_P(alpha) / alpha;
}

double speed_of_alpha(double alpha, double Gamma) {
    return -(Gamma * gamma_of_alpha(alpha) / (2.0 * pi)) * quad_Q(alpha);
}

double amplitude_of_alpha(double alpha, const ModelCoefficients& coeffs) {
    require_alpha(alpha);
    const double a = std::abs(alpha);
    return (coeffs.Gamma / (2.0 * coeffs.Lambda)) * gamma_of_alpha(alpha) *
           (std::sqrt(1.0 + a) - std::sqrt(1.0 - a));
}

TravelingWave make_traveling_wave(const TravelingWaveParams& params,
                                  const ModelCoefficients& coeffs) {
    require_alpha(params.alpha);
    require_sign(params.sign);
    const double gamma = gamma_of_alpha(params.alpha);
    return {params, gamma, speed_of_alpha(params.alpha, coeffs.Gamma),
            amplitude_of_alpha(params.alpha, coeffs)};
}

PeriodicField sample_traveling_wave(const TravelingWave& wave, const ModelCoefficients& coeffs,
                                    std::size_t n, double t) {
    // The branch sign selects a member of the two-field family only; the
    // single-equation wave always carries the + radical and s < 0.
    const double alpha = wave.params.alpha;
    const double ratio = coeffs.Gamma / coeffs.Lambda;
    return PeriodicField::from_function(n, [&](double x) {
        const double psi = x - wave.s * t + wave.params.phi;
        return wave.s / coeffs.Lambda + ratio * wave.gamma * std::sqrt(1.0 + alpha * std::cos(psi));
    });
}

std::pair<PeriodicField, PeriodicField> pair_traveling_waves(double alpha, int sign,
                                                             const ModelCoefficients& coeffs,
                                                             std::size_t n) {
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw ParameterDomainError("alpha", "must lie in [0, 1] for the pair family");
    require_sign(sign);
    const double branch = static_cast<double>(sign);
    const double gamma = gamma_of_alpha(alpha);
    const double s = -branch * (coeffs.Gamma * gamma / (2.0 * pi)) * quad_Q(alpha);
    const double ratio = coeffs.Gamma / coeffs.Lambda;
    auto u1 = PeriodicField::from_function(n, [&](double psi) {
        return branch * ratio * gamma * std::sqrt(1.0 + alpha * std::cos(psi)) + s / coeffs.Lambda;
    });
    auto u2 = PeriodicField::from_function(n, [&](double psi) {
        return branch * ratio * gamma * std::sqrt(1.0 + branch * alpha * std::cos(psi)) +
               s / coeffs.Lambda;
    });
    return {std::move(u1), std::move(u2)};
}

} // namespace ductwave
