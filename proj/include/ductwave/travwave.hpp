#pragma once

#include <cstddef>
#include <utility>

#include "ductwave/coefficients.hpp"
#include "ductwave/field.hpp"

namespace ductwave {

/// Member selector of the one-parameter traveling-wave family: |alpha| <= 1,
/// a phase shift, and the branch sign of the two-field form. Negating alpha
/// is equivalent to shifting the phase by pi.
struct TravelingWaveParams {
    double alpha = 0.0;
    double phi = 0.0;
    int sign = +1;
};

struct TravelingWave {
    TravelingWaveParams params;
    double gamma;     // gamma(alpha) >= 0
    double s;         // wave speed, < 0 for alpha in (0, 1] on the + branch
    double amplitude; // half peak-to-trough
};

/// P(alpha) = integral_0^{2pi} cos(x) sqrt(1 + alpha cos x) dx. Odd in alpha.
double quad_P(double alpha);

/// Q(alpha) = integral_0^{2pi} sqrt(1 + alpha cos x) dx. Even in alpha.
double quad_Q(double alpha);

/// gamma(alpha) = 2 P(alpha)/alpha, continuously extended to pi at alpha = 0.
double gamma_of_alpha(double alpha);

/// s(alpha) = -(Gamma gamma(alpha) / 2pi) Q(alpha).
double speed_of_alpha(double alpha, double Gamma);

/// A(alpha) = (Gamma/2Lambda) gamma(alpha) (sqrt(1+|alpha|) - sqrt(1-|alpha|)).
double amplitude_of_alpha(double alpha, const ModelCoefficients& coeffs);

TravelingWave make_traveling_wave(const TravelingWaveParams& params,
                                  const ModelCoefficients& coeffs);

/// Samples sigma(x, t) = s/Lambda + (Gamma/Lambda) gamma sqrt(1 + alpha cos(x - s t + phi))
/// on a uniform grid of n points. Zero mean is built into s(alpha).
PeriodicField sample_traveling_wave(const TravelingWave& wave, const ModelCoefficients& coeffs,
                                    std::size_t n, double t);

/// The two-field traveling-wave pair (u1, u2) for a given branch sign, both
/// zero mean, sharing gamma(alpha) and the speed s.
std::pair<PeriodicField, PeriodicField> pair_traveling_waves(double alpha, int sign,
                                                             const ModelCoefficients& coeffs,
                                                             std::size_t n);

} // namespace ductwave
