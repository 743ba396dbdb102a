#pragma once

#include <cstddef>
#include <vector>

#include "ductwave/coefficients.hpp"
#include "ductwave/diagnostics.hpp"
#include "ductwave/field.hpp"
#include "ductwave/sine_kernel.hpp"

namespace ductwave {

enum class SolverMode { single, pair };

struct SolverConfig {
    std::size_t n = 1024;
    double cfl = 0.45;
    double t_end = 1.0;
    std::size_t snapshot_stride = 0;    // cadence in steps; 0 disables
    std::vector<double> snapshot_times; // landed on exactly
    SolverMode mode = SolverMode::single;
    double fixed_dt = 0.0; // > 0 overrides the adaptive controller
    FlagThresholds thresholds;
};

struct EvolutionRecord {
    std::vector<double> times;
    std::vector<PeriodicField> fields;
    std::vector<DiagnosticsRecord> diagnostics;
};

struct PairEvolutionRecord {
    std::vector<double> times;
    std::vector<PeriodicField> a1;
    std::vector<PeriodicField> a3;
    std::vector<DiagnosticsRecord> diagnostics_a1;
    std::vector<DiagnosticsRecord> diagnostics_a3;
};

/// One conservative finite-volume step for sigma_t + lambda (sigma^2/2)_x = 0:
/// UNO slopes, MUSCL-Hancock half-step prediction, exact Riemann fluxes.
/// Requires lambda * max|sigma| * dt / dx <= 1 (the controller keeps it at the
/// configured Courant number). The discrete sum of values is conserved exactly
/// up to rounding. lambda < 0 is handled by conjugating sigma -> -sigma.
PeriodicField burgers_substep(const PeriodicField& field, double lambda, double dt);

/// Advances sigma_t = -gamma (K * sigma) over dt with the explicit midpoint
/// rule, using the trapezoid-exact convolution.
PeriodicField convolution_substep(const PeriodicField& field, const SineKernel& kernel,
                                  double gamma, double dt);

/// Strang composition: convolution half step, Burgers full step, convolution
/// half step.
PeriodicField strang_step(const PeriodicField& field, const SineKernel& kernel,
                          const ModelCoefficients& coeffs, double dt);

EvolutionRecord evolve(const SolverConfig& config, const PeriodicField& initial,
                       const SineKernel& kernel, const ModelCoefficients& coeffs);

PairEvolutionRecord evolve_pair(const SolverConfig& config, const PeriodicField& initial_a1,
                                const PeriodicField& initial_a3, const SineKernel& kernel,
                                const ModelCoefficients& coeffs);

} // namespace ductwave
