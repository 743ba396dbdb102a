#pragma once

#include <array>

namespace ductwave {

/// Physical inputs: delta = R/c_v and the van der Waals excluded volume b.
/// Admissible ranges are 0 < delta <= 2/3 and 0 <= b < 1; b = 0 is the
/// ideal gas.
struct GasParameters {
    double delta = 0.4;
    double b = 0.0;
};

/// Derived model constants. Lambda scales the quadratic self-interaction of
/// the sound waves, Gamma the resonant coupling through the entropy wave.
struct ModelCoefficients {
    double c0;     // equilibrium sound speed
    double G;      // nonlinearity parameter
    double Lambda; // Lambda = c0 * G
    double Gamma;
};

enum class DeltaPolicy {
    strict, // reject delta outside (0, 2/3]
    warn,   // accept any delta > 0 (caller is expected to warn)
};

/// Throws ParameterDomainError naming the offending field. With
/// DeltaPolicy::warn, out-of-range delta is allowed for exploratory runs and
/// the return value reports whether it was out of range.
bool validate_parameters(const GasParameters& params, DeltaPolicy policy = DeltaPolicy::strict);

ModelCoefficients compute_coefficients(const GasParameters& params,
                                       DeltaPolicy policy = DeltaPolicy::strict);

/// Characteristic speeds (-c0, 0, +c0) of the underlying hyperbolic system,
/// in increasing order.
std::array<double, 3> characteristic_speeds(const ModelCoefficients& coeffs);

} // namespace ductwave
