#include "ductwave/coefficients.hpp"

#include <cmath>

#include "ductwave/errors.hpp"

namespace ductwave {

bool validate_parameters(const GasParameters& params, DeltaPolicy policy) {
    if (!(params.b >= 0.0 && params.b < 1.0))
        throw ParameterDomainError("b", "must lie in [0, 1)");
    const bool delta_in_range = params.delta > 0.0 && params.delta <= 2.0 / 3.0;
    if (!delta_in_range) {
        if (policy == DeltaPolicy::strict)
            throw ParameterDomainError("delta", "must lie in (0, 2/3]");
        if (!(params.delta > 0.0))
            throw ParameterDomainError("delta", "must be positive");
    }
    return !delta_in_range;
}

ModelCoefficients compute_coefficients(const GasParameters& params, DeltaPolicy policy) {
    validate_parameters(params, policy);
    const double one_minus_b = 1.0 - params.b;
    const double c0 = std::sqrt((1.0 + params.delta) / one_minus_b);
    const double G = (params.delta + 2.0) / (2.0 * one_minus_b);
    const double Gamma = std::pow(1.0 + params.delta, 1.5) / (4.0 * std::pow(one_minus_b, 1.5));
    return {c0, G, c0 * G, Gamma};
}

std::array<double, 3> characteristic_speeds(const ModelCoefficients& coeffs) {
    return {-coeffs.c0, 0.0, coeffs.c0};
}

} // namespace ductwave
