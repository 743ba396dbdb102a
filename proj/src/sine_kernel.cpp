#include "ductwave/sine_kernel.hpp"

#include <cmath>
#include <numbers>

#include "ductwave/errors.hpp"
#include "ductwave/kernels.hpp"

namespace ductwave {

SineKernel::SineKernel(std::vector<double> coefficients) : coefficients_(std::move(coefficients)) {
    if (coefficients_.empty())
        throw ParameterDomainError("kernel", "needs at least one sine coefficient");
}

double SineKernel::evaluate(double x) const {
    double out = 0.0;
    for (std::size_t n = 0; n < coefficients_.size(); ++n)
        out += coefficients_[n] * std::sin(static_cast<double>(n + 1) * x);
    return out;
}

double SineKernel::max_abs_coefficient() const {
    double m = 0.0;
    for (double a : coefficients_) m = std::max(m, std::abs(a));
    return m;
}

ConvolutionPlan::ConvolutionPlan(const SineKernel& kernel, std::size_t n)
    : n_(n), coefficients_(kernel.coefficients()) {
    if (n < 4 * kernel.modes())
        throw ParameterDomainError("N", "grid too coarse: need N >= 4M for the kernel modes");
    cos_table_.resize(coefficients_.size());
    sin_table_.resize(coefficients_.size());
    for (std::size_t m = 0; m < coefficients_.size(); ++m) {
        cos_table_[m].resize(n);
        sin_table_[m].resize(n);
        const double mode = static_cast<double>(m + 1);
        for (std::size_t i = 0; i < n; ++i) {
            const double x = PeriodicField::two_pi * static_cast<double>(i) / static_cast<double>(n);
            cos_table_[m][i] = std::cos(mode * x);
            sin_table_[m][i] = std::sin(mode * x);
        }
    }
}

void ConvolutionPlan::apply(std::span<const double> in, double gamma, double sign_of_s_term,
                            std::span<double> out) const {
    const auto& k = kernels::ops();
    const double dx = PeriodicField::two_pi / static_cast<double>(n_);
    for (std::size_t i = 0; i < n_; ++i) out[i] = 0.0;
    for (std::size_t m = 0; m < coefficients_.size(); ++m) {
        const double c = dx * k.dot(in.data(), cos_table_[m].data(), n_);
        const double s = dx * k.dot(in.data(), sin_table_[m].data(), n_);
        const double scale = gamma * coefficients_[m];
        // K*v picks sin(nx)*C - cos(nx)*S; the cross form flips the S sign.
        k.accumulate_harmonic(out.data(), sin_table_[m].data(), cos_table_[m].data(), scale * c,
                              sign_of_s_term * scale * s, n_);
    }
}

void ConvolutionPlan::convolve(std::span<const double> in, double gamma,
                               std::span<double> out) const {
    apply(in, gamma, -1.0, out);
}

void ConvolutionPlan::correlate(std::span<const double> in, double gamma,
                                std::span<double> out) const {
    apply(in, gamma, +1.0, out);
}

PeriodicField convolve(const SineKernel& kernel, const PeriodicField& field, double gamma) {
    ConvolutionPlan plan(kernel, field.size());
    PeriodicField out(field.size());
    plan.convolve(field.values(), gamma, {out.data(), out.size()});
    return out;
}

double dispersion_omega(const SineKernel& kernel, int k, double gamma) {
    const int mode = std::abs(k);
    if (mode == 0 || static_cast<std::size_t>(mode) > kernel.modes()) return 0.0;
    const double omega = -gamma * std::numbers::pi * kernel.coefficients()[mode - 1];
    return k > 0 ? omega : -omega;
}

} // namespace ductwave
