#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ductwave/field.hpp"

namespace ductwave {

/// Odd 2*pi-periodic kernel K(x) = sum_n A_n sin(n x), n = 1..M. Zero mean by
/// construction. The default single-mode kernel is K(x) = sin x.
class SineKernel {
public:
    explicit SineKernel(std::vector<double> coefficients);
    static SineKernel single_mode() { return SineKernel({1.0}); }

    std::size_t modes() const noexcept { return coefficients_.size(); }
    const std::vector<double>& coefficients() const noexcept { return coefficients_; }

    double evaluate(double x) const;
    double max_abs_coefficient() const;

private:
    std::vector<double> coefficients_;
};

/// Precomputed trig tables for applying the kernel on a fixed grid. The
/// convolution is evaluated through the discrete sine/cosine coefficients of
/// the input, which on a uniform periodic grid is identical to the composite
/// trapezoid rule applied mode by mode.
class ConvolutionPlan {
public:
    ConvolutionPlan(const SineKernel& kernel, std::size_t n);

    std::size_t grid_size() const noexcept { return n_; }
    std::size_t modes() const noexcept { return coefficients_.size(); }

    /// out_i = gamma * integral K(x_i - y) v(y) dy (trapezoid-exact).
    void convolve(std::span<const double> in, double gamma, std::span<double> out) const;

    /// out_i = gamma * integral K(x_i + y) v(y) dy (the cross form used by
    /// the two-field system).
    void correlate(std::span<const double> in, double gamma, std::span<double> out) const;

private:
    void apply(std::span<const double> in, double gamma, double sign_of_s_term,
               std::span<double> out) const;

    std::size_t n_;
    std::vector<double> coefficients_;
    std::vector<std::vector<double>> cos_table_; // cos(n x_i) per mode
    std::vector<std::vector<double>> sin_table_;
};

/// One-shot convolution: gamma * (K * field) on the field's grid.
/// Requires N >= 4M so the trapezoid rule is exact for band-limited input.
PeriodicField convolve(const SineKernel& kernel, const PeriodicField& field, double gamma);

/// Dispersion relation of the linearized equation: omega(k) for integer
/// k != 0. Real because K is odd; zero for |k| beyond the truncation order.
double dispersion_omega(const SineKernel& kernel, int k, double gamma);

} // namespace ductwave
