#pragma once

#include <cstddef>
#include <numbers>
#include <span>
#include <utility>
#include <vector>

namespace ductwave {

/// A 2*pi-periodic scalar field sampled at x_i = 2*pi*i/N on a uniform grid.
/// Index arithmetic wraps modulo N. The type itself permits a nonzero mean;
/// the solver asserts mean conservation separately.
class PeriodicField {
public:
    PeriodicField() = default;
    explicit PeriodicField(std::size_t n) : values_(n, 0.0) {}
    explicit PeriodicField(std::vector<double> values) : values_(std::move(values)) {}

    std::size_t size() const noexcept { return values_.size(); }
    double dx() const noexcept { return two_pi / static_cast<double>(values_.size()); }
    double grid_point(std::size_t i) const noexcept {
        return two_pi * static_cast<double>(i) / static_cast<double>(values_.size());
    }

    double& operator[](std::size_t i) noexcept { return values_[i]; }
    double operator[](std::size_t i) const noexcept { return values_[i]; }

    /// Wrapping accessor, valid for any signed offset within +-size.
    double at_wrapped(std::ptrdiff_t i) const noexcept {
        const auto n = static_cast<std::ptrdiff_t>(values_.size());
        return values_[static_cast<std::size_t>(((i % n) + n) % n)];
    }

    double* data() noexcept { return values_.data(); }
    const double* data() const noexcept { return values_.data(); }
    std::span<const double> values() const noexcept { return values_; }

    template <typename F>
    static PeriodicField from_function(std::size_t n, F&& f) {
        PeriodicField out(n);
        for (std::size_t i = 0; i < n; ++i) out[i] = f(out.grid_point(i));
        return out;
    }

    static constexpr double two_pi = 2.0 * std::numbers::pi;

private:
    std::vector<double> values_;
};

} // namespace ductwave
