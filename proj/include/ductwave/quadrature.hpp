#pragma once

#include <functional>
#include <span>

namespace ductwave {

/// Adaptive 7/15 Gauss-Kronrod integration of f over [a, b] to an absolute
/// tolerance. Optional interior split points seed the initial panel list so
/// integrands with known kinks (e.g. a square-root corner) converge fast.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol = 1e-11, std::span<const double> split_points = {});

} // namespace ductwave
