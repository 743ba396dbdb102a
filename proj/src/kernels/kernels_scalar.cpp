#include "ductwave/kernels.hpp"

#include <algorithm>
#include <cmath>

// Scalar reference kernels. These define the semantics; the SIMD variants
// must reproduce the elementwise ones bit for bit.

namespace ductwave::kernels {
namespace {

double sum_scalar(const double* x, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += x[i];
    return acc;
}

double sum_sq_scalar(const double* x, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += x[i] * x[i];
    return acc;
}

double dot_scalar(const double* x, const double* y, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += x[i] * y[i];
    return acc;
}

double sum_sq_diff_scalar(const double* x, const double* y, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double d = x[i] - y[i];
        acc += d * d;
    }
    return acc;
}

double max_abs_scalar(const double* x, std::size_t n) {
    double m = 0.0;
    for (std::size_t i = 0; i < n; ++i) m = std::max(m, std::abs(x[i]));
    return m;
}

double total_variation_scalar(const double* x, std::size_t n) {
    if (n < 2) return 0.0;
    double acc = std::abs(x[0] - x[n - 1]);
    for (std::size_t i = 1; i < n; ++i) acc += std::abs(x[i] - x[i - 1]);
    return acc;
}

double max_neighbor_jump_scalar(const double* x, std::size_t n) {
    if (n < 2) return 0.0;
    double m = std::abs(x[0] - x[n - 1]);
    for (std::size_t i = 1; i < n; ++i) m = std::max(m, std::abs(x[i] - x[i - 1]));
    return m;
}

double max_second_diff_scalar(const double* x, std::size_t n) {
    if (n < 3) return 0.0;
    double m = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double xm = x[(i + n - 1) % n];
        const double xp = x[(i + 1) % n];
        m = std::max(m, std::abs(xp - 2.0 * x[i] + xm));
    }
    return m;
}

void add_scaled_scalar(double* out, const double* u, const double* v, double c, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = u[i] + c * v[i];
}

void accumulate_harmonic_scalar(double* out, const double* ct, const double* st, double a,
                                double b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] += a * ct[i] + b * st[i];
}

inline double minmod(double a, double b) {
    if (a * b <= 0.0) return 0.0;
    return std::abs(a) < std::abs(b) ? a : b;
}

inline double uno_slope_at(double um2, double um1, double u0, double up1, double up2) {
    const double dm = u0 - um1;
    const double dp = up1 - u0;
    const double second_m = u0 - 2.0 * um1 + um2;
    const double second_0 = up1 - 2.0 * u0 + um1;
    const double second_p = up2 - 2.0 * up1 + u0;
    return minmod(dm + 0.5 * minmod(second_m, second_0), dp - 0.5 * minmod(second_0, second_p));
}

void uno_slopes_scalar(const double* u, double* slope, std::size_t n) {
    if (n < 5) {
        for (std::size_t i = 0; i < n; ++i) slope[i] = 0.0;
        return;
    }
    for (std::size_t i = 0; i < n; ++i) {
        const double um2 = u[(i + n - 2) % n];
        const double um1 = u[(i + n - 1) % n];
        const double up1 = u[(i + 1) % n];
        const double up2 = u[(i + 2) % n];
        slope[i] = uno_slope_at(um2, um1, u[i], up1, up2);
    }
}

void hancock_faces_scalar(const double* u, const double* slope, double c, double* ul, double* ur,
                          std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const double shift = c * u[i] * slope[i];
        ul[i] = u[i] - 0.5 * slope[i] - shift;
        ur[i] = u[i] + 0.5 * slope[i] - shift;
    }
}

inline double godunov_flux_at(double a, double b, double half_lambda) {
    // exact Riemann flux for the convex flux lambda*u^2/2 with sonic point 0
    const double ap = std::max(a, 0.0);
    const double bm = std::min(b, 0.0);
    return half_lambda * std::max(ap * ap, bm * bm);
}

void godunov_flux_scalar(const double* ur, const double* ul, double lambda, double* flux,
                         std::size_t n) {
    const double half_lambda = 0.5 * lambda;
    for (std::size_t i = 0; i + 1 < n; ++i) flux[i] = godunov_flux_at(ur[i], ul[i + 1], half_lambda);
    if (n > 0) flux[n - 1] = godunov_flux_at(ur[n - 1], ul[0], half_lambda);
}

void flux_update_scalar(const double* u, const double* flux, double dtdx, double* out,
                        std::size_t n) {
    if (n == 0) return;
    out[0] = u[0] - dtdx * (flux[0] - flux[n - 1]);
    for (std::size_t i = 1; i < n; ++i) out[i] = u[i] - dtdx * (flux[i] - flux[i - 1]);
}

} // namespace

const Ops& scalar_ops() {
    static const Ops ops = {
        sum_scalar,
        sum_sq_scalar,
        dot_scalar,
        sum_sq_diff_scalar,
        max_abs_scalar,
        total_variation_scalar,
        max_neighbor_jump_scalar,
        max_second_diff_scalar,
        add_scaled_scalar,
        accumulate_harmonic_scalar,
        uno_slopes_scalar,
        hancock_faces_scalar,
        godunov_flux_scalar,
        flux_update_scalar,
        "scalar",
    };
    return ops;
}

} // namespace ductwave::kernels
