#pragma once

#include <cstddef>
#include <string>

namespace ductwave::kernels {

// Hot-loop kernels over contiguous double arrays. Every operation has a
// scalar reference implementation and, on x86-64 with AVX2, a vectorized
// variant selected at runtime. Elementwise kernels are bit-identical across
// backends (both are compiled without FP contraction); reductions may differ
// in the last bits because the accumulation order differs.
struct Ops {
    // reductions
    double (*sum)(const double* x, std::size_t n);
    double (*sum_sq)(const double* x, std::size_t n);
    double (*dot)(const double* x, const double* y, std::size_t n);
    double (*sum_sq_diff)(const double* x, const double* y, std::size_t n);
    double (*max_abs)(const double* x, std::size_t n);
    // periodic difference reductions
    double (*total_variation)(const double* x, std::size_t n);
    double (*max_neighbor_jump)(const double* x, std::size_t n);
    double (*max_second_diff)(const double* x, std::size_t n);

    // elementwise
    // out[i] = u[i] + c*v[i]
    void (*add_scaled)(double* out, const double* u, const double* v, double c, std::size_t n);
    // out[i] += a*ct[i] + b*st[i]
    void (*accumulate_harmonic)(double* out, const double* ct, const double* st, double a,
                                double b, std::size_t n);

    // finite-volume kernels for the quadratic-flux conservation law,
    // periodic grid, slopes in undivided-difference units
    void (*uno_slopes)(const double* u, double* slope, std::size_t n);
    // ul[i] = u[i] - slope[i]/2 - c*u[i]*slope[i], ur[i] = u[i] + slope[i]/2 - c*u[i]*slope[i]
    void (*hancock_faces)(const double* u, const double* slope, double c, double* ul, double* ur,
                          std::size_t n);
    // flux[i] = Godunov flux at interface i+1/2 between ur[i] and ul[i+1 mod n],
    // f(u) = lambda*u^2/2 with lambda > 0
    void (*godunov_flux)(const double* ur, const double* ul, double lambda, double* flux,
                         std::size_t n);
    // out[i] = u[i] - dtdx*(flux[i] - flux[i-1 mod n])
    void (*flux_update)(const double* u, const double* flux, double dtdx, double* out,
                        std::size_t n);

    const char* name;
};

enum class Backend { automatic, scalar, avx2 };

/// Reference implementation, always available.
const Ops& scalar_ops();

/// Currently selected implementation. Defaults to the best backend the CPU
/// supports; the DUCTWAVE_KERNELS environment variable ("scalar" or "avx2")
/// or force_backend() override the choice.
const Ops& ops();

/// Force a backend; throws std::runtime_error if it is unavailable.
void force_backend(Backend b);

bool avx2_available();
std::string active_backend_name();

} // namespace ductwave::kernels
