#include "kernels_internal.hpp"

#ifdef DUCTWAVE_HAVE_AVX2

#include <immintrin.h>

#include <algorithm>
#include <cmath>

// AVX2 variants. Four lanes of doubles, unaligned loads, scalar tails.
// Elementwise kernels mirror the scalar operation order exactly (no FMA,
// FP contraction disabled for this translation unit) so results are
// bit-identical to the reference; reductions keep four partial accumulators
// and may differ from the reference in the last bits.

namespace ductwave::kernels {
namespace {

const __m256d kSignMask = _mm256_set1_pd(-0.0);

inline __m256d abs_pd(__m256d x) { return _mm256_andnot_pd(kSignMask, x); }

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

inline double hmax(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_max_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_max_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

double sum_avx2(const double* x, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) acc = _mm256_add_pd(acc, _mm256_loadu_pd(x + i));
    double out = hsum(acc);
    for (; i < n; ++i) out += x[i];
    return out;
}

double sum_sq_avx2(const double* x, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d v = _mm256_loadu_pd(x + i);
        acc = _mm256_add_pd(acc, _mm256_mul_pd(v, v));
    }
    double out = hsum(acc);
    for (; i < n; ++i) out += x[i] * x[i];
    return out;
}

double dot_avx2(const double* x, const double* y, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
    double out = hsum(acc);
    for (; i < n; ++i) out += x[i] * y[i];
    return out;
}

double sum_sq_diff_avx2(const double* x, const double* y, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i));
        acc = _mm256_add_pd(acc, _mm256_mul_pd(d, d));
    }
    double out = hsum(acc);
    for (; i < n; ++i) {
        const double d = x[i] - y[i];
        out += d * d;
    }
    return out;
}

double max_abs_avx2(const double* x, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) acc = _mm256_max_pd(acc, abs_pd(_mm256_loadu_pd(x + i)));
    double out = hmax(acc);
    for (; i < n; ++i) out = std::max(out, std::abs(x[i]));
    return out;
}

double total_variation_avx2(const double* x, std::size_t n) {
    if (n < 2) return 0.0;
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 1;
    for (; i + 4 <= n; i += 4)
        acc = _mm256_add_pd(acc, abs_pd(_mm256_sub_pd(_mm256_loadu_pd(x + i),
                                                      _mm256_loadu_pd(x + i - 1))));
    double out = hsum(acc) + std::abs(x[0] - x[n - 1]);
    for (; i < n; ++i) out += std::abs(x[i] - x[i - 1]);
    return out;
}

double max_neighbor_jump_avx2(const double* x, std::size_t n) {
    if (n < 2) return 0.0;
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 1;
    for (; i + 4 <= n; i += 4)
        acc = _mm256_max_pd(acc, abs_pd(_mm256_sub_pd(_mm256_loadu_pd(x + i),
                                                      _mm256_loadu_pd(x + i - 1))));
    double out = std::max(hmax(acc), std::abs(x[0] - x[n - 1]));
    for (; i < n; ++i) out = std::max(out, std::abs(x[i] - x[i - 1]));
    return out;
}

double max_second_diff_avx2(const double* x, std::size_t n) {
    if (n < 3) return 0.0;
    const __m256d two = _mm256_set1_pd(2.0);
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 1;
    for (; i + 4 <= n - 1; i += 4) {
        const __m256d xm = _mm256_loadu_pd(x + i - 1);
        const __m256d x0 = _mm256_loadu_pd(x + i);
        const __m256d xp = _mm256_loadu_pd(x + i + 1);
        acc = _mm256_max_pd(acc,
                            abs_pd(_mm256_add_pd(_mm256_sub_pd(xp, _mm256_mul_pd(two, x0)), xm)));
    }
    double out = hmax(acc);
    for (; i + 1 < n; ++i) out = std::max(out, std::abs(x[i + 1] - 2.0 * x[i] + x[i - 1]));
    out = std::max(out, std::abs(x[1] - 2.0 * x[0] + x[n - 1]));
    out = std::max(out, std::abs(x[0] - 2.0 * x[n - 1] + x[n - 2]));
    return out;
}

void add_scaled_avx2(double* out, const double* u, const double* v, double c, std::size_t n) {
    const __m256d cc = _mm256_set1_pd(c);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(out + i, _mm256_add_pd(_mm256_loadu_pd(u + i),
                                                _mm256_mul_pd(cc, _mm256_loadu_pd(v + i))));
    for (; i < n; ++i) out[i] = u[i] + c * v[i];
}

void accumulate_harmonic_avx2(double* out, const double* ct, const double* st, double a, double b,
                              std::size_t n) {
    const __m256d aa = _mm256_set1_pd(a);
    const __m256d bb = _mm256_set1_pd(b);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d t = _mm256_add_pd(_mm256_mul_pd(aa, _mm256_loadu_pd(ct + i)),
                                        _mm256_mul_pd(bb, _mm256_loadu_pd(st + i)));
        _mm256_storeu_pd(out + i, _mm256_add_pd(_mm256_loadu_pd(out + i), t));
    }
    for (; i < n; ++i) out[i] += a * ct[i] + b * st[i];
}

inline double minmod(double a, double b) {
    if (a * b <= 0.0) return 0.0;
    return std::abs(a) < std::abs(b) ? a : b;
}

inline __m256d minmod_pd(__m256d a, __m256d b) {
    const __m256d positive_product = _mm256_cmp_pd(_mm256_mul_pd(a, b), _mm256_setzero_pd(),
                                                   _CMP_GT_OQ);
    const __m256d pick_a = _mm256_cmp_pd(abs_pd(a), abs_pd(b), _CMP_LT_OQ);
    return _mm256_and_pd(_mm256_blendv_pd(b, a, pick_a), positive_product);
}

inline double uno_slope_at(double um2, double um1, double u0, double up1, double up2) {
    const double dm = u0 - um1;
    const double dp = up1 - u0;
    const double second_m = u0 - 2.0 * um1 + um2;
    const double second_0 = up1 - 2.0 * u0 + um1;
    const double second_p = up2 - 2.0 * up1 + u0;
    return minmod(dm + 0.5 * minmod(second_m, second_0), dp - 0.5 * minmod(second_0, second_p));
}

void uno_slopes_avx2(const double* u, double* slope, std::size_t n) {
    if (n < 5) {
        for (std::size_t i = 0; i < n; ++i) slope[i] = 0.0;
        return;
    }
    const __m256d two = _mm256_set1_pd(2.0);
    const __m256d half = _mm256_set1_pd(0.5);
    std::size_t i = 2;
    for (; i + 4 <= n - 2; i += 4) {
        const __m256d um2 = _mm256_loadu_pd(u + i - 2);
        const __m256d um1 = _mm256_loadu_pd(u + i - 1);
        const __m256d u0 = _mm256_loadu_pd(u + i);
        const __m256d up1 = _mm256_loadu_pd(u + i + 1);
        const __m256d up2 = _mm256_loadu_pd(u + i + 2);
        const __m256d dm = _mm256_sub_pd(u0, um1);
        const __m256d dp = _mm256_sub_pd(up1, u0);
        const __m256d second_m = _mm256_add_pd(_mm256_sub_pd(u0, _mm256_mul_pd(two, um1)), um2);
        const __m256d second_0 = _mm256_add_pd(_mm256_sub_pd(up1, _mm256_mul_pd(two, u0)), um1);
        const __m256d second_p = _mm256_add_pd(_mm256_sub_pd(up2, _mm256_mul_pd(two, up1)), u0);
        const __m256d left = _mm256_add_pd(dm, _mm256_mul_pd(half, minmod_pd(second_m, second_0)));
        const __m256d right = _mm256_sub_pd(dp, _mm256_mul_pd(half, minmod_pd(second_0, second_p)));
        _mm256_storeu_pd(slope + i, minmod_pd(left, right));
    }
    for (; i + 2 < n; ++i)
        slope[i] = uno_slope_at(u[i - 2], u[i - 1], u[i], u[i + 1], u[i + 2]);
    for (std::size_t j : {std::size_t{0}, std::size_t{1}, n - 2, n - 1})
        slope[j] = uno_slope_at(u[(j + n - 2) % n], u[(j + n - 1) % n], u[j], u[(j + 1) % n],
                                u[(j + 2) % n]);
}

void hancock_faces_avx2(const double* u, const double* slope, double c, double* ul, double* ur,
                        std::size_t n) {
    const __m256d cc = _mm256_set1_pd(c);
    const __m256d half = _mm256_set1_pd(0.5);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d uu = _mm256_loadu_pd(u + i);
        const __m256d ss = _mm256_loadu_pd(slope + i);
        const __m256d shift = _mm256_mul_pd(_mm256_mul_pd(cc, uu), ss);
        const __m256d hs = _mm256_mul_pd(half, ss);
        _mm256_storeu_pd(ul + i, _mm256_sub_pd(_mm256_sub_pd(uu, hs), shift));
        _mm256_storeu_pd(ur + i, _mm256_sub_pd(_mm256_add_pd(uu, hs), shift));
    }
    for (; i < n; ++i) {
        const double shift = c * u[i] * slope[i];
        ul[i] = u[i] - 0.5 * slope[i] - shift;
        ur[i] = u[i] + 0.5 * slope[i] - shift;
    }
}

inline double godunov_flux_at(double a, double b, double half_lambda) {
    const double ap = std::max(a, 0.0);
    const double bm = std::min(b, 0.0);
    return half_lambda * std::max(ap * ap, bm * bm);
}

void godunov_flux_avx2(const double* ur, const double* ul, double lambda, double* flux,
                       std::size_t n) {
    const double half_lambda = 0.5 * lambda;
    const __m256d hl = _mm256_set1_pd(half_lambda);
    const __m256d zero = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 5 <= n; i += 4) {
        const __m256d a = _mm256_loadu_pd(ur + i);
        const __m256d b = _mm256_loadu_pd(ul + i + 1);
        const __m256d ap = _mm256_max_pd(a, zero);
        const __m256d bm = _mm256_min_pd(b, zero);
        const __m256d m = _mm256_max_pd(_mm256_mul_pd(ap, ap), _mm256_mul_pd(bm, bm));
        _mm256_storeu_pd(flux + i, _mm256_mul_pd(hl, m));
    }
    for (; i + 1 < n; ++i) flux[i] = godunov_flux_at(ur[i], ul[i + 1], half_lambda);
    if (n > 0) flux[n - 1] = godunov_flux_at(ur[n - 1], ul[0], half_lambda);
}

void flux_update_avx2(const double* u, const double* flux, double dtdx, double* out,
                      std::size_t n) {
    if (n == 0) return;
    const __m256d cc = _mm256_set1_pd(dtdx);
    out[0] = u[0] - dtdx * (flux[0] - flux[n - 1]);
    std::size_t i = 1;
    for (; i + 4 <= n; i += 4) {
        const __m256d df = _mm256_sub_pd(_mm256_loadu_pd(flux + i), _mm256_loadu_pd(flux + i - 1));
        _mm256_storeu_pd(out + i, _mm256_sub_pd(_mm256_loadu_pd(u + i), _mm256_mul_pd(cc, df)));
    }
    for (; i < n; ++i) out[i] = u[i] - dtdx * (flux[i] - flux[i - 1]);
}

} // namespace

const Ops& avx2_ops() {
    static const Ops ops = {
        sum_avx2,
        sum_sq_avx2,
        dot_avx2,
        sum_sq_diff_avx2,
        max_abs_avx2,
        total_variation_avx2,
        max_neighbor_jump_avx2,
        max_second_diff_avx2,
        add_scaled_avx2,
        accumulate_harmonic_avx2,
        uno_slopes_avx2,
        hancock_faces_avx2,
        godunov_flux_avx2,
        flux_update_avx2,
        "avx2",
    };
    return ops;
}

} // namespace ductwave::kernels

#endif // DUCTWAVE_HAVE_AVX2
