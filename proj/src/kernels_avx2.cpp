#if defined(__x86_64__) || defined(_M_X64)

#include "peano/kernels.hpp"

#include <immintrin.h>

#include <limits>

// Compiled with -mavx2 for this translation unit only; callers reach these
// through the dispatch table after a cpuid check. mul/add are used instead
// of FMA so every lane rounds identically to the scalar reference.

namespace peano::kernels::avx2 {

namespace {

inline double hmax(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    __m128d m = _mm_max_pd(lo, hi);
    m = _mm_max_sd(m, _mm_unpackhi_pd(m, m));
    return _mm_cvtsd_f64(m);
}

inline double hmin(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    __m128d m = _mm_min_pd(lo, hi);
    m = _mm_min_sd(m, _mm_unpackhi_pd(m, m));
    return _mm_cvtsd_f64(m);
}

} // namespace

double max_sq_dist_point(const double* xs, const double* ys, std::size_t n,
                         double px, double py) {
    const __m256d vx = _mm256_set1_pd(px);
    const __m256d vy = _mm256_set1_pd(py);
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d dx = _mm256_sub_pd(_mm256_loadu_pd(xs + i), vx);
        const __m256d dy = _mm256_sub_pd(_mm256_loadu_pd(ys + i), vy);
        const __m256d d2 = _mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy));
        acc = _mm256_max_pd(acc, d2);
    }
    double best = hmax(acc);
    for (; i < n; ++i) {
        const double dx = xs[i] - px;
        const double dy = ys[i] - py;
        const double d2 = (dx * dx) + (dy * dy);
        if (d2 > best) best = d2;
    }
    return best;
}

double min_sq_dist_point(const double* xs, const double* ys, std::size_t n,
                         double px, double py) {
    const __m256d vx = _mm256_set1_pd(px);
    const __m256d vy = _mm256_set1_pd(py);
    __m256d acc = _mm256_set1_pd(std::numeric_limits<double>::infinity());
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d dx = _mm256_sub_pd(_mm256_loadu_pd(xs + i), vx);
        const __m256d dy = _mm256_sub_pd(_mm256_loadu_pd(ys + i), vy);
        const __m256d d2 = _mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy));
        acc = _mm256_min_pd(acc, d2);
    }
    double best = hmin(acc);
    for (; i < n; ++i) {
        const double dx = xs[i] - px;
        const double dy = ys[i] - py;
        const double d2 = (dx * dx) + (dy * dy);
        if (d2 < best) best = d2;
    }
    return best;
}

double max_sq_dist_pairwise(const double* xs, const double* ys, std::size_t n) {
    double best = 0.0;
    for (std::size_t i = 1; i < n; ++i) {
        const double d2 = max_sq_dist_point(xs, ys, i, xs[i], ys[i]);
        if (d2 > best) best = d2;
    }
    return best;
}

} // namespace peano::kernels::avx2

#endif
