#if defined(__aarch64__)

#include "peano/kernels.hpp"

#include <arm_neon.h>

#include <limits>

namespace peano::kernels::neon {

double max_sq_dist_point(const double* xs, const double* ys, std::size_t n,
                         double px, double py) {
    const float64x2_t vx = vdupq_n_f64(px);
    const float64x2_t vy = vdupq_n_f64(py);
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const float64x2_t dx = vsubq_f64(vld1q_f64(xs + i), vx);
        const float64x2_t dy = vsubq_f64(vld1q_f64(ys + i), vy);
        const float64x2_t d2 = vaddq_f64(vmulq_f64(dx, dx), vmulq_f64(dy, dy));
        acc = vmaxq_f64(acc, d2);
    }
    double best = vmaxvq_f64(acc);
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
    const float64x2_t vx = vdupq_n_f64(px);
    const float64x2_t vy = vdupq_n_f64(py);
    float64x2_t acc = vdupq_n_f64(std::numeric_limits<double>::infinity());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const float64x2_t dx = vsubq_f64(vld1q_f64(xs + i), vx);
        const float64x2_t dy = vsubq_f64(vld1q_f64(ys + i), vy);
        const float64x2_t d2 = vaddq_f64(vmulq_f64(dx, dx), vmulq_f64(dy, dy));
        acc = vminq_f64(acc, d2);
    }
    double best = vminvq_f64(acc);
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

} // namespace peano::kernels::neon

#endif
