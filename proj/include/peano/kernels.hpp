#pragma once

#include <cstddef>
#include <string>

// Distance kernels over structure-of-arrays cell coordinates. Scalar
// reference implementations plus SIMD variants (AVX2 on x86-64, NEON on
// aarch64) selected once at startup from CPU capabilities. All variants
// use the same per-element arithmetic (mul/add, no FMA), so results are
// bit-identical across lanes and the dispatch is equivalence-testable.

namespace peano::kernels {

struct dispatch_table {
    // max over i of (xs[i]-px)^2 + (ys[i]-py)^2
    double (*max_sq_dist_point)(const double* xs, const double* ys, std::size_t n,
                                double px, double py);
    // min over i of (xs[i]-px)^2 + (ys[i]-py)^2
    double (*min_sq_dist_point)(const double* xs, const double* ys, std::size_t n,
                                double px, double py);
    // max over all i<j pairs of squared distance (diameter^2 of a point set)
    double (*max_sq_dist_pairwise)(const double* xs, const double* ys, std::size_t n);
    const char* name;
};

namespace scalar {
double max_sq_dist_point(const double* xs, const double* ys, std::size_t n, double px, double py);
double min_sq_dist_point(const double* xs, const double* ys, std::size_t n, double px, double py);
double max_sq_dist_pairwise(const double* xs, const double* ys, std::size_t n);
} // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
namespace avx2 {
double max_sq_dist_point(const double* xs, const double* ys, std::size_t n, double px, double py);
double min_sq_dist_point(const double* xs, const double* ys, std::size_t n, double px, double py);
double max_sq_dist_pairwise(const double* xs, const double* ys, std::size_t n);
} // namespace avx2
#endif

#if defined(__aarch64__)
namespace neon {
double max_sq_dist_point(const double* xs, const double* ys, std::size_t n, double px, double py);
double min_sq_dist_point(const double* xs, const double* ys, std::size_t n, double px, double py);
double max_sq_dist_pairwise(const double* xs, const double* ys, std::size_t n);
} // namespace neon
#endif

/// Active kernel set. Initialized from cpuid on first use; PEANO_KERNELS=scalar
/// in the environment forces the reference lane.
const dispatch_table& active();

/// Force a named lane ("scalar", "avx2", "neon"); returns false if unavailable.
bool select(const std::string& name);

/// Names of lanes compiled in and usable on this machine.
std::string available();

// Convenience wrappers through the active table.
inline double max_sq_dist_point(const double* xs, const double* ys, std::size_t n,
                                double px, double py) {
    return active().max_sq_dist_point(xs, ys, n, px, py);
}
inline double min_sq_dist_point(const double* xs, const double* ys, std::size_t n,
                                double px, double py) {
    return active().min_sq_dist_point(xs, ys, n, px, py);
}
inline double max_sq_dist_pairwise(const double* xs, const double* ys, std::size_t n) {
    return active().max_sq_dist_pairwise(xs, ys, n);
}

} // namespace peano::kernels
