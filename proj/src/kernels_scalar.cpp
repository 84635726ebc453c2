#include "peano/kernels.hpp"

#include <limits>

namespace peano::kernels::scalar {

double max_sq_dist_point(const double* xs, const double* ys, std::size_t n,
                         double px, double py) {
    double best = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = xs[i] - px;
        const double dy = ys[i] - py;
        const double d2 = (dx * dx) + (dy * dy);
        if (d2 > best) best = d2;
    }
    return best;
}

double min_sq_dist_point(const double* xs, const double* ys, std::size_t n,
                         double px, double py) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
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

} // namespace peano::kernels::scalar
