#include "peano/kernels.hpp"

#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

using namespace peano;

namespace {

struct RandomArrays {
    std::vector<double> xs, ys;
};

RandomArrays make_arrays(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(-3.0, 3.0);
    RandomArrays a;
    for (std::size_t i = 0; i < n; ++i) {
        a.xs.push_back(uni(rng));
        a.ys.push_back(uni(rng));
    }
    return a;
}

} // namespace

TEST_CASE("scalar kernels match a plain loop") {
    const auto a = make_arrays(37, 1);
    double mx = 0, mn = 1e300;
    for (std::size_t i = 0; i < a.xs.size(); ++i) {
        const double dx = a.xs[i] - 0.25, dy = a.ys[i] - (-0.5);
        mx = std::max(mx, dx * dx + dy * dy);
        mn = std::min(mn, dx * dx + dy * dy);
    }
    CHECK(kernels::scalar::max_sq_dist_point(a.xs.data(), a.ys.data(), a.xs.size(), 0.25, -0.5) ==
          doctest::Approx(mx).epsilon(0));
    CHECK(kernels::scalar::min_sq_dist_point(a.xs.data(), a.ys.data(), a.xs.size(), 0.25, -0.5) ==
          doctest::Approx(mn).epsilon(0));
}

TEST_CASE("every available lane agrees bit-for-bit with the scalar reference") {
    // the lanes avoid FMA on purpose, so results are bit-identical
    for (std::size_t n : {0u, 1u, 2u, 3u, 4u, 5u, 7u, 8u, 15u, 64u, 67u, 501u}) {
        const auto a = make_arrays(n, 100 + n);
        const double sx = kernels::scalar::max_sq_dist_point(a.xs.data(), a.ys.data(), n, 0.1, 0.2);
        const double sn = kernels::scalar::min_sq_dist_point(a.xs.data(), a.ys.data(), n, 0.1, 0.2);
        const double sp = kernels::scalar::max_sq_dist_pairwise(a.xs.data(), a.ys.data(), n);
#if defined(__x86_64__) || defined(_M_X64)
        if (kernels::select("avx2")) {
            CHECK(kernels::avx2::max_sq_dist_point(a.xs.data(), a.ys.data(), n, 0.1, 0.2) == sx);
            CHECK(kernels::avx2::min_sq_dist_point(a.xs.data(), a.ys.data(), n, 0.1, 0.2) == sn);
            CHECK(kernels::avx2::max_sq_dist_pairwise(a.xs.data(), a.ys.data(), n) == sp);
        }
#endif
#if defined(__aarch64__)
        CHECK(kernels::neon::max_sq_dist_point(a.xs.data(), a.ys.data(), n, 0.1, 0.2) == sx);
        CHECK(kernels::neon::min_sq_dist_point(a.xs.data(), a.ys.data(), n, 0.1, 0.2) == sn);
        CHECK(kernels::neon::max_sq_dist_pairwise(a.xs.data(), a.ys.data(), n) == sp);
#endif
    }
}

TEST_CASE("lane selection") {
    CHECK(kernels::select("scalar"));
    CHECK(std::string(kernels::active().name) == "scalar");
    CHECK_FALSE(kernels::select("no-such-lane"));
    CHECK(kernels::available().find("scalar") != std::string::npos);
    // restore the default for the rest of the suite
    for (const char* lane : {"avx2", "neon"})
        if (kernels::select(lane)) break;
}

TEST_CASE("empty and singleton inputs") {
    CHECK(kernels::max_sq_dist_pairwise(nullptr, nullptr, 0) == 0.0);
    const double x = 2.0, y = 3.0;
    CHECK(kernels::max_sq_dist_pairwise(&x, &y, 1) == 0.0);
    CHECK(kernels::max_sq_dist_point(&x, &y, 1, 2.0, 3.0) == 0.0);
    CHECK(kernels::min_sq_dist_point(&x, &y, 1, 0.0, 3.0) == 4.0);
}
