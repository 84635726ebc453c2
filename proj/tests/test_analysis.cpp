#include "peano/analysis.hpp"

#include "peano/errors.hpp"

#include <doctest.h>

#include <cmath>

using namespace peano;

TEST_CASE("closed-form interval bound") {
    // 2^24 * 2^-2 / ((1 - 2^-3)(1 - 2^-2)) = 134217728 / 21
    const double expect = 134217728.0 / 21.0;
    CHECK(std::abs(holder_bound(1.0, 1.0, 4.0) - expect) <= expect * 1e-12);
    CHECK_THROWS_AS(holder_bound(1.0, 1.0, 2.0), error);   // alpha = 2r diverges
    CHECK_THROWS_AS(holder_bound(1.0, 1.0, 1.5), error);   // alpha < 2r diverges
    CHECK_THROWS_AS(holder_bound(-1.0, 1.0, 4.0), error);  // bad constant
}

TEST_CASE("closed-form bound is monotone in C and alpha") {
    for (double r : {0.5, 1.0, 1.4}) {
        double prev_c = 0;
        for (double C : {0.5, 1.0, 2.0, 4.0}) {
            const double v = holder_bound(C, r, 2 * r + 1.0);
            CHECK(v > prev_c);
            prev_c = v;
        }
        double prev_a = 1e300;
        for (double alpha = 2 * r + 0.5; alpha < 2 * r + 4; alpha += 0.5) {
            const double v = holder_bound(1.0, r, alpha);
            CHECK(v < prev_a);
            prev_a = v;
        }
    }
}

TEST_CASE("box counting") {
    CHECK(box_dim(make_interval(1), 4) == 0.0); // single cell
    const auto counts = box_counts(make_interval(129), 6);
    REQUIRE(counts.size() == 7);
    CHECK(counts[0] >= 1);
    for (std::size_t i = 1; i < counts.size(); ++i) CHECK(counts[i] >= counts[i - 1]);
    const double slope = box_dim(make_interval(129), 6);
    CHECK(slope == doctest::Approx(1.0).epsilon(0.15));
}

TEST_CASE("s-dimension estimator") {
    SierpinskiTable table;
    for (int n = 0; n <= 5; ++n)
        table.rows.push_back({n, std::ldexp(1.0, -n), 1, 1, true});
    CHECK(estimate_sdim(table) == 0.0); // constant table

    SierpinskiTable tiny;
    tiny.rows.push_back({0, 1.0, 1, 1, true});
    tiny.rows.push_back({1, 0.5, 2, 2, true});
    CHECK_THROWS_AS(estimate_sdim(tiny), error); // needs >= 3 levels

    // doubling counts give slope exactly 1
    SierpinskiTable doubling;
    long v = 1;
    for (int n = 0; n <= 6; ++n, v *= 2)
        doubling.rows.push_back({n, std::ldexp(1.0, -n), v, v, false});
    CHECK(estimate_sdim(doubling) == doctest::Approx(1.0).epsilon(1e-9));

    // appending exact duplicates of the last row does not move the estimate
    SierpinskiTable padded = doubling;
    padded.rows.push_back({7, std::ldexp(1.0, -7), 64, 64, false});
    padded.rows.push_back({8, std::ldexp(1.0, -8), 64, 64, false});
    CHECK(estimate_sdim(padded) == doctest::Approx(estimate_sdim(doubling)).epsilon(1e-12));
}

TEST_CASE("dimension report: resolution-capped windows and the dimension ordering") {
    const DimensionReport rep = dimension_report(make_interval(129), 6);
    CHECK(rep.s_dim == doctest::Approx(1.0).epsilon(0.15));
    CHECK(rep.holder_upper == doctest::Approx(2 * rep.s_dim));
    CHECK(rep.window_hi <= 6);
    CHECK(rep.box_dim <= rep.s_dim + 0.1);
}

TEST_CASE("empirical modulus") {
    CurveGeometry constant;
    constant.ts = {0.0, 1.0, 2.0};
    constant.xs = {0.5, 0.5, 0.5};
    constant.ys = {0.5, 0.5, 0.5};
    const ModulusTable t0 = empirical_modulus(constant, {0.5, 1.0, 2.0});
    for (double v : t0.omega_hat) CHECK(v == 0.0);

    // two breakpoints at distance d and gap g: omega_hat steps at g
    CurveGeometry two;
    two.ts = {0.0, 0.5};
    two.xs = {0.0, 0.3};
    two.ys = {0.0, 0.4};
    const ModulusTable t1 = empirical_modulus(two, {0.25, 0.5, 1.0});
    CHECK(t1.omega_hat[0] == 0.0);
    CHECK(t1.omega_hat[1] == doctest::Approx(0.5)); // 3-4-5 triangle
    CHECK(t1.omega_hat[2] == doctest::Approx(0.5));
    for (std::size_t i = 1; i < t1.omega_hat.size(); ++i)
        CHECK(t1.omega_hat[i] >= t1.omega_hat[i - 1]);

    CHECK_THROWS_AS(empirical_modulus(two, {0.5, 0.25}), error); // unsorted grid
    CHECK_THROWS_AS(empirical_modulus(two, {0.0}), error);       // non-positive grid
}

TEST_CASE("verify_certificate passes with the build modulus, fails with half of it") {
    const Continuum X = make_interval(33);
    const ModulusSpec omega = ModulusSpec::power(1.0, 2.0);
    const HolderCurve hc = assemble(X, omega, default_level_count(X));
    REQUIRE(hc.passed);
    const CurveGeometry g = curve_geometry(X, hc.curve);
    const auto grid = default_modulus_grid(g);
    REQUIRE(!grid.empty());
    CHECK(verify_certificate(g, omega, grid).passed);

    const ModulusSpec half = ModulusSpec::power(0.5, 2.0);
    const VerifyResult res = verify_certificate(g, half, grid);
    CHECK_FALSE(res.passed);
    CHECK(res.worst_ratio > 1.0);
    CHECK(res.worst_omega_hat > 0.0);
    CHECK(res.worst_i < res.worst_j);
    // the witness pair realizes the reported modulus value at the worst t
    const double dx = g.xs[res.worst_i] - g.xs[res.worst_j];
    const double dy = g.ys[res.worst_i] - g.ys[res.worst_j];
    CHECK(std::sqrt(dx * dx + dy * dy) == doctest::Approx(res.worst_omega_hat));
    CHECK(g.ts[res.worst_j] - g.ts[res.worst_i] <= res.worst_t + 1e-12);
}

TEST_CASE("assembled curves verify against their own modulus (dual route)") {
    for (int instance = 0; instance < 2; ++instance) {
        const Continuum X =
            instance == 0 ? make_sierpinski_carpet(1) : make_sierpinski_gasket(2);
        const ModulusSpec omega = ModulusSpec::power(1.0, 4.0);
        const HolderCurve hc = assemble(X, omega, default_level_count(X));
        CHECK(hc.coverage == 1.0);
        CHECK(hc.passed);
        const CurveGeometry g = curve_geometry(X, hc.curve);
        CHECK(verify_certificate(g, omega, default_modulus_grid(g)).passed);
    }
}
