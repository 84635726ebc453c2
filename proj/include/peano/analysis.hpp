#pragma once

#include "peano/assembler.hpp"
#include "peano/continuum.hpp"
#include "peano/covers.hpp"
#include "peano/path_builder.hpp"

#include <cstdint>
#include <vector>

namespace peano {

struct DimensionReport {
    double box_dim = 0;
    double s_dim = 0;
    int window_lo = 0; // level range used for the s_dim fit
    int window_hi = 0;
    double holder_upper = 0; // 2 * s_dim
    double residual = 0;     // rms residual of the s_dim fit
    double box_residual = 0;
};

/// Occupied grid boxes of side 2^-n over the bounding box (boxes need not
/// be connected), per level 0..n_max.
std::vector<long> box_counts(const Continuum& X, int n_max);

/// Least-squares slope of ln(count) against n*ln2 over the trailing half of
/// the levels, after collapsing trailing duplicate counts (saturated
/// resolution adds no information). Returns 0 for constant tables.
double box_dim(const Continuum& X, int n_max);

/// Same regression applied to the table's upper bounds.
/// Throws InsufficientLevels for tables with fewer than 3 rows.
double estimate_sdim(const SierpinskiTable& table);

/// Both estimators with a resolution-capped fit window: levels with
/// 2^-n below kappa * (min cell distance) are saturation artifacts and are
/// excluded before the trailing-half rule.
DimensionReport dimension_report(const Continuum& X, int n_max, std::size_t budget = 20);

/// The fit window the report uses for a given table (exposed for tests).
std::pair<int, int> report_window(const Continuum& X, int n_max);

struct ModulusTable {
    std::vector<double> t;
    std::vector<double> omega_hat;
};

struct CurveGeometry {
    std::vector<double> ts, xs, ys; // breakpoint positions and cell coords
};

CurveGeometry curve_geometry(const Continuum& X, const ParamCurve& curve);

/// omega_hat(t) = max image distance over breakpoint pairs with parameter
/// gap <= t; pairs capped by seeded uniform subsampling. Nondecreasing.
ModulusTable empirical_modulus(const CurveGeometry& g, const std::vector<double>& grid,
                               std::size_t pair_cap = 100000, std::uint64_t seed = 0);

/// Distinct breakpoint gaps below s (the default modulus grid), capped.
std::vector<double> default_modulus_grid(const CurveGeometry& g, std::size_t pair_cap = 100000,
                                         std::uint64_t seed = 0);

struct VerifyResult {
    bool passed = true;
    double worst_ratio = 0;
    double worst_t = 0;
    double worst_omega_hat = 0;
    // breakpoint indices realizing the worst ratio
    std::size_t worst_i = 0, worst_j = 0;
};

/// Pass iff omega_hat(t) <= Omega(t) at every grid t; reports the argmax pair.
VerifyResult verify_certificate(const CurveGeometry& g, const ModulusSpec& omega,
                                const std::vector<double>& grid, std::size_t pair_cap = 100000,
                                std::uint64_t seed = 0);

/// Closed-form parameter-interval bound 2^{6a} C^2 2^{2r-a} /
/// ((1-2^{r-a})(1-2^{2r-a})) for the power modulus; requires a > 2r > 0.
double holder_bound(double C, double r, double alpha);

} // namespace peano
