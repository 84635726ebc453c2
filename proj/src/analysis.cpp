#include "peano/analysis.hpp"

#include "peano/errors.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

namespace peano {

namespace {

// Resolution guard for fit windows: levels finer than kappa * d_min measure
// the grid, not the shape.
constexpr double kWindowKappa = 4.0;

struct Fit {
    double slope = 0;
    double residual = 0;
    int lo = 0, hi = 0;
};

// ln(count) against n*ln2 over the trailing half, trailing duplicates
// collapsed first.
Fit trailing_fit(const std::vector<long>& counts, int lo_cap, int hi_cap) {
    std::vector<std::pair<int, long>> rows;
    for (int n = lo_cap; n <= hi_cap; ++n)
        rows.emplace_back(n, counts[static_cast<std::size_t>(n)]);
    while (rows.size() > 1 && rows.back().second == rows[rows.size() - 2].second)
        rows.pop_back();
    const std::size_t k = rows.size();
    const std::size_t start = k > 1 ? k - (k + 1) / 2 : 0;

    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::size_t m = 0;
    for (std::size_t i = start; i < k; ++i) {
        const double x = rows[i].first * std::log(2.0);
        const double y = std::log(static_cast<double>(rows[i].second));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++m;
    }
    Fit fit;
    fit.lo = rows[start].first;
    fit.hi = rows[k - 1].first;
    if (m < 2) return fit; // constant or single row: slope 0
    const double denom = m * sxx - sx * sx;
    if (denom <= 0) return fit;
    fit.slope = (m * sxy - sx * sy) / denom;
    const double intercept = (sy - fit.slope * sx) / m;
    double ss = 0;
    for (std::size_t i = start; i < k; ++i) {
        const double x = rows[i].first * std::log(2.0);
        const double y = std::log(static_cast<double>(rows[i].second));
        const double e = y - (fit.slope * x + intercept);
        ss += e * e;
    }
    fit.residual = std::sqrt(ss / m);
    return fit;
}

} // namespace

std::vector<long> box_counts(const Continuum& X, int n_max) {
    if (n_max < 0) throw error(errc::bad_input, "n_max must be >= 0");
    double minx = X.x(0), miny = X.y(0);
    for (cell_id c = 0; c < static_cast<cell_id>(X.size()); ++c) {
        minx = std::min(minx, X.x(c));
        miny = std::min(miny, X.y(c));
    }
    std::vector<long> counts;
    for (int n = 0; n <= n_max; ++n) {
        const double side = std::ldexp(1.0, -n);
        std::set<std::pair<long, long>> boxes;
        for (cell_id c = 0; c < static_cast<cell_id>(X.size()); ++c) {
            boxes.emplace(static_cast<long>(std::floor((X.x(c) - minx) / side)),
                          static_cast<long>(std::floor((X.y(c) - miny) / side)));
        }
        counts.push_back(static_cast<long>(boxes.size()));
    }
    return counts;
}

double box_dim(const Continuum& X, int n_max) {
    if (n_max < 2) throw error(errc::bad_input, "box_dim needs n_max >= 2");
    const std::vector<long> counts = box_counts(X, n_max);
    return trailing_fit(counts, 0, n_max).slope;
}

double estimate_sdim(const SierpinskiTable& table) {
    if (table.rows.size() < 3)
        throw error(errc::insufficient_levels, "need at least 3 table levels");
    std::vector<long> counts;
    for (const auto& r : table.rows) counts.push_back(r.upper);
    return trailing_fit(counts, 0, static_cast<int>(counts.size()) - 1).slope;
}

std::pair<int, int> report_window(const Continuum& X, int n_max) {
    const double d = X.min_cell_distance();
    int hi = n_max;
    if (d > 0) {
        int usable = 0;
        while (usable < n_max && std::ldexp(1.0, -(usable + 1)) >= kWindowKappa * d) ++usable;
        hi = std::max(2, usable);
        hi = std::min(hi, n_max);
    }
    return {0, hi};
}

DimensionReport dimension_report(const Continuum& X, int n_max, std::size_t budget) {
    if (n_max < 2) throw error(errc::bad_input, "dimension report needs n_max >= 2");
    DimensionReport rep;
    if (X.size() == 1) {
        rep.window_hi = n_max;
        return rep;
    }
    const auto [lo, hi] = report_window(X, n_max);
    const SierpinskiTable table = sierpinski_table(X, n_max, budget);
    std::vector<long> uppers;
    for (const auto& r : table.rows) uppers.push_back(r.upper);
    const Fit sfit = trailing_fit(uppers, lo, hi);
    const Fit bfit = trailing_fit(box_counts(X, n_max), lo, hi);
    rep.s_dim = sfit.slope;
    rep.residual = sfit.residual;
    rep.window_lo = sfit.lo;
    rep.window_hi = sfit.hi;
    rep.box_dim = bfit.slope;
    rep.box_residual = bfit.residual;
    rep.holder_upper = 2 * sfit.slope;
    return rep;
}

CurveGeometry curve_geometry(const Continuum& X, const ParamCurve& curve) {
    CurveGeometry g;
    for (const auto& bp : curve.breakpoints) {
        g.ts.push_back(bp.t);
        g.xs.push_back(X.x(bp.cell));
        g.ys.push_back(X.y(bp.cell));
    }
    return g;
}

namespace {

// (parameter gap, image distance) over breakpoint pairs, subsampled
std::vector<std::pair<double, double>> sample_pairs(const CurveGeometry& g,
                                                    std::size_t pair_cap, std::uint64_t seed) {
    const std::size_t B = g.ts.size();
    std::vector<std::pair<double, double>> out;
    auto push = [&](std::size_t i, std::size_t j) {
        const double dx = g.xs[i] - g.xs[j];
        const double dy = g.ys[i] - g.ys[j];
        out.emplace_back(std::abs(g.ts[j] - g.ts[i]), std::sqrt(dx * dx + dy * dy));
    };
    if (B < 2) return out;
    for (std::size_t i = 0; i + 1 < B; ++i) push(i, i + 1);
    const std::size_t total = B * (B - 1) / 2;
    if (total <= pair_cap) {
        for (std::size_t i = 0; i < B; ++i)
            for (std::size_t j = i + 2; j < B; ++j) push(i, j);
    } else {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::size_t> pick(0, B - 1);
        for (std::size_t k = 0; k < pair_cap; ++k) {
            std::size_t i = pick(rng), j = pick(rng);
            if (i != j) push(i, j);
        }
    }
    return out;
}

} // namespace

ModulusTable empirical_modulus(const CurveGeometry& g, const std::vector<double>& grid,
                               std::size_t pair_cap, std::uint64_t seed) {
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!(grid[i] > 0)) throw error(errc::bad_input, "modulus grid must be positive");
        if (i > 0 && grid[i] < grid[i - 1])
            throw error(errc::bad_input, "modulus grid must be sorted");
    }
    auto pairs = sample_pairs(g, pair_cap, seed);
    std::sort(pairs.begin(), pairs.end());
    ModulusTable table;
    table.t = grid;
    table.omega_hat.assign(grid.size(), 0.0);
    double running = 0;
    std::size_t pi = 0;
    for (std::size_t gi = 0; gi < grid.size(); ++gi) {
        while (pi < pairs.size() && pairs[pi].first <= grid[gi]) {
            running = std::max(running, pairs[pi].second);
            ++pi;
        }
        table.omega_hat[gi] = running;
    }
    return table;
}

std::vector<double> default_modulus_grid(const CurveGeometry& g, std::size_t pair_cap,
                                         std::uint64_t seed) {
    auto pairs = sample_pairs(g, pair_cap, seed);
    std::vector<double> grid;
    const double s = g.ts.empty() ? 0 : g.ts.back();
    for (const auto& [gap, dist] : pairs)
        if (gap > 0 && gap < s) grid.push_back(gap);
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    return grid;
}

VerifyResult verify_certificate(const CurveGeometry& g, const ModulusSpec& omega,
                                const std::vector<double>& grid, std::size_t pair_cap,
                                std::uint64_t seed) {
    VerifyResult res;
    const ModulusTable table = empirical_modulus(g, grid, pair_cap, seed);
    for (std::size_t i = 0; i < table.t.size(); ++i) {
        const double allowed = omega.omega(table.t[i]);
        const double ratio =
            allowed > 0 ? table.omega_hat[i] / allowed : (table.omega_hat[i] > 0 ? 1e300 : 0);
        if (ratio > res.worst_ratio) {
            res.worst_ratio = ratio;
            res.worst_t = table.t[i];
            res.worst_omega_hat = table.omega_hat[i];
        }
        if (table.omega_hat[i] > allowed * (1 + 1e-12)) res.passed = false;
    }
    // locate a witnessing pair for the worst grid point
    if (res.worst_omega_hat > 0) {
        double best = -1;
        for (std::size_t i = 0; i < g.ts.size(); ++i) {
            for (std::size_t j = i + 1; j < g.ts.size(); ++j) {
                if (g.ts[j] - g.ts[i] > res.worst_t) break;
                const double dx = g.xs[i] - g.xs[j];
                const double dy = g.ys[i] - g.ys[j];
                const double d = std::sqrt(dx * dx + dy * dy);
                if (d > best) {
                    best = d;
                    res.worst_i = i;
                    res.worst_j = j;
                }
            }
            if (g.ts.size() > 4000) break; // witness search only on small curves
        }
    }
    return res;
}

double holder_bound(double C, double r, double alpha) {
    if (!(C > 0) || !(r > 0)) throw error(errc::bad_input, "need C > 0 and r > 0");
    if (!(alpha > 2 * r))
        throw error(errc::divergent_series, "series diverges unless alpha > 2r");
    const double num = std::pow(2.0, 6 * alpha) * C * C * std::pow(2.0, 2 * r - alpha);
    const double den =
        (1 - std::pow(2.0, r - alpha)) * (1 - std::pow(2.0, 2 * r - alpha));
    return num / den;
}

} // namespace peano
