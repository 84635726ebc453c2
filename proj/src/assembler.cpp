#include "peano/assembler.hpp"

#include "peano/errors.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace peano {

ModulusSpec ModulusSpec::power(double C, double alpha) {
    if (!(C > 0) || !(alpha > 0))
        throw error(errc::bad_input, "power modulus needs C > 0 and alpha > 0");
    ModulusSpec m;
    m.c_ = C;
    m.alpha_ = alpha;
    return m;
}

ModulusSpec ModulusSpec::tabulated(std::vector<std::pair<double, double>> points) {
    if (points.empty()) throw error(errc::bad_input, "tabulated modulus needs points");
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (!(points[i].first > 0) || !(points[i].second > 0))
            throw error(errc::bad_input, "tabulated modulus points must be positive");
        if (i > 0 && (points[i].first <= points[i - 1].first ||
                      points[i].second <= points[i - 1].second))
            throw error(errc::bad_input, "tabulated modulus must be strictly increasing");
    }
    ModulusSpec m;
    m.points_ = std::move(points);
    return m;
}

double ModulusSpec::omega(double t) const {
    if (!(t >= 0)) throw error(errc::bad_input, "modulus argument must be >= 0");
    if (alpha_ > 0) return c_ * std::pow(t, 1.0 / alpha_);
    if (t == 0) return 0;
    if (t <= points_.front().first)
        return points_.front().second * t / points_.front().first;
    for (std::size_t i = 1; i < points_.size(); ++i) {
        if (t <= points_[i].first) {
            const auto [t0, y0] = points_[i - 1];
            const auto [t1, y1] = points_[i];
            return y0 + (y1 - y0) * (t - t0) / (t1 - t0);
        }
    }
    return points_.back().second;
}

double ModulusSpec::omega_inv(double y) const {
    if (!(y > 0)) throw error(errc::bad_input, "modulus inverse argument must be > 0");
    if (alpha_ > 0) return std::pow(y / c_, alpha_);
    if (y > points_.back().second)
        throw error(errc::inverse_undefined,
                    "tabulated modulus never reaches the requested value");
    if (y <= points_.front().second)
        return points_.front().first * y / points_.front().second;
    for (std::size_t i = 1; i < points_.size(); ++i) {
        if (y <= points_[i].second) {
            const auto [t0, y0] = points_[i - 1];
            const auto [t1, y1] = points_[i];
            return t0 + (t1 - t0) * (y - y0) / (y1 - y0);
        }
    }
    return points_.back().first;
}

std::vector<double> delta_sequence(const ModulusSpec& omega, int N) {
    if (N < 1) throw error(errc::bad_input, "need at least one level");
    std::vector<double> deltas;
    deltas.reserve(static_cast<std::size_t>(N));
    for (int n = 1; n <= N; ++n) {
        const double target = std::min(1.0, std::ldexp(1.0, 6 - n));
        deltas.push_back(omega.omega_inv(target));
    }
    for (std::size_t i = 1; i < deltas.size(); ++i)
        if (deltas[i] > deltas[i - 1])
            throw error(errc::bad_input, "modulus is not increasing: deltas went up");
    return deltas;
}

std::vector<double> epsilon_sequence(const SierpinskiTable& table,
                                     const std::vector<double>& deltas) {
    const int N = static_cast<int>(deltas.size());
    if (static_cast<int>(table.rows.size()) < N + 1)
        throw error(errc::bad_input, "table does not cover levels 1..N");
    std::vector<double> eps(static_cast<std::size_t>(N), 0.0);
    double acc = 0;
    for (int n = N; n >= 1; --n) {
        acc += static_cast<double>(table.upper(n)) * deltas[static_cast<std::size_t>(n - 1)];
        eps[static_cast<std::size_t>(n - 1)] = acc;
    }
    return eps;
}

ParamCurve fill_gap(const Continuum& X, const NestedCovers& nested, const GapRecord& gap,
                    const std::vector<double>& deltas_1_to_N) {
    const int m = gap.level;
    const int N = std::min(static_cast<int>(deltas_1_to_N.size()), nested.top_level());
    if (m < 1 || m > static_cast<int>(deltas_1_to_N.size()))
        throw error(errc::bad_input, "gap level outside the cover tower");

    // Chains need covers whose parts can hold whole adjacency edges; below
    // that resolution the fill runs at the deepest refinable level and the
    // certificate scan judges the result.
    const int cap = chain_level_cap(X);
    const int m_eff = std::min(m, cap);
    const int top = std::min(N, cap);
    std::vector<double> sub;
    for (int n = m_eff; n <= top; ++n)
        sub.push_back(n == 0 ? deltas_1_to_N[0] : deltas_1_to_N[static_cast<std::size_t>(n - 1)]);

    ParamCurve native =
        build_path(X, nested, gap.connector_cells, gap.cell_u, gap.cell_v, m_eff, sub);

    ParamCurve seg;
    seg.s = gap.v - gap.u;
    seg.breakpoints.push_back({gap.u, gap.cell_u});
    if (native.s > 0) {
        if (m_eff == m && native.s > seg.s * (1 + 1e-9))
            throw error(errc::nesting_violation,
                        "gap path longer than the gap it must fill");
        const double ratio = seg.s / native.s;
        for (std::size_t i = 1; i + 1 < native.breakpoints.size(); ++i)
            seg.breakpoints.push_back(
                {gap.u + native.breakpoints[i].t * ratio, native.breakpoints[i].cell});
        seg.weightlog = std::move(native.weightlog);
    }
    return seg;
}

int default_level_count(const Continuum& X) {
    const double d = X.min_cell_distance();
    if (!(d > 0)) return 1;
    int n = 1;
    while (n < 24 && std::ldexp(1.0, -n) >= d) ++n;
    return n;
}

int chain_level_cap(const Continuum& X) {
    const double e = X.max_edge_length();
    if (!(e > 0)) return 0;
    int n = 0;
    while (n < 24 && std::ldexp(1.0, -(n + 1)) >= e) ++n;
    return n;
}

namespace {

struct PairScan {
    // sampled (gap, distance) pairs between value intervals of breakpoints
    std::vector<std::pair<double, double>> samples;
};

// Gap between the value intervals of breakpoints i < j: values of i live on
// [t_i, t_{i+1}), so the infimum parameter distance is t_j - t_{i+1}.
PairScan scan_pairs(const Continuum& X, const ParamCurve& curve, const AssembleOptions& opts) {
    PairScan scan;
    const auto& bp = curve.breakpoints;
    const std::size_t B = bp.size();
    if (B < 2) return scan;
    auto interval_end = [&](std::size_t i) { return i + 1 < B ? bp[i + 1].t : curve.s; };
    auto record = [&](std::size_t i, std::size_t j) {
        const double gap = std::max(0.0, bp[j].t - interval_end(i));
        scan.samples.emplace_back(gap, X.distance(bp[i].cell, bp[j].cell));
    };
    for (std::size_t i = 0; i + 1 < B; ++i) record(i, i + 1);
    const std::size_t total = B * (B - 1) / 2;
    if (total <= opts.pair_cap) {
        for (std::size_t i = 0; i < B; ++i)
            for (std::size_t j = i + 2; j < B; ++j) record(i, j);
    } else {
        std::mt19937_64 rng(opts.seed);
        std::uniform_int_distribution<std::size_t> pick(0, B - 1);
        for (std::size_t k = 0; k < opts.pair_cap; ++k) {
            std::size_t i = pick(rng), j = pick(rng);
            if (i == j) continue;
            if (i > j) std::swap(i, j);
            record(i, j);
        }
    }
    return scan;
}

} // namespace

HolderCurve assemble(const Continuum& X, const ModulusSpec& omega, int N,
                     const AssembleOptions& opts) {
    if (N < 1) throw error(errc::bad_input, "need at least one level");

    HolderCurve result;
    result.levels = N;

    if (X.size() == 1) {
        result.curve.s = 0;
        result.curve.breakpoints = {{0.0, 0}};
        result.coverage = 1.0;
        result.s = 0;
        result.passed = true;
        const std::vector<double> deltas = delta_sequence(omega, N);
        for (int n = 1; n <= N; ++n)
            result.certificate.push_back(
                {n, deltas[static_cast<std::size_t>(n - 1)], std::ldexp(32.0, -n), 0.0});
        return result;
    }

    const std::vector<Cover> raw = raw_cover_levels(X, N);
    const SierpinskiTable table = table_from_covers(X, raw, opts.budget);
    const NestedCovers nested = build_nested_from_raw(X, raw);
    const std::vector<double> deltas = delta_sequence(omega, N);
    const std::vector<double> eps = epsilon_sequence(table, deltas);
    for (int n = 1; n <= N; ++n)
        if (deltas[static_cast<std::size_t>(n - 1)] > eps[static_cast<std::size_t>(n - 1)])
            throw error(errc::nesting_violation, "delta exceeds epsilon");

    const std::vector<Cover> sk_covers(raw.begin() + 1, raw.end());
    const Skeleton sk = build_skeleton(X, sk_covers, eps);

    ParamCurve& curve = result.curve;
    for (std::size_t i = 0; i < sk.gaps.size(); ++i) {
        ParamCurve seg = fill_gap(X, nested, sk.gaps[i], deltas);
        curve.breakpoints.insert(curve.breakpoints.end(), seg.breakpoints.begin(),
                                 seg.breakpoints.end());
        curve.weightlog.insert(curve.weightlog.end(), seg.weightlog.begin(),
                               seg.weightlog.end());
    }
    curve.breakpoints.push_back({sk.points.back().t, sk.points.back().cell});
    curve.s = sk.s;
    result.s = sk.s;

    // coverage: distinct cells among breakpoints
    std::vector<char> hit(X.size(), 0);
    for (const auto& b : curve.breakpoints) hit[static_cast<std::size_t>(b.cell)] = 1;
    result.coverage = static_cast<double>(std::count(hit.begin(), hit.end(), char{1})) /
                      static_cast<double>(X.size());

    // per-level observed maxima over sampled pairs
    const PairScan scan = scan_pairs(X, curve, opts);
    bool rows_ok = true;
    for (int n = 1; n <= N; ++n) {
        HolderCurve::CertRow row;
        row.n = n;
        row.delta = deltas[static_cast<std::size_t>(n - 1)];
        row.allowed = std::ldexp(32.0, -n);
        for (const auto& [gap, dist] : scan.samples)
            if (gap < row.delta && dist > row.observed) row.observed = dist;
        rows_ok = rows_ok && row.observed <= row.allowed + 1e-12;
        result.certificate.push_back(row);
    }

    // empirical modulus against Omega over the grid of sampled gaps
    std::vector<std::pair<double, double>> sorted = scan.samples;
    std::sort(sorted.begin(), sorted.end());
    double running = 0;
    bool omega_ok = true;
    for (auto& [gap, dist] : sorted) {
        if (dist > running) running = dist;
        if (gap <= 0) continue; // abutting intervals: zero-distance-in-parameter pairs
        const double allowed = omega.omega(gap);
        const double ratio = allowed > 0 ? running / allowed : (running > 0 ? 1e300 : 0);
        if (ratio > result.worst_ratio) {
            result.worst_ratio = ratio;
            result.worst_t = gap;
        }
        if (running > allowed * (1 + 1e-12)) omega_ok = false;
    }
    // pairs at zero parameter gap (adjacent value intervals) bound omega at 0+
    double jump = 0;
    for (const auto& [gap, dist] : scan.samples)
        if (gap <= 0 && dist > jump) jump = dist;
    if (jump > 0) {
        // the smallest positive sampled gap is where a jump first binds
        for (const auto& [gap, dist] : sorted) {
            if (gap > 0) {
                if (jump > omega.omega(gap) * (1 + 1e-12)) omega_ok = false;
                const double r = jump / omega.omega(gap);
                if (r > result.worst_ratio) {
                    result.worst_ratio = r;
                    result.worst_t = gap;
                }
                break;
            }
        }
    }

    result.passed = rows_ok && omega_ok && result.coverage >= 1.0;
    return result;
}

FiveCaseAudit audit_five_cases(const Continuum& X, const Skeleton& sk, const ParamCurve& curve,
                               const std::vector<double>& deltas, const AssembleOptions& opts) {
    FiveCaseAudit audit;
    const int N = static_cast<int>(deltas.size());

    // parameter pool: all skeleton positions, all breakpoints, random fill
    std::vector<double> pool;
    for (const auto& p : sk.points) pool.push_back(p.t);
    for (const auto& b : curve.breakpoints) pool.push_back(b.t);
    std::mt19937_64 rng(opts.seed + 1);
    std::uniform_real_distribution<double> uni(0.0, curve.s);
    for (int i = 0; i < 2000; ++i) pool.push_back(uni(rng));
    std::sort(pool.begin(), pool.end());
    pool.erase(std::unique(pool.begin(), pool.end()), pool.end());

    std::vector<double> D;
    for (const auto& p : sk.points) D.push_back(p.t);

    auto locate = [&](double t) -> std::pair<bool, std::size_t> {
        // (in D, gap index left of t)
        auto it = std::lower_bound(D.begin(), D.end(), t);
        if (it != D.end() && *it == t) return {true, static_cast<std::size_t>(it - D.begin())};
        return {false, static_cast<std::size_t>(it - D.begin()) - 1};
    };

    const std::size_t M = pool.size();
    const std::size_t total = M * (M - 1) / 2;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    if (total <= opts.pair_cap) {
        for (std::size_t i = 0; i < M; ++i)
            for (std::size_t j = i + 1; j < M; ++j) pairs.emplace_back(i, j);
    } else {
        std::uniform_int_distribution<std::size_t> pick(0, M - 1);
        for (std::size_t k = 0; k < opts.pair_cap; ++k) {
            std::size_t i = pick(rng), j = pick(rng);
            if (i == j) continue;
            if (i > j) std::swap(i, j);
            pairs.emplace_back(i, j);
        }
    }

    for (auto [i, j] : pairs) {
        const double x = pool[i], y = pool[j];
        const auto [xd, xi] = locate(x); // D index when in D, else gap index
        const auto [yd, yi] = locate(y);
        int kase;
        if (xd && yd)
            kase = 1;
        else if (!xd && !yd && xi == yi)
            kase = 2; // both interior to the same gap
        else if (xd && !yd && xi == yi)
            kase = 2; // x is the left endpoint of y's gap
        else if (!xd && yd && xi + 1 == yi)
            kase = 2; // y is the right endpoint of x's gap
        else if (xd)
            kase = 3;
        else if (yd)
            kase = 4;
        else
            kase = 5;
        static const double constant[6] = {0, 4, 14, 18, 18, 32};
        const double d = X.distance(eval(curve, x), eval(curve, y));
        for (int n = 1; n <= N; ++n) {
            if (!(y - x < deltas[static_cast<std::size_t>(n - 1)])) continue;
            const double allowed = std::ldexp(constant[kase], -n);
            const double ratio = d / allowed;
            if (ratio > audit.worst[kase]) audit.worst[kase] = ratio;
            ++audit.pairs[kase];
            if (d > allowed * (1 + 1e-9)) audit.ok = false;
        }
    }
    return audit;
}

} // namespace peano
