#include "peano/covers.hpp"

#include "peano/errors.hpp"
#include "peano/kernels.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>
#include <unordered_map>

namespace peano {

namespace {

double cover_mesh(const Continuum& X, const std::vector<cell_set>& parts) {
    double mesh = 0;
    for (const auto& p : parts) mesh = std::max(mesh, diameter(X, p));
    return mesh;
}

} // namespace

std::string SierpinskiTable::to_csv() const {
    std::ostringstream out;
    out << "n,epsilon,lower,upper,exact\n";
    for (const auto& r : rows) {
        out << r.n << ',' << r.epsilon << ',' << r.lower << ',' << r.upper << ','
            << (r.exact ? 1 : 0) << '\n';
    }
    return out.str();
}

Cover greedy_cover(const Continuum& X, double eps) {
    if (!(eps >= 0)) throw error(errc::bad_input, "cover radius must be >= 0");
    const std::size_t n = X.size();
    const double eps2 = eps * eps;
    std::vector<char> covered(n, 0);
    Cover out;
    out.epsilon = eps;

    std::vector<double> part_xs, part_ys;
    for (cell_id seed = 0; seed < static_cast<cell_id>(n); ++seed) {
        if (covered[static_cast<std::size_t>(seed)]) continue;
        cell_set part{seed};
        covered[static_cast<std::size_t>(seed)] = 1;
        part_xs.assign(1, X.x(seed));
        part_ys.assign(1, X.y(seed));
        std::set<cell_id> candidates;
        for (cell_id nb : X.neighbors(seed))
            if (!covered[static_cast<std::size_t>(nb)]) candidates.insert(nb);
        while (!candidates.empty()) {
            const cell_id c = *candidates.begin();
            candidates.erase(candidates.begin());
            if (covered[static_cast<std::size_t>(c)]) continue;
            const double d2 = kernels::max_sq_dist_point(part_xs.data(), part_ys.data(),
                                                         part_xs.size(), X.x(c), X.y(c));
            if (d2 > eps2) continue; // can never fit later: the part only grows
            part.push_back(c);
            covered[static_cast<std::size_t>(c)] = 1;
            part_xs.push_back(X.x(c));
            part_ys.push_back(X.y(c));
            for (cell_id nb : X.neighbors(c))
                if (!covered[static_cast<std::size_t>(nb)]) candidates.insert(nb);
        }
        std::sort(part.begin(), part.end());
        out.parts.push_back(std::move(part));
    }

    // Edge-covering patch: in the continuum every adjacency edge that fits
    // the scale must lie inside some part, otherwise parts can tile the
    // space without intersecting and chain extraction between them starves.
    // Extend an endpoint's part when the diameter allows, else add the
    // two-cell part.
    std::vector<std::size_t> part_of(n, 0);
    for (std::size_t pi = 0; pi < out.parts.size(); ++pi)
        for (cell_id c : out.parts[pi]) part_of[static_cast<std::size_t>(c)] = pi;
    auto part_has = [&](std::size_t pi, cell_id c) {
        return std::binary_search(out.parts[pi].begin(), out.parts[pi].end(), c);
    };
    auto try_extend = [&](std::size_t pi, cell_id c) {
        std::vector<double> xs, ys;
        for (cell_id p : out.parts[pi]) {
            xs.push_back(X.x(p));
            ys.push_back(X.y(p));
        }
        if (kernels::max_sq_dist_point(xs.data(), ys.data(), xs.size(), X.x(c), X.y(c)) > eps2)
            return false;
        out.parts[pi].insert(
            std::upper_bound(out.parts[pi].begin(), out.parts[pi].end(), c), c);
        return true;
    };
    for (cell_id u = 0; u < static_cast<cell_id>(n); ++u) {
        for (cell_id v : X.neighbors(u)) {
            if (v < u) continue;
            const double dx = X.x(u) - X.x(v), dy = X.y(u) - X.y(v);
            if (dx * dx + dy * dy > eps2) continue; // edge longer than the scale
            const std::size_t pu = part_of[static_cast<std::size_t>(u)];
            const std::size_t pv = part_of[static_cast<std::size_t>(v)];
            if (part_has(pu, v) || part_has(pv, u)) continue;
            if (try_extend(pu, v) || try_extend(pv, u)) continue;
            out.parts.push_back(u < v ? cell_set{u, v} : cell_set{v, u});
        }
    }
    out.mesh = cover_mesh(X, out.parts);
    return out;
}

namespace {

using mask_t = std::uint32_t;

struct ExactSearch {
    const Continuum& X;
    double eps2;
    std::size_t n;
    std::vector<mask_t> candidate_parts;          // maximal connected diam-ok sets
    std::vector<std::vector<int>> parts_with_cell; // indexed by cell
    std::unordered_map<mask_t, int> memo;         // uncovered mask -> min #parts

    bool diam_ok(mask_t m) const {
        std::vector<double> xs, ys;
        for (std::size_t i = 0; i < n; ++i) {
            if (m & (mask_t{1} << i)) {
                xs.push_back(X.x(static_cast<cell_id>(i)));
                ys.push_back(X.y(static_cast<cell_id>(i)));
            }
        }
        return kernels::max_sq_dist_pairwise(xs.data(), ys.data(), xs.size()) <= eps2;
    }

    // enumerate connected diam-ok subsets rooted at their minimum cell
    void enumerate_from(cell_id root, mask_t set, mask_t frontier, mask_t forbidden,
                        std::vector<mask_t>& all) {
        if (all.size() > 500000)
            throw error(errc::budget_exceeded, "exhaustive cover search blew the subset budget");
        all.push_back(set);
        mask_t ext = frontier & ~forbidden & ~set;
        while (ext) {
            const int bit = std::countr_zero(ext);
            ext &= ext - 1;
            const mask_t with = set | (mask_t{1} << bit);
            if (!diam_ok(with)) continue;
            mask_t nf = frontier;
            for (cell_id nb : X.neighbors(static_cast<cell_id>(bit)))
                if (nb > root) nf |= mask_t{1} << nb;
            enumerate_from(root, with, nf, forbidden | (mask_t{1} << bit), all);
            forbidden |= mask_t{1} << bit;
        }
    }

    void build_candidates() {
        std::vector<mask_t> all;
        for (cell_id root = 0; root < static_cast<cell_id>(n); ++root) {
            mask_t frontier = 0;
            for (cell_id nb : X.neighbors(root))
                if (nb > root) frontier |= mask_t{1} << nb;
            enumerate_from(root, mask_t{1} << root, frontier, 0, all);
        }
        // keep only maximal sets; any cover can be rewritten with maximal parts
        std::sort(all.begin(), all.end());
        all.erase(std::unique(all.begin(), all.end()), all.end());
        for (mask_t s : all) {
            bool maximal = true;
            for (std::size_t i = 0; i < n && maximal; ++i) {
                const mask_t bit = mask_t{1} << i;
                if (s & bit) continue;
                bool touches = false;
                for (cell_id nb : X.neighbors(static_cast<cell_id>(i)))
                    if (s & (mask_t{1} << nb)) {
                        touches = true;
                        break;
                    }
                if (touches && diam_ok(s | bit)) maximal = false;
            }
            if (maximal) candidate_parts.push_back(s);
        }
        parts_with_cell.assign(n, {});
        for (int pi = 0; pi < static_cast<int>(candidate_parts.size()); ++pi)
            for (std::size_t i = 0; i < n; ++i)
                if (candidate_parts[static_cast<std::size_t>(pi)] & (mask_t{1} << i))
                    parts_with_cell[i].push_back(pi);
    }

    // min #parts to cover `uncovered`; exact, memoized on the uncovered mask
    int solve(mask_t uncovered) {
        if (!uncovered) return 0;
        auto it = memo.find(uncovered);
        if (it != memo.end()) return it->second;
        if (memo.size() > 2000000)
            throw error(errc::budget_exceeded, "exhaustive cover search blew the state budget");
        const int cell = std::countr_zero(uncovered);
        int best = std::numeric_limits<int>::max() / 2;
        for (int pi : parts_with_cell[static_cast<std::size_t>(cell)]) {
            const int sub = solve(uncovered & ~candidate_parts[static_cast<std::size_t>(pi)]);
            if (sub + 1 < best) best = sub + 1;
        }
        memo[uncovered] = best;
        return best;
    }

    std::vector<mask_t> reconstruct(mask_t uncovered, int target) {
        std::vector<mask_t> chosen;
        while (uncovered) {
            const int cell = std::countr_zero(uncovered);
            for (int pi : parts_with_cell[static_cast<std::size_t>(cell)]) {
                const mask_t rest = uncovered & ~candidate_parts[static_cast<std::size_t>(pi)];
                if (solve(rest) == target - 1) {
                    chosen.push_back(candidate_parts[static_cast<std::size_t>(pi)]);
                    uncovered = rest;
                    --target;
                    break;
                }
            }
        }
        return chosen;
    }
};

} // namespace

Cover exact_min_cover(const Continuum& X, double eps, std::size_t budget) {
    if (!(eps >= 0)) throw error(errc::bad_input, "cover radius must be >= 0");
    const std::size_t n = X.size();
    if (n > budget || n > 30)
        throw error(errc::budget_exceeded,
                    "instance too large for exhaustive cover search (" + std::to_string(n) +
                        " cells, budget " + std::to_string(std::min<std::size_t>(budget, 30)) + ")");

    ExactSearch search{X, eps * eps, n, {}, {}, {}};
    search.build_candidates();
    const mask_t full = n == 32 ? ~mask_t{0} : ((mask_t{1} << n) - 1);
    const int opt = search.solve(full);

    Cover out;
    out.epsilon = eps;
    for (mask_t m : search.reconstruct(full, opt)) {
        cell_set part;
        for (std::size_t i = 0; i < n; ++i)
            if (m & (mask_t{1} << i)) part.push_back(static_cast<cell_id>(i));
        out.parts.push_back(std::move(part));
    }
    out.mesh = cover_mesh(X, out.parts);
    return out;
}

long packing_lower_bound(const Continuum& X, double eps) {
    const std::size_t n = X.size();
    if (n == 0) return 0;
    const double eps2 = eps * eps;
    std::vector<double> chosen_xs{X.x(0)}, chosen_ys{X.y(0)};
    long count = 1;
    while (true) {
        double best_d2 = -1;
        cell_id best = -1;
        for (cell_id c = 0; c < static_cast<cell_id>(n); ++c) {
            const double d2 = kernels::min_sq_dist_point(chosen_xs.data(), chosen_ys.data(),
                                                         chosen_xs.size(), X.x(c), X.y(c));
            if (d2 > best_d2) {
                best_d2 = d2;
                best = c;
            }
        }
        if (best < 0 || !(best_d2 > eps2)) break;
        chosen_xs.push_back(X.x(best));
        chosen_ys.push_back(X.y(best));
        ++count;
    }
    return count;
}

std::vector<Cover> raw_cover_levels(const Continuum& X, int N) {
    if (N < 0) throw error(errc::bad_input, "cover depth must be >= 0");
    std::vector<Cover> levels;
    levels.reserve(static_cast<std::size_t>(N) + 1);
    for (int n = 0; n <= N; ++n) {
        const double eps = std::ldexp(1.0, -n);
        Cover cov;
        if (n == 0) {
            cov.epsilon = 1.0;
            cov.parts = {X.all_cells()};
            cov.mesh = X.diam();
        } else {
            // greedy, not the exact solver: the edge-covering patch keeps
            // chain refinement alive between adjacent parts, which a
            // cardinality-minimal cover need not allow
            cov = greedy_cover(X, eps);
        }
        cov.level = n;
        cov.epsilon = eps;
        levels.push_back(std::move(cov));
    }
    // A level-(n+1) cover is also a valid level-n cover; keep counts monotone.
    for (int n = N - 1; n >= 1; --n) {
        if (levels[static_cast<std::size_t>(n + 1)].size() < levels[static_cast<std::size_t>(n)].size()) {
            auto finer = levels[static_cast<std::size_t>(n + 1)];
            finer.level = n;
            finer.epsilon = std::ldexp(1.0, -n);
            levels[static_cast<std::size_t>(n)] = std::move(finer);
        }
    }
    return levels;
}

SierpinskiTable table_from_covers(const Continuum& X, const std::vector<Cover>& raw_levels,
                                  std::size_t budget) {
    SierpinskiTable table;
    const bool solver_ok = X.size() <= budget && X.size() <= 30;
    long prev_lower = 1;
    for (const auto& cov : raw_levels) {
        SierpinskiTable::Row row;
        row.n = cov.level;
        row.epsilon = cov.epsilon;
        row.upper = static_cast<long>(cov.size());
        if (cov.level == 0) {
            row.exact = true;
            row.lower = row.upper;
        } else if (solver_ok) {
            // the published upper is the cover the pipeline consumes; flag it
            // exact only when it matches the solver's minimum
            const long minimum = static_cast<long>(exact_min_cover(X, cov.epsilon, budget).size());
            row.lower = std::max(prev_lower, minimum);
            row.exact = row.upper == minimum;
        } else {
            row.lower = std::max(prev_lower, packing_lower_bound(X, cov.epsilon));
            row.exact = false;
        }
        prev_lower = row.lower;
        table.rows.push_back(row);
    }
    return table;
}

SierpinskiTable sierpinski_table(const Continuum& X, int n_max, std::size_t budget) {
    return table_from_covers(X, raw_cover_levels(X, n_max), budget);
}

cell_set star_saturate(const Continuum& X, const std::vector<Cover>& raw_levels,
                       const cell_set& A, int n) {
    if (A.empty()) throw error(errc::bad_input, "star saturation of an empty set");
    std::vector<char> in(X.size(), 0);
    for (cell_id c : A) in[static_cast<std::size_t>(c)] = 1;
    const int top = static_cast<int>(raw_levels.size()) - 1;
    for (int m = std::max(n, 0); m <= top; ++m) {
        // one star per level: absorb every level-m part meeting the current set
        std::vector<const cell_set*> hits;
        for (const auto& part : raw_levels[static_cast<std::size_t>(m)].parts) {
            for (cell_id c : part) {
                if (in[static_cast<std::size_t>(c)]) {
                    hits.push_back(&part);
                    break;
                }
            }
        }
        for (const cell_set* part : hits)
            for (cell_id c : *part) in[static_cast<std::size_t>(c)] = 1;
    }
    cell_set out;
    for (cell_id c = 0; c < static_cast<cell_id>(X.size()); ++c)
        if (in[static_cast<std::size_t>(c)]) out.push_back(c);
    return out;
}

NestedCovers build_nested_from_raw(const Continuum& X, std::vector<Cover> raw_levels) {
    NestedCovers out;
    out.raw_levels = std::move(raw_levels);
    const int N = static_cast<int>(out.raw_levels.size()) - 1;

    for (int n = 0; n <= N; ++n) {
        Cover sat;
        sat.level = n;
        sat.epsilon = std::ldexp(1.0, -n);
        for (const auto& F : out.raw_levels[static_cast<std::size_t>(n)].parts) {
            cell_set C = star_saturate(X, out.raw_levels, F, n + 1);
            if (std::find(sat.parts.begin(), sat.parts.end(), C) == sat.parts.end())
                sat.parts.push_back(std::move(C));
        }
        sat.mesh = cover_mesh(X, sat.parts);
        out.levels.push_back(std::move(sat));
    }

    // refinement lists: which C_{n+1} parts make up each C_n part
    out.refinement.resize(static_cast<std::size_t>(N) + 1);
    for (int n = 0; n < N; ++n) {
        const auto& coarse = out.levels[static_cast<std::size_t>(n)];
        const auto& fine = out.levels[static_cast<std::size_t>(n + 1)];
        auto& refn = out.refinement[static_cast<std::size_t>(n)];
        refn.resize(coarse.parts.size());
        for (std::size_t i = 0; i < coarse.parts.size(); ++i)
            for (std::size_t j = 0; j < fine.parts.size(); ++j)
                if (is_subset(fine.parts[j], coarse.parts[i])) refn[i].push_back(j);
    }

    // Verify the three tower conditions before returning.
    const double fp_slack = 1e-12;
    if (out.levels[0].parts.size() != 1 ||
        out.levels[0].parts[0] != X.all_cells())
        throw error(errc::nesting_violation, "level 0 must be the whole space");
    for (int n = 0; n <= N; ++n) {
        const auto& lvl = out.levels[static_cast<std::size_t>(n)];
        if (lvl.parts.size() > out.raw_levels[static_cast<std::size_t>(n)].parts.size())
            throw error(errc::nesting_violation, "saturated level exceeds raw cardinality");
        if (lvl.mesh > 3 * std::ldexp(1.0, -n) + fp_slack)
            throw error(errc::nesting_violation,
                        "mesh bound violated at level " + std::to_string(n));
        std::vector<char> covered(X.size(), 0);
        for (const auto& part : lvl.parts) {
            if (part.empty() || !is_connected(X, part))
                throw error(errc::nesting_violation, "saturated part empty or disconnected");
            for (cell_id c : part) covered[static_cast<std::size_t>(c)] = 1;
        }
        if (std::count(covered.begin(), covered.end(), char{1}) !=
            static_cast<long>(X.size()))
            throw error(errc::nesting_violation, "saturated family is not a cover");
    }
    for (int n = 0; n < N; ++n) {
        const auto& coarse = out.levels[static_cast<std::size_t>(n)];
        const auto& fine = out.levels[static_cast<std::size_t>(n + 1)];
        for (std::size_t i = 0; i < coarse.parts.size(); ++i) {
            cell_set glued;
            for (std::size_t j : out.refinement[static_cast<std::size_t>(n)][i])
                glued = set_union(glued, fine.parts[j]);
            if (glued != coarse.parts[i])
                throw error(errc::nesting_violation,
                            "refinement union mismatch at level " + std::to_string(n));
        }
    }
    return out;
}

NestedCovers build_nested(const Continuum& X, int N) {
    return build_nested_from_raw(X, raw_cover_levels(X, N));
}

} // namespace peano
