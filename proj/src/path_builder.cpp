#include "peano/path_builder.hpp"

#include "peano/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace peano {

std::string ParamCurve::to_csv(const Continuum& X) const {
    std::ostringstream out;
    out.precision(17);
    out << "t,cell_id,x,y\n";
    for (const auto& bp : breakpoints)
        out << bp.t << ',' << bp.cell << ',' << X.x(bp.cell) << ',' << X.y(bp.cell) << '\n';
    return out.str();
}

std::pair<Chain, std::vector<std::size_t>> refine_chain(const Chain& parent,
                                                        const Cover& next_cover,
                                                        cell_id a, cell_id b) {
    const std::size_t k = parent.size();
    if (k == 0) throw error(errc::refinement_failure, "empty parent chain");
    if (!set_contains(parent.parts.front(), a) || !set_contains(parent.parts.back(), b))
        throw error(errc::refinement_failure, "endpoints left the parent chain");

    Chain refined;
    refined.source = {a};
    refined.sink = {b};
    std::vector<std::size_t> parent_of;

    cell_set A_i = {a};
    for (std::size_t i = 0; i < k; ++i) {
        const cell_set& M_i = parent.parts[i];
        const cell_set B_i =
            i + 1 < k ? set_intersection(M_i, parent.parts[i + 1]) : cell_set{b};

        std::vector<cell_set> inside;
        for (const auto& C : next_cover.parts)
            if (is_subset(C, M_i)) inside.push_back(C);

        Chain sub;
        try {
            sub = minimal_connector(inside, A_i, B_i);
        } catch (const error& e) {
            throw error(errc::refinement_failure,
                        "sub-connector failed in parent part " + std::to_string(i) + ": " +
                            e.what());
        }

        std::size_t start = 0;
        if (!refined.parts.empty() && refined.parts.back() == sub.parts.front())
            start = 1; // the bridging part sits in both parent parts; keep one copy
        for (std::size_t j = start; j < sub.parts.size(); ++j) {
            refined.parts.push_back(sub.parts[j]);
            parent_of.push_back(i);
        }

        if (i + 1 < k) A_i = set_intersection(parent.parts[i + 1], sub.parts.back());
    }

    const ChainReport rep = validate_chain(refined);
    if (!rep.ok)
        throw error(errc::refinement_failure,
                    "refined chain violates condition " + std::to_string(rep.violated_condition) +
                        ": " + rep.detail);
    return {std::move(refined), std::move(parent_of)};
}

RefinementLevels build_refinement(const Continuum& X, const NestedCovers& nested,
                                  const cell_set& F, cell_id a, cell_id b, int m, int top) {
    if (!set_contains(F, a) || !set_contains(F, b))
        throw error(errc::endpoint_outside_f, "path endpoints must lie in F");
    if (!is_connected(X, F))
        throw error(errc::f_disconnected, "F must be connected");
    if (m < 0 || top < m || top > nested.top_level())
        throw error(errc::bad_input, "level range outside the cover tower");

    RefinementLevels tower;
    tower.base_level = m;

    // M_m: minimal connector inside the level-m parts meeting F
    std::vector<cell_set> family;
    for (const auto& C : nested.levels[static_cast<std::size_t>(m)].parts)
        if (sets_intersect(C, F)) family.push_back(C);
    tower.chains.push_back(minimal_connector(family, {a}, {b}));
    tower.parent.emplace_back();

    for (int n = m; n < top; ++n) {
        auto [chain, parent_of] = refine_chain(
            tower.chains.back(), nested.levels[static_cast<std::size_t>(n + 1)], a, b);
        tower.chains.push_back(std::move(chain));
        tower.parent.push_back(std::move(parent_of));
    }
    return tower;
}

namespace {

struct RepPick {
    int level = 0;          // absolute cover level n
    std::size_t part = 0;   // index in its chain
    std::size_t anchor = 0; // position in the level-N chain
    cell_id cell = 0;
    double weight = 0;
    int tier = 1;
};

} // namespace

ParamCurve build_path(const Continuum& X, const NestedCovers& nested, const cell_set& F,
                      cell_id a, cell_id b, int m, const std::vector<double>& deltas) {
    if (a == b) {
        ParamCurve curve;
        curve.s = 0;
        curve.breakpoints = {{0.0, a}};
        if (!set_contains(F, a))
            throw error(errc::endpoint_outside_f, "path endpoints must lie in F");
        return curve;
    }

    if (deltas.empty() || m + static_cast<int>(deltas.size()) - 1 > nested.top_level())
        throw error(errc::bad_input, "need one delta per refined level, within the tower");
    for (std::size_t i = 0; i < deltas.size(); ++i)
        if (deltas[i] <= 0 || (i > 0 && deltas[i] > deltas[i - 1]))
            throw error(errc::bad_input, "deltas must be positive and nonincreasing");

    RefinementLevels tower =
        build_refinement(X, nested, F, a, b, m, m + static_cast<int>(deltas.size()) - 1);
    const std::size_t L = tower.chains.size();

    // Contiguous block of level-N descendants per part, per level.
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> block(L);
    block[L - 1].resize(tower.chains[L - 1].size());
    for (std::size_t j = 0; j < tower.chains[L - 1].size(); ++j) block[L - 1][j] = {j, j + 1};
    for (std::size_t l = L - 1; l-- > 0;) {
        block[l].assign(tower.chains[l].size(),
                        {tower.chains[L - 1].size(), 0});
        for (std::size_t j = 0; j < tower.chains[l + 1].size(); ++j) {
            const std::size_t p = tower.parent[l + 1][j];
            auto& range = block[l][p];
            range.first = std::min(range.first, block[l + 1][j].first);
            range.second = std::max(range.second, block[l + 1][j].second);
        }
    }

    std::vector<char> used(X.size(), 0);
    std::vector<RepPick> reps;
    const Chain& bottom = tower.chains[L - 1];

    for (std::size_t l = 0; l < L; ++l) {
        const Chain& chain = tower.chains[l];
        // multiplicity of each cell across this level's parts, for exclusivity
        std::vector<int> multiplicity(X.size(), 0);
        for (const auto& part : chain.parts)
            for (cell_id c : part) ++multiplicity[static_cast<std::size_t>(c)];

        for (std::size_t j = 0; j < chain.size(); ++j) {
            const auto [lo, hi] = block[l][j];
            RepPick pick;
            pick.level = tower.base_level + static_cast<int>(l);
            pick.part = j;
            pick.weight = deltas[l];
            bool found = false;
            for (int tier = 1; tier <= 3 && !found; ++tier) {
                for (std::size_t q = lo; q < hi && !found; ++q) {
                    for (cell_id c : bottom.parts[q]) {
                        if (!set_contains(chain.parts[j], c)) continue;
                        if (multiplicity[static_cast<std::size_t>(c)] != 1) continue;
                        if (tier <= 2 && (c == a || c == b)) continue;
                        if (tier <= 1 && used[static_cast<std::size_t>(c)]) continue;
                        pick.anchor = q;
                        pick.cell = c;
                        pick.tier = tier;
                        found = true;
                        break;
                    }
                }
            }
            if (!found) {
                // no exclusive cell among the descendants; take the lowest
                // cell of the part and anchor at the block it lives in
                pick.tier = 4;
                pick.cell = chain.parts[j].front();
                pick.anchor = lo;
                for (std::size_t q = lo; q < hi; ++q) {
                    if (set_contains(bottom.parts[q], pick.cell)) {
                        pick.anchor = q;
                        break;
                    }
                }
            }
            used[static_cast<std::size_t>(pick.cell)] = 1;
            reps.push_back(pick);
        }
    }

    std::sort(reps.begin(), reps.end(), [](const RepPick& u, const RepPick& v) {
        if (u.anchor != v.anchor) return u.anchor < v.anchor;
        if (u.level != v.level) return u.level < v.level;
        return u.part < v.part;
    });

    ParamCurve curve;
    curve.breakpoints.push_back({0.0, a});
    double prefix = 0;
    for (const auto& r : reps) {
        curve.breakpoints.push_back({prefix + r.weight / 2, r.cell});
        curve.weightlog.push_back({r.level, r.weight, r.tier});
        prefix += r.weight;
    }
    curve.s = prefix;
    curve.breakpoints.push_back({curve.s, b});
    return curve;
}

cell_id eval(const ParamCurve& curve, double t) {
    if (t < 0 || t > curve.s) throw error(errc::out_of_domain, "parameter outside [0,s]");
    auto it = std::upper_bound(curve.breakpoints.begin(), curve.breakpoints.end(), t,
                               [](double v, const ParamCurve::Breakpoint& bp) { return v < bp.t; });
    return std::prev(it)->cell;
}

} // namespace peano
