#include "peano/skeleton.hpp"

#include "peano/errors.hpp"

#include <algorithm>
#include <map>

namespace peano {

Skeleton build_skeleton(const Continuum& X, const std::vector<Cover>& covers_1_to_N,
                        const std::vector<double>& epsilons_1_to_N) {
    if (X.size() <= 1)
        throw error(errc::degenerate_space, "singleton continuum has the trivial point map");
    const int N = static_cast<int>(covers_1_to_N.size());
    if (N < 1) throw error(errc::bad_input, "need at least one cover level");
    if (epsilons_1_to_N.size() != covers_1_to_N.size())
        throw error(errc::bad_input, "need one epsilon per cover level");
    for (std::size_t i = 0; i < epsilons_1_to_N.size(); ++i) {
        if (!(epsilons_1_to_N[i] > 0))
            throw error(errc::bad_input, "epsilons must be positive");
        if (i > 0 && epsilons_1_to_N[i] > epsilons_1_to_N[i - 1])
            throw error(errc::bad_input, "epsilons must be decreasing");
        for (const auto& part : covers_1_to_N[i].parts)
            if (part.empty()) throw error(errc::bad_input, "cover part is empty");
    }

    Skeleton sk;
    sk.covers = covers_1_to_N;
    sk.epsilons = epsilons_1_to_N;

    // parent picks: lowest-index intersecting part one level up (level 1 -> root)
    sk.parent_pick.resize(static_cast<std::size_t>(N));
    sk.parent_pick[0].assign(sk.covers[0].parts.size(), 0);
    for (int l = 1; l < N; ++l) {
        const auto& fine = sk.covers[static_cast<std::size_t>(l)].parts;
        const auto& coarse = sk.covers[static_cast<std::size_t>(l - 1)].parts;
        auto& picks = sk.parent_pick[static_cast<std::size_t>(l)];
        picks.resize(fine.size());
        for (std::size_t j = 0; j < fine.size(); ++j) {
            std::size_t found = coarse.size();
            for (std::size_t p = 0; p < coarse.size(); ++p) {
                if (sets_intersect(fine[j], coarse[p])) {
                    found = p;
                    break;
                }
            }
            if (found == coarse.size())
                throw error(errc::nesting_violation, "cover part meets no coarser part");
            picks[j] = found;
        }
    }

    // representatives: lowest cell id, avoiding cells already used by
    // coarser levels (and earlier parts) where possible
    std::vector<char> used(X.size(), 0);
    std::vector<std::vector<std::pair<cell_id, int>>> rep(static_cast<std::size_t>(N) + 1);
    rep[0] = {{cell_id{0}, 1}};
    used[0] = 1;
    for (int l = 0; l < N; ++l) {
        const auto& parts = sk.covers[static_cast<std::size_t>(l)].parts;
        auto& level_rep = rep[static_cast<std::size_t>(l) + 1];
        level_rep.resize(parts.size());
        for (std::size_t j = 0; j < parts.size(); ++j) {
            cell_id fresh = -1;
            for (cell_id c : parts[j]) {
                if (!used[static_cast<std::size_t>(c)]) {
                    fresh = c;
                    break;
                }
            }
            if (fresh >= 0) {
                level_rep[j] = {fresh, 1};
                used[static_cast<std::size_t>(fresh)] = 1;
            } else {
                level_rep[j] = {parts[j].front(), 2};
            }
        }
    }

    // order: insert every parent's children as a contiguous block
    // immediately before the parent, children by part index
    struct Ref {
        int level;
        std::size_t part;
    };
    std::vector<Ref> order{{0, 0}};
    for (int n = 1; n <= N; ++n) {
        std::map<std::size_t, std::vector<std::size_t>> children; // parent part -> parts
        const auto& picks = sk.parent_pick[static_cast<std::size_t>(n - 1)];
        for (std::size_t j = 0; j < picks.size(); ++j) children[picks[j]].push_back(j);
        std::vector<Ref> next;
        next.reserve(order.size() + picks.size());
        for (const Ref& e : order) {
            if (e.level == n - 1) {
                auto it = children.find(e.part);
                if (it != children.end())
                    for (std::size_t j : it->second) next.push_back({n, j});
            }
            next.push_back(e);
        }
        order = std::move(next);
    }

    // positions by cumulative weights; the root carries no weight below it
    double prefix = 0;
    sk.points.reserve(order.size());
    for (const Ref& e : order) {
        Skeleton::Point p;
        p.t = prefix;
        p.level = e.level;
        p.part = e.part;
        p.cell = rep[static_cast<std::size_t>(e.level)][e.part].first;
        p.pick_tier = rep[static_cast<std::size_t>(e.level)][e.part].second;
        sk.points.push_back(p);
        if (e.level >= 1) prefix += sk.epsilons[static_cast<std::size_t>(e.level - 1)];
    }
    sk.s = prefix;
    if (sk.points.back().level != 0)
        throw error(errc::nesting_violation, "root is not the maximal point");

    // gap records with their connecting sets
    for (std::size_t i = 0; i + 1 < sk.points.size(); ++i) {
        const auto& pu = sk.points[i];
        const auto& pv = sk.points[i + 1];
        GapRecord gap;
        gap.u = pu.t;
        gap.v = pv.t;
        gap.level = pu.level;
        gap.cell_u = pu.cell;
        gap.cell_v = pv.cell;
        if (gap.level < 1)
            throw error(errc::nesting_violation, "gap below the root level");
        const int n = gap.level;

        // walk both endpoints down to level n-1; they must land on the
        // same part, and the traversed parts bridge the images
        auto walk = [&](const Skeleton::Point& p) {
            std::vector<std::pair<int, std::size_t>> chain;
            int lvl = p.level;
            std::size_t part = p.part;
            chain.emplace_back(lvl, part);
            while (lvl > n - 1) {
                part = lvl >= 1 ? sk.parent_pick[static_cast<std::size_t>(lvl - 1)][part] : 0;
                --lvl;
                chain.emplace_back(lvl, part);
            }
            return chain;
        };
        if (pv.level < n - 1)
            throw error(errc::nesting_violation, "gap successor above the parent level");
        const auto chain_u = walk(pu);
        const auto chain_v = walk(pv);
        if (chain_u.back() != chain_v.back())
            throw error(errc::nesting_violation, "gap endpoints retract to different parts");

        cell_set F;
        auto add_part = [&](int lvl, std::size_t part) {
            if (lvl == 0) {
                F = X.all_cells();
                return;
            }
            F = set_union(F, sk.covers[static_cast<std::size_t>(lvl - 1)].parts[part]);
        };
        for (auto [lvl, part] : chain_u) add_part(lvl, part);
        for (auto [lvl, part] : chain_v) add_part(lvl, part);
        gap.connector_cells = std::move(F);
        sk.gaps.push_back(std::move(gap));
    }
    return sk;
}

const std::vector<GapRecord>& gap_records(const Skeleton& sk) { return sk.gaps; }

std::pair<int, std::size_t> retract(const Skeleton& sk, const Skeleton::Point& p, int k) {
    int lvl = p.level;
    std::size_t part = p.part;
    while (lvl > k) {
        part = sk.parent_pick[static_cast<std::size_t>(lvl - 1)][part];
        --lvl;
    }
    return {lvl, part};
}

} // namespace peano
