#pragma once

#include "peano/connectors.hpp"
#include "peano/continuum.hpp"
#include "peano/covers.hpp"

#include <vector>

namespace peano {

/// Tower of minimal ({a},{b})-connectors across cover levels m..N with
/// order-preserving projections onto coarser levels. chains[l] lives at
/// absolute level m+l; parent[l][j] is the index of the level-(m+l-1) part
/// containing part j of chains[l].
struct RefinementLevels {
    int base_level = 0; // m
    std::vector<Chain> chains;
    std::vector<std::vector<std::size_t>> parent; // parent[0] is empty

    int top_level() const { return base_level + static_cast<int>(chains.size()) - 1; }
};

/// Piecewise-constant parametrized curve: value between breakpoints is the
/// left breakpoint's cell.
struct ParamCurve {
    struct Breakpoint {
        double t = 0;
        cell_id cell = 0;
    };
    /// Rep bookkeeping for one interior breakpoint: cover level, weight
    /// delta_n, and how far down the pick fallback ladder the cell came from
    /// (1 = fresh exclusive cell ... 4 = arbitrary cell of the part).
    struct WeightLogEntry {
        int level = 0;
        double weight = 0;
        int pick_tier = 1;
    };

    double s = 0;
    std::vector<Breakpoint> breakpoints;
    std::vector<WeightLogEntry> weightlog;

    std::string to_csv(const Continuum& X) const;
};

/// One refinement step: split every part M_i of the parent chain with a
/// minimal connector inside the next cover's parts contained in M_i, and
/// concatenate. Returns the refined chain plus the parent index of each new
/// part. Throws RefinementFailure when a sub-family fails to connect its
/// boundary sets (a nesting bug, not bad input).
std::pair<Chain, std::vector<std::size_t>> refine_chain(const Chain& parent,
                                                        const Cover& next_cover,
                                                        cell_id a, cell_id b);

/// Tower from level m down to level `top` of `nested`.
RefinementLevels build_refinement(const Continuum& X, const NestedCovers& nested,
                                  const cell_set& F, cell_id a, cell_id b, int m, int top);

/// Lemma-style path from a to b through O[F; 3*2^-m]: refine chains through
/// levels m..m+|deltas|-1, give each part's representative cell the weight
/// delta_n of its level, order representatives by their anchor position in
/// the deepest chain, and place breakpoints at the midpoints of the owned
/// weight intervals. For every refined level n, breakpoint pairs closer
/// than delta_n in parameter are within 6*2^-n in the metric.
ParamCurve build_path(const Continuum& X, const NestedCovers& nested, const cell_set& F,
                      cell_id a, cell_id b, int m, const std::vector<double>& deltas);

/// Value at t: the cell of the greatest breakpoint position <= t.
cell_id eval(const ParamCurve& curve, double t);

} // namespace peano
