#pragma once

#include "peano/continuum.hpp"

#include <optional>
#include <string>
#include <vector>

namespace peano {

/// A cover of the continuum by nonempty connected cell sets of bounded diameter.
struct Cover {
    int level = 0;       // n, for epsilon = 2^-n covers
    double epsilon = 1;  // diameter bound the parts satisfy
    std::vector<cell_set> parts;
    double mesh = 0;  // max part diameter

    std::size_t size() const { return parts.size(); }
};

/// Per-level bounds on the least number of connected parts of diameter
/// <= 2^-n needed to cover the space.
struct SierpinskiTable {
    struct Row {
        int n = 0;
        double epsilon = 1;
        long lower = 1;
        long upper = 1;
        bool exact = false;
    };
    std::vector<Row> rows;

    const Row& row(int n) const { return rows.at(static_cast<std::size_t>(n)); }
    long upper(int n) const { return row(n).upper; }
    std::string to_csv() const;
};

/// The nested cover tower: raw levels F_0..F_N (mesh <= 2^-n) and their
/// star-saturated companions C_0..C_N (mesh <= 3*2^-n) with the refinement
/// property that every part of C_{n-1} is the union of the C_n parts it
/// contains.
struct NestedCovers {
    std::vector<Cover> raw_levels;  // F_n
    std::vector<Cover> levels;      // C_n
    // refinement[n][i] = indices of parts of levels[n+1] contained in levels[n].parts[i]
    std::vector<std::vector<std::vector<std::size_t>>> refinement;

    int top_level() const { return static_cast<int>(levels.size()) - 1; }
};

/// Connected parts of diameter <= eps covering X, grown by breadth-first
/// accretion from the lowest-id uncovered cell. The part count is an upper
/// bound for the minimal cover cardinality.
Cover greedy_cover(const Continuum& X, double eps);

/// Provably minimal-cardinality cover by connected parts of diameter <= eps.
/// Exhaustive search; throws BudgetExceeded when |cells| > budget.
Cover exact_min_cover(const Continuum& X, double eps, std::size_t budget = 20);

/// Greedy farthest-point packing: max number of cells found pairwise farther
/// than eps apart. Any set of diameter <= eps contains at most one of them,
/// so the count lower-bounds every cover by diameter-<=eps sets.
long packing_lower_bound(const Continuum& X, double eps);

/// Bounds for levels n = 0..n_max at eps = 2^-n; exact where the budget
/// allows, otherwise greedy upper + packing lower. Uppers are propagated to
/// be nondecreasing in n (a finer cover is also a coarser-level cover).
SierpinskiTable sierpinski_table(const Continuum& X, int n_max, std::size_t budget = 20);

/// Iterated star saturation truncated at the top raw level: starting from
/// A_n = union of level-n parts meeting A, absorb at each deeper level all
/// parts meeting the current set. Connected whenever A is.
cell_set star_saturate(const Continuum& X, const std::vector<Cover>& raw_levels,
                       const cell_set& A, int n);

/// Build the nested tower up to level N and verify its three conditions
/// (C_0 = {X}, |C_n| <= |F_n|, mesh <= 3*2^-n, exact refinement unions).
/// Throws NestingViolation if any check fails.
NestedCovers build_nested(const Continuum& X, int N);

/// Same, but reusing precomputed raw covers (levels 0..N).
NestedCovers build_nested_from_raw(const Continuum& X, std::vector<Cover> raw_levels);

/// Raw covers for levels 0..N: greedy with the edge-covering patch, with
/// backward propagation so counts are nondecreasing in n.
std::vector<Cover> raw_cover_levels(const Continuum& X, int N);

/// Table rows derived from already-built raw covers (+ packing lowers).
SierpinskiTable table_from_covers(const Continuum& X, const std::vector<Cover>& raw_levels,
                                  std::size_t budget = 20);

} // namespace peano
