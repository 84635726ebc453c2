#pragma once

#include "peano/continuum.hpp"
#include "peano/covers.hpp"

#include <vector>

namespace peano {

/// One complementary interval of the parameter set D, with the level that
/// fixed its length and a small connected set bridging its endpoint images.
struct GapRecord {
    double u = 0;
    double v = 0;
    int level = 1;            // n(u,v): v - u == eps_level by construction
    cell_set connector_cells; // F_{u,v}: connected, diam <= 8 * 2^-level
    cell_id cell_u = 0;       // image of u
    cell_id cell_v = 0;       // image of v
};

/// Truncated Cantor-style parameter set D in [0,s] with its image map:
/// one representative cell per cover part per level, ordered so that each
/// parent's representatives are preceded by their children, positioned by
/// cumulative weights eps_n.
struct Skeleton {
    struct Point {
        double t = 0;
        cell_id cell = 0;
        int level = 0;          // 0 is the root (whole space)
        std::size_t part = 0;   // part index within its level's cover
        int pick_tier = 1;      // 1 = fresh cell, 2 = reused cell
    };

    double s = 0;
    std::vector<Point> points; // increasing t; first at 0, last (root) at s
    std::vector<GapRecord> gaps;

    // construction data, kept for retraction queries and gap filling
    std::vector<Cover> covers;                          // index l -> level l+1
    std::vector<double> epsilons;                       // eps_1..eps_N
    std::vector<std::vector<std::size_t>> parent_pick;  // level l+1 part -> level l part
    // (level-1 parts all have parent 0, the whole space)

    int top_level() const { return static_cast<int>(covers.size()); }
};

/// Build the skeleton from raw covers for levels 1..N (mesh <= 2^-n each)
/// and the decreasing positive weights eps_1..eps_N. Throws DegenerateSpace
/// for a singleton continuum.
Skeleton build_skeleton(const Continuum& X, const std::vector<Cover>& covers_1_to_N,
                        const std::vector<double>& epsilons_1_to_N);

/// The gap list of a built skeleton (one record per consecutive pair of D).
const std::vector<GapRecord>& gap_records(const Skeleton& sk);

/// Retraction r_k of a skeleton point onto level k: identity for points at
/// level <= k, otherwise the level-k ancestor through the parent picks.
/// Returns (level, part index within that level's cover or 0 for the root).
std::pair<int, std::size_t> retract(const Skeleton& sk, const Skeleton::Point& p, int k);

} // namespace peano
