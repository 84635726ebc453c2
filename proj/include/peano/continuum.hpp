#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace peano {

using cell_id = std::int32_t;

/// Sorted, duplicate-free list of cell ids.
using cell_set = std::vector<cell_id>;

struct Cell {
    cell_id id = 0;
    double x = 0.0;
    double y = 0.0;
};

/// A discretized Peano continuum: a finite connected cell graph with a
/// normalized Euclidean metric. Coordinates are stored already divided by
/// `scale`, so the diameter is exactly 1 for two or more cells (0 for a
/// singleton). A subset of cells is "connected" iff it induces a connected
/// subgraph of the adjacency relation. Immutable after construction.
class Continuum {
public:
    Continuum(std::vector<double> raw_xs, std::vector<double> raw_ys,
              std::vector<std::pair<cell_id, cell_id>> edges,
              std::string description);

    std::size_t size() const { return xs_.size(); }
    double x(cell_id c) const { return xs_[static_cast<std::size_t>(c)]; }
    double y(cell_id c) const { return ys_[static_cast<std::size_t>(c)]; }
    const std::vector<double>& xs() const { return xs_; }
    const std::vector<double>& ys() const { return ys_; }
    double scale() const { return scale_; }
    double diam() const { return size() >= 2 ? 1.0 : 0.0; }
    const std::string& description() const { return description_; }

    const std::vector<cell_id>& neighbors(cell_id c) const {
        return adjacency_[static_cast<std::size_t>(c)];
    }

    double distance(cell_id a, cell_id b) const;

    /// Smallest positive inter-cell distance (resolution of the grid).
    /// 0 for a singleton continuum.
    double min_cell_distance() const { return min_cell_distance_; }

    /// Longest adjacency edge. Covers at scales below this cannot contain
    /// whole edges, which stalls chain refinement.
    double max_edge_length() const { return max_edge_length_; }

    cell_set all_cells() const;

private:
    std::vector<double> xs_, ys_;
    std::vector<std::vector<cell_id>> adjacency_;
    double scale_ = 1.0;
    double min_cell_distance_ = 0.0;
    double max_edge_length_ = 0.0;
    std::string description_;
};

/// Generators. Deterministic cell ordering: row-major for grids, recursive
/// address order for the gasket.
Continuum make_interval(int k);
Continuum make_square(int k);
Continuum make_sierpinski_carpet(int depth);
Continuum make_sierpinski_gasket(int depth);

/// Dispatch by shape name: interval(k), square(k), carpet(depth), gasket(depth).
Continuum generate(const std::string& shape, int param);

/// Max pairwise distance over A; 0 for empty or singleton A.
double diameter(const Continuum& X, const cell_set& A);

/// O(A;eps) (open, strict <) or O[A;eps] (closed, <=) as a cell set.
cell_set neighborhood(const Continuum& X, const cell_set& A, double eps, bool closed);

/// True iff A induces a connected subgraph; empty -> false, singleton -> true.
bool is_connected(const Continuum& X, const cell_set& A);

// Sorted-set helpers shared across modules.
bool sets_intersect(const cell_set& a, const cell_set& b);
bool set_contains(const cell_set& a, cell_id c);
bool is_subset(const cell_set& a, const cell_set& b);
cell_set set_union(const cell_set& a, const cell_set& b);
cell_set set_intersection(const cell_set& a, const cell_set& b);

} // namespace peano
