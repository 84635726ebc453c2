#include "peano/continuum.hpp"

#include "peano/errors.hpp"
#include "peano/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <queue>

namespace peano {

Continuum::Continuum(std::vector<double> raw_xs, std::vector<double> raw_ys,
                     std::vector<std::pair<cell_id, cell_id>> edges,
                     std::string description)
    : description_(std::move(description)) {
    const std::size_t n = raw_xs.size();
    if (n == 0) throw error(errc::empty_input, "continuum has no cells");
    if (raw_ys.size() != n) throw error(errc::bad_input, "coordinate arrays disagree");

    scale_ = 1.0;
    if (n >= 2) {
        const double raw_diam_sq =
            kernels::max_sq_dist_pairwise(raw_xs.data(), raw_ys.data(), n);
        scale_ = std::sqrt(raw_diam_sq);
        if (!(scale_ > 0.0))
            throw error(errc::bad_input, "all cells coincide; diameter cannot be normalized");
    }
    xs_.resize(n);
    ys_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        xs_[i] = raw_xs[i] / scale_;
        ys_[i] = raw_ys[i] / scale_;
    }

    adjacency_.assign(n, {});
    for (auto [a, b] : edges) {
        if (a == b) continue;
        if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= n || static_cast<std::size_t>(b) >= n)
            throw error(errc::bad_input, "adjacency references unknown cell");
        adjacency_[static_cast<std::size_t>(a)].push_back(b);
        adjacency_[static_cast<std::size_t>(b)].push_back(a);
    }
    for (auto& nbrs : adjacency_) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    }

    // connectivity of the whole graph
    std::vector<char> seen(n, 0);
    std::queue<cell_id> q;
    q.push(0);
    seen[0] = 1;
    std::size_t reached = 1;
    while (!q.empty()) {
        cell_id c = q.front();
        q.pop();
        for (cell_id nb : adjacency_[static_cast<std::size_t>(c)]) {
            if (!seen[static_cast<std::size_t>(nb)]) {
                seen[static_cast<std::size_t>(nb)] = 1;
                ++reached;
                q.push(nb);
            }
        }
    }
    if (reached != n)
        throw error(errc::disconnected, "cell graph is not connected");

    min_cell_distance_ = 0.0;
    if (n >= 2) {
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < n; ++i) {
            // nearest other cell; adjacency does not always realize the
            // metric minimum, so scan all cells
            double d2 = std::numeric_limits<double>::infinity();
            if (i > 0)
                d2 = kernels::min_sq_dist_point(xs_.data(), ys_.data(), i, xs_[i], ys_[i]);
            if (d2 < best) best = d2;
        }
        min_cell_distance_ = std::sqrt(best);
    }
    max_edge_length_ = 0.0;
    for (cell_id c = 0; c < static_cast<cell_id>(n); ++c)
        for (cell_id nb : adjacency_[static_cast<std::size_t>(c)])
            max_edge_length_ = std::max(max_edge_length_, distance(c, nb));
}

double Continuum::distance(cell_id a, cell_id b) const {
    const double dx = x(a) - x(b);
    const double dy = y(a) - y(b);
    return std::sqrt(dx * dx + dy * dy);
}

cell_set Continuum::all_cells() const {
    cell_set out(size());
    std::iota(out.begin(), out.end(), 0);
    return out;
}

Continuum make_interval(int k) {
    if (k < 1) throw error(errc::bad_input, "interval(k) requires k >= 1");
    std::vector<double> xs(static_cast<std::size_t>(k)), ys(static_cast<std::size_t>(k), 0.0);
    std::vector<std::pair<cell_id, cell_id>> edges;
    for (int i = 0; i < k; ++i) {
        xs[static_cast<std::size_t>(i)] = static_cast<double>(i);
        if (i > 0) edges.emplace_back(i - 1, i);
    }
    return Continuum(std::move(xs), std::move(ys), std::move(edges),
                     "interval(" + std::to_string(k) + ")");
}

namespace {

Continuum from_grid_mask(const std::vector<std::vector<char>>& keep, const std::string& desc) {
    const int rows = static_cast<int>(keep.size());
    const int cols = rows > 0 ? static_cast<int>(keep[0].size()) : 0;
    std::vector<double> xs, ys;
    std::vector<std::pair<cell_id, cell_id>> edges;
    std::vector<std::vector<cell_id>> id_at(static_cast<std::size_t>(rows),
                                            std::vector<cell_id>(static_cast<std::size_t>(cols), -1));
    cell_id next = 0;
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            if (!keep[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]) continue;
            id_at[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = next++;
            xs.push_back(static_cast<double>(c));
            ys.push_back(static_cast<double>(r));
        }
    }
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            cell_id me = id_at[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
            if (me < 0) continue;
            if (c + 1 < cols) {
                cell_id right = id_at[static_cast<std::size_t>(r)][static_cast<std::size_t>(c + 1)];
                if (right >= 0) edges.emplace_back(me, right);
            }
            if (r + 1 < rows) {
                cell_id down = id_at[static_cast<std::size_t>(r + 1)][static_cast<std::size_t>(c)];
                if (down >= 0) edges.emplace_back(me, down);
            }
        }
    }
    return Continuum(std::move(xs), std::move(ys), std::move(edges), desc);
}

} // namespace

Continuum make_square(int k) {
    if (k < 1) throw error(errc::bad_input, "square(k) requires k >= 1");
    std::vector<std::vector<char>> keep(static_cast<std::size_t>(k),
                                        std::vector<char>(static_cast<std::size_t>(k), 1));
    return from_grid_mask(keep, "square(" + std::to_string(k) + ")");
}

Continuum make_sierpinski_carpet(int depth) {
    if (depth < 0) throw error(errc::bad_input, "carpet(depth) requires depth >= 0");
    int side = 1;
    for (int i = 0; i < depth; ++i) side *= 3;
    std::vector<std::vector<char>> keep(static_cast<std::size_t>(side),
                                        std::vector<char>(static_cast<std::size_t>(side), 1));
    for (int r = 0; r < side; ++r) {
        for (int c = 0; c < side; ++c) {
            int rr = r, cc = c;
            bool hole = false;
            while (rr > 0 || cc > 0) {
                if (rr % 3 == 1 && cc % 3 == 1) {
                    hole = true;
                    break;
                }
                rr /= 3;
                cc /= 3;
            }
            if (hole) keep[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = 0;
        }
    }
    return from_grid_mask(keep, "carpet(" + std::to_string(depth) + ")");
}

Continuum make_sierpinski_gasket(int depth) {
    if (depth < 0) throw error(errc::bad_input, "gasket(depth) requires depth >= 0");
    // Cells are the 3^depth small triangles of the subdivision, in recursive
    // address order; adjacency joins triangles sharing a corner vertex.
    struct Tri {
        long long ax, ay, bx, by, cx, cy;
    };
    long long side = 1;
    for (int i = 0; i < depth; ++i) side *= 2;
    std::vector<Tri> tris;
    // y scaled by 2 so midpoints stay integral with a sqrt(3) factor applied later
    std::vector<Tri> stack{{0, 0, 2 * side, 0, side, 2 * side}};
    struct Frame {
        Tri t;
        int level;
    };
    std::vector<Frame> work{{stack[0], 0}};
    while (!work.empty()) {
        Frame f = work.back();
        work.pop_back();
        if (f.level == depth) {
            tris.push_back(f.t);
            continue;
        }
        const Tri& t = f.t;
        const long long mabx = (t.ax + t.bx) / 2, maby = (t.ay + t.by) / 2;
        const long long mbcx = (t.bx + t.cx) / 2, mbcy = (t.by + t.cy) / 2;
        const long long macx = (t.ax + t.cx) / 2, macy = (t.ay + t.cy) / 2;
        // push in reverse so children pop in address order 0,1,2
        work.push_back({Tri{macx, macy, mbcx, mbcy, t.cx, t.cy}, f.level + 1});
        work.push_back({Tri{mabx, maby, t.bx, t.by, mbcx, mbcy}, f.level + 1});
        work.push_back({Tri{t.ax, t.ay, mabx, maby, macx, macy}, f.level + 1});
    }

    const double ky = std::sqrt(3.0) / 2.0 / 2.0; // undo the y-doubling, apply height factor
    std::vector<double> xs(tris.size()), ys(tris.size());
    std::map<std::pair<long long, long long>, std::vector<cell_id>> at_vertex;
    for (std::size_t i = 0; i < tris.size(); ++i) {
        const Tri& t = tris[i];
        xs[i] = static_cast<double>(t.ax + t.bx + t.cx) / 3.0 / 2.0;
        ys[i] = static_cast<double>(t.ay + t.by + t.cy) / 3.0 * ky;
        at_vertex[{t.ax, t.ay}].push_back(static_cast<cell_id>(i));
        at_vertex[{t.bx, t.by}].push_back(static_cast<cell_id>(i));
        at_vertex[{t.cx, t.cy}].push_back(static_cast<cell_id>(i));
    }
    std::vector<std::pair<cell_id, cell_id>> edges;
    for (auto& [v, ids] : at_vertex) {
        for (std::size_t i = 0; i < ids.size(); ++i)
            for (std::size_t j = i + 1; j < ids.size(); ++j) edges.emplace_back(ids[i], ids[j]);
    }
    return Continuum(std::move(xs), std::move(ys), std::move(edges),
                     "gasket(" + std::to_string(depth) + ")");
}

Continuum generate(const std::string& shape, int param) {
    if (shape == "interval") return make_interval(param);
    if (shape == "square") return make_square(param);
    if (shape == "carpet") return make_sierpinski_carpet(param);
    if (shape == "gasket") return make_sierpinski_gasket(param);
    throw error(errc::bad_input, "unknown shape: " + shape);
}

double diameter(const Continuum& X, const cell_set& A) {
    if (A.size() < 2) return 0.0;
    std::vector<double> xs(A.size()), ys(A.size());
    for (std::size_t i = 0; i < A.size(); ++i) {
        xs[i] = X.x(A[i]);
        ys[i] = X.y(A[i]);
    }
    return std::sqrt(kernels::max_sq_dist_pairwise(xs.data(), ys.data(), A.size()));
}

cell_set neighborhood(const Continuum& X, const cell_set& A, double eps, bool closed) {
    if (eps < 0) throw error(errc::bad_input, "neighborhood radius must be >= 0");
    cell_set out;
    if (A.empty()) return out;
    std::vector<double> axs(A.size()), ays(A.size());
    for (std::size_t i = 0; i < A.size(); ++i) {
        axs[i] = X.x(A[i]);
        ays[i] = X.y(A[i]);
    }
    const double r2 = eps * eps;
    for (cell_id c = 0; c < static_cast<cell_id>(X.size()); ++c) {
        const double d2 = kernels::min_sq_dist_point(axs.data(), ays.data(), A.size(), X.x(c), X.y(c));
        if (closed ? (d2 <= r2) : (d2 < r2)) out.push_back(c);
    }
    return out;
}

bool is_connected(const Continuum& X, const cell_set& A) {
    if (A.empty()) return false;
    if (A.size() == 1) return true;
    std::vector<char> in(X.size(), 0), seen(X.size(), 0);
    for (cell_id c : A) in[static_cast<std::size_t>(c)] = 1;
    std::queue<cell_id> q;
    q.push(A[0]);
    seen[static_cast<std::size_t>(A[0])] = 1;
    std::size_t reached = 1;
    while (!q.empty()) {
        cell_id c = q.front();
        q.pop();
        for (cell_id nb : X.neighbors(c)) {
            if (in[static_cast<std::size_t>(nb)] && !seen[static_cast<std::size_t>(nb)]) {
                seen[static_cast<std::size_t>(nb)] = 1;
                ++reached;
                q.push(nb);
            }
        }
    }
    return reached == A.size();
}

bool sets_intersect(const cell_set& a, const cell_set& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return true;
        if (a[i] < b[j])
            ++i;
        else
            ++j;
    }
    return false;
}

bool set_contains(const cell_set& a, cell_id c) {
    return std::binary_search(a.begin(), a.end(), c);
}

bool is_subset(const cell_set& a, const cell_set& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

cell_set set_union(const cell_set& a, const cell_set& b) {
    cell_set out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

cell_set set_intersection(const cell_set& a, const cell_set& b) {
    cell_set out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

} // namespace peano
