#pragma once

// Test-side brute-force oracles, kept independent of the library algorithms
// they cross-check.

#include "peano/connectors.hpp"
#include "peano/continuum.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <vector>

namespace oracles {

using peano::cell_id;
using peano::cell_set;
using peano::Continuum;

// Minimal number of connected diameter-<=eps parts covering X, by plain
// enumeration of all subsets. Only for tiny instances (<= ~14 cells).
inline int brute_min_cover_size(const Continuum& X, double eps) {
    const std::size_t n = X.size();
    std::vector<std::uint32_t> parts;
    for (std::uint32_t m = 1; m < (1u << n); ++m) {
        cell_set cells;
        for (std::size_t i = 0; i < n; ++i)
            if (m & (1u << i)) cells.push_back(static_cast<cell_id>(i));
        if (!peano::is_connected(X, cells)) continue;
        if (peano::diameter(X, cells) > eps) continue;
        parts.push_back(m);
    }
    std::map<std::uint32_t, int> memo;
    const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
    auto solve = [&](auto&& self, std::uint32_t uncovered) -> int {
        if (!uncovered) return 0;
        auto it = memo.find(uncovered);
        if (it != memo.end()) return it->second;
        int low = 0;
        while (!(uncovered & (1u << low))) ++low;
        int best = std::numeric_limits<int>::max() / 2;
        for (std::uint32_t p : parts) {
            if (!(p & (1u << low))) continue;
            best = std::min(best, 1 + self(self, uncovered & ~p));
        }
        memo[uncovered] = best;
        return best;
    };
    return solve(solve, full);
}

// Connector predicate on the family's intersection graph (the discrete
// reading of "the union is connected" for families of connected sets).
inline bool is_connector(const std::vector<cell_set>& family, const std::vector<int>& chosen,
                         const cell_set& A, const cell_set& B) {
    if (chosen.empty()) return false;
    bool meets_a = false, meets_b = false;
    for (int i : chosen) {
        meets_a = meets_a || peano::sets_intersect(family[static_cast<std::size_t>(i)], A);
        meets_b = meets_b || peano::sets_intersect(family[static_cast<std::size_t>(i)], B);
    }
    if (!meets_a || !meets_b) return false;
    std::vector<int> stack{chosen[0]};
    std::vector<char> seen(family.size(), 0);
    seen[static_cast<std::size_t>(chosen[0])] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : chosen) {
            if (seen[static_cast<std::size_t>(v)]) continue;
            if (peano::sets_intersect(family[static_cast<std::size_t>(u)],
                                      family[static_cast<std::size_t>(v)])) {
                seen[static_cast<std::size_t>(v)] = 1;
                ++reached;
                stack.push_back(v);
            }
        }
    }
    return reached == chosen.size();
}

// Every minimal (A,B)-connector inside `family`, as sorted index lists.
inline std::vector<std::vector<int>> brute_minimal_connectors(const std::vector<cell_set>& family,
                                                              const cell_set& A,
                                                              const cell_set& B) {
    const std::size_t k = family.size();
    std::vector<std::uint32_t> connectors;
    for (std::uint32_t m = 1; m < (1u << k); ++m) {
        std::vector<int> chosen;
        for (std::size_t i = 0; i < k; ++i)
            if (m & (1u << i)) chosen.push_back(static_cast<int>(i));
        if (is_connector(family, chosen, A, B)) connectors.push_back(m);
    }
    std::vector<std::vector<int>> minimal;
    for (std::uint32_t m : connectors) {
        bool is_minimal = true;
        for (std::uint32_t m2 : connectors)
            if (m2 != m && (m2 & m) == m2) {
                is_minimal = false;
                break;
            }
        if (!is_minimal) continue;
        std::vector<int> chosen;
        for (std::size_t i = 0; i < k; ++i)
            if (m & (1u << i)) chosen.push_back(static_cast<int>(i));
        minimal.push_back(chosen);
    }
    return minimal;
}

// Re-derive the unique chain order of a minimal connector from its unordered
// part set (the uniqueness argument: walk from the part meeting A).
inline std::vector<cell_set> rederive_chain_order(std::vector<cell_set> parts, const cell_set& A,
                                                  bool* unique_ok = nullptr) {
    std::vector<cell_set> out;
    if (unique_ok) *unique_ok = true;
    int first = -1;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (peano::sets_intersect(parts[i], A)) {
            if (first >= 0 && unique_ok) *unique_ok = false;
            if (first < 0) first = static_cast<int>(i);
        }
    }
    if (first < 0) {
        if (unique_ok) *unique_ok = false;
        return out;
    }
    std::vector<char> used(parts.size(), 0);
    int current = first;
    used[static_cast<std::size_t>(current)] = 1;
    out.push_back(parts[static_cast<std::size_t>(current)]);
    while (out.size() < parts.size()) {
        int next = -1;
        int hits = 0;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (used[i]) continue;
            if (peano::sets_intersect(parts[static_cast<std::size_t>(current)], parts[i])) {
                ++hits;
                next = static_cast<int>(i);
            }
        }
        if (hits != 1) {
            if (unique_ok) *unique_ok = false;
            return out;
        }
        current = next;
        used[static_cast<std::size_t>(current)] = 1;
        out.push_back(parts[static_cast<std::size_t>(current)]);
    }
    return out;
}

} // namespace oracles
