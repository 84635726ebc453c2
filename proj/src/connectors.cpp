#include "peano/connectors.hpp"

#include "peano/errors.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace peano {

Chain minimal_connector(const std::vector<cell_set>& family, const cell_set& A,
                        const cell_set& B) {
    if (A.empty() || B.empty())
        throw error(errc::not_a_connector, "A and B must be nonempty");
    if (sets_intersect(A, B))
        throw error(errc::not_a_connector, "A and B must be disjoint");
    const std::size_t k = family.size();
    std::vector<char> meets_a(k, 0), meets_b(k, 0);
    bool any_a = false, any_b = false;
    for (std::size_t i = 0; i < k; ++i) {
        if (family[i].empty()) throw error(errc::not_a_connector, "family contains an empty set");
        meets_a[i] = sets_intersect(family[i], A);
        meets_b[i] = sets_intersect(family[i], B);
        any_a = any_a || meets_a[i];
        any_b = any_b || meets_b[i];
    }
    if (!any_a || !any_b)
        throw error(errc::not_a_connector, "family never meets A or never meets B");

    // intersection graph
    std::vector<std::vector<std::size_t>> adj(k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            if (sets_intersect(family[i], family[j])) {
                adj[i].push_back(j);
                adj[j].push_back(i);
            }

    // BFS distances to the virtual B node (dist 1 for sets meeting B)
    constexpr std::size_t INF = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> dist_b(k, INF);
    std::queue<std::size_t> q;
    for (std::size_t i = 0; i < k; ++i)
        if (meets_b[i]) {
            dist_b[i] = 1;
            q.push(i);
        }
    while (!q.empty()) {
        std::size_t u = q.front();
        q.pop();
        for (std::size_t v : adj[u])
            if (dist_b[v] == INF) {
                dist_b[v] = dist_b[u] + 1;
                q.push(v);
            }
    }

    std::size_t best_len = INF;
    for (std::size_t i = 0; i < k; ++i)
        if (meets_a[i] && dist_b[i] != INF) best_len = std::min(best_len, dist_b[i]);
    if (best_len == INF)
        throw error(errc::no_path, "family does not connect A to B");

    // lexicographically smallest index sequence among shortest paths
    std::vector<std::size_t> path;
    std::size_t current = INF;
    for (std::size_t need = best_len; need >= 1; --need) {
        std::size_t pick = INF;
        if (path.empty()) {
            for (std::size_t i = 0; i < k; ++i)
                if (meets_a[i] && dist_b[i] == need && i < pick) pick = i;
        } else {
            for (std::size_t v : adj[current])
                if (dist_b[v] == need && v < pick) pick = v;
        }
        path.push_back(pick);
        current = pick;
        if (need == 1) break;
    }

    Chain chain;
    chain.source = A;
    chain.sink = B;
    for (std::size_t i : path) chain.parts.push_back(family[i]);
    return chain;
}

ChainReport validate_chain(const Chain& chain) {
    ChainReport rep;
    const auto& parts = chain.parts;
    const std::size_t k = parts.size();
    if (k == 0) {
        rep.ok = false;
        rep.violated_condition = 1;
        rep.detail = "empty chain";
        return rep;
    }
    for (std::size_t i = 0; i < k; ++i) {
        const bool meets = sets_intersect(parts[i], chain.source);
        if (meets != (i == 0)) {
            rep.ok = false;
            rep.violated_condition = 1;
            rep.witness_i = static_cast<int>(i);
            rep.detail = meets ? "interior part meets A" : "first part misses A";
            return rep;
        }
    }
    for (std::size_t j = 0; j < k; ++j) {
        const bool meets = sets_intersect(parts[j], chain.sink);
        if (meets != (j == k - 1)) {
            rep.ok = false;
            rep.violated_condition = 2;
            rep.witness_j = static_cast<int>(j);
            rep.detail = meets ? "interior part meets B" : "last part misses B";
            return rep;
        }
    }
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i; j < k; ++j) {
            const bool meets = sets_intersect(parts[i], parts[j]);
            const bool adjacent = (j - i) <= 1;
            if (meets != adjacent) {
                rep.ok = false;
                rep.violated_condition = 3;
                rep.witness_i = static_cast<int>(i);
                rep.witness_j = static_cast<int>(j);
                rep.detail = meets ? "chord between non-consecutive parts"
                                   : "consecutive parts are disjoint";
                return rep;
            }
        }
    }
    return rep;
}

chain_order canonical_compare(const Chain& chain, std::size_t i, std::size_t j) {
    if (i >= chain.size() || j >= chain.size())
        throw error(errc::not_in_chain, "part index outside the chain");
    if (i == j) return chain_order::equal;
    return i < j ? chain_order::less : chain_order::greater;
}

} // namespace peano
