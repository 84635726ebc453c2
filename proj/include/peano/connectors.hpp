#pragma once

#include "peano/continuum.hpp"

#include <optional>
#include <string>
#include <vector>

namespace peano {

/// An ordered minimal (A,B)-connector. The list order is the canonical one:
/// A meets exactly the first part, B exactly the last, and two parts
/// intersect iff they are list-adjacent.
struct Chain {
    std::vector<cell_set> parts;
    cell_set source; // A
    cell_set sink;   // B

    std::size_t size() const { return parts.size(); }
};

struct ChainReport {
    bool ok = true;
    int violated_condition = 0; // 1, 2 or 3 per the chain definition; 0 when ok
    int witness_i = -1;
    int witness_j = -1;
    std::string detail;
};

/// Extract the unique chain of a minimal (A,B)-connector contained in
/// `family`: shortest path from A to B in the intersection graph of the
/// sets, ties broken toward the lexicographically smallest index sequence.
/// Throws NotAConnector (A/B empty, overlapping, or never met) or NoPath
/// (family does not link A to B).
Chain minimal_connector(const std::vector<cell_set>& family, const cell_set& A,
                        const cell_set& B);

/// Check the three chain conditions; reports the first violation with
/// witnessing indices instead of throwing.
ChainReport validate_chain(const Chain& chain);

enum class chain_order { less, equal, greater };

/// Compare two parts (by index) in the chain's canonical order.
/// Throws NotInChain when an index is out of range.
chain_order canonical_compare(const Chain& chain, std::size_t i, std::size_t j);

} // namespace peano
