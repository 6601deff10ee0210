#pragma once

#include <vector>

#include "graphalg/graph.hpp"

namespace graphalg {

/// All saturated hereditary vertex sets of a graph, sorted by cardinality
/// then bitmask value. Always contains the empty set and the full set, and
/// is closed under intersection.
struct SatHerLattice {
    std::vector<VertexSet> elements;
    std::vector<std::pair<int, int>> covering; // (lower, upper) element indices

    int index_of(VertexSet v) const;
    /// Elements other than the empty and full set.
    std::vector<VertexSet> nontrivial(const Graph& g) const;
};

/// V is hereditary iff every edge leaving V's sources lands back in V.
bool is_hereditary(const Graph& g, VertexSet v);

/// V is saturated iff it contains every vertex whose (nonempty) out-edge set
/// ranges entirely into V.
bool is_saturated(const Graph& g, VertexSet v);

/// Smallest hereditary superset: everything forward-reachable from v.
VertexSet hereditary_closure(const Graph& g, VertexSet v);

/// Smallest saturated superset, by fixpoint iteration.
VertexSet saturation(const Graph& g, VertexSet v);

/// Path-based saturation formula for finite graphs without sinks:
///   { w : exists n <= |E0| with r(mu) in v for every length-n path mu from w }.
/// Always a subset of saturation(g, v); equal to it when v is hereditary.
/// Throws std::invalid_argument if g has sinks.
VertexSet saturation_formula(const Graph& g, VertexSet v);

/// Smallest saturated hereditary superset.
VertexSet sat_her_closure(const Graph& g, VertexSet v);

/// Enumerates the full lattice over the 2^n subsets. Throws CapError when
/// the vertex count exceeds `cap` (default: analysis_cap()).
SatHerLattice enumerate_sat_her(const Graph& g, int cap = -1);

/// Element list only (no covering relation); used where only membership and
/// iteration order matter.
std::vector<VertexSet> sat_her_elements(const Graph& g, int cap = -1);

} // namespace graphalg
