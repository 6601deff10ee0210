#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "graphalg/cycles.hpp"
#include "graphalg/graph.hpp"

namespace graphalg {

/// A certified V0 | V1 | V2 decomposition together with the circle family
/// inside V0. All five condition flags are true by construction.
struct Decomposition {
    VertexSet v0, v1, v2;
    CycleFamily circles;
    std::array<bool, 5> conditions_checked{};
};

/// First violated condition (1-based) with a concrete witness.
struct GateFailure {
    int condition = 0;
    std::string witness;
};

using CheckResult = std::variant<Decomposition, GateFailure>;

/// Verdict of the decomposition search. When covered, the ideal is
/// C*(E_2) (x) K and the quotient space is a disjoint union of
/// `quotient_circles` circles.
struct GateVerdict {
    bool covered = false;
    std::optional<Decomposition> decomposition;
    std::string ideal_class;
    int quotient_circles = 0;
    std::optional<GateFailure> failure;
};

/// Elements of the family F ending at one vertex of V2: the trivial path at
/// the vertex, then paths whose final edge enters V2 from outside.
struct StabilityWitness {
    int vertex = -1;
    std::vector<Path> paths;
    int requested_count = 0;
};

/// Checks the five conditions in order against the given tripartition.
/// (1) V0 is the saturation, inside its own subgraph, of a nonempty family
///     of exitless simple cycles;
/// (2) the subgraph over V1 is acyclic;
/// (3) the subgraph over V2 is strongly connected, has an edge, and is not
///     a simple cycle;
/// (4) no path runs from a higher part into a lower one;
/// (5) every vertex of V0 and V1 has a path into V2.
/// Throws std::invalid_argument if the sets do not partition the vertices.
CheckResult check_conditions(const Graph& g, VertexSet v0, VertexSet v1, VertexSet v2);

/// Searches saturated hereditary subsets W in (cardinality, bitmask) order,
/// splitting each into cycle vertices (V2) and the rest (V1). Returns the
/// first certified decomposition, or covered=false with the failure of the
/// best candidate (most conditions passed).
GateVerdict decompose(const Graph& g, int cap = -1);

/// Same search over a precomputed candidate list (must be the saturated
/// hereditary sets of g in (cardinality, bitmask) order).
GateVerdict decompose_with_candidates(const Graph& g, const std::vector<VertexSet>& candidates);

/// Exhaustive oracle over all 3^n ordered tripartitions. Requires n <= 6.
GateVerdict brute_decompose(const Graph& g);

/// Produces `count` distinct members of F ending at `vertex`, in order of
/// length then lexicographic edge ids. The first is the trivial path.
/// Throws std::invalid_argument if vertex is not in V2, if `d` does not
/// certify for g, or if the family is finite and smaller than `count`.
StabilityWitness stability_witness(const Graph& g, const Decomposition& d, int vertex, int count);

} // namespace graphalg
