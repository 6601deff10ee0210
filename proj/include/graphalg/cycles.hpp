#pragma once

#include <optional>
#include <vector>

#include "graphalg/graph.hpp"

namespace graphalg {

enum class CycleClassKind { NoCycle, CycleWithoutExit, CycleWithExit };

const char* to_string(CycleClassKind k);

/// Cycle/exit classification of a graph, with a witnessing cycle when one
/// exists. For CycleWithExit the witness is a cycle that has an exit; for
/// CycleWithoutExit it is an exitless cycle.
struct CycleClass {
    CycleClassKind kind = CycleClassKind::NoCycle;
    std::optional<Path> witness;
};

/// One exitless simple cycle: its vertex set and length.
struct CircleComponent {
    VertexSet vertices;
    int length = 0;

    bool operator==(const CircleComponent&) const = default;
};

/// Disjoint family of exitless simple cycles, ordered by component index.
using CycleFamily = std::vector<CircleComponent>;

/// Some cycle of g, if any exists. Found per SCC in topological order, so
/// the result is deterministic.
std::optional<Path> has_cycle(const Graph& g);

/// A deterministic cycle through `v` inside its own SCC, if `v` lies on one.
std::optional<Path> cycle_through(const Graph& g, int v);

/// An exit of `cycle`: an edge sharing a source with some cycle edge but
/// distinct from it. Throws std::invalid_argument if `cycle` is not a cycle
/// of g.
std::optional<Edge> cycle_has_exit(const Graph& g, const Path& cycle);

/// Nonempty iff g's edge set is exactly one cycle visiting each vertex once.
/// The witness starts at vertex 0.
std::optional<Path> is_simple_cycle_graph(const Graph& g);

/// Classifies g; a cycle with an exit dominates.
CycleClass classify_cycles(const Graph& g);

/// Condition (L): every cycle of g has an exit.
bool has_condition_L(const Graph& g);

/// Condition (K): no vertex lies on exactly one first-return path.
bool has_condition_K(const Graph& g);

/// Number of first-return paths based at `v`, saturated at 2.
int first_return_path_count(const Graph& g, int v);

/// The vertex sets of g's exitless cycles (each induces a simple cycle and
/// emits no other edge), in SCC order.
CycleFamily cycles_without_exit_family(const Graph& g);

} // namespace graphalg
