#pragma once

#include <optional>
#include <string>
#include <vector>

#include "graphalg/cycles.hpp"
#include "graphalg/graph.hpp"

namespace graphalg {

enum class AlgebraClassKind { AF, SimpleCycle, StablyCircles, Kirchberg, Mixed };

const char* to_string(AlgebraClassKind k);

/// Building-block classification of a graph algebra. `circleLengths` carries
/// the multiset {|C|} for SimpleCycle/StablyCircles; `simple` reflects the
/// trivial-lattice + condition (L) criterion.
struct AlgebraClass {
    AlgebraClassKind kind = AlgebraClassKind::Mixed;
    std::vector<int> circle_lengths;
    bool simple = false;
};

/// Rendering such as "AF", "Kirchberg", "M_3(C(T))",
/// "M_1(C(T)) (+) M_2(C(T))", "Mixed".
std::string render_class(const AlgebraClass& c);

AlgebraClass classify_graph_algebra(const Graph& g);

/// Sorted circle lengths when `v` is a disjoint union of exitless simple
/// cycles; nullopt when it is not. `v` must be hereditary; if the shape
/// matches but g has sinks the hypothesis is violated and this throws.
std::optional<std::vector<int>> stably_circles_data(const Graph& g, VertexSet v);

/// True iff the saturated hereditary lattice is trivial and condition (L)
/// holds.
bool simplicity(const Graph& g);

} // namespace graphalg
