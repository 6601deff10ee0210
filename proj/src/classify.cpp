#include "graphalg/classify.hpp"

#include <algorithm>

#include "graphalg/closure.hpp"

namespace graphalg {

const char* to_string(AlgebraClassKind k) {
    switch (k) {
        case AlgebraClassKind::AF: return "AF";
        case AlgebraClassKind::SimpleCycle: return "SimpleCycle";
        case AlgebraClassKind::StablyCircles: return "StablyCircles";
        case AlgebraClassKind::Kirchberg: return "Kirchberg";
        case AlgebraClassKind::Mixed: return "Mixed";
    }
    return "?";
}

std::string render_class(const AlgebraClass& c) {
    switch (c.kind) {
        case AlgebraClassKind::AF: return "AF";
        case AlgebraClassKind::Kirchberg: return "Kirchberg";
        case AlgebraClassKind::Mixed: return "Mixed";
        case AlgebraClassKind::SimpleCycle:
        case AlgebraClassKind::StablyCircles: {
            std::string out;
            for (std::size_t i = 0; i < c.circle_lengths.size(); ++i) {
                if (i > 0) out += " (+) ";
                out += "M_" + std::to_string(c.circle_lengths[i]) + "(C(T))";
            }
            return out;
        }
    }
    return "?";
}

std::optional<std::vector<int>> stably_circles_data(const Graph& g, VertexSet v) {
    if (!is_hereditary(g, v))
        throw std::invalid_argument("stably_circles_data requires a hereditary set");
    // Shape check first: v splits into exitless simple cycles iff every
    // member emits exactly one edge and following those edges never leaves
    // a cycle.
    for (int w : v.vertices())
        if (g.out_degree(w) != 1) return std::nullopt;
    std::vector<int> lengths;
    VertexSet unseen = v;
    while (!unseen.empty()) {
        int start = unseen.vertices().front();
        VertexSet orbit;
        int cur = start;
        while (!orbit.contains(cur)) {
            orbit.insert(cur);
            cur = g.edge(g.out_edges(cur).front()).range;
        }
        if (cur != start) return std::nullopt; // rho-shaped tail, not a pure cycle
        lengths.push_back(orbit.count());
        unseen = unseen.minus(orbit);
    }
    if (!has_no_sinks(g))
        throw std::invalid_argument("stably_circles_data requires a graph without sinks");
    std::sort(lengths.begin(), lengths.end());
    return lengths;
}

bool simplicity(const Graph& g) {
    return sat_her_elements(g).size() == 2 && has_condition_L(g);
}

AlgebraClass classify_graph_algebra(const Graph& g) {
    AlgebraClass out;
    out.simple = simplicity(g);

    if (!has_cycle(g)) {
        out.kind = AlgebraClassKind::AF;
        return out;
    }
    SccResult sccs = strongly_connected_components(g);
    if (sccs.strongly_connected() && has_no_sinks(g) && g.edge_count() >= 1 &&
        !is_simple_cycle_graph(g)) {
        out.kind = AlgebraClassKind::Kirchberg;
        return out;
    }
    if (auto cycle = is_simple_cycle_graph(g)) {
        out.kind = AlgebraClassKind::SimpleCycle;
        out.circle_lengths = {cycle->length()};
        return out;
    }
    CycleFamily family = cycles_without_exit_family(g);
    if (!family.empty()) {
        VertexSet circle_union;
        for (const CircleComponent& c : family) circle_union = circle_union | c.vertices;
        bool covers_all_cycles = classify_cycles(g).kind == CycleClassKind::CycleWithoutExit;
        if (covers_all_cycles && saturation(g, circle_union) == g.all_vertices()) {
            out.kind = AlgebraClassKind::StablyCircles;
            for (const CircleComponent& c : family) out.circle_lengths.push_back(c.length);
            std::sort(out.circle_lengths.begin(), out.circle_lengths.end());
            return out;
        }
    }
    out.kind = AlgebraClassKind::Mixed;
    return out;
}

} // namespace graphalg
