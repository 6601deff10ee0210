#include "graphalg/cycles.hpp"

#include <algorithm>

namespace graphalg {

const char* to_string(CycleClassKind k) {
    switch (k) {
        case CycleClassKind::NoCycle: return "NoCycle";
        case CycleClassKind::CycleWithoutExit: return "CycleWithoutExit";
        case CycleClassKind::CycleWithExit: return "CycleWithExit";
    }
    return "?";
}

namespace {

bool scc_has_cycle(const Graph& g, VertexSet scc) {
    if (scc.count() >= 2) return true;
    int v = scc.vertices().front();
    for (int id : g.out_edges(v))
        if (g.edge(id).range == v) return true;
    return false;
}

// Exitless cycles are exactly the SCCs inducing a simple cycle whose
// vertices emit nothing else (an exit may leave the SCC, so the ambient
// out-degree check matters).
bool scc_is_exitless_cycle(const Graph& g, VertexSet scc) {
    for (int v : scc.vertices())
        if (g.out_degree(v) != 1) return false;
    Subgraph sub = subgraph_over(g, scc);
    return is_simple_cycle_graph(sub.graph).has_value();
}

} // namespace

std::optional<Path> cycle_through(const Graph& g, int v) {
    // Self-loop first; otherwise BFS within the SCC back to v.
    for (int id : g.out_edges(v))
        if (g.edge(id).range == v) return Path::of_edges(g, {id});
    SccResult sccs = strongly_connected_components(g);
    VertexSet scc = sccs.components[sccs.component_of[v]];
    std::vector<int> via_edge(g.vertex_count(), -1);
    VertexSet seen = VertexSet::single(v);
    std::vector<int> queue{v};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        int u = queue[qi];
        for (int id : g.out_edges(u)) {
            int w = g.edge(id).range;
            if (!scc.contains(w)) continue;
            if (w == v) {
                std::vector<int> ids{id};
                int cur = u;
                while (cur != v) {
                    ids.push_back(via_edge[cur]);
                    cur = g.edge(via_edge[cur]).source;
                }
                std::reverse(ids.begin(), ids.end());
                return Path::of_edges(g, ids);
            }
            if (!seen.contains(w)) {
                seen.insert(w);
                via_edge[w] = id;
                queue.push_back(w);
            }
        }
    }
    return std::nullopt;
}

std::optional<Path> has_cycle(const Graph& g) {
    SccResult sccs = strongly_connected_components(g);
    for (const VertexSet& scc : sccs.components) {
        if (!scc_has_cycle(g, scc)) continue;
        return cycle_through(g, scc.vertices().front());
    }
    return std::nullopt;
}

std::optional<Edge> cycle_has_exit(const Graph& g, const Path& cycle) {
    if (!cycle.valid_in(g) || !cycle.is_cycle())
        throw std::invalid_argument("cycle_has_exit requires a cycle of the graph");
    for (const Edge& ce : cycle.edges()) {
        for (int id : g.out_edges(ce.source))
            if (id != ce.id) return g.edge(id);
    }
    return std::nullopt;
}

std::optional<Path> is_simple_cycle_graph(const Graph& g) {
    int n = g.vertex_count();
    if (g.edge_count() != n) return std::nullopt;
    for (int v = 0; v < n; ++v)
        if (g.out_degree(v) != 1 || g.in_edges(v).size() != 1) return std::nullopt;
    // The graph is a permutation of its vertices; it is one cycle iff the
    // orbit of vertex 0 first returns after exactly n steps.
    std::vector<int> ids;
    int cur = 0;
    for (int step = 0; step < n; ++step) {
        int id = g.out_edges(cur).front();
        ids.push_back(id);
        cur = g.edge(id).range;
        if (cur == 0 && step + 1 < n) return std::nullopt;
    }
    if (cur != 0) return std::nullopt;
    return Path::of_edges(g, ids);
}

CycleFamily cycles_without_exit_family(const Graph& g) {
    CycleFamily family;
    SccResult sccs = strongly_connected_components(g);
    for (const VertexSet& scc : sccs.components)
        if (scc_has_cycle(g, scc) && scc_is_exitless_cycle(g, scc))
            family.push_back(CircleComponent{scc, scc.count()});
    std::sort(family.begin(), family.end(), [](const CircleComponent& a, const CircleComponent& b) {
        return set_order(a.vertices, b.vertices);
    });
    return family;
}

CycleClass classify_cycles(const Graph& g) {
    SccResult sccs = strongly_connected_components(g);
    bool any_cycle = false;
    std::vector<VertexSet> with_exit, exitless;
    for (const VertexSet& scc : sccs.components) {
        if (!scc_has_cycle(g, scc)) continue;
        any_cycle = true;
        (scc_is_exitless_cycle(g, scc) ? exitless : with_exit).push_back(scc);
    }
    if (!any_cycle) return CycleClass{CycleClassKind::NoCycle, std::nullopt};
    if (!with_exit.empty()) {
        VertexSet scc = *std::min_element(with_exit.begin(), with_exit.end(), set_order);
        Subgraph sub = subgraph_over(g, scc);
        std::optional<Path> witness;
        if (auto simple = is_simple_cycle_graph(sub.graph)) {
            // Simple cycle whose exit leaves the SCC.
            witness = sub.path_to_parent(g, *simple);
        } else {
            // Some vertex has two internal out-edges; a cycle through it has
            // an exit there.
            for (int v : scc.vertices()) {
                int internal = 0;
                for (int id : g.out_edges(v))
                    if (scc.contains(g.edge(id).range)) ++internal;
                if (internal >= 2) {
                    witness = cycle_through(g, v);
                    break;
                }
            }
        }
        return CycleClass{CycleClassKind::CycleWithExit, witness};
    }
    VertexSet scc = *std::min_element(exitless.begin(), exitless.end(), set_order);
    Subgraph sub = subgraph_over(g, scc);
    Path witness = sub.path_to_parent(g, *is_simple_cycle_graph(sub.graph));
    return CycleClass{CycleClassKind::CycleWithoutExit, witness};
}

bool has_condition_L(const Graph& g) {
    SccResult sccs = strongly_connected_components(g);
    for (const VertexSet& scc : sccs.components)
        if (scc_has_cycle(g, scc) && scc_is_exitless_cycle(g, scc)) return false;
    return true;
}

int first_return_path_count(const Graph& g, int v) {
    SccResult sccs = strongly_connected_components(g);
    VertexSet scc = sccs.components[sccs.component_of[v]];
    // First-return paths stay inside the SCC and avoid v internally. Count
    // walks v -> v through the region R = scc \ {v}, saturating at 2; the
    // count is infinite iff a cycle inside R lies on such a walk.
    VertexSet region = scc.minus(VertexSet::single(v));

    VertexSet forward; // region vertices reachable from v without revisiting v
    {
        std::vector<int> stack;
        for (int id : g.out_edges(v)) {
            int w = g.edge(id).range;
            if (region.contains(w) && !forward.contains(w)) {
                forward.insert(w);
                stack.push_back(w);
            }
        }
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int id : g.out_edges(u)) {
                int w = g.edge(id).range;
                if (region.contains(w) && !forward.contains(w)) {
                    forward.insert(w);
                    stack.push_back(w);
                }
            }
        }
    }
    VertexSet backward; // region vertices with a region-internal path to v
    {
        std::vector<int> stack;
        for (int id : g.in_edges(v)) {
            int w = g.edge(id).source;
            if (region.contains(w) && !backward.contains(w)) {
                backward.insert(w);
                stack.push_back(w);
            }
        }
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int id : g.in_edges(u)) {
                int w = g.edge(id).source;
                if (region.contains(w) && !backward.contains(w)) {
                    backward.insert(w);
                    stack.push_back(w);
                }
            }
        }
    }
    VertexSet relevant = forward & backward;

    // Reverse topological order of the region; if the region has a cycle,
    // walks can be pumped through it, so the count is infinite.
    std::vector<int> order;
    if (!relevant.empty()) {
        Subgraph sub = subgraph_over(g, relevant);
        SccResult inner = strongly_connected_components(sub.graph);
        for (const VertexSet& c : inner.components)
            if (scc_has_cycle(sub.graph, c)) return 2;
        for (int c = static_cast<int>(inner.components.size()) - 1; c >= 0; --c)
            order.push_back(sub.vertex_to_parent[inner.components[c].vertices().front()]);
    }

    // Acyclic region: count walks by DP, saturating at 2.
    std::vector<int> ways(g.vertex_count(), 0);
    auto walks_from_edge = [&](int id) -> int {
        int w = g.edge(id).range;
        if (w == v) return 1;
        if (relevant.contains(w)) return ways[w];
        return 0;
    };
    for (int u : order) {
        int total = 0;
        for (int id : g.out_edges(u)) {
            total += walks_from_edge(id);
            if (total >= 2) break;
        }
        ways[u] = std::min(total, 2);
    }
    int total = 0;
    for (int id : g.out_edges(v)) {
        total += walks_from_edge(id);
        if (total >= 2) break;
    }
    return std::min(total, 2);
}

bool has_condition_K(const Graph& g) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (first_return_path_count(g, v) == 1) return false;
    return true;
}

} // namespace graphalg
