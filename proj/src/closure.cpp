#include "graphalg/closure.hpp"

#include <algorithm>

namespace graphalg {

int SatHerLattice::index_of(VertexSet v) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), v, set_order);
    if (it != elements.end() && *it == v) return static_cast<int>(it - elements.begin());
    return -1;
}

std::vector<VertexSet> SatHerLattice::nontrivial(const Graph& g) const {
    std::vector<VertexSet> out;
    for (const VertexSet& v : elements)
        if (!v.empty() && v != g.all_vertices()) out.push_back(v);
    return out;
}

bool is_hereditary(const Graph& g, VertexSet v) {
    for (const Edge& e : g.edges())
        if (v.contains(e.source) && !v.contains(e.range)) return false;
    return true;
}

bool is_saturated(const Graph& g, VertexSet v) {
    for (int w = 0; w < g.vertex_count(); ++w) {
        if (v.contains(w) || g.out_edges(w).empty()) continue;
        bool all_in = true;
        for (int id : g.out_edges(w))
            if (!v.contains(g.edge(id).range)) {
                all_in = false;
                break;
            }
        if (all_in) return false;
    }
    return true;
}

VertexSet hereditary_closure(const Graph& g, VertexSet v) {
    VertexSet closed = v;
    std::vector<int> frontier = v.vertices();
    while (!frontier.empty()) {
        int u = frontier.back();
        frontier.pop_back();
        for (int id : g.out_edges(u)) {
            int w = g.edge(id).range;
            if (!closed.contains(w)) {
                closed.insert(w);
                frontier.push_back(w);
            }
        }
    }
    return closed;
}

VertexSet saturation(const Graph& g, VertexSet v) {
    VertexSet cur = v;
    bool grew = true;
    while (grew) {
        grew = false;
        for (int w = 0; w < g.vertex_count(); ++w) {
            if (cur.contains(w) || g.out_edges(w).empty()) continue;
            bool all_in = true;
            for (int id : g.out_edges(w))
                if (!cur.contains(g.edge(id).range)) {
                    all_in = false;
                    break;
                }
            if (all_in) {
                cur.insert(w);
                grew = true;
            }
        }
    }
    return cur;
}

VertexSet saturation_formula(const Graph& g, VertexSet v) {
    if (!has_no_sinks(g))
        throw std::invalid_argument("saturation formula requires a graph without sinks");
    // S_0 = v; S_{n+1} = { w : every out-edge of w ranges into S_n }.
    // S_n is exactly the set of w whose length-n paths all end in v, so the
    // formula set is the union over n. For hereditary v the chain is
    // monotone, so n <= |E0| reaches the fixpoint; in general the truncated
    // union still sits inside the saturation.
    VertexSet level = v;
    VertexSet accum = v;
    for (int n = 1; n <= g.vertex_count(); ++n) {
        VertexSet next;
        for (int w = 0; w < g.vertex_count(); ++w) {
            bool all_in = true;
            for (int id : g.out_edges(w))
                if (!level.contains(g.edge(id).range)) {
                    all_in = false;
                    break;
                }
            if (all_in) next.insert(w);
        }
        level = next;
        accum = accum | next;
    }
    return accum;
}

VertexSet sat_her_closure(const Graph& g, VertexSet v) {
    return saturation(g, hereditary_closure(g, v));
}

namespace {

int effective_cap(int cap) { return cap < 0 ? analysis_cap() : cap; }

void check_cap(const Graph& g, int cap) {
    if (g.vertex_count() > cap)
        throw CapError("graph has " + std::to_string(g.vertex_count()) +
                       " vertices; lattice enumeration is capped at " + std::to_string(cap) +
                       " (set GRAPHALG_MAX_VERTICES to override)");
}

} // namespace

std::vector<VertexSet> sat_her_elements(const Graph& g, int cap) {
    check_cap(g, effective_cap(cap));
    std::vector<VertexSet> out;
    std::uint64_t total = std::uint64_t{1} << g.vertex_count();
    for (std::uint64_t bits = 0; bits < total; ++bits) {
        VertexSet v = VertexSet::from_bits(bits);
        if (is_hereditary(g, v) && is_saturated(g, v)) out.push_back(v);
    }
    std::sort(out.begin(), out.end(), set_order);
    return out;
}

SatHerLattice enumerate_sat_her(const Graph& g, int cap) {
    SatHerLattice lat;
    lat.elements = sat_her_elements(g, cap);
    std::size_t n = lat.elements.size();
    if (n > 20000)
        throw CapError("lattice has " + std::to_string(n) +
                       " elements; covering relation computation refused");
    // Pairwise inclusion filtering; elements are sorted by cardinality, so
    // only strictly smaller-index elements can sit between.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (!lat.elements[i].is_proper_subset_of(lat.elements[j])) continue;
            bool covered = true;
            for (std::size_t k = i + 1; k < j && covered; ++k) {
                if (lat.elements[i].is_proper_subset_of(lat.elements[k]) &&
                    lat.elements[k].is_proper_subset_of(lat.elements[j]))
                    covered = false;
            }
            if (covered) lat.covering.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    }
    return lat;
}

} // namespace graphalg
