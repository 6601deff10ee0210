#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "graphalg/errors.hpp"

namespace graphalg {

// Vertices are dense indices 0..n-1. Sets of vertices fit in one word; the
// analysis cap (default 20, override via GRAPHALG_MAX_VERTICES) is far below
// the hard limit of 64.
inline constexpr int kMaxVertices = 64;

/// Returns the analysis cap: GRAPHALG_MAX_VERTICES if set, else 20.
int analysis_cap();

/// Subset of the vertices of a fixed graph, as a bitmask.
class VertexSet {
public:
    VertexSet() = default;

    static VertexSet from_bits(std::uint64_t bits) { return VertexSet(bits); }
    static VertexSet full(int n) {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
    }
    static VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }
    static VertexSet of(std::initializer_list<int> vs) {
        VertexSet s;
        for (int v : vs) s.insert(v);
        return s;
    }

    bool contains(int v) const { return (bits_ >> v) & 1; }
    void insert(int v) { bits_ |= std::uint64_t{1} << v; }
    void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }

    bool empty() const { return bits_ == 0; }
    int count() const { return __builtin_popcountll(bits_); }
    std::uint64_t bits() const { return bits_; }

    bool is_subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
    bool is_proper_subset_of(VertexSet o) const { return is_subset_of(o) && bits_ != o.bits_; }

    VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
    VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
    VertexSet minus(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }

    bool operator==(const VertexSet&) const = default;

    /// Members in increasing order.
    std::vector<int> vertices() const {
        std::vector<int> out;
        for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(__builtin_ctzll(b));
        return out;
    }

    std::string to_string() const;

private:
    explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
    std::uint64_t bits_ = 0;
};

/// Order used everywhere sets are listed: cardinality first, then bitmask value.
inline bool set_order(VertexSet a, VertexSet b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return a.bits() < b.bits();
}

/// One directed edge; parallel edges are distinct values with distinct ids.
struct Edge {
    int id;
    int source;
    int range;

    bool operator==(const Edge&) const = default;
};

/// Finite directed multigraph, immutable after construction.
class Graph {
public:
    Graph(int vertex_count, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return vertex_count_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int id) const { return edges_[id]; }

    /// Edge ids leaving `v`, in increasing id order.
    const std::vector<int>& out_edges(int v) const { return out_[v]; }
    /// Edge ids entering `v`, in increasing id order.
    const std::vector<int>& in_edges(int v) const { return in_[v]; }
    int out_degree(int v) const { return static_cast<int>(out_[v].size()); }

    VertexSet all_vertices() const { return VertexSet::full(vertex_count_); }

private:
    int vertex_count_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> out_;
    std::vector<std::vector<int>> in_;
};

/// Path in a graph: either a single vertex (length 0) or a composable
/// nonempty edge sequence with r(e_i) = s(e_{i+1}).
class Path {
public:
    static Path trivial(int vertex);
    /// Builds from edge ids of `g`; throws std::invalid_argument if they do
    /// not compose.
    static Path of_edges(const Graph& g, const std::vector<int>& edge_ids);

    int length() const { return static_cast<int>(edges_.size()); }
    bool is_trivial() const { return edges_.empty(); }
    int source() const { return edges_.empty() ? vertex_ : edges_.front().source; }
    int range() const { return edges_.empty() ? vertex_ : edges_.back().range; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::vector<int> edge_ids() const;

    bool is_cycle() const { return !edges_.empty() && source() == range(); }

    /// True if every edge matches `g` and consecutive edges compose.
    bool valid_in(const Graph& g) const;

    bool operator==(const Path&) const = default;

private:
    int vertex_ = -1;
    std::vector<Edge> edges_;
};

std::string path_to_string(const Path& p);

/// Strongly connected components, numbered in topological order of the
/// condensation (every condensation edge goes from lower to higher index).
struct SccResult {
    std::vector<int> component_of;
    std::vector<VertexSet> components;
    std::vector<std::pair<int, int>> condensation_edges;

    bool strongly_connected() const { return components.size() == 1; }
};

/// Subgraph over a vertex set, with maps back to the parent graph.
struct Subgraph {
    Graph graph;
    std::vector<int> vertex_to_parent;
    std::vector<int> edge_to_parent;

    int sub_vertex_of(int parent_vertex) const;
    VertexSet to_parent(VertexSet sub) const;
    Path path_to_parent(const Graph& parent, const Path& sub_path) const;
};

/// Parses the graph file format: `vertices N`, then `edge S R` lines.
/// `#` starts a comment. Throws ParseError with a 1-based line number.
Graph parse_graph(const std::string& text);

/// Canonical text rendering; parse(render(g)) reproduces g exactly.
std::string render_graph(const Graph& g);

/// Vertices emitting no edge.
VertexSet sinks(const Graph& g);
inline bool has_no_sinks(const Graph& g) { return sinks(g).empty(); }

SccResult strongly_connected_components(const Graph& g);

/// Subgraph over `v` (edges with both endpoints in `v`). `v` must be nonempty.
Subgraph subgraph_over(const Graph& g, VertexSet v);

/// True iff some path (length 0 allowed) starts in `from` and ends in `to`.
bool reaches(const Graph& g, VertexSet from, VertexSet to);

/// Shortest witnessing path for reaches(), if any. Deterministic.
std::optional<Path> find_path(const Graph& g, VertexSet from, VertexSet to);

/// All paths of length <= max_len, ordered by length then lexicographically
/// by edge ids. Guarded against runaway growth.
std::vector<Path> enumerate_paths(const Graph& g, int max_len,
                                  std::size_t max_paths = std::size_t{1} << 22);

} // namespace graphalg
