#include "graphalg/graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace graphalg {

int analysis_cap() {
    if (const char* env = std::getenv("GRAPHALG_MAX_VERTICES")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1 && v <= kMaxVertices) return static_cast<int>(v);
    }
    return 20;
}

std::string VertexSet::to_string() const {
    std::string out = "{";
    bool first = true;
    for (int v : vertices()) {
        if (!first) out += ",";
        out += std::to_string(v);
        first = false;
    }
    return out + "}";
}

Graph::Graph(int vertex_count, const std::vector<std::pair<int, int>>& edges)
    : vertex_count_(vertex_count) {
    if (vertex_count < 1) throw std::invalid_argument("graph needs at least one vertex");
    if (vertex_count > kMaxVertices)
        throw std::invalid_argument("vertex count exceeds builtin limit of " +
                                    std::to_string(kMaxVertices));
    out_.resize(vertex_count);
    in_.resize(vertex_count);
    edges_.reserve(edges.size());
    for (const auto& [s, r] : edges) {
        if (s < 0 || s >= vertex_count || r < 0 || r >= vertex_count)
            throw std::invalid_argument("edge endpoint out of range");
        int id = static_cast<int>(edges_.size());
        edges_.push_back(Edge{id, s, r});
        out_[s].push_back(id);
        in_[r].push_back(id);
    }
}

Path Path::trivial(int vertex) {
    Path p;
    p.vertex_ = vertex;
    return p;
}

Path Path::of_edges(const Graph& g, const std::vector<int>& edge_ids) {
    if (edge_ids.empty()) throw std::invalid_argument("edge path must be nonempty");
    Path p;
    p.edges_.reserve(edge_ids.size());
    for (int id : edge_ids) {
        if (id < 0 || id >= g.edge_count()) throw std::invalid_argument("unknown edge id");
        const Edge& e = g.edge(id);
        if (!p.edges_.empty() && p.edges_.back().range != e.source)
            throw std::invalid_argument("edges do not compose");
        p.edges_.push_back(e);
    }
    p.vertex_ = p.edges_.front().source;
    return p;
}

std::vector<int> Path::edge_ids() const {
    std::vector<int> ids;
    ids.reserve(edges_.size());
    for (const Edge& e : edges_) ids.push_back(e.id);
    return ids;
}

bool Path::valid_in(const Graph& g) const {
    if (edges_.empty()) return vertex_ >= 0 && vertex_ < g.vertex_count();
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        if (e.id < 0 || e.id >= g.edge_count() || !(g.edge(e.id) == e)) return false;
        if (i > 0 && edges_[i - 1].range != e.source) return false;
    }
    return true;
}

std::string path_to_string(const Path& p) {
    if (p.is_trivial()) return "(" + std::to_string(p.source()) + ")";
    std::string out = std::to_string(p.source());
    for (const Edge& e : p.edges()) {
        out += " -e" + std::to_string(e.id) + "-> " + std::to_string(e.range);
    }
    return out;
}

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    int vertex_count = -1;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> edge_lines;

    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream tok(line);
        std::string word;
        if (!(tok >> word)) continue;
        if (word == "vertices") {
            if (vertex_count != -1) throw ParseError(line_no, "duplicate vertices line");
            long n;
            std::string rest;
            if (!(tok >> n) || (tok >> rest))
                throw ParseError(line_no, "expected `vertices N`");
            if (n < 1) throw ParseError(line_no, "graph needs at least one vertex");
            if (n > kMaxVertices)
                throw ParseError(line_no, "vertex count exceeds builtin limit of " +
                                              std::to_string(kMaxVertices));
            vertex_count = static_cast<int>(n);
        } else if (word == "edge") {
            if (vertex_count == -1)
                throw ParseError(line_no, "`edge` before `vertices`");
            long s, r;
            std::string rest;
            if (!(tok >> s >> r) || (tok >> rest))
                throw ParseError(line_no, "expected `edge S R`");
            if (s < 0 || s >= vertex_count)
                throw ParseError(line_no, "vertex " + std::to_string(s) + " out of range");
            if (r < 0 || r >= vertex_count)
                throw ParseError(line_no, "vertex " + std::to_string(r) + " out of range");
            edges.emplace_back(static_cast<int>(s), static_cast<int>(r));
            edge_lines.push_back(line_no);
        } else {
            throw ParseError(line_no, "unrecognized directive `" + word + "`");
        }
    }
    if (vertex_count == -1) throw ParseError(line_no, "missing `vertices N` line");
    return Graph(vertex_count, edges);
}

std::string render_graph(const Graph& g) {
    std::string out = "vertices " + std::to_string(g.vertex_count()) + "\n";
    for (const Edge& e : g.edges())
        out += "edge " + std::to_string(e.source) + " " + std::to_string(e.range) + "\n";
    return out;
}

VertexSet sinks(const Graph& g) {
    VertexSet s;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.out_edges(v).empty()) s.insert(v);
    return s;
}

namespace {

// Iterative Tarjan; SCCs are completed sinks-first, so reversing the
// completion order yields a topological numbering of the condensation.
struct TarjanState {
    const Graph& g;
    std::vector<int> index, low, stack_pos;
    std::vector<int> stack;
    int next_index = 0;
    std::vector<std::vector<int>> sccs;

    explicit TarjanState(const Graph& g)
        : g(g),
          index(g.vertex_count(), -1),
          low(g.vertex_count(), -1),
          stack_pos(g.vertex_count(), -1) {}

    void run(int root) {
        struct Frame {
            int v;
            std::size_t next_edge;
        };
        std::vector<Frame> frames;
        frames.push_back({root, 0});
        visit(root);
        while (!frames.empty()) {
            Frame& f = frames.back();
            const auto& out = g.out_edges(f.v);
            if (f.next_edge < out.size()) {
                int w = g.edge(out[f.next_edge++]).range;
                if (index[w] == -1) {
                    visit(w);
                    frames.push_back({w, 0});
                } else if (stack_pos[w] != -1) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
            } else {
                if (low[f.v] == index[f.v]) pop_scc(f.v);
                int v = f.v;
                frames.pop_back();
                if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
            }
        }
    }

    void visit(int v) {
        index[v] = low[v] = next_index++;
        stack_pos[v] = static_cast<int>(stack.size());
        stack.push_back(v);
    }

    void pop_scc(int v) {
        std::vector<int> scc(stack.begin() + stack_pos[v], stack.end());
        for (int w : scc) stack_pos[w] = -1;
        stack.resize(stack.size() - scc.size());
        sccs.push_back(std::move(scc));
    }
};

} // namespace

SccResult strongly_connected_components(const Graph& g) {
    TarjanState t(g);
    for (int v = 0; v < g.vertex_count(); ++v)
        if (t.index[v] == -1) t.run(v);
    std::reverse(t.sccs.begin(), t.sccs.end());

    SccResult res;
    res.component_of.assign(g.vertex_count(), -1);
    for (std::size_t c = 0; c < t.sccs.size(); ++c) {
        VertexSet set;
        for (int v : t.sccs[c]) {
            set.insert(v);
            res.component_of[v] = static_cast<int>(c);
        }
        res.components.push_back(set);
    }
    for (const Edge& e : g.edges()) {
        int cu = res.component_of[e.source], cv = res.component_of[e.range];
        if (cu != cv) res.condensation_edges.emplace_back(cu, cv);
    }
    std::sort(res.condensation_edges.begin(), res.condensation_edges.end());
    res.condensation_edges.erase(
        std::unique(res.condensation_edges.begin(), res.condensation_edges.end()),
        res.condensation_edges.end());
    return res;
}

Subgraph subgraph_over(const Graph& g, VertexSet v) {
    if (v.empty()) throw std::invalid_argument("subgraph over empty vertex set");
    std::vector<int> to_parent = v.vertices();
    std::vector<int> to_sub(g.vertex_count(), -1);
    for (std::size_t i = 0; i < to_parent.size(); ++i) to_sub[to_parent[i]] = static_cast<int>(i);

    std::vector<std::pair<int, int>> edges;
    std::vector<int> edge_map;
    for (const Edge& e : g.edges()) {
        if (v.contains(e.source) && v.contains(e.range)) {
            edges.emplace_back(to_sub[e.source], to_sub[e.range]);
            edge_map.push_back(e.id);
        }
    }
    return Subgraph{Graph(static_cast<int>(to_parent.size()), edges), std::move(to_parent),
                    std::move(edge_map)};
}

int Subgraph::sub_vertex_of(int parent_vertex) const {
    for (std::size_t i = 0; i < vertex_to_parent.size(); ++i)
        if (vertex_to_parent[i] == parent_vertex) return static_cast<int>(i);
    return -1;
}

VertexSet Subgraph::to_parent(VertexSet sub) const {
    VertexSet out;
    for (int v : sub.vertices()) out.insert(vertex_to_parent[v]);
    return out;
}

Path Subgraph::path_to_parent(const Graph& parent, const Path& sub_path) const {
    if (sub_path.is_trivial()) return Path::trivial(vertex_to_parent[sub_path.source()]);
    std::vector<int> ids;
    for (const Edge& e : sub_path.edges()) ids.push_back(edge_to_parent[e.id]);
    return Path::of_edges(parent, ids);
}

bool reaches(const Graph& g, VertexSet from, VertexSet to) {
    if (!(from & to).empty()) return true; // length-0 paths count
    VertexSet seen = from;
    std::vector<int> frontier = from.vertices();
    while (!frontier.empty()) {
        int v = frontier.back();
        frontier.pop_back();
        for (int id : g.out_edges(v)) {
            int w = g.edge(id).range;
            if (to.contains(w)) return true;
            if (!seen.contains(w)) {
                seen.insert(w);
                frontier.push_back(w);
            }
        }
    }
    return false;
}

std::optional<Path> find_path(const Graph& g, VertexSet from, VertexSet to) {
    if (from.empty()) return std::nullopt;
    for (int v : from.vertices())
        if (to.contains(v)) return Path::trivial(v);
    // BFS over vertices, expanding edges in id order.
    std::vector<int> via_edge(g.vertex_count(), -1);
    VertexSet seen = from;
    std::vector<int> queue = from.vertices();
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        int v = queue[qi];
        for (int id : g.out_edges(v)) {
            int w = g.edge(id).range;
            if (seen.contains(w)) continue;
            seen.insert(w);
            via_edge[w] = id;
            if (to.contains(w)) {
                std::vector<int> ids;
                int cur = w;
                while (via_edge[cur] != -1) {
                    ids.push_back(via_edge[cur]);
                    cur = g.edge(via_edge[cur]).source;
                }
                std::reverse(ids.begin(), ids.end());
                return Path::of_edges(g, ids);
            }
            queue.push_back(w);
        }
    }
    return std::nullopt;
}

std::vector<Path> enumerate_paths(const Graph& g, int max_len, std::size_t max_paths) {
    std::vector<Path> out;
    for (int v = 0; v < g.vertex_count(); ++v) out.push_back(Path::trivial(v));
    // Level 1 is the edge list itself, already in id (= lexicographic)
    // order; extending lex-sorted levels in edge-id order keeps the order.
    std::vector<Path> level;
    if (max_len >= 1)
        for (const Edge& e : g.edges()) level.push_back(Path::of_edges(g, {e.id}));
    out.insert(out.end(), level.begin(), level.end());
    for (int len = 2; len <= max_len && !level.empty(); ++len) {
        std::vector<Path> next;
        for (const Path& p : level) {
            for (int id : g.out_edges(p.range())) {
                std::vector<int> ids = p.edge_ids();
                ids.push_back(id);
                next.push_back(Path::of_edges(g, ids));
                if (out.size() + next.size() > max_paths)
                    throw CapError("path enumeration exceeded " + std::to_string(max_paths) +
                                   " paths");
            }
        }
        out.insert(out.end(), next.begin(), next.end());
        level = std::move(next);
    }
    return out;
}

} // namespace graphalg
