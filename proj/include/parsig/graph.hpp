#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace parsig {

using Vertex = int;
using VertexMask = std::uint64_t;

inline constexpr int kMaxVertices = 64;

/// Unordered vertex pair stored with u < v.
///
/// Edges order the way graph6 packs its bits: by the larger endpoint first,
/// then by the smaller one, i.e. (0,1) (0,2) (1,2) (0,3) ...
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend bool operator==(const Edge&, const Edge&) = default;
    friend std::strong_ordering operator<=>(const Edge& a, const Edge& b) {
        if (auto c = a.v <=> b.v; c != 0) return c;
        return a.u <=> b.u;
    }
};

/// Simple undirected graph on vertices 0..n-1, n <= 64.
///
/// Adjacency is held as one bit row per vertex; the edge list is kept sorted
/// in graph6 bit order so per-edge data (signs) lines up with the codec.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, const std::vector<Edge>& edges);

    /// Inserts {u,v}. Loops, out-of-range endpoints and duplicates throw InputError.
    void add_edge(Vertex u, Vertex v);

    int order() const { return n_; }
    int size() const { return static_cast<int>(edges_.size()); }

    VertexMask neighbors(Vertex v) const { return rows_[static_cast<std::size_t>(v)]; }
    bool has_edge(Vertex u, Vertex v) const;
    int degree(Vertex v) const;
    VertexMask all_vertices() const;

    const std::vector<Edge>& edges() const { return edges_; }
    /// Position of {u,v} in edges(), or -1.
    int edge_index(Vertex u, Vertex v) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.rows_ == b.rows_;
    }

private:
    int n_ = 0;
    std::vector<VertexMask> rows_;
    std::vector<Edge> edges_;
};

bool is_connected(const Graph& g);
int component_count(const Graph& g);
/// Component id per vertex, ids numbered by smallest member.
std::vector<int> components(const Graph& g);

/// Proper 2-coloring (0/1 per vertex, each component's smallest vertex gets 0),
/// or nullopt when an odd cycle exists.
std::optional<std::vector<int>> is_bipartite(const Graph& g);

bool is_tree(const Graph& g);
/// True when removing {u,v} increases the component count.
bool is_bridge(const Graph& g, Vertex u, Vertex v);

/// Graph with edge {u,v} removed.
Graph without_edge(const Graph& g, Vertex u, Vertex v);

/// Vertices of mask in increasing order.
std::vector<Vertex> mask_vertices(VertexMask mask);

}  // namespace parsig
