#include "parsig/graph.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "parsig/errors.hpp"

namespace parsig {

namespace {

VertexMask bit(Vertex v) { return VertexMask{1} << v; }

}  // namespace

Graph::Graph(int n) : n_(n) {
    if (n < 0 || n > kMaxVertices) {
        throw InputError("vertex count " + std::to_string(n) + " outside 0.." +
                         std::to_string(kMaxVertices));
    }
    rows_.assign(static_cast<std::size_t>(n), 0);
}

Graph::Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
    for (const Edge& e : edges) add_edge(e.u, e.v);
}

void Graph::add_edge(Vertex u, Vertex v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) {
        throw InputError("edge {" + std::to_string(u) + "," + std::to_string(v) +
                         "} has an endpoint outside 0.." + std::to_string(n_ - 1));
    }
    if (u == v) throw InputError("loop at vertex " + std::to_string(u));
    if (has_edge(u, v)) {
        throw InputError("parallel edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    }
    rows_[static_cast<std::size_t>(u)] |= bit(v);
    rows_[static_cast<std::size_t>(v)] |= bit(u);
    const Edge e(u, v);
    edges_.insert(std::lower_bound(edges_.begin(), edges_.end(), e), e);
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
    return (rows_[static_cast<std::size_t>(u)] & bit(v)) != 0;
}

int Graph::degree(Vertex v) const { return std::popcount(neighbors(v)); }

VertexMask Graph::all_vertices() const {
    return n_ == kMaxVertices ? ~VertexMask{0} : (VertexMask{1} << n_) - 1;
}

int Graph::edge_index(Vertex u, Vertex v) const {
    if (!has_edge(u, v)) return -1;
    const Edge e(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    return static_cast<int>(it - edges_.begin());
}

std::vector<int> components(const Graph& g) {
    std::vector<int> comp(static_cast<std::size_t>(g.order()), -1);
    int next = 0;
    for (Vertex s = 0; s < g.order(); ++s) {
        if (comp[static_cast<std::size_t>(s)] >= 0) continue;
        VertexMask seen = bit(s);
        VertexMask frontier = seen;
        while (frontier) {
            VertexMask grown = 0;
            for (Vertex v : mask_vertices(frontier)) grown |= g.neighbors(v);
            frontier = grown & ~seen;
            seen |= grown;
        }
        for (Vertex v : mask_vertices(seen)) comp[static_cast<std::size_t>(v)] = next;
        ++next;
    }
    return comp;
}

int component_count(const Graph& g) {
    const auto comp = components(g);
    return comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
}

bool is_connected(const Graph& g) { return g.order() <= 1 || component_count(g) == 1; }

std::optional<std::vector<int>> is_bipartite(const Graph& g) {
    std::vector<int> color(static_cast<std::size_t>(g.order()), -1);
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < g.order(); ++s) {
        if (color[static_cast<std::size_t>(s)] >= 0) continue;
        color[static_cast<std::size_t>(s)] = 0;
        stack.push_back(s);
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            const int cv = color[static_cast<std::size_t>(v)];
            for (Vertex w : mask_vertices(g.neighbors(v))) {
                int& cw = color[static_cast<std::size_t>(w)];
                if (cw < 0) {
                    cw = 1 - cv;
                    stack.push_back(w);
                } else if (cw == cv) {
                    return std::nullopt;
                }
            }
        }
    }
    return color;
}

bool is_tree(const Graph& g) {
    return g.order() >= 1 && g.size() == g.order() - 1 && is_connected(g);
}

Graph without_edge(const Graph& g, Vertex u, Vertex v) {
    Graph out(g.order());
    for (const Edge& e : g.edges()) {
        if (e != Edge(u, v)) out.add_edge(e.u, e.v);
    }
    return out;
}

bool is_bridge(const Graph& g, Vertex u, Vertex v) {
    if (!g.has_edge(u, v)) return false;
    return component_count(without_edge(g, u, v)) > component_count(g);
}

std::vector<Vertex> mask_vertices(VertexMask mask) {
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(std::popcount(mask)));
    while (mask) {
        out.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return out;
}

}  // namespace parsig
