#include "parsig/signs.hpp"

#include <algorithm>
#include <bit>
#include <charconv>

#include "parsig/errors.hpp"

namespace parsig {

Labeling::Labeling(std::vector<int> labels) : labels_(std::move(labels)) {
    const int n = order();
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    for (std::size_t v = 0; v < labels_.size(); ++v) {
        const int l = labels_[v];
        if (l < 1 || l > n) {
            throw InputError("label " + std::to_string(l) + " on vertex " + std::to_string(v) +
                             " outside 1.." + std::to_string(n));
        }
        if (used[static_cast<std::size_t>(l)]) {
            throw InputError("label " + std::to_string(l) + " used twice; labeling is not a bijection");
        }
        used[static_cast<std::size_t>(l)] = true;
    }
}

std::string to_string(const Labeling& f) {
    std::string out;
    for (std::size_t i = 0; i < f.labels().size(); ++i) {
        if (i) out += ',';
        out += std::to_string(f.labels()[i]);
    }
    return out;
}

Labeling parse_labeling(std::string_view text) {
    std::vector<int> labels;
    if (text.empty()) return Labeling(labels);
    while (true) {
        const auto comma = text.find(',');
        const std::string_view tok = text.substr(0, comma);
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc{} || ptr != tok.data() + tok.size() || tok.empty()) {
            throw InputError("label '" + std::string(tok) + "' is not an integer");
        }
        labels.push_back(value);
        if (comma == std::string_view::npos) break;
        text = text.substr(comma + 1);
    }
    return Labeling(std::move(labels));
}

Bipartition::Bipartition(VertexMask odd, int n) : odd_(odd), n_(n) {
    if (n < 0 || n > kMaxVertices) throw InputError("bipartition order outside 0..64");
    const VertexMask all = n == kMaxVertices ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
    if (odd & ~all) throw InputError("odd class names a vertex outside 0..n-1");
    if (std::popcount(odd) != odd_class_size(n)) {
        throw InputError("odd class has " + std::to_string(std::popcount(odd)) +
                         " vertices, must have ceil(n/2) = " + std::to_string(odd_class_size(n)));
    }
}

VertexMask Bipartition::even_set() const {
    const VertexMask all = n_ == kMaxVertices ? ~VertexMask{0} : (VertexMask{1} << n_) - 1;
    return all & ~odd_;
}

bool lex_less(VertexMask a, VertexMask b) {
    const VertexMask diff = a ^ b;
    if (diff == 0) return false;
    return (a & diff & (~diff + 1)) != 0;
}

Bipartition labeling_to_bipartition(const Labeling& f) {
    VertexMask odd = 0;
    for (Vertex v = 0; v < f.order(); ++v) {
        if (f.is_odd(v)) odd |= VertexMask{1} << v;
    }
    return Bipartition(odd, f.order());
}

Labeling bipartition_to_labeling(const Bipartition& b) {
    std::vector<int> labels(static_cast<std::size_t>(b.order()));
    int next_odd = 1;
    int next_even = 2;
    for (Vertex v = 0; v < b.order(); ++v) {
        int& l = labels[static_cast<std::size_t>(v)];
        if (b.contains(v)) {
            l = next_odd;
            next_odd += 2;
        } else {
            l = next_even;
            next_even += 2;
        }
    }
    return Labeling(std::move(labels));
}

SignedGraph::SignedGraph(Graph g, std::vector<Sign> signs)
    : graph_(std::move(g)), signs_(std::move(signs)) {
    if (static_cast<int>(signs_.size()) != graph_.size()) {
        throw InputError("sign count " + std::to_string(signs_.size()) + " does not match edge count " +
                         std::to_string(graph_.size()));
    }
}

SignedGraph SignedGraph::uniform(Graph g, Sign s) {
    std::vector<Sign> signs(static_cast<std::size_t>(g.size()), s);
    return SignedGraph(std::move(g), std::move(signs));
}

Sign SignedGraph::sign(Vertex u, Vertex v) const {
    const int idx = graph_.edge_index(u, v);
    if (idx < 0) {
        throw InputError("no edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    }
    return signs_[static_cast<std::size_t>(idx)];
}

int SignedGraph::negative_count() const {
    return static_cast<int>(std::count(signs_.begin(), signs_.end(), Sign::Negative));
}

std::string sign_string(const SignedGraph& s) {
    std::string out;
    out.reserve(s.signs().size());
    for (Sign x : s.signs()) out += static_cast<char>(x);
    return out;
}

std::vector<Sign> parse_signs(std::string_view text) {
    std::vector<Sign> out;
    out.reserve(text.size());
    for (char c : text) {
        if (c == '+') {
            out.push_back(Sign::Positive);
        } else if (c == '-') {
            out.push_back(Sign::Negative);
        } else {
            throw InputError(std::string("sign character '") + c + "' is neither '+' nor '-'");
        }
    }
    return out;
}

SignedGraph induce_signs(const Graph& g, const Labeling& f) {
    if (f.order() != g.order()) {
        throw InputError("labeling has " + std::to_string(f.order()) + " labels for " +
                         std::to_string(g.order()) + " vertices");
    }
    std::vector<Sign> signs;
    signs.reserve(g.edges().size());
    for (const Edge& e : g.edges()) {
        signs.push_back(f.is_odd(e.u) == f.is_odd(e.v) ? Sign::Positive : Sign::Negative);
    }
    return SignedGraph(g, std::move(signs));
}

int cut_size(const Graph& g, VertexMask side) {
    int cut = 0;
    for (VertexMask s = side; s; s &= s - 1) {
        cut += std::popcount(g.neighbors(std::countr_zero(s)) & ~side);
    }
    return cut;
}

int negative_edge_count(const Graph& g, const Bipartition& b) {
    if (b.order() != g.order()) {
        throw InputError("bipartition order " + std::to_string(b.order()) +
                         " does not match graph order " + std::to_string(g.order()));
    }
    return cut_size(g, b.odd_set());
}

Homogeneity homogeneity(const SignedGraph& s) {
    if (s.signs().empty()) return Homogeneity::Edgeless;
    const int neg = s.negative_count();
    if (neg == 0) return Homogeneity::AllPositive;
    if (neg == static_cast<int>(s.signs().size())) return Homogeneity::AllNegative;
    return Homogeneity::Heterogeneous;
}

std::string_view to_string(Homogeneity h) {
    switch (h) {
        case Homogeneity::AllPositive: return "all_positive";
        case Homogeneity::AllNegative: return "all_negative";
        case Homogeneity::Heterogeneous: return "heterogeneous";
        case Homogeneity::Edgeless: return "edgeless";
    }
    return "unknown";
}

bool is_balance_coloring(const SignedGraph& s, const std::vector<int>& coloring) {
    if (static_cast<int>(coloring.size()) != s.graph().order()) return false;
    const auto& edges = s.graph().edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const bool same = coloring[static_cast<std::size_t>(edges[i].u)] ==
                          coloring[static_cast<std::size_t>(edges[i].v)];
        if (same != (s.sign(i) == Sign::Positive)) return false;
    }
    return true;
}

std::optional<std::vector<int>> is_balanced(const SignedGraph& s) {
    const Graph& g = s.graph();
    std::vector<int> color(static_cast<std::size_t>(g.order()), -1);
    std::vector<Vertex> stack;
    // Propagate along a spanning forest, then validate every edge.
    for (Vertex root = 0; root < g.order(); ++root) {
        if (color[static_cast<std::size_t>(root)] >= 0) continue;
        color[static_cast<std::size_t>(root)] = 0;
        stack.push_back(root);
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : mask_vertices(g.neighbors(v))) {
                if (color[static_cast<std::size_t>(w)] >= 0) continue;
                const bool flip = s.sign(v, w) == Sign::Negative;
                color[static_cast<std::size_t>(w)] = color[static_cast<std::size_t>(v)] ^ (flip ? 1 : 0);
                stack.push_back(w);
            }
        }
    }
    if (!is_balance_coloring(s, color)) return std::nullopt;
    return color;
}

std::optional<Labeling> is_parity_realizable(const SignedGraph& s) {
    const auto coloring = is_balanced(s);
    if (!coloring) return std::nullopt;

    const Graph& g = s.graph();
    const int n = g.order();
    const int target = odd_class_size(n);
    const std::vector<int> comp = components(g);
    const int count = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;

    // Class sizes per component: side0 = color 0, side1 = color 1.
    std::vector<VertexMask> side0(static_cast<std::size_t>(count), 0);
    std::vector<VertexMask> side1(static_cast<std::size_t>(count), 0);
    for (Vertex v = 0; v < n; ++v) {
        auto& side = (*coloring)[static_cast<std::size_t>(v)] == 0 ? side0 : side1;
        side[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])] |= VertexMask{1} << v;
    }

    // reach[i][t]: components i.. can put exactly t vertices in the odd class.
    std::vector<std::vector<char>> reach(static_cast<std::size_t>(count) + 1,
                                         std::vector<char>(static_cast<std::size_t>(n) + 1, 0));
    reach[static_cast<std::size_t>(count)][0] = 1;
    for (int i = count - 1; i >= 0; --i) {
        const int a = std::popcount(side0[static_cast<std::size_t>(i)]);
        const int b = std::popcount(side1[static_cast<std::size_t>(i)]);
        auto& row = reach[static_cast<std::size_t>(i)];
        const auto& next = reach[static_cast<std::size_t>(i) + 1];
        for (int t = 0; t <= n; ++t) {
            row[static_cast<std::size_t>(t)] = (t >= a && next[static_cast<std::size_t>(t - a)]) ||
                                               (t >= b && next[static_cast<std::size_t>(t - b)]);
        }
    }
    if (!reach[0][static_cast<std::size_t>(target)]) return std::nullopt;

    VertexMask odd = 0;
    int remaining = target;
    for (int i = 0; i < count; ++i) {
        const auto& next = reach[static_cast<std::size_t>(i) + 1];
        const VertexMask s0 = side0[static_cast<std::size_t>(i)];
        const int a = std::popcount(s0);
        if (remaining >= a && next[static_cast<std::size_t>(remaining - a)]) {
            odd |= s0;
            remaining -= a;
        } else {
            odd |= side1[static_cast<std::size_t>(i)];
            remaining -= std::popcount(side1[static_cast<std::size_t>(i)]);
        }
    }
    return bipartition_to_labeling(Bipartition(odd, n));
}

bool all_negative_realizable(const Graph& g) {
    return is_parity_realizable(SignedGraph::uniform(g, Sign::Negative)).has_value();
}

}  // namespace parsig
