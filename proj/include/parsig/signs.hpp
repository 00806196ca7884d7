#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "parsig/graph.hpp"

namespace parsig {

/// Bijection from vertices to {1,...,n}; label(v) is the label of vertex v.
class Labeling {
public:
    Labeling() = default;
    /// Throws InputError unless labels is a permutation of 1..labels.size().
    explicit Labeling(std::vector<int> labels);

    int order() const { return static_cast<int>(labels_.size()); }
    int label(Vertex v) const { return labels_[static_cast<std::size_t>(v)]; }
    bool is_odd(Vertex v) const { return (label(v) & 1) != 0; }
    const std::vector<int>& labels() const { return labels_; }

    friend bool operator==(const Labeling&, const Labeling&) = default;

private:
    std::vector<int> labels_;
};

/// Comma-separated labels indexed by vertex: "1,3,2,4".
std::string to_string(const Labeling& f);
Labeling parse_labeling(std::string_view text);

/// The odd-labelled class of a labeling. Exactly ceil(n/2) vertices are odd.
class Bipartition {
public:
    Bipartition() = default;
    /// Throws InputError unless popcount(odd) == ceil(n/2) and odd fits in n.
    Bipartition(VertexMask odd, int n);

    VertexMask odd_set() const { return odd_; }
    VertexMask even_set() const;
    int order() const { return n_; }
    bool contains(Vertex v) const { return (odd_ >> v) & 1; }

    friend bool operator==(const Bipartition&, const Bipartition&) = default;

private:
    VertexMask odd_ = 0;
    int n_ = 0;
};

inline int odd_class_size(int n) { return (n + 1) / 2; }

/// True when a's sorted vertex list precedes b's lexicographically (same size).
bool lex_less(VertexMask a, VertexMask b);

Bipartition labeling_to_bipartition(const Labeling& f);
/// Odd labels 1,3,5,... to the odd class and 2,4,... to the rest, each in
/// increasing vertex order.
Labeling bipartition_to_labeling(const Bipartition& b);

enum class Sign : char { Positive = '+', Negative = '-' };

/// Underlying graph plus one sign per edge, aligned with graph().edges().
class SignedGraph {
public:
    SignedGraph() = default;
    /// Throws InputError when signs.size() != g.size().
    SignedGraph(Graph g, std::vector<Sign> signs);

    static SignedGraph uniform(Graph g, Sign s);

    const Graph& graph() const { return graph_; }
    const std::vector<Sign>& signs() const { return signs_; }
    Sign sign(std::size_t edge) const { return signs_[edge]; }
    Sign sign(Vertex u, Vertex v) const;

    int negative_count() const;
    int positive_count() const { return graph_.size() - negative_count(); }

    friend bool operator==(const SignedGraph&, const SignedGraph&) = default;

private:
    Graph graph_;
    std::vector<Sign> signs_;
};

/// '+'/'-' per edge in graph6 bit order.
std::string sign_string(const SignedGraph& s);
std::vector<Sign> parse_signs(std::string_view text);

SignedGraph induce_signs(const Graph& g, const Labeling& f);

/// Edges with exactly one endpoint in the odd class.
int negative_edge_count(const Graph& g, const Bipartition& b);
int cut_size(const Graph& g, VertexMask side);

enum class Homogeneity { AllPositive, AllNegative, Heterogeneous, Edgeless };

Homogeneity homogeneity(const SignedGraph& s);
std::string_view to_string(Homogeneity h);

/// Harary balance. Returns a 0/1 coloring where positive edges join equal
/// colors and negative edges join different ones, or nullopt.
std::optional<std::vector<int>> is_balanced(const SignedGraph& s);

/// True when coloring is a valid balance witness for s.
bool is_balance_coloring(const SignedGraph& s, const std::vector<int>& coloring);

/// A labeling whose induced signs equal s, or nullopt if s is not a parity
/// signed graph.
std::optional<Labeling> is_parity_realizable(const SignedGraph& s);

bool all_negative_realizable(const Graph& g);

}  // namespace parsig
