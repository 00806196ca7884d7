#pragma once

// Brute-force reference computations used only by tests. None of these go
// through bipartitions, canonical codes or the solver code paths they check.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "parsig/graph.hpp"

namespace parsig::oracle {

using Matrix = std::vector<std::vector<char>>;

inline Matrix to_matrix(const Graph& g) {
    Matrix a(static_cast<std::size_t>(g.order()), std::vector<char>(static_cast<std::size_t>(g.order()), 0));
    for (const Edge& e : g.edges()) {
        a[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] = 1;
        a[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)] = 1;
    }
    return a;
}

/// Negative edges under the labeling: endpoints of opposite label parity.
inline int negatives_under(const Matrix& a, const std::vector<int>& labels) {
    int neg = 0;
    for (std::size_t u = 0; u < a.size(); ++u) {
        for (std::size_t v = u + 1; v < a.size(); ++v) {
            if (a[u][v] && (labels[u] % 2) != (labels[v] % 2)) ++neg;
        }
    }
    return neg;
}

/// Every negative-edge count over all n! labelings.
inline std::set<int> labeling_spectrum(const Graph& g) {
    const Matrix a = to_matrix(g);
    std::vector<int> labels(static_cast<std::size_t>(g.order()));
    std::iota(labels.begin(), labels.end(), 1);
    std::set<int> out;
    do {
        out.insert(negatives_under(a, labels));
    } while (std::next_permutation(labels.begin(), labels.end()));
    return out;
}

inline int labeling_minimum(const Graph& g) { return *labeling_spectrum(g).begin(); }

/// Depth-first reachability over the adjacency matrix.
inline bool connected(const Matrix& a) {
    if (a.size() <= 1) return true;
    std::vector<char> seen(a.size(), 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        const std::size_t v = stack.back();
        stack.pop_back();
        for (std::size_t w = 0; w < a.size(); ++w) {
            if (a[v][w] && !seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
        }
    }
    return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

inline bool isomorphic(const Matrix& a, const Matrix& b) {
    const std::size_t n = a.size();
    if (b.size() != n) return false;
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        bool ok = true;
        for (std::size_t u = 0; u < n && ok; ++u) {
            for (std::size_t v = u + 1; v < n && ok; ++v) ok = a[u][v] == b[p[u]][p[v]];
        }
        if (ok) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

/// Number of distinct labeled graphs isomorphic to a (n! / |Aut|).
inline long long orbit_size(const Matrix& a) {
    const std::size_t n = a.size();
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    long long automorphisms = 0;
    long long total = 0;
    do {
        ++total;
        bool ok = true;
        for (std::size_t u = 0; u < n && ok; ++u) {
            for (std::size_t v = u + 1; v < n && ok; ++v) ok = a[u][v] == a[p[u]][p[v]];
        }
        if (ok) ++automorphisms;
    } while (std::next_permutation(p.begin(), p.end()));
    return total / automorphisms;
}

/// Connected labeled graphs on n vertices by direct enumeration.
inline long long labeled_connected_count(int n) {
    std::vector<std::pair<int, int>> slots;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) slots.emplace_back(u, v);
    }
    long long count = 0;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << slots.size()); ++bits) {
        Matrix a(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
        for (std::size_t k = 0; k < slots.size(); ++k) {
            if ((bits >> k) & 1) {
                a[static_cast<std::size_t>(slots[k].first)][static_cast<std::size_t>(slots[k].second)] = 1;
                a[static_cast<std::size_t>(slots[k].second)][static_cast<std::size_t>(slots[k].first)] = 1;
            }
        }
        if (connected(a)) ++count;
    }
    return count;
}

/// Removes edge {u,v} and tests reachability from u to v.
inline bool is_cut_edge(const Graph& g, int u, int v) {
    Matrix a = to_matrix(g);
    a[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = 0;
    a[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = 0;
    std::vector<char> seen(a.size(), 0);
    std::vector<std::size_t> stack{static_cast<std::size_t>(u)};
    seen[static_cast<std::size_t>(u)] = 1;
    while (!stack.empty()) {
        const std::size_t x = stack.back();
        stack.pop_back();
        for (std::size_t w = 0; w < a.size(); ++w) {
            if (a[x][w] && !seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
        }
    }
    return !seen[static_cast<std::size_t>(v)];
}

/// G(n, p) sample; edges drawn in fixed pair order from the engine.
inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    Graph g(n);
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            if (coin(rng)) g.add_edge(u, v);
        }
    }
    return g;
}

/// Random spanning tree plus G(n, p) extras: always connected.
inline Graph random_connected_graph(int n, double p, std::mt19937_64& rng) {
    Graph g(n);
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> parent(0, v - 1);
        g.add_edge(parent(rng), v);
    }
    std::bernoulli_distribution coin(p);
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            if (!g.has_edge(u, v) && coin(rng)) g.add_edge(u, v);
        }
    }
    return g;
}

inline std::vector<int> random_labels(int n, std::mt19937_64& rng) {
    std::vector<int> labels(static_cast<std::size_t>(n));
    std::iota(labels.begin(), labels.end(), 1);
    std::shuffle(labels.begin(), labels.end(), rng);
    return labels;
}

}  // namespace parsig::oracle
