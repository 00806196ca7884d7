#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "parsig/graph.hpp"

namespace parsig {

inline constexpr int kMaxEnumerationOrder = 6;
inline constexpr int kMaxTreeEnumerationOrder = 8;
inline constexpr int kMaxCanonicalOrder = 8;

/// Upper-triangle adjacency bits in graph6 order packed into an integer,
/// first bit most significant, so numeric order equals lexicographic order
/// of the bitstrings.
std::uint64_t adjacency_code(const Graph& g);
Graph graph_from_code(int n, std::uint64_t code);
std::string code_string(int n, std::uint64_t code);

/// Smallest adjacency_code over all vertex permutations (n <= 8).
std::uint64_t canonical_code(const Graph& g);
Graph canonical_form(const Graph& g);

/// One representative per isomorphism class of connected graphs on n
/// vertices, each in canonical form, in increasing canonical-code order.
/// Supports 1 <= n <= 6; larger orders must come from graph6 files.
void for_each_connected(int n, const std::function<void(const Graph&)>& visit);
std::vector<Graph> enumerate_connected(int n);

/// Non-isomorphic trees on n vertices (1 <= n <= 8), canonical order.
std::vector<Graph> enumerate_trees(int n);

}  // namespace parsig
