#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "parsig/graph.hpp"

namespace parsig {

enum class Family {
    Path,
    Cycle,
    Star,
    Complete,
    CompleteBipartite,
    CoronaCycleK1,
    CoronaCompleteK1,
};

/// A named graph family with its integer parameters. Star takes the number
/// of leaves; complete_bipartite takes the two side sizes; every other
/// family takes a single order n.
struct FamilySpec {
    Family family = Family::Path;
    std::vector<int> params;

    static FamilySpec path(int n) { return {Family::Path, {n}}; }
    static FamilySpec cycle(int n) { return {Family::Cycle, {n}}; }
    static FamilySpec star(int leaves) { return {Family::Star, {leaves}}; }
    static FamilySpec complete(int n) { return {Family::Complete, {n}}; }
    static FamilySpec complete_bipartite(int a, int b) { return {Family::CompleteBipartite, {a, b}}; }
    static FamilySpec corona_cycle_k1(int n) { return {Family::CoronaCycleK1, {n}}; }
    static FamilySpec corona_complete_k1(int n) { return {Family::CoronaCompleteK1, {n}}; }

    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

std::string_view family_name(Family f);

/// "complete:8", "complete_bipartite:2,3", ...
FamilySpec parse_family(std::string_view text);
std::string to_string(const FamilySpec& spec);

/// Throws InputError naming the violated constraint.
void validate(const FamilySpec& spec);

/// Canonical vertex order: path and cycle vertices consecutive (cycle closes
/// n-1 -> 0), star center is vertex 0, complete bipartite puts the first side
/// at 0..a-1, and a corona G o K1 lists G on 0..n-1 with pendant n+i on i.
Graph build_family(const FamilySpec& spec);

/// J o K: J on 0..j-1, then copy i of K in the block starting at
/// j + i*k, each of its vertices joined to vertex i of J.
Graph corona(const Graph& base, const Graph& attached);

/// Disjoint union with second shifted by first.order(), plus the edge
/// {u, first.order() + v}.
Graph bridge_join(const Graph& first, Vertex u, const Graph& second, Vertex v);

Graph disjoint_union(const Graph& first, const Graph& second);

}  // namespace parsig
