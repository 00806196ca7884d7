#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "parsig/families.hpp"
#include "parsig/graph.hpp"
#include "parsig/signs.hpp"

namespace parsig {

inline constexpr int kDefaultExactLimit = 24;
inline constexpr int kDefaultRestarts = 32;
inline constexpr std::uint64_t kDefaultSeed = 1;

struct SolverLimits {
    int exact_limit = kDefaultExactLimit;
};

enum class Method { Exact, Heuristic };
std::string_view to_string(Method m);

/// A minimum (or best found) negative-edge count with the odd class that
/// attains it. `examined` counts the bipartitions evaluated.
struct RnaResult {
    int value = 0;
    Bipartition witness;
    Method method = Method::Exact;
    std::uint64_t examined = 0;
};

/// Every negative-edge count reachable by some parity labeling.
struct SpectrumReport {
    std::vector<int> values;  // sorted, distinct
    int min = 0;
    int max = 0;
    bool singleton = false;
    std::uint64_t examined = 0;
};

/// Calls visit(mask) for each ceil(n/2)-subset of 0..n-1, in increasing
/// numeric order.
void for_each_balanced_bipartition(int n, const std::function<void(VertexMask)>& visit);

/// Minimum cut over all balanced bipartitions. Ties go to the
/// lexicographically smallest odd class. Throws CapacityError above the limit.
RnaResult rna_exact(const Graph& g, const SolverLimits& limits = {});

SpectrumReport sigma_spectrum(const Graph& g, const SolverLimits& limits = {});

/// Maximum number of positive edges over all parity labelings.
int adhika(const Graph& g, const SolverLimits& limits = {});

/// Balanced swap local search from seeded random starts; an upper bound on
/// the exact value. Deterministic for a given (seed, restarts).
RnaResult rna_heuristic(const Graph& g, std::uint64_t seed = kDefaultSeed,
                        int restarts = kDefaultRestarts);

/// Closed forms for path (n >= 2), cycle, star (leaf count) and complete
/// (n >= 2). Other families throw InputError.
int closed_form_rna(const FamilySpec& family);

/// The explicit labeling used to attain closed_form_rna for the family.
Labeling proof_labeling(const FamilySpec& family);

}  // namespace parsig
