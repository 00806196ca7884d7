#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "parsig/enumerate.hpp"
#include "parsig/graph.hpp"
#include "parsig/graph6.hpp"
#include "parsig/rna.hpp"

namespace parsig {

inline constexpr int kMinVerifyOrder = 3;
inline constexpr int kMaxVerifyOrder = kMaxEnumerationOrder;

/// Re-checkable evidence attached to a theorem check. Any field may be
/// empty when it does not apply.
struct Witness {
    std::string role;
    std::string graph6;
    std::string signs;
    std::string labeling;
    std::vector<Vertex> odd_set;
    std::string detail;
};

struct TheoremCheck {
    std::string id;
    std::string scope;
    bool passed = true;
    int cases = 0;
    std::vector<Witness> witnesses;  // always non-empty when !passed
};

/// Runs every theorem check at desk scale. max_n bounds the exhaustive
/// graph sweeps (3..6); cycle checks run to 2*max_n, trees to max_n+1 and
/// coronas to max_n+2. The closed-form propositions use fixed ranges
/// (paths and cycles to 20 vertices, stars to 20 leaves, complete graphs
/// to 16). Capacity errors are rethrown with the check id prefixed.
std::vector<TheoremCheck> verify_theorems(int max_n, const SolverLimits& limits = {});

enum class Classification { Complete, OddStar, Other };
std::string_view to_string(Classification c);

bool is_complete_graph(const Graph& g);
/// K_{1,k} with k odd (K_2 counts, as K_{1,1}).
bool is_odd_star(const Graph& g);

struct ConjectureRecord {
    std::string graph6;
    int n = 0;
    int m = 0;
    SpectrumReport spectrum;
    bool singleton = false;
    /// Complete takes precedence, so K_2 is classified complete; the
    /// is_odd_star flag still marks it as K_{1,1}.
    Classification classification = Classification::Other;
    bool complete = false;
    bool odd_star = false;
};

struct ScanIssue {
    std::string source;  // graph6 text or "line N"
    std::string message;
};

struct ScanSummary {
    int scanned = 0;
    int singletons = 0;
    std::vector<std::string> complete;  // graph6 of singleton graphs per bucket
    std::vector<std::string> odd_star;
    std::vector<std::string> other;
    std::vector<ScanIssue> skipped;  // disconnected, unreadable or over the limit
};

struct ScanResult {
    std::vector<ConjectureRecord> records;  // sorted by (n, graph6)
    ScanSummary summary;
};

ScanResult conjecture_scan(const std::vector<Graph>& graphs, const SolverLimits& limits = {});
/// Every connected graph with 1 <= n <= max_n from the built-in enumeration.
ScanResult conjecture_scan_enumerated(int max_n, const SolverLimits& limits = {});
/// Decodes each line; unreadable records are reported and skipped.
ScanResult conjecture_scan_lines(const std::vector<Graph6Line>& lines,
                                 const SolverLimits& limits = {});

std::vector<Graph> tree_filter(const std::vector<Graph>& graphs);

}  // namespace parsig
