#include "parsig/rna.hpp"

#include <bit>
#include <random>
#include <string>

#include "parsig/errors.hpp"

namespace parsig {

namespace {

void require_exact(const Graph& g, const SolverLimits& limits) {
    if (g.order() < 1) throw InputError("rna is defined here for graphs with at least one vertex");
    if (g.order() > limits.exact_limit) {
        throw CapacityError("n=" + std::to_string(g.order()) + " exceeds the exact limit " +
                            std::to_string(limits.exact_limit) +
                            "; raise the limit or use the heuristic");
    }
    if (g.order() > 62) throw CapacityError("exact enumeration needs n <= 62");
}

// Gosper's hack: next larger integer with the same popcount.
VertexMask next_combination(VertexMask mask) {
    const VertexMask low = mask & (~mask + 1);
    const VertexMask ripple = mask + low;
    return (((ripple ^ mask) >> 2) / low) | ripple;
}

std::uint64_t next_u64(std::mt19937_64& rng) { return rng(); }

VertexMask random_balanced(int n, std::mt19937_64& rng) {
    std::vector<Vertex> order(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
    // Fisher-Yates with modulo draws; reproducible across standard libraries.
    for (int i = n - 1; i > 0; --i) {
        const auto j = static_cast<int>(next_u64(rng) % static_cast<std::uint64_t>(i + 1));
        std::swap(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]);
    }
    VertexMask odd = 0;
    for (int i = 0; i < odd_class_size(n); ++i) odd |= VertexMask{1} << order[static_cast<std::size_t>(i)];
    return odd;
}

void require_supported(const FamilySpec& family) {
    validate(family);
    const int n = family.params[0];
    switch (family.family) {
        case Family::Path:
        case Family::Complete:
            if (n < 2) {
                throw InputError("closed form needs n >= 2 for " + to_string(family));
            }
            return;
        case Family::Cycle:
        case Family::Star:
            return;
        default:
            throw InputError("no closed form for family " + to_string(family));
    }
}

// Odd labels along the first ceil(n/2) vertices, then the even labels.
std::vector<int> odd_then_even(int n) {
    std::vector<int> labels(static_cast<std::size_t>(n));
    const int half = (n + 1) / 2;
    for (int i = 1; i <= n; ++i) {
        int label = 0;
        if (i <= half) {
            label = 2 * i - 1;
        } else if (n % 2 == 1) {
            label = 2 * i - (n + 1);
        } else {
            label = 2 * i - n;
        }
        labels[static_cast<std::size_t>(i - 1)] = label;
    }
    return labels;
}

}  // namespace

std::string_view to_string(Method m) { return m == Method::Exact ? "exact" : "heuristic"; }

void for_each_balanced_bipartition(int n, const std::function<void(VertexMask)>& visit) {
    if (n < 0 || n > 62) throw CapacityError("balanced bipartition enumeration needs n <= 62");
    const int k = odd_class_size(n);
    if (k == 0) {
        visit(0);
        return;
    }
    const VertexMask limit = VertexMask{1} << n;
    for (VertexMask mask = (VertexMask{1} << k) - 1; mask < limit; mask = next_combination(mask)) {
        visit(mask);
    }
}

RnaResult rna_exact(const Graph& g, const SolverLimits& limits) {
    require_exact(g, limits);
    int best = -1;
    VertexMask best_mask = 0;
    std::uint64_t examined = 0;
    for_each_balanced_bipartition(g.order(), [&](VertexMask odd) {
        ++examined;
        const int cut = cut_size(g, odd);
        if (best < 0 || cut < best || (cut == best && lex_less(odd, best_mask))) {
            best = cut;
            best_mask = odd;
        }
    });
    return {best, Bipartition(best_mask, g.order()), Method::Exact, examined};
}

SpectrumReport sigma_spectrum(const Graph& g, const SolverLimits& limits) {
    require_exact(g, limits);
    std::vector<char> seen(static_cast<std::size_t>(g.size()) + 1, 0);
    SpectrumReport report;
    for_each_balanced_bipartition(g.order(), [&](VertexMask odd) {
        ++report.examined;
        seen[static_cast<std::size_t>(cut_size(g, odd))] = 1;
    });
    for (std::size_t c = 0; c < seen.size(); ++c) {
        if (seen[c]) report.values.push_back(static_cast<int>(c));
    }
    report.min = report.values.front();
    report.max = report.values.back();
    report.singleton = report.values.size() == 1;
    return report;
}

int adhika(const Graph& g, const SolverLimits& limits) {
    return g.size() - rna_exact(g, limits).value;
}

RnaResult rna_heuristic(const Graph& g, std::uint64_t seed, int restarts) {
    const int n = g.order();
    if (n < 2) throw InputError("heuristic needs n >= 2, got n=" + std::to_string(n));
    if (restarts < 1) throw InputError("restarts must be >= 1, got " + std::to_string(restarts));

    std::mt19937_64 rng(seed);
    const VertexMask all = g.all_vertices();
    RnaResult best{-1, {}, Method::Heuristic, 0};
    std::vector<int> ext(static_cast<std::size_t>(n));

    for (int r = 0; r < restarts; ++r) {
        VertexMask odd = random_balanced(n, rng);
        int cut = cut_size(g, odd);
        ++best.examined;
        // Kernighan-Lin passes: swap the best unlocked pair (gain may be
        // zero or negative), lock both, and keep the best prefix of the pass.
        while (true) {
            VertexMask trial = odd;
            VertexMask locked = 0;
            int running = 0;
            int best_total = 0;
            VertexMask best_state = odd;
            const int steps = n / 2;
            for (int step = 0; step < steps; ++step) {
                for (Vertex v = 0; v < n; ++v) {
                    const VertexMask own = ((trial >> v) & 1) ? trial : (all & ~trial);
                    const VertexMask nb = g.neighbors(v);
                    ext[static_cast<std::size_t>(v)] =
                        std::popcount(nb & ~own) - std::popcount(nb & own);
                }
                bool found = false;
                int step_gain = 0;
                Vertex out = -1;
                Vertex in = -1;
                for (Vertex u : mask_vertices(trial & ~locked)) {
                    for (Vertex v : mask_vertices(all & ~trial & ~locked)) {
                        const int gain = ext[static_cast<std::size_t>(u)] +
                                         ext[static_cast<std::size_t>(v)] -
                                         (g.has_edge(u, v) ? 2 : 0);
                        if (!found || gain > step_gain) {
                            found = true;
                            step_gain = gain;
                            out = u;
                            in = v;
                        }
                    }
                }
                if (!found) break;
                trial = (trial & ~(VertexMask{1} << out)) | (VertexMask{1} << in);
                locked |= (VertexMask{1} << out) | (VertexMask{1} << in);
                running += step_gain;
                ++best.examined;
                if (running > best_total) {
                    best_total = running;
                    best_state = trial;
                }
            }
            if (best_total <= 0) break;
            odd = best_state;
            cut -= best_total;
        }
        if (best.value < 0 || cut < best.value) {
            best.value = cut;
            best.witness = Bipartition(odd, n);
        }
    }
    return best;
}

int closed_form_rna(const FamilySpec& family) {
    require_supported(family);
    const int n = family.params[0];
    switch (family.family) {
        case Family::Path: return 1;
        case Family::Cycle: return 2;
        case Family::Star: return (n + 1) / 2;
        case Family::Complete: return (n / 2) * ((n + 1) / 2);
        default: break;
    }
    throw InputError("no closed form for family " + to_string(family));
}

Labeling proof_labeling(const FamilySpec& family) {
    require_supported(family);
    const int n = family.params[0];
    switch (family.family) {
        case Family::Path:
        case Family::Cycle:
            return Labeling(odd_then_even(n));
        case Family::Star: {
            // Odd center; leaves take 2..n+1, so only the even-labelled
            // leaves hang on negative edges.
            std::vector<int> labels(static_cast<std::size_t>(n) + 1);
            for (int v = 0; v <= n; ++v) labels[static_cast<std::size_t>(v)] = v + 1;
            return Labeling(std::move(labels));
        }
        case Family::Complete: {
            std::vector<int> labels(static_cast<std::size_t>(n));
            for (int v = 0; v < n; ++v) labels[static_cast<std::size_t>(v)] = v + 1;
            return Labeling(std::move(labels));
        }
        default: break;
    }
    throw InputError("no proof labeling for family " + to_string(family));
}

}  // namespace parsig
