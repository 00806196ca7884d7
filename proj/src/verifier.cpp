#include "parsig/verifier.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "parsig/enumerate.hpp"
#include "parsig/errors.hpp"
#include "parsig/families.hpp"
#include "parsig/signs.hpp"

namespace parsig {

namespace {

std::string range(int lo, int hi) { return std::to_string(lo) + ".." + std::to_string(hi); }

Witness graph_witness(std::string role, const Graph& g, std::string detail = {}) {
    Witness w;
    w.role = std::move(role);
    w.graph6 = write_graph6(g);
    w.detail = std::move(detail);
    return w;
}

Witness signed_witness(std::string role, const SignedGraph& s, const std::optional<Labeling>& f,
                       std::string detail = {}) {
    Witness w = graph_witness(std::move(role), s.graph(), std::move(detail));
    w.signs = sign_string(s);
    if (f) w.labeling = to_string(*f);
    return w;
}

TheoremCheck make_check(std::string id, std::string scope) {
    TheoremCheck c;
    c.id = std::move(id);
    c.scope = std::move(scope);
    return c;
}

void fail(TheoremCheck& check, Witness w) {
    check.passed = false;
    check.witnesses.push_back(std::move(w));
}

std::vector<Graph> connected_up_to(int lo, int hi) {
    std::vector<Graph> out;
    for (int n = lo; n <= hi; ++n) {
        for_each_connected(n, [&](const Graph& g) { out.push_back(g); });
    }
    return out;
}

TheoremCheck check_negative_cycles(int max_n) {
    TheoremCheck c = make_check("negc", "all-negative C_n, n=" + range(3, 2 * max_n));
    for (int n = 3; n <= 2 * max_n; ++n) {
        const Graph g = build_family(FamilySpec::cycle(n));
        const SignedGraph s = SignedGraph::uniform(g, Sign::Negative);
        const auto f = is_parity_realizable(s);
        ++c.cases;
        if (f.has_value() != (n % 2 == 0)) {
            fail(c, signed_witness("cycle", s, f,
                                   f ? "odd cycle realized" : "even cycle not realized"));
        }
    }
    return c;
}

TheoremCheck check_negative_edge_exists(int max_n, const SolverLimits& limits) {
    TheoremCheck c = make_check("nont", "every connected graph, n=" + range(2, max_n));
    for (const Graph& g : connected_up_to(2, max_n)) {
        const RnaResult r = rna_exact(g, limits);
        ++c.cases;
        if (r.value < 1) {
            Witness w = graph_witness("graph", g, "labeling with no negative edge");
            w.odd_set = mask_vertices(r.witness.odd_set());
            w.labeling = to_string(bipartition_to_labeling(r.witness));
            fail(c, std::move(w));
        }
    }
    return c;
}

TheoremCheck check_subsigned_counterexample() {
    TheoremCheck c = make_check("subsigned", "stored pair: all-negative C_4 o K_1 and its sub-star K_{1,3}");
    const Graph host = build_family(FamilySpec::corona_cycle_k1(4));
    // Cycle vertex 0 with its cycle neighbours 1, 3 and its pendant 4.
    Graph sub(4);
    sub.add_edge(0, 1);
    sub.add_edge(0, 2);
    sub.add_edge(0, 3);
    const std::vector<Vertex> embed{0, 1, 3, 4};

    const SignedGraph host_s = SignedGraph::uniform(host, Sign::Negative);
    const SignedGraph sub_s = SignedGraph::uniform(sub, Sign::Negative);
    const auto host_f = is_parity_realizable(host_s);
    const auto sub_f = is_parity_realizable(sub_s);
    c.cases = 2;

    bool embedded = is_connected(sub);
    for (const Edge& e : sub.edges()) {
        embedded = embedded && host.has_edge(embed[static_cast<std::size_t>(e.u)],
                                             embed[static_cast<std::size_t>(e.v)]);
    }
    c.witnesses.push_back(signed_witness("host", host_s, host_f,
                                         host_f ? "realizable" : "NOT realizable"));
    c.witnesses.push_back(signed_witness(
        "subgraph", sub_s, sub_f,
        std::string(sub_f ? "realizable" : "not realizable") + "; embeds on host vertices 0,1,3,4"));
    c.passed = host_f.has_value() && !sub_f.has_value() && embedded;
    return c;
}

TheoremCheck check_balanced_cycles(int max_n, const SolverLimits& limits) {
    TheoremCheck c = make_check("balanced_cycle", "every labeling of C_n, n=" + range(3, 2 * max_n));
    for (int n = 3; n <= 2 * max_n; ++n) {
        const Graph g = build_family(FamilySpec::cycle(n));
        if (n > limits.exact_limit) {
            throw CapacityError("n=" + std::to_string(n) + " exceeds the exact limit");
        }
        for_each_balanced_bipartition(n, [&](VertexMask odd) {
            ++c.cases;
            const Bipartition b(odd, n);
            const SignedGraph s = induce_signs(g, bipartition_to_labeling(b));
            if (s.negative_count() % 2 != 0 || !is_balanced(s)) {
                fail(c, signed_witness("cycle", s, bipartition_to_labeling(b),
                                       "odd negative count or unbalanced"));
            }
        });
    }
    return c;
}

TheoremCheck check_positive_disconnected(int max_n) {
    TheoremCheck c = make_check("positive_disconnected",
                   "all-positive signature on every connected graph n=" + range(2, max_n) +
                       ", plus 2K_2");
    for (const Graph& g : connected_up_to(2, max_n)) {
        const SignedGraph s = SignedGraph::uniform(g, Sign::Positive);
        const auto f = is_parity_realizable(s);
        ++c.cases;
        if (f) fail(c, signed_witness("connected", s, f, "connected all-positive realized"));
    }
    const Graph two_k2 = disjoint_union(build_family(FamilySpec::complete(2)),
                                        build_family(FamilySpec::complete(2)));
    const SignedGraph s = SignedGraph::uniform(two_k2, Sign::Positive);
    const auto f = is_parity_realizable(s);
    ++c.cases;
    if (f) {
        c.witnesses.push_back(signed_witness("disconnected", s, f, "realizable"));
    } else {
        fail(c, signed_witness("disconnected", s, f, "2K_2 all-positive not realized"));
    }
    return c;
}

TheoremCheck check_closed_form(std::string id, Family family, int lo, int hi,
                               const SolverLimits& limits) {
    TheoremCheck c = make_check(std::move(id), std::string(family_name(family)) + " parameter " + range(lo, hi));
    for (int p = lo; p <= hi; ++p) {
        const FamilySpec spec{family, {p}};
        const Graph g = build_family(spec);
        const RnaResult r = rna_exact(g, limits);
        const int expected = closed_form_rna(spec);
        ++c.cases;
        if (r.value != expected) {
            Witness w = graph_witness(to_string(spec), g,
                                      "rna " + std::to_string(r.value) + " != closed form " +
                                          std::to_string(expected));
            w.odd_set = mask_vertices(r.witness.odd_set());
            fail(c, std::move(w));
        }
    }
    return c;
}

TheoremCheck check_inequalities(int max_n, const SolverLimits& limits) {
    TheoremCheck c = make_check("rna_bounds",
                   "sigma- <= |E-| and |E+| <= sigma+ for every labeling class, connected n=" +
                       range(1, max_n));
    for (const Graph& g : connected_up_to(1, max_n)) {
        const int rna = rna_exact(g, limits).value;
        const int plus = adhika(g, limits);
        for_each_balanced_bipartition(g.order(), [&](VertexMask odd) {
            ++c.cases;
            const int neg = cut_size(g, odd);
            if (rna > neg || g.size() - neg > plus) {
                Witness w = graph_witness("graph", g, "bound violated");
                w.odd_set = mask_vertices(odd);
                fail(c, std::move(w));
            }
        });
    }
    return c;
}

TheoremCheck check_tree_characterization(int max_n, const SolverLimits& limits) {
    const int hi = max_n + 1;
    TheoremCheck c = make_check("tree_star", "every tree n=" + range(2, hi) +
                                    ": negative count labeling-invariant iff odd star");
    for (int n = 2; n <= hi; ++n) {
        for (const Graph& t : enumerate_trees(n)) {
            const SpectrumReport sp = sigma_spectrum(t, limits);
            ++c.cases;
            if (sp.singleton != is_odd_star(t)) {
                Witness w = graph_witness("tree", t);
                w.detail = "spectrum size " + std::to_string(sp.values.size());
                fail(c, std::move(w));
            }
        }
    }
    return c;
}

TheoremCheck check_corona_cycle(int max_n) {
    const int hi = max_n + 2;
    TheoremCheck c = make_check("corona_cycle", "all-negative C_n o K_1, n=" + range(3, hi));
    for (int n = 3; n <= hi; ++n) {
        const SignedGraph s =
            SignedGraph::uniform(build_family(FamilySpec::corona_cycle_k1(n)), Sign::Negative);
        const auto f = is_parity_realizable(s);
        ++c.cases;
        if (f.has_value() != (n % 2 == 0)) fail(c, signed_witness("corona", s, f));
    }
    return c;
}

TheoremCheck check_corona_complete(int max_n) {
    const int hi = max_n + 2;
    TheoremCheck c = make_check("corona_complete", "all-negative K_n o K_1, n=" + range(1, hi));
    for (int n = 1; n <= hi; ++n) {
        const SignedGraph s =
            SignedGraph::uniform(build_family(FamilySpec::corona_complete_k1(n)), Sign::Negative);
        const auto f = is_parity_realizable(s);
        ++c.cases;
        if (f.has_value() != (n <= 2)) fail(c, signed_witness("corona", s, f));
    }
    return c;
}

// Two all-negative parity signed graphs joined by a bridge: some bridge sign
// always yields a parity signed graph; both signs do unless both sides have
// odd order.
TheoremCheck check_bridge() {
    const std::vector<FamilySpec> samples{
        FamilySpec::path(2),  FamilySpec::path(3),  FamilySpec::path(4),
        FamilySpec::path(5),  FamilySpec::cycle(4), FamilySpec::cycle(6),
        FamilySpec::complete_bipartite(2, 3), FamilySpec::corona_cycle_k1(4),
    };
    TheoremCheck c = make_check("bridge", "all-negative samples P_2..P_5, C_4, C_6, K_{2,3}, C_4 o K_1; "
                             "every ordered pair and bridge endpoint");
    std::vector<Graph> graphs;
    for (const auto& spec : samples) {
        Graph g = build_family(spec);
        if (!all_negative_realizable(g)) {
            fail(c, graph_witness(to_string(spec), g, "sample is not all-negative realizable"));
        }
        graphs.push_back(std::move(g));
    }
    for (const Graph& a : graphs) {
        for (const Graph& b : graphs) {
            const bool both_odd = a.order() % 2 == 1 && b.order() % 2 == 1;
            for (Vertex u = 0; u < a.order(); ++u) {
                for (Vertex v = 0; v < b.order(); ++v) {
                    const Graph joined = bridge_join(a, u, b, v);
                    const int bridge = joined.edge_index(u, a.order() + v);
                    int realized = 0;
                    for (Sign sign : {Sign::Positive, Sign::Negative}) {
                        std::vector<Sign> signs(static_cast<std::size_t>(joined.size()), Sign::Negative);
                        signs[static_cast<std::size_t>(bridge)] = sign;
                        const SignedGraph s(joined, std::move(signs));
                        const auto f = is_parity_realizable(s);
                        ++c.cases;
                        if (f) ++realized;
                        if (!f && !both_odd) {
                            fail(c, signed_witness("joined", s, f, "bridge sign not realizable"));
                        }
                    }
                    if (realized == 0 || (both_odd && realized != 1)) {
                        fail(c, graph_witness("joined", joined,
                                              std::to_string(realized) + " bridge signs realizable"));
                    }
                }
            }
        }
    }
    return c;
}

template <typename Fn>
TheoremCheck tagged(std::string_view id, Fn&& run) {
    try {
        return run();
    } catch (const CapacityError& e) {
        throw CapacityError(std::string(id) + ": " + e.what());
    }
}

}  // namespace

std::vector<TheoremCheck> verify_theorems(int max_n, const SolverLimits& limits) {
    if (max_n < kMinVerifyOrder || max_n > kMaxVerifyOrder) {
        throw InputError("max-n must be in " + range(kMinVerifyOrder, kMaxVerifyOrder) + ", got " +
                         std::to_string(max_n));
    }
    std::vector<TheoremCheck> out;
    out.push_back(tagged("negc", [&] { return check_negative_cycles(max_n); }));
    out.push_back(tagged("nont", [&] { return check_negative_edge_exists(max_n, limits); }));
    out.push_back(tagged("subsigned", [&] { return check_subsigned_counterexample(); }));
    out.push_back(tagged("rna_bounds", [&] { return check_inequalities(max_n, limits); }));
    out.push_back(tagged("path_prop",
                         [&] { return check_closed_form("path_prop", Family::Path, 2, 20, limits); }));
    out.push_back(tagged("cycle_prop",
                         [&] { return check_closed_form("cycle_prop", Family::Cycle, 3, 20, limits); }));
    out.push_back(tagged("balanced_cycle", [&] { return check_balanced_cycles(max_n, limits); }));
    out.push_back(tagged("positive_disconnected", [&] { return check_positive_disconnected(max_n); }));
    out.push_back(tagged("star_prop",
                         [&] { return check_closed_form("star_prop", Family::Star, 1, 20, limits); }));
    out.push_back(tagged("complete_prop", [&] {
        return check_closed_form("complete_prop", Family::Complete, 2, 16, limits);
    }));
    out.push_back(tagged("tree_star", [&] { return check_tree_characterization(max_n, limits); }));
    out.push_back(tagged("corona_cycle", [&] { return check_corona_cycle(max_n); }));
    out.push_back(tagged("corona_complete", [&] { return check_corona_complete(max_n); }));
    out.push_back(tagged("bridge", [&] { return check_bridge(); }));
    return out;
}

std::string_view to_string(Classification c) {
    switch (c) {
        case Classification::Complete: return "complete";
        case Classification::OddStar: return "odd_star";
        case Classification::Other: return "other";
    }
    return "unknown";
}

bool is_complete_graph(const Graph& g) {
    return g.size() == g.order() * (g.order() - 1) / 2;
}

bool is_odd_star(const Graph& g) {
    const int n = g.order();
    if (n < 2 || g.size() != n - 1 || (n - 1) % 2 == 0) return false;
    for (Vertex v = 0; v < n; ++v) {
        if (g.degree(v) == n - 1) return true;
    }
    return false;
}

std::vector<Graph> tree_filter(const std::vector<Graph>& graphs) {
    std::vector<Graph> out;
    for (const Graph& g : graphs) {
        if (is_tree(g)) out.push_back(g);
    }
    return out;
}

namespace {

void scan_one(const Graph& g, const SolverLimits& limits, ScanResult& result) {
    std::string g6;
    try {
        g6 = write_graph6(g);
    } catch (const Error& e) {
        result.summary.skipped.push_back({"n=" + std::to_string(g.order()), e.what()});
        return;
    }
    if (g.order() < 1 || !is_connected(g)) {
        result.summary.skipped.push_back({g6, "not connected; skipped"});
        return;
    }
    if (g.order() > limits.exact_limit) {
        result.summary.skipped.push_back(
            {g6, "n=" + std::to_string(g.order()) + " exceeds the exact limit " +
                     std::to_string(limits.exact_limit)});
        return;
    }
    ConjectureRecord r;
    r.graph6 = g6;
    r.n = g.order();
    r.m = g.size();
    r.spectrum = sigma_spectrum(g, limits);
    r.singleton = r.spectrum.singleton;
    r.complete = is_complete_graph(g);
    r.odd_star = is_odd_star(g);
    r.classification = r.complete   ? Classification::Complete
                       : r.odd_star ? Classification::OddStar
                                    : Classification::Other;
    result.records.push_back(std::move(r));
}

void summarize(ScanResult& result) {
    std::sort(result.records.begin(), result.records.end(),
              [](const ConjectureRecord& a, const ConjectureRecord& b) {
                  return a.n != b.n ? a.n < b.n : a.graph6 < b.graph6;
              });
    auto& s = result.summary;
    s.scanned = static_cast<int>(result.records.size());
    for (const auto& r : result.records) {
        if (!r.singleton) continue;
        ++s.singletons;
        if (r.complete) s.complete.push_back(r.graph6);
        if (r.odd_star) s.odd_star.push_back(r.graph6);
        if (!r.complete && !r.odd_star) s.other.push_back(r.graph6);
    }
}

}  // namespace

ScanResult conjecture_scan(const std::vector<Graph>& graphs, const SolverLimits& limits) {
    ScanResult result;
    for (const Graph& g : graphs) scan_one(g, limits, result);
    summarize(result);
    return result;
}

ScanResult conjecture_scan_enumerated(int max_n, const SolverLimits& limits) {
    if (max_n < 1 || max_n > kMaxEnumerationOrder) {
        throw UnsupportedSizeError("built-in enumeration covers n <= " +
                                   std::to_string(kMaxEnumerationOrder) + ", got " +
                                   std::to_string(max_n) + "; scan a graph6 file instead");
    }
    ScanResult result;
    for (int n = 1; n <= max_n; ++n) {
        for_each_connected(n, [&](const Graph& g) { scan_one(g, limits, result); });
    }
    summarize(result);
    return result;
}

ScanResult conjecture_scan_lines(const std::vector<Graph6Line>& lines, const SolverLimits& limits) {
    ScanResult result;
    for (const auto& line : lines) {
        try {
            scan_one(parse_graph6(line.text), limits, result);
        } catch (const Error& e) {
            result.summary.skipped.push_back(
                {"line " + std::to_string(line.line_number) + " '" + line.text + "'", e.what()});
        }
    }
    summarize(result);
    return result;
}

}  // namespace parsig
