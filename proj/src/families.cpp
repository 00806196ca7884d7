#include "parsig/families.hpp"

#include <array>
#include <charconv>
#include <string>
#include <utility>

#include "parsig/errors.hpp"

namespace parsig {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 7> kNames{{
    {Family::Path, "path"},
    {Family::Cycle, "cycle"},
    {Family::Star, "star"},
    {Family::Complete, "complete"},
    {Family::CompleteBipartite, "complete_bipartite"},
    {Family::CoronaCycleK1, "corona_cycle_k1"},
    {Family::CoronaCompleteK1, "corona_complete_k1"},
}};

int param_count(Family f) { return f == Family::CompleteBipartite ? 2 : 1; }

void require(bool ok, const FamilySpec& spec, std::string_view constraint) {
    if (!ok) {
        throw InputError("family " + to_string(spec) + " violates " + std::string(constraint));
    }
}

Graph cycle_graph(int n) {
    Graph g(n);
    for (Vertex i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    g.add_edge(n - 1, 0);
    return g;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (Vertex v = 1; v < n; ++v) {
        for (Vertex u = 0; u < v; ++u) g.add_edge(u, v);
    }
    return g;
}

}  // namespace

std::string_view family_name(Family f) {
    for (const auto& [fam, name] : kNames) {
        if (fam == f) return name;
    }
    return "unknown";
}

FamilySpec parse_family(std::string_view text) {
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) {
        throw InputError("family '" + std::string(text) + "' must look like name:params");
    }
    const std::string_view name = text.substr(0, colon);
    FamilySpec spec;
    bool found = false;
    for (const auto& [fam, fname] : kNames) {
        if (fname == name) {
            spec.family = fam;
            found = true;
        }
    }
    if (!found) throw InputError("unknown family '" + std::string(name) + "'");

    std::string_view rest = text.substr(colon + 1);
    while (true) {
        const auto comma = rest.find(',');
        const std::string_view tok = rest.substr(0, comma);
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc{} || ptr != tok.data() + tok.size() || tok.empty()) {
            throw InputError("family parameter '" + std::string(tok) + "' in '" +
                             std::string(text) + "' is not an integer");
        }
        spec.params.push_back(value);
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
    }
    validate(spec);
    return spec;
}

std::string to_string(const FamilySpec& spec) {
    std::string out(family_name(spec.family));
    out += ':';
    for (std::size_t i = 0; i < spec.params.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(spec.params[i]);
    }
    return out;
}

void validate(const FamilySpec& spec) {
    const int want = param_count(spec.family);
    require(static_cast<int>(spec.params.size()) == want, spec,
            want == 1 ? "exactly one parameter" : "exactly two parameters");
    const int n = spec.params[0];
    switch (spec.family) {
        case Family::Path:
            require(n >= 1 && n <= kMaxVertices, spec, "path n >= 1 (and n <= 64)");
            break;
        case Family::Cycle:
            require(n >= 3 && n <= kMaxVertices, spec, "cycle n >= 3 (and n <= 64)");
            break;
        case Family::Star:
            require(n >= 1 && n + 1 <= kMaxVertices, spec, "star leaves n >= 1 (and n <= 63)");
            break;
        case Family::Complete:
            require(n >= 1 && n <= kMaxVertices, spec, "complete n >= 1 (and n <= 64)");
            break;
        case Family::CompleteBipartite: {
            const int b = spec.params[1];
            require(n >= 1 && b >= 1 && n + b <= kMaxVertices, spec,
                    "complete_bipartite a,b >= 1 (and a+b <= 64)");
            break;
        }
        case Family::CoronaCycleK1:
            require(n >= 3 && 2 * n <= kMaxVertices, spec, "corona_cycle_k1 n >= 3 (and n <= 32)");
            break;
        case Family::CoronaCompleteK1:
            require(n >= 1 && 2 * n <= kMaxVertices, spec,
                    "corona_complete_k1 n >= 1 (and n <= 32)");
            break;
    }
}

Graph build_family(const FamilySpec& spec) {
    validate(spec);
    const int n = spec.params[0];
    switch (spec.family) {
        case Family::Path: {
            Graph g(n);
            for (Vertex i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
            return g;
        }
        case Family::Cycle:
            return cycle_graph(n);
        case Family::Star: {
            Graph g(n + 1);
            for (Vertex leaf = 1; leaf <= n; ++leaf) g.add_edge(0, leaf);
            return g;
        }
        case Family::Complete:
            return complete_graph(n);
        case Family::CompleteBipartite: {
            const int b = spec.params[1];
            Graph g(n + b);
            for (Vertex x = 0; x < n; ++x) {
                for (Vertex y = n; y < n + b; ++y) g.add_edge(x, y);
            }
            return g;
        }
        case Family::CoronaCycleK1:
            return corona(cycle_graph(n), Graph(1));
        case Family::CoronaCompleteK1:
            return corona(complete_graph(n), Graph(1));
    }
    throw InputError("unhandled family");
}

Graph corona(const Graph& base, const Graph& attached) {
    const int j = base.order();
    const int k = attached.order();
    if (j < 1) throw InputError("corona needs a base graph with at least one vertex");
    if (j * (1 + k) > kMaxVertices) {
        throw InputError("corona would have " + std::to_string(j * (1 + k)) +
                         " vertices, more than 64");
    }
    Graph g(j * (1 + k));
    for (const Edge& e : base.edges()) g.add_edge(e.u, e.v);
    for (Vertex i = 0; i < j; ++i) {
        const Vertex offset = j + i * k;
        for (Vertex x = 0; x < k; ++x) g.add_edge(i, offset + x);
        for (const Edge& e : attached.edges()) g.add_edge(offset + e.u, offset + e.v);
    }
    return g;
}

Graph disjoint_union(const Graph& first, const Graph& second) {
    const int shift = first.order();
    if (shift + second.order() > kMaxVertices) {
        throw InputError("union would exceed 64 vertices");
    }
    Graph g(shift + second.order());
    for (const Edge& e : first.edges()) g.add_edge(e.u, e.v);
    for (const Edge& e : second.edges()) g.add_edge(shift + e.u, shift + e.v);
    return g;
}

Graph bridge_join(const Graph& first, Vertex u, const Graph& second, Vertex v) {
    if (u < 0 || u >= first.order()) {
        throw InputError("bridge endpoint u=" + std::to_string(u) + " outside the first graph (n=" +
                         std::to_string(first.order()) + ")");
    }
    if (v < 0 || v >= second.order()) {
        throw InputError("bridge endpoint v=" + std::to_string(v) +
                         " outside the second graph (n=" + std::to_string(second.order()) + ")");
    }
    Graph g = disjoint_union(first, second);
    g.add_edge(u, first.order() + v);
    return g;
}

}  // namespace parsig
