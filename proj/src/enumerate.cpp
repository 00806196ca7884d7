#include "parsig/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "parsig/errors.hpp"

namespace parsig {

namespace {

int pair_count(int n) { return n * (n - 1) / 2; }

// Bit position (from the most significant end) of {u,v}, u < v.
int pair_position(Vertex u, Vertex v) { return v * (v - 1) / 2 + u; }

// For every permutation, the image position of each upper-triangle slot.
struct PermutationTable {
    int n = 0;
    int slots = 0;
    std::vector<std::vector<int>> images;

    explicit PermutationTable(int order) : n(order), slots(pair_count(order)) {
        std::vector<Vertex> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        do {
            std::vector<int> img(static_cast<std::size_t>(slots));
            for (Vertex v = 1; v < n; ++v) {
                for (Vertex u = 0; u < v; ++u) {
                    const Vertex a = perm[static_cast<std::size_t>(u)];
                    const Vertex b = perm[static_cast<std::size_t>(v)];
                    img[static_cast<std::size_t>(pair_position(u, v))] =
                        a < b ? pair_position(a, b) : pair_position(b, a);
                }
            }
            images.push_back(std::move(img));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }

    std::uint64_t apply(std::size_t which, std::uint64_t code) const {
        std::uint64_t out = 0;
        const auto& img = images[which];
        for (int k = 0; k < slots; ++k) {
            if ((code >> (slots - 1 - k)) & 1) {
                out |= std::uint64_t{1} << (slots - 1 - img[static_cast<std::size_t>(k)]);
            }
        }
        return out;
    }
};

const PermutationTable& table_for(int n) {
    static std::vector<PermutationTable> tables = [] {
        std::vector<PermutationTable> t;
        for (int k = 0; k <= kMaxCanonicalOrder; ++k) t.emplace_back(k);
        return t;
    }();
    return tables[static_cast<std::size_t>(n)];
}

bool is_canonical_code(const PermutationTable& table, std::uint64_t code) {
    for (std::size_t p = 0; p < table.images.size(); ++p) {
        if (table.apply(p, code) < code) return false;
    }
    return true;
}

bool code_connected(int n, std::uint64_t code) {
    if (n <= 1) return true;
    const int slots = pair_count(n);
    std::vector<VertexMask> rows(static_cast<std::size_t>(n), 0);
    for (Vertex v = 1; v < n; ++v) {
        for (Vertex u = 0; u < v; ++u) {
            if ((code >> (slots - 1 - pair_position(u, v))) & 1) {
                rows[static_cast<std::size_t>(u)] |= VertexMask{1} << v;
                rows[static_cast<std::size_t>(v)] |= VertexMask{1} << u;
            }
        }
    }
    VertexMask seen = 1;
    VertexMask frontier = 1;
    while (frontier) {
        VertexMask grown = 0;
        for (VertexMask f = frontier; f; f &= f - 1) {
            grown |= rows[static_cast<std::size_t>(std::countr_zero(f))];
        }
        frontier = grown & ~seen;
        seen |= grown;
    }
    return std::popcount(seen) == n;
}

void require_canonical_order(int n) {
    if (n < 0 || n > kMaxCanonicalOrder) {
        throw UnsupportedSizeError("canonical form is brute force and limited to n <= " +
                                   std::to_string(kMaxCanonicalOrder) + ", got n=" +
                                   std::to_string(n));
    }
}

}  // namespace

std::uint64_t adjacency_code(const Graph& g) {
    const int n = g.order();
    if (pair_count(n) > 64) {
        throw UnsupportedSizeError("adjacency code needs n <= 11, got n=" + std::to_string(n));
    }
    const int slots = pair_count(n);
    std::uint64_t code = 0;
    for (const Edge& e : g.edges()) {
        code |= std::uint64_t{1} << (slots - 1 - pair_position(e.u, e.v));
    }
    return code;
}

Graph graph_from_code(int n, std::uint64_t code) {
    Graph g(n);
    const int slots = pair_count(n);
    for (Vertex v = 1; v < n; ++v) {
        for (Vertex u = 0; u < v; ++u) {
            if ((code >> (slots - 1 - pair_position(u, v))) & 1) g.add_edge(u, v);
        }
    }
    return g;
}

std::string code_string(int n, std::uint64_t code) {
    const int slots = pair_count(n);
    std::string s(static_cast<std::size_t>(slots), '0');
    for (int k = 0; k < slots; ++k) {
        if ((code >> (slots - 1 - k)) & 1) s[static_cast<std::size_t>(k)] = '1';
    }
    return s;
}

std::uint64_t canonical_code(const Graph& g) {
    require_canonical_order(g.order());
    const auto& table = table_for(g.order());
    const std::uint64_t code = adjacency_code(g);
    std::uint64_t best = code;
    for (std::size_t p = 0; p < table.images.size(); ++p) {
        best = std::min(best, table.apply(p, code));
    }
    return best;
}

Graph canonical_form(const Graph& g) { return graph_from_code(g.order(), canonical_code(g)); }

void for_each_connected(int n, const std::function<void(const Graph&)>& visit) {
    if (n < 1 || n > kMaxEnumerationOrder) {
        throw UnsupportedSizeError("built-in enumeration covers 1 <= n <= " +
                                   std::to_string(kMaxEnumerationOrder) + ", got n=" +
                                   std::to_string(n) +
                                   "; generate larger graphs externally and read them as graph6");
    }
    const auto& table = table_for(n);
    const std::uint64_t limit = std::uint64_t{1} << pair_count(n);
    for (std::uint64_t code = 0; code < limit; ++code) {
        if (code_connected(n, code) && is_canonical_code(table, code)) {
            visit(graph_from_code(n, code));
        }
    }
}

std::vector<Graph> enumerate_connected(int n) {
    std::vector<Graph> out;
    for_each_connected(n, [&](const Graph& g) { out.push_back(g); });
    return out;
}

std::vector<Graph> enumerate_trees(int n) {
    if (n < 1 || n > kMaxTreeEnumerationOrder) {
        throw UnsupportedSizeError("tree enumeration covers 1 <= n <= " +
                                   std::to_string(kMaxTreeEnumerationOrder) + ", got n=" +
                                   std::to_string(n));
    }
    if (n == 1) return {Graph(1)};
    const auto& table = table_for(n);
    const int slots = pair_count(n);
    const int edges = n - 1;
    std::vector<std::uint64_t> codes;
    // Gosper's hack over every slot mask with exactly n-1 bits.
    std::uint64_t mask = (std::uint64_t{1} << edges) - 1;
    const std::uint64_t limit = std::uint64_t{1} << slots;
    while (mask < limit) {
        if (code_connected(n, mask) && is_canonical_code(table, mask)) codes.push_back(mask);
        const std::uint64_t c = mask & (~mask + 1);
        const std::uint64_t r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
    }
    std::sort(codes.begin(), codes.end());
    std::vector<Graph> out;
    for (std::uint64_t c : codes) out.push_back(graph_from_code(n, c));
    return out;
}

}  // namespace parsig
