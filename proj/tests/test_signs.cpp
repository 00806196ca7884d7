#include <bit>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "parsig/enumerate.hpp"
#include "parsig/errors.hpp"
#include "parsig/families.hpp"
#include "parsig/rna.hpp"
#include "parsig/signs.hpp"

using namespace parsig;

namespace {

// Signs around C_4 in walk order v0v1, v1v2, v2v3, v3v0.
std::string cycle_walk_signs(const SignedGraph& s) {
    std::string out;
    for (int i = 0; i < 4; ++i) out += static_cast<char>(s.sign(i, (i + 1) % 4));
    return out;
}

VertexMask mask_of(std::initializer_list<int> vs) {
    VertexMask m = 0;
    for (int v : vs) m |= VertexMask{1} << v;
    return m;
}

}  // namespace

TEST_CASE("labeling validation") {
    CHECK_NOTHROW(Labeling({2, 1, 3}));
    CHECK_THROWS_AS(Labeling({1, 1, 3}), InputError);
    CHECK_THROWS_AS(Labeling({0, 1, 2}), InputError);
    CHECK_THROWS_AS(Labeling({1, 2, 4}), InputError);
    CHECK(parse_labeling("1,3,2,4") == Labeling({1, 3, 2, 4}));
    CHECK(to_string(Labeling({1, 3, 2, 4})) == "1,3,2,4");
    CHECK_THROWS_AS(parse_labeling("1,,2"), InputError);
    const Graph p3 = build_family(FamilySpec::path(3));
    CHECK_THROWS_AS(induce_signs(p3, Labeling({1, 2})), InputError);
}

TEST_CASE("induce_signs on the two C_4 labelings of the figure") {
    const Graph c4 = build_family(FamilySpec::cycle(4));
    CHECK(cycle_walk_signs(induce_signs(c4, Labeling({1, 2, 3, 4}))) == "----");
    CHECK(cycle_walk_signs(induce_signs(c4, Labeling({1, 3, 2, 4}))) == "+-+-");
    const SignedGraph k2 = induce_signs(build_family(FamilySpec::complete(2)), Labeling({1, 2}));
    CHECK(sign_string(k2) == "-");
}

TEST_CASE("bipartition conversions") {
    CHECK(labeling_to_bipartition(Labeling({1, 2, 3, 4})).odd_set() == mask_of({0, 2}));
    CHECK(bipartition_to_labeling(Bipartition(mask_of({0, 1}), 4)) == Labeling({1, 3, 2, 4}));
    CHECK_THROWS_AS(Bipartition(mask_of({0}), 4), InputError);
    CHECK_THROWS_AS(Bipartition(mask_of({0, 5}), 4), InputError);
    CHECK_THROWS_AS(Bipartition(mask_of({0, 1, 2}), 4), InputError);
    CHECK_NOTHROW(Bipartition(mask_of({0, 1, 2}), 5));

    // round trip, exhaustive for n <= 8
    for (int n = 0; n <= 8; ++n) {
        for_each_balanced_bipartition(n, [&](VertexMask odd) {
            const Bipartition b(odd, n);
            CHECK(labeling_to_bipartition(bipartition_to_labeling(b)) == b);
        });
    }
}

TEST_CASE("lex_less compares sorted vertex lists") {
    CHECK(lex_less(mask_of({0, 3}), mask_of({1, 2})));
    CHECK_FALSE(lex_less(mask_of({1, 2}), mask_of({0, 3})));
    CHECK(lex_less(mask_of({0, 1}), mask_of({0, 2})));
    CHECK_FALSE(lex_less(mask_of({0, 1}), mask_of({0, 1})));
}

TEST_CASE("negative_edge_count") {
    const Graph k4 = build_family(FamilySpec::complete(4));
    for_each_balanced_bipartition(4, [&](VertexMask odd) { CHECK(negative_edge_count(k4, Bipartition(odd, 4)) == 4); });

    const Graph p4 = build_family(FamilySpec::path(4));
    CHECK(negative_edge_count(p4, Bipartition(mask_of({0, 1}), 4)) == 1);
    CHECK_THROWS_AS(negative_edge_count(p4, Bipartition(mask_of({0, 1, 2}), 5)), InputError);
}

TEST_CASE("cut identity: negative edges are the cut of the odd class (exhaustive n <= 6)") {
    for (int n = 1; n <= 6; ++n) {
        for (const Graph& g : enumerate_connected(n)) {
            const auto a = oracle::to_matrix(g);
            std::vector<int> labels(static_cast<std::size_t>(n));
            std::iota(labels.begin(), labels.end(), 1);
            do {
                const Labeling f(labels);
                const SignedGraph s = induce_signs(g, f);
                const Bipartition b = labeling_to_bipartition(f);
                REQUIRE(s.negative_count() == negative_edge_count(g, b));
                REQUIRE(s.negative_count() == oracle::negatives_under(a, labels));
                for (std::size_t i = 0; i < g.edges().size(); ++i) {
                    const Edge e = g.edges()[i];
                    REQUIRE((s.sign(i) == Sign::Negative) == (b.contains(e.u) != b.contains(e.v)));
                }
            } while (std::next_permutation(labels.begin(), labels.end()));
        }
    }
}

TEST_CASE("homogeneity") {
    const Graph p3 = build_family(FamilySpec::path(3));
    CHECK(homogeneity(induce_signs(p3, Labeling({1, 2, 3}))) == Homogeneity::AllNegative);
    CHECK(homogeneity(induce_signs(build_family(FamilySpec::cycle(4)), Labeling({1, 3, 2, 4}))) ==
          Homogeneity::Heterogeneous);
    CHECK(homogeneity(SignedGraph::uniform(Graph(1), Sign::Positive)) == Homogeneity::Edgeless);
    CHECK(homogeneity(SignedGraph::uniform(p3, Sign::Positive)) == Homogeneity::AllPositive);
}

TEST_CASE("balance") {
    const Graph c3 = build_family(FamilySpec::cycle(3));
    CHECK_FALSE(is_balanced(SignedGraph(c3, parse_signs("+-+"))));
    CHECK(is_balanced(SignedGraph(c3, parse_signs("+--"))));

    const auto col = is_balanced(SignedGraph::uniform(build_family(FamilySpec::cycle(4)), Sign::Negative));
    REQUIRE(col);
    CHECK(*col == std::vector<int>{0, 1, 0, 1});

    CHECK_FALSE(is_balanced(SignedGraph::uniform(c3, Sign::Negative)));
    CHECK_THROWS_AS(SignedGraph(c3, parse_signs("+-")), InputError);
    CHECK_THROWS_AS(parse_signs("+x"), InputError);
}

TEST_CASE("universal balance on random graphs and labelings") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 16);
        const Graph g = oracle::random_graph(n, 0.4, rng);
        const Labeling f(oracle::random_labels(n, rng));
        const SignedGraph s = induce_signs(g, f);
        CHECK(is_balanced(s));
        std::vector<int> parity(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) parity[static_cast<std::size_t>(v)] = f.label(v) % 2;
        CHECK(is_balance_coloring(s, parity));
    }
}

TEST_CASE("even cycle counts: every labeling of C_n gives an even negative count") {
    for (int n = 3; n <= 10; ++n) {
        const Graph c = build_family(FamilySpec::cycle(n));
        for_each_balanced_bipartition(n, [&](VertexMask odd) {
            CHECK(negative_edge_count(c, Bipartition(odd, n)) % 2 == 0);
        });
    }
}

TEST_CASE("connected graphs always carry a negative edge") {
    for (int n = 2; n <= 6; ++n) {
        for (const Graph& g : enumerate_connected(n)) {
            for_each_balanced_bipartition(n, [&](VertexMask odd) {
                CHECK(negative_edge_count(g, Bipartition(odd, n)) >= 1);
            });
        }
    }
}

TEST_CASE("is_parity_realizable examples") {
    const Graph c3 = build_family(FamilySpec::cycle(3));
    CHECK_FALSE(is_parity_realizable(SignedGraph::uniform(c3, Sign::Negative)));
    CHECK_FALSE(is_parity_realizable(SignedGraph::uniform(build_family(FamilySpec::complete(2)), Sign::Positive)));

    const Graph two_k2 = disjoint_union(build_family(FamilySpec::complete(2)), build_family(FamilySpec::complete(2)));
    const SignedGraph pos = SignedGraph::uniform(two_k2, Sign::Positive);
    const auto f = is_parity_realizable(pos);
    REQUIRE(f);
    CHECK(induce_signs(two_k2, *f) == pos);
    CHECK(f->is_odd(0) == f->is_odd(1));
    CHECK(f->is_odd(2) == f->is_odd(3));
    CHECK(f->is_odd(0) != f->is_odd(2));
}

TEST_CASE("all_negative_realizable") {
    CHECK(all_negative_realizable(build_family(FamilySpec::cycle(6))));
    CHECK_FALSE(all_negative_realizable(build_family(FamilySpec::cycle(5))));
    CHECK(all_negative_realizable(build_family(FamilySpec::corona_cycle_k1(4))));
    CHECK_FALSE(all_negative_realizable(build_family(FamilySpec::corona_cycle_k1(3))));
    CHECK_FALSE(all_negative_realizable(build_family(FamilySpec::star(3))));
    CHECK(all_negative_realizable(build_family(FamilySpec::path(7))));
    CHECK(all_negative_realizable(Graph(3)));
}

TEST_CASE("realizability soundness and completeness against exhaustive search") {
    // Any signature: random signs on random graphs with n <= 8. Exhaustive
    // witness search runs over all labelings through the oracle.
    std::mt19937_64 rng(17);
    int realizable = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 8);
        const Graph g = oracle::random_graph(n, 0.35, rng);
        std::vector<Sign> signs;
        const bool from_labeling = trial % 2 == 0;
        const Labeling seed_f(oracle::random_labels(n, rng));
        if (from_labeling) {
            signs = induce_signs(g, seed_f).signs();
        } else {
            for (int e = 0; e < g.size(); ++e) signs.push_back(rng() % 2 ? Sign::Positive : Sign::Negative);
        }
        const SignedGraph s(g, signs);
        const auto f = is_parity_realizable(s);
        if (f) {
            ++realizable;
            CHECK(induce_signs(g, *f) == s);
        } else {
            CHECK_FALSE(from_labeling);
            const auto a = oracle::to_matrix(g);
            std::vector<int> labels(static_cast<std::size_t>(n));
            std::iota(labels.begin(), labels.end(), 1);
            bool found = false;
            do {
                bool match = true;
                for (std::size_t i = 0; i < g.edges().size() && match; ++i) {
                    const Edge e = g.edges()[i];
                    const bool neg = labels[static_cast<std::size_t>(e.u)] % 2 != labels[static_cast<std::size_t>(e.v)] % 2;
                    match = neg == (signs[i] == Sign::Negative);
                }
                found = match;
            } while (!found && std::next_permutation(labels.begin(), labels.end()));
            CHECK_FALSE(found);
        }
    }
    CHECK(realizable >= 200);
}
