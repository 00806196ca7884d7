#include <map>

#include "doctest.h"
#include "oracles.hpp"
#include "parsig/errors.hpp"
#include "parsig/families.hpp"
#include "parsig/signs.hpp"
#include "parsig/verifier.hpp"

using namespace parsig;

namespace {

std::map<std::string, TheoremCheck> by_id(const std::vector<TheoremCheck>& checks) {
    std::map<std::string, TheoremCheck> out;
    for (const auto& c : checks) out[c.id] = c;
    return out;
}

}  // namespace

TEST_CASE("verify_theorems at max_n = 6") {
    const auto checks = by_id(verify_theorems(6));
    for (const char* id : {"negc", "nont", "subsigned", "rna_bounds", "path_prop", "cycle_prop",
                           "balanced_cycle", "positive_disconnected", "star_prop", "complete_prop",
                           "tree_star", "corona_cycle", "corona_complete", "bridge"}) {
        CAPTURE(id);
        REQUIRE(checks.count(id) == 1);
        CHECK(checks.at(id).passed);
        CHECK(checks.at(id).cases > 0);
    }
    CHECK(checks.at("negc").cases == 10);       // C_3..C_12
    CHECK(checks.at("star_prop").cases == 20);  // leaves 1..20
    CHECK(checks.at("nont").cases == 1 + 2 + 6 + 21 + 112);
    CHECK(checks.at("tree_star").cases == 1 + 1 + 2 + 3 + 6 + 11);
}

TEST_CASE("subsigned check carries a re-checkable witness pair") {
    const auto checks = by_id(verify_theorems(3));
    const auto& c = checks.at("subsigned");
    REQUIRE(c.witnesses.size() == 2);
    const Witness& host = c.witnesses[0];
    const Witness& sub = c.witnesses[1];
    const SignedGraph host_s(parse_graph6(host.graph6), parse_signs(host.signs));
    const SignedGraph sub_s(parse_graph6(sub.graph6), parse_signs(sub.signs));
    CHECK(homogeneity(host_s) == Homogeneity::AllNegative);
    CHECK(homogeneity(sub_s) == Homogeneity::AllNegative);
    REQUIRE_FALSE(host.labeling.empty());
    CHECK(induce_signs(host_s.graph(), parse_labeling(host.labeling)) == host_s);
    CHECK(sub.labeling.empty());
    // exhaustive: no labeling of K_{1,3} makes all three edges negative
    CHECK(*oracle::labeling_spectrum(sub_s.graph()).rbegin() < 3);
}

TEST_CASE("verify_theorems range checks") {
    CHECK_THROWS_AS(verify_theorems(2), InputError);
    CHECK_THROWS_AS(verify_theorems(7), InputError);
    try {
        verify_theorems(3, SolverLimits{10});
        FAIL("expected a capacity error");
    } catch (const CapacityError& e) {
        CHECK(std::string(e.what()).rfind("path_prop:", 0) == 0);
    }
}

TEST_CASE("classification predicates") {
    CHECK(is_odd_star(build_family(FamilySpec::star(3))));
    CHECK(is_odd_star(build_family(FamilySpec::complete(2))));
    CHECK_FALSE(is_odd_star(build_family(FamilySpec::star(2))));
    CHECK_FALSE(is_odd_star(build_family(FamilySpec::path(4))));
    CHECK_FALSE(is_odd_star(Graph(1)));
    CHECK(is_complete_graph(Graph(1)));
    CHECK(is_complete_graph(build_family(FamilySpec::complete(5))));
}

TEST_CASE("conjecture scan n <= 4") {
    const ScanResult r = conjecture_scan_enumerated(4);
    CHECK(r.summary.scanned == 10);
    CHECK(r.summary.singletons == 5);
    std::set<std::string> singles;
    for (const auto& rec : r.records) {
        if (rec.singleton) singles.insert(rec.graph6);
        // every spectrum re-verifies against the labeling oracle
        const auto brute = oracle::labeling_spectrum(parse_graph6(rec.graph6));
        CHECK(rec.spectrum.values == std::vector<int>(brute.begin(), brute.end()));
    }
    const std::set<std::string> want{write_graph6(Graph(1)), write_graph6(build_family(FamilySpec::complete(2))),
                                     write_graph6(build_family(FamilySpec::complete(3))),
                                     write_graph6(build_family(FamilySpec::complete(4))),
                                     write_graph6(canonical_form(build_family(FamilySpec::star(3))))};
    CHECK(singles == want);
    CHECK(r.summary.other.empty());
    // K_2 is both K_2 and K_{1,1}
    CHECK(std::count(r.summary.complete.begin(), r.summary.complete.end(), "A_") == 1);
    CHECK(std::count(r.summary.odd_star.begin(), r.summary.odd_star.end(), "A_") == 1);
}

TEST_CASE("conjecture scan on single graphs") {
    const ScanResult k5 = conjecture_scan({build_family(FamilySpec::complete(5))});
    REQUIRE(k5.records.size() == 1);
    CHECK(k5.records[0].spectrum.values == std::vector<int>{6});
    CHECK(k5.records[0].classification == Classification::Complete);

    const ScanResult p4 = conjecture_scan({build_family(FamilySpec::path(4))});
    CHECK(p4.records[0].spectrum.values == std::vector<int>{1, 2, 3});
    CHECK_FALSE(p4.records[0].singleton);
    CHECK(p4.records[0].classification == Classification::Other);
}

TEST_CASE("conjecture scan skips disconnected and unreadable records") {
    const Graph two_k2 = disjoint_union(build_family(FamilySpec::complete(2)), build_family(FamilySpec::complete(2)));
    const ScanResult r = conjecture_scan({two_k2, build_family(FamilySpec::cycle(30)), build_family(FamilySpec::cycle(4))});
    CHECK(r.records.size() == 1);
    CHECK(r.summary.skipped.size() == 2);

    const ScanResult lines = conjecture_scan_lines({{1, "Bw"}, {2, "B!"}, {3, "C~"}});
    CHECK(lines.records.size() == 2);
    REQUIRE(lines.summary.skipped.size() == 1);
    CHECK(lines.summary.skipped[0].source.find("line 2") != std::string::npos);
}

TEST_CASE("scan records sorted by (n, graph6)") {
    const ScanResult r = conjecture_scan({build_family(FamilySpec::complete(4)), build_family(FamilySpec::path(3)),
                                          build_family(FamilySpec::cycle(4)), Graph(1)});
    for (std::size_t i = 1; i < r.records.size(); ++i) {
        const auto& a = r.records[i - 1];
        const auto& b = r.records[i];
        CHECK((a.n < b.n || (a.n == b.n && a.graph6 < b.graph6)));
    }
}
