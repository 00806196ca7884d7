#include <random>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "parsig/errors.hpp"
#include "parsig/families.hpp"
#include "parsig/graph6.hpp"

using namespace parsig;

// Expected strings produced by networkx.to_graph6_bytes.
TEST_CASE("graph6 reference records") {
    CHECK(write_graph6(build_family(FamilySpec::complete(3))) == "Bw");
    CHECK(write_graph6(build_family(FamilySpec::complete(4))) == "C~");
    CHECK(write_graph6(Graph(2)) == "A?");
    CHECK(write_graph6(Graph(1)) == "@");
    CHECK(write_graph6(build_family(FamilySpec::path(4))) == "Ch");
    CHECK(write_graph6(build_family(FamilySpec::cycle(5))) == "Dhc");
    CHECK(write_graph6(build_family(FamilySpec::complete(8))) == "G~~~~{");
    CHECK(write_graph6(build_family(FamilySpec::star(5))) == "Esa?");

    Graph custom(10, {{0, 9}, {3, 7}, {1, 2}, {4, 8}});
    CHECK(write_graph6(custom) == "IG???_G_?");

    const Graph petersen(10, {{0, 1}, {0, 4}, {0, 5}, {1, 2}, {1, 6}, {2, 3}, {2, 7}, {3, 4},
                              {3, 8}, {4, 9}, {5, 7}, {5, 8}, {6, 8}, {6, 9}, {7, 9}});
    CHECK(write_graph6(petersen) == "IheA@GUAo");
    CHECK(parse_graph6("IheA@GUAo") == petersen);
}

TEST_CASE("parse_graph6 decodes") {
    CHECK(parse_graph6("Bw") == build_family(FamilySpec::complete(3)));
    CHECK(parse_graph6("C~").size() == 6);
    CHECK(parse_graph6("@") == Graph(1));
    CHECK(parse_graph6(">>graph6<<Bw\n") == build_family(FamilySpec::complete(3)));
    CHECK(parse_graph6("?") == Graph(0));
}

TEST_CASE("parse_graph6 errors") {
    CHECK_THROWS_AS(parse_graph6("~?@?"), UnsupportedSizeError);
    CHECK_THROWS_AS(parse_graph6("B\x7f"), MalformedRecordError);
    CHECK_THROWS_AS(parse_graph6("B "), MalformedRecordError);  // trimmed -> short
    CHECK_THROWS_AS(parse_graph6("B!"), MalformedRecordError);
    CHECK_THROWS_AS(parse_graph6("Bx"), MalformedRecordError);  // pad bit set
    CHECK_THROWS_AS(parse_graph6("Bww"), MalformedRecordError);
    CHECK_THROWS_AS(parse_graph6(""), MalformedRecordError);
    CHECK_THROWS_AS(write_graph6(Graph(63)), UnsupportedSizeError);
}

TEST_CASE("size byte boundaries") {
    const Graph p62 = build_family(FamilySpec::path(62));
    const std::string text = write_graph6(p62);
    CHECK(text.size() == 317);
    CHECK(text.substr(0, 5) == "}hCGG");
    CHECK(parse_graph6(text) == p62);
}

TEST_CASE("graph6 round trip on random graphs") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = static_cast<int>(rng() % 63);
        const Graph g = oracle::random_graph(n, 0.1 + 0.8 * static_cast<double>(rng() % 100) / 100.0, rng);
        const Graph back = parse_graph6(write_graph6(g));
        CHECK(back == g);
        CHECK(back.edges() == g.edges());
    }
}

TEST_CASE("read_graph6_lines strips headers and blanks") {
    std::istringstream in(">>graph6<<Bw\n\nC~\r\n  @  \n");
    const auto lines = read_graph6_lines(in);
    REQUIRE(lines.size() == 3);
    CHECK(lines[0].text == "Bw");
    CHECK(lines[1].text == "C~");
    CHECK(lines[1].line_number == 3);
    CHECK(lines[2].text == "@");
}
