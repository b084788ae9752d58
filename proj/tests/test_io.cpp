#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "bcc/generators.hpp"
#include "bcc/io.hpp"
#include "bcc/rng.hpp"

using namespace bcc;

TEST_CASE("graph round trip with comments and blank lines") {
    std::istringstream in(
        "# a triangle\n"
        "n 3\n"
        "\n"
        "e 2 3\n"
        "e 1 2\n"
        "e 1 3\n");
    Graph g = parse_graph(in);
    CHECK(g.vertex_count() == 3);
    CHECK(format_graph(g) == "n 3\ne 1 2\ne 1 3\ne 2 3\n");
}

TEST_CASE("system round trip") {
    std::istringstream in(
        "n 4\n"
        "b 1 2 | 3 4\n"
        "# comment\n"
        "b 1 3 | 2 4\n");
    BicliqueSystem s = parse_system(in);
    CHECK(s.universe() == 4);
    REQUIRE(s.size() == 2);
    CHECK(format_system(s) == "n 4\nb 1 2 | 3 4\nb 1 3 | 2 4\n");
}

TEST_CASE("parse errors carry line numbers") {
    auto line_of = [](const std::string& text) {
        std::istringstream in(text);
        try {
            parse_graph(in);
        } catch (const ParseError& e) {
            return e.line;
        }
        return -1;
    };
    CHECK(line_of("n 3\ne 1\n") == 2);
    CHECK(line_of("n 3\ne 1 2\nx 1 3\n") == 3);
    CHECK(line_of("e 1 2\n") == 1);       // header missing
    CHECK(line_of("n 3\ne 1 4\n") == 2);  // out of range
    CHECK(line_of("n 3\ne 2 2\n") == 2);  // self loop
    CHECK(line_of("n x\n") == 1);

    std::istringstream sys_in("n 3\nb 1 2 3\n");  // missing separator
    CHECK_THROWS_AS(parse_system(sys_in), ParseError);
    std::istringstream sys_range("n 3\nb 1 | 9\n");
    CHECK_THROWS_AS(parse_system(sys_range), ParseError);
}

TEST_CASE("serialization is stable under re-parsing") {
    Rng rng(17);
    for (int iter = 0; iter < 30; ++iter) {
        int n = rng.range(8, 50);
        int m = rng.range(1, std::max(1, n / 5));
        BicliqueSystem s = random_biclique_union(n, m, rng.next());
        std::string text = format_system(s);
        std::istringstream in(text);
        CHECK(format_system(parse_system(in)) == text);

        Graph g = union_graph(s);
        std::string gtext = format_graph(g);
        std::istringstream gin(gtext);
        CHECK(format_graph(parse_graph(gin)) == gtext);
    }
}

TEST_CASE("zero-vertex and zero-edge graphs serialize") {
    std::istringstream in("n 0\n");
    Graph g = parse_graph(in);
    CHECK(g.vertex_count() == 0);
    CHECK(format_graph(g) == "n 0\n");
}
