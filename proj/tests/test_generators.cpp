#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bcc/generators.hpp"
#include "bcc/graph_core.hpp"
#include "bcc/rng.hpp"

using namespace bcc;

TEST_CASE("complete graphs") {
    CHECK(complete_graph(1).edges().empty());
    CHECK(complete_graph(3).edges().size() == 3);
    CHECK(complete_graph(5).edges().size() == 10);
    CHECK_THROWS_AS(complete_graph(0), DomainError);
}

TEST_CASE("complete multipartite graphs") {
    Graph k3 = complete_multipartite({1, 1, 1});
    CHECK(k3.edges() == complete_graph(3).edges());

    Graph c4 = complete_multipartite({2, 2});
    CHECK(c4.edges() == std::vector<Edge>{{1, 3}, {1, 4}, {2, 3}, {2, 4}});

    Graph p = complete_multipartite({1, 2});
    CHECK(p.edges() == std::vector<Edge>{{1, 2}, {1, 3}});

    CHECK_THROWS_AS(complete_multipartite({}), DomainError);
    CHECK_THROWS_AS(complete_multipartite({1, 0}), DomainError);
}

TEST_CASE("star partitions match the classical construction") {
    BicliqueSystem s3 = gp_star_partition({1, 1, 1});
    REQUIRE(s3.size() == 2);
    CHECK(s3.biclique(0).left == make_set(3, {1}));
    CHECK(s3.biclique(0).right == make_set(3, {2, 3}));
    CHECK(s3.biclique(1).left == make_set(3, {2}));
    CHECK(s3.biclique(1).right == make_set(3, {3}));

    BicliqueSystem s4 = gp_star_partition({1, 1, 1, 1});
    CHECK(s4.size() == 3);
    CHECK(validate_partition(s4).is_partition);
    CHECK(union_graph(s4).edges() == complete_graph(4).edges());

    BicliqueSystem kb = gp_star_partition({2, 2});
    REQUIRE(kb.size() == 1);
    CHECK(kb.biclique(0).left == make_set(4, {1, 2}));
    CHECK(kb.biclique(0).right == make_set(4, {3, 4}));

    CHECK(gp_star_partition({5}).size() == 0);
}

TEST_CASE("star partitions partition their multipartite host") {
    for (auto sizes : std::vector<std::vector<int>>{
             {1, 1, 1, 1, 1}, {2, 3, 1}, {4, 4}, {1, 2, 3, 4}, {3, 1, 2}}) {
        BicliqueSystem s = gp_star_partition(sizes);
        CHECK(s.size() == static_cast<int>(sizes.size()) - 1);
        CHECK(validate_partition(s).is_partition);
        Graph host = complete_multipartite(sizes);
        CHECK(union_graph(s).edges() == host.edges());
        CHECK(validate_cover(s, host).covers);
    }
}

TEST_CASE("code covers") {
    BicliqueSystem c4 = ks_code_cover(4);
    REQUIRE(c4.size() == 2);
    CHECK(c4.biclique(0).left == make_set(4, {1, 3}));   // bit 0 zeros
    CHECK(c4.biclique(0).right == make_set(4, {2, 4}));  // bit 0 ones
    CHECK(c4.biclique(1).left == make_set(4, {1, 2}));
    CHECK(c4.biclique(1).right == make_set(4, {3, 4}));
    CHECK(cover_stats(c4).weight == 8);
    CHECK(validate_cover(c4, complete_graph(4)).covers);

    BicliqueSystem c2 = ks_code_cover(2);
    REQUIRE(c2.size() == 1);
    CHECK(c2.biclique(0).left == make_set(2, {1}));
    CHECK(c2.biclique(0).right == make_set(2, {2}));
    CHECK(cover_stats(c2).weight == 2);

    BicliqueSystem c3 = ks_code_cover(3);
    REQUIRE(c3.size() == 2);
    CHECK(c3.biclique(0).left == make_set(3, {1, 3}));
    CHECK(c3.biclique(0).right == make_set(3, {2}));
    CHECK(c3.biclique(1).left == make_set(3, {1, 2}));
    CHECK(c3.biclique(1).right == make_set(3, {3}));
    CHECK(cover_stats(c3).weight == 6);
    CHECK(validate_cover(c3, complete_graph(3)).covers);

    CHECK_THROWS_AS(ks_code_cover(1), DomainError);
}

TEST_CASE("code covers cover K_k up to 64 with bounded weight") {
    for (int k = 2; k <= 64; ++k) {
        BicliqueSystem s = ks_code_cover(k);
        CHECK(validate_cover(s, complete_graph(k)).covers);
        int bits = 0;
        while ((1 << bits) < k) ++bits;
        CHECK(cover_stats(s).weight <= static_cast<long long>(k) * bits);
        if ((k & (k - 1)) == 0) CHECK(cover_stats(s).weight == static_cast<long long>(k) * bits);
    }
}

TEST_CASE("random unions are edge-disjoint, deterministic, and complete") {
    Rng rng(99);
    for (int iter = 0; iter < 40; ++iter) {
        int n = rng.range(8, 80);
        int m = rng.range(1, std::max(1, n / 4));
        std::uint64_t seed = rng.next();
        BicliqueSystem a = random_biclique_union(n, m, seed);
        BicliqueSystem b = random_biclique_union(n, m, seed);
        CHECK(a.size() == m);
        CHECK(validate_partition(a).is_partition);
        REQUIRE(b.size() == m);
        for (int i = 0; i < m; ++i) {
            CHECK(a.biclique(i).left == b.biclique(i).left);
            CHECK(a.biclique(i).right == b.biclique(i).right);
        }
    }
}

TEST_CASE("the two-vertex instance is forced") {
    for (std::uint64_t seed : {0ULL, 1ULL, 42ULL, 12345ULL}) {
        BicliqueSystem s = random_biclique_union(2, 1, seed);
        REQUIRE(s.size() == 1);
        CHECK(s.biclique(0).left == make_set(2, {1}));
        CHECK(s.biclique(0).right == make_set(2, {2}));
    }
}

TEST_CASE("infeasible requests raise a capacity error") {
    CHECK_THROWS_AS(random_biclique_union(2, 2, 7), GenerationError);
    CHECK_THROWS_AS(random_biclique_union(1, 1, 7), DomainError);
    CHECK_THROWS_AS(random_biclique_union(4, 0, 7), DomainError);
}
