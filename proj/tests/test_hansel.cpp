#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bcc/generators.hpp"
#include "bcc/hansel.hpp"
#include "bcc/rng.hpp"
#include "support.hpp"

using namespace bcc;
using bcc::testsupport::sys;

namespace {
BicliqueSystem k4_code_cover() { return sys(4, {{{1, 2}, {3, 4}}, {{1, 3}, {2, 4}}}); }
BicliqueSystem two_disjoint_edges() { return sys(4, {{{1}, {2}}, {{3}, {4}}}); }
}  // namespace

TEST_CASE("expected_survivors closed forms") {
    CHECK(expected_survivors(k4_code_cover()) == Dyadic::from_integer(1));
    CHECK(expected_survivors(two_disjoint_edges()) == Dyadic::from_integer(2));
    CHECK(expected_survivors(BicliqueSystem(3)) == Dyadic::from_integer(3));
}

TEST_CASE("randomized extraction follows the seeded side choices") {
    BicliqueSystem empty(5);
    ExtractionResult all = randomized_extract(empty, 123);
    CHECK(all.survivors == VertexSet::full(5));
    CHECK(all.guarantee == Dyadic::from_integer(5));

    // one biclique ({1},{2}): bit 0 of the first draw picks the deleted side
    BicliqueSystem one = sys(2, {{{1}, {2}}});
    bool saw_left = false, saw_right = false;
    for (std::uint64_t seed = 0; seed < 64; ++seed) {
        bool deletes_right = Rng(seed).next() & 1ULL;
        ExtractionResult r = randomized_extract(one, seed);
        if (deletes_right) {
            CHECK(r.survivors == make_set(2, {1}));
            saw_right = true;
        } else {
            CHECK(r.survivors == make_set(2, {2}));
            saw_left = true;
        }
    }
    CHECK(saw_left);
    CHECK(saw_right);
}

TEST_CASE("every K_4 code cover side choice leaves one survivor") {
    // all four combinations leave exactly one vertex, so the mean is 1
    CHECK(enumerate_mean_survivors_serial(k4_code_cover()) == Dyadic::from_integer(1));
    Graph k4 = union_graph(k4_code_cover());
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        ExtractionResult r = randomized_extract(k4_code_cover(), seed);
        CHECK(r.survivors.size() == 1);
        CHECK(is_independent(k4, r.survivors));
    }
}

TEST_CASE("seed determinism") {
    BicliqueSystem s = random_biclique_union(20, 4, 9);
    for (std::uint64_t seed : {0ULL, 7ULL, 1ULL << 60}) {
        ExtractionResult a = randomized_extract(s, seed);
        ExtractionResult b = randomized_extract(s, seed);
        CHECK(a.survivors == b.survivors);
    }
}

TEST_CASE("derandomized extraction meets hand-checked guarantees") {
    ExtractionResult one = derandomized_extract(sys(2, {{{1}, {2}}}));
    CHECK(one.guarantee == Dyadic::from_integer(1));
    CHECK(one.survivors.size() >= 1);

    ExtractionResult code = derandomized_extract(k4_code_cover());
    CHECK(code.guarantee == Dyadic::from_integer(1));
    CHECK(code.survivors.size() == 1);  // alpha(K_4) = 1 caps it
    CHECK(is_independent(union_graph(k4_code_cover()), code.survivors));

    ExtractionResult pair = derandomized_extract(two_disjoint_edges());
    CHECK(pair.guarantee == Dyadic::from_integer(2));
    CHECK(pair.survivors.size() >= 2);
    CHECK(is_independent(union_graph(two_disjoint_edges()), pair.survivors));
}

TEST_CASE("derandomized guarantee and independence on generated covers") {
    Rng rng(13);
    for (int iter = 0; iter < 40; ++iter) {
        int n = rng.range(8, 60);
        int m = rng.range(1, std::max(1, std::min(10, n / 4)));
        BicliqueSystem s = random_biclique_union(n, m, rng.next());
        CoverStats stats = cover_stats(s);
        ExtractionResult r = derandomized_extract(s);
        CHECK(is_independent(union_graph(s), r.survivors));
        CHECK(BigInt(r.survivors.size()) >= r.guarantee.ceil());
        // Jensen: expectation >= n * 2^(-w/n)
        double jensen = n * std::exp2(-static_cast<double>(stats.weight) / n);
        CHECK(r.guarantee.to_double() >= jensen - 1e-12);
    }
    for (int k = 2; k <= 32; ++k) {
        BicliqueSystem s = ks_code_cover(k);
        ExtractionResult r = derandomized_extract(s);
        CHECK(is_independent(union_graph(s), r.survivors));
        CHECK(BigInt(r.survivors.size()) >= r.guarantee.ceil());
    }
}

TEST_CASE("enumeration oracle equals the expectation exactly") {
    CHECK(enumerate_mean_survivors(k4_code_cover()) == Dyadic::from_integer(1));
    CHECK(enumerate_mean_survivors(sys(2, {{{1}, {2}}})) == Dyadic::from_integer(1));
    CHECK(enumerate_mean_survivors(BicliqueSystem(3)) == Dyadic::from_integer(3));

    Rng rng(29);
    for (int iter = 0; iter < 25; ++iter) {
        int n = rng.range(8, 40);
        int m = rng.range(1, std::max(1, std::min(10, n / 4)));
        BicliqueSystem s = random_biclique_union(n, m, rng.next());
        Dyadic expected = expected_survivors(s);
        CHECK(enumerate_mean_survivors(s) == expected);
        CHECK(enumerate_mean_survivors_serial(s) == expected);
    }
}

TEST_CASE("enumeration guard") {
    BicliqueSystem s = random_biclique_union(120, 21, 3);
    CHECK_THROWS_AS(enumerate_mean_survivors(s), ResourceError);
    try {
        enumerate_mean_survivors_serial(s);
        FAIL("expected guard error");
    } catch (const ResourceError& e) {
        CHECK(e.kind == ResourceError::Kind::Guard);
    }
}

TEST_CASE("randomized sweep matches per-seed extraction, serial and parallel") {
    BicliqueSystem s = random_biclique_union(30, 6, 55);
    SweepResult par = randomized_sweep(s, 100, 200);
    SweepResult ser = randomized_sweep_serial(s, 100, 200);
    CHECK(par.survivor_counts == ser.survivor_counts);
    CHECK(par.all_independent == ser.all_independent);
    CHECK(par.all_independent);
    for (int i = 0; i < 200; ++i) {
        ExtractionResult r = randomized_extract(s, 100 + static_cast<std::uint64_t>(i));
        CHECK(r.survivors.size() == par.survivor_counts[i]);
    }
}

TEST_CASE("hansel_lower_bound") {
    CHECK(hansel_lower_bound(4, 1) == doctest::Approx(8.0).epsilon(1e-12));
    CHECK(hansel_lower_bound(8, 2) == doctest::Approx(16.0).epsilon(1e-12));
    CHECK(hansel_lower_bound(7, 7) == doctest::Approx(0.0));
    CHECK_THROWS_AS(hansel_lower_bound(4, 0), DomainError);
    CHECK_THROWS_AS(hansel_lower_bound(4, 5), DomainError);
}

TEST_CASE("structural validation is enforced") {
    BicliqueSystem bad(3);
    bad.add(Biclique{make_set(3, {1}), make_set(3, {})});
    CHECK_THROWS_AS(expected_survivors(bad), StructureError);
    CHECK_THROWS_AS(derandomized_extract(bad), StructureError);
    CHECK_THROWS_AS(randomized_extract(bad, 0), StructureError);
}
