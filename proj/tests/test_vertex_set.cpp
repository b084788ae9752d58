#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bcc/rng.hpp"
#include "bcc/vertex_set.hpp"

using bcc::VertexSet;

TEST_CASE("insert, erase, membership") {
    VertexSet s(100);
    CHECK(s.empty());
    s.insert(1);
    s.insert(64);
    s.insert(65);
    s.insert(100);
    CHECK(s.size() == 4);
    CHECK(s.contains(64));
    CHECK(s.contains(65));
    CHECK_FALSE(s.contains(2));
    s.erase(64);
    CHECK_FALSE(s.contains(64));
    CHECK(s.size() == 3);
}

TEST_CASE("full set has exactly the universe") {
    for (int n : {1, 63, 64, 65, 130}) {
        VertexSet s = VertexSet::full(n);
        CHECK(s.size() == n);
        CHECK(s.contains(1));
        CHECK(s.contains(n));
        CHECK(s.first() == 1);
    }
}

TEST_CASE("set algebra") {
    VertexSet a = bcc::make_set(10, {1, 2, 3, 7});
    VertexSet b = bcc::make_set(10, {3, 7, 9});
    CHECK((a & b) == bcc::make_set(10, {3, 7}));
    CHECK((a | b) == bcc::make_set(10, {1, 2, 3, 7, 9}));
    CHECK((a - b) == bcc::make_set(10, {1, 2}));
    CHECK(a.intersects(b));
    CHECK_FALSE(bcc::make_set(10, {1}).intersects(bcc::make_set(10, {2})));
    CHECK(bcc::make_set(10, {3, 7}).is_subset_of(a));
    CHECK_FALSE(a.is_subset_of(b));
}

TEST_CASE("iteration is ascending") {
    VertexSet s = bcc::make_set(200, {150, 3, 64, 128, 65});
    CHECK(s.to_vector() == std::vector<int>{3, 64, 65, 128, 150});
    CHECK(s.first() == 3);
}

TEST_CASE("algebra agrees with a naive model on random sets") {
    bcc::Rng rng(7);
    for (int iter = 0; iter < 200; ++iter) {
        int n = rng.range(1, 150);
        std::vector<bool> ma(n + 1, false), mb(n + 1, false);
        VertexSet a(n), b(n);
        for (int v = 1; v <= n; ++v) {
            if (rng.coin()) {
                a.insert(v);
                ma[v] = true;
            }
            if (rng.coin()) {
                b.insert(v);
                mb[v] = true;
            }
        }
        VertexSet i = a & b, u = a | b, d = a - b;
        int isz = 0, usz = 0, dsz = 0;
        for (int v = 1; v <= n; ++v) {
            if (ma[v] && mb[v]) ++isz;
            if (ma[v] || mb[v]) ++usz;
            if (ma[v] && !mb[v]) ++dsz;
            CHECK(i.contains(v) == (ma[v] && mb[v]));
            CHECK(u.contains(v) == (ma[v] || mb[v]));
            CHECK(d.contains(v) == (ma[v] && !mb[v]));
        }
        CHECK(i.size() == isz);
        CHECK(u.size() == usz);
        CHECK(d.size() == dsz);
    }
}

TEST_CASE("rng bounded draws are in range and deterministic") {
    bcc::Rng a(42), b(42);
    for (int i = 0; i < 1000; ++i) {
        int lo = 3, hi = 17;
        int x = a.range(lo, hi);
        CHECK(x >= lo);
        CHECK(x <= hi);
        CHECK(x == b.range(lo, hi));
    }
}
