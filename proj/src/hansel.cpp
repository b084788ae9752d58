#include "bcc/hansel.hpp"

#include <cmath>
#include <string>

#include "bcc/rng.hpp"

namespace bcc {

Dyadic expected_survivors(const BicliqueSystem& system) {
    validate_structure(system);
    return dyadic_power_sum(cover_stats(system).degrees);
}

namespace {

VertexSet survivors_for_seed(const BicliqueSystem& system, std::uint64_t seed) {
    Rng rng(seed);
    VertexSet deleted(system.universe());
    for (const Biclique& b : system.bicliques())
        deleted |= (rng.next() & 1ULL) ? b.right : b.left;
    return VertexSet::full(system.universe()) - deleted;
}

}  // namespace

ExtractionResult randomized_extract(const BicliqueSystem& system, std::uint64_t seed) {
    validate_structure(system);
    return {survivors_for_seed(system, seed), expected_survivors(system)};
}

ExtractionResult derandomized_extract(const BicliqueSystem& system) {
    validate_structure(system);
    const int n = system.universe();
    const int m = system.size();
    std::vector<int> remaining = cover_stats(system).degrees;
    VertexSet alive = VertexSet::full(n);
    Dyadic current = dyadic_power_sum(remaining);
    const Dyadic initial = current;

    for (int j = 0; j < m; ++j) {
        const Biclique& b = system.biclique(j);
        // expectation after deleting one side: alive vertices outside it,
        // each with this biclique no longer pending
        auto candidate = [&](const VertexSet& side) {
            Dyadic e;
            alive.for_each([&](int v) {
                if (side.contains(v)) return;
                int d = remaining[v - 1];
                if (b.left.contains(v) || b.right.contains(v)) --d;
                e += Dyadic::pow2_neg(static_cast<unsigned>(d));
            });
            return e;
        };
        Dyadic e_left = candidate(b.left);
        Dyadic e_right = candidate(b.right);
        const Dyadic& best = e_left >= e_right ? e_left : e_right;
        if (best < current)
            throw InternalError("conditional expectation decreased at biclique " +
                                std::to_string(j + 1));
        if (e_left >= e_right)
            alive -= b.left;
        else
            alive -= b.right;
        (b.left | b.right).for_each([&](int v) { --remaining[v - 1]; });
        current = best;
    }

    if (BigInt(alive.size()) < initial.ceil())
        throw InternalError("derandomized survivor count fell below the guarantee");
    return {alive, initial};
}

Dyadic enumerate_mean_survivors_serial(const BicliqueSystem& system) {
    validate_structure(system);
    const int m = system.size();
    if (m > kEnumerationGuard)
        throw ResourceError("enumeration over 2^" + std::to_string(m) +
                                " side choices exceeds the m <= " +
                                std::to_string(kEnumerationGuard) + " guard",
                            ResourceError::Kind::Guard);
    const VertexSet all = VertexSet::full(system.universe());
    unsigned long long total = 0;
    for (std::uint64_t mask = 0; mask < (1ULL << m); ++mask) {
        VertexSet deleted(system.universe());
        for (int j = 0; j < m; ++j)
            deleted |= (mask >> j & 1ULL) ? system.biclique(j).right : system.biclique(j).left;
        total += static_cast<unsigned long long>((all - deleted).size());
    }
    return Dyadic(BigInt(total), static_cast<unsigned>(m));
}

Dyadic enumerate_mean_survivors(const BicliqueSystem& system) {
    validate_structure(system);
    const int m = system.size();
    if (m > kEnumerationGuard)
        throw ResourceError("enumeration over 2^" + std::to_string(m) +
                                " side choices exceeds the m <= " +
                                std::to_string(kEnumerationGuard) + " guard",
                            ResourceError::Kind::Guard);
    const int n = system.universe();
    // membership masks let one choice be tested with two ANDs per vertex
    std::vector<std::uint32_t> in_left(n, 0), in_right(n, 0);
    for (int j = 0; j < m; ++j) {
        system.biclique(j).left.for_each([&](int v) { in_left[v - 1] |= 1u << j; });
        system.biclique(j).right.for_each([&](int v) { in_right[v - 1] |= 1u << j; });
    }
    const std::int64_t choices = 1LL << m;
    unsigned long long total = 0;
#pragma omp parallel for schedule(static) reduction(+ : total)
    for (std::int64_t mask = 0; mask < choices; ++mask) {
        const std::uint32_t c = static_cast<std::uint32_t>(mask);
        int alive = 0;
        for (int v = 0; v < n; ++v)
            if (((in_left[v] & ~c) | (in_right[v] & c)) == 0) ++alive;
        total += static_cast<unsigned long long>(alive);
    }
    return Dyadic(BigInt(total), static_cast<unsigned>(m));
}

double hansel_lower_bound(int n, int alpha) {
    if (n < 1) throw DomainError("hansel_lower_bound requires n >= 1");
    if (alpha < 1 || alpha > n)
        throw DomainError("hansel_lower_bound requires 1 <= alpha <= n");
    return n * std::log2(static_cast<double>(n) / alpha);
}

SweepResult randomized_sweep_serial(const BicliqueSystem& system, std::uint64_t seed0,
                                    int count) {
    validate_structure(system);
    const Graph ug = union_graph(system);
    SweepResult out;
    out.survivor_counts.resize(count);
    for (int i = 0; i < count; ++i) {
        VertexSet s = survivors_for_seed(system, seed0 + static_cast<std::uint64_t>(i));
        out.survivor_counts[i] = s.size();
        if (!is_independent(ug, s)) out.all_independent = false;
    }
    return out;
}

SweepResult randomized_sweep(const BicliqueSystem& system, std::uint64_t seed0, int count) {
    validate_structure(system);
    const Graph ug = union_graph(system);
    SweepResult out;
    out.survivor_counts.resize(count);
    int bad = 0;
#pragma omp parallel for schedule(static) reduction(+ : bad)
    for (int i = 0; i < count; ++i) {
        VertexSet s = survivors_for_seed(system, seed0 + static_cast<std::uint64_t>(i));
        out.survivor_counts[i] = s.size();
        if (!is_independent(ug, s)) ++bad;
    }
    out.all_independent = bad == 0;
    return out;
}

}  // namespace bcc
