#pragma once

#include <cstdint>
#include <vector>

#include "bcc/dyadic.hpp"
#include "bcc/graph_core.hpp"

namespace bcc {

struct ExtractionResult {
    VertexSet survivors;
    Dyadic guarantee;  // expectation at the start of the run
};

// Sum over vertices of 2^-degree: the expected number of survivors when
// one side of every biclique is deleted uniformly at random.
Dyadic expected_survivors(const BicliqueSystem& system);

// Delete one uniformly random side per biclique (bit 0 of each draw:
// 0 = left, 1 = right); survivors are independent in the union graph.
ExtractionResult randomized_extract(const BicliqueSystem& system, std::uint64_t seed);

// Conditional-expectations derandomization: per biclique (ascending),
// delete the side that maximizes the remaining expectation, computed in
// exact dyadic arithmetic (tie deletes left). The survivor count is at
// least the ceiling of the initial expectation.
ExtractionResult derandomized_extract(const BicliqueSystem& system);

// Brute-force oracle: average survivors over all 2^m side choices.
// Must equal expected_survivors exactly. Guarded at m <= 20.
Dyadic enumerate_mean_survivors(const BicliqueSystem& system);
Dyadic enumerate_mean_survivors_serial(const BicliqueSystem& system);

inline constexpr int kEnumerationGuard = 20;

// n * log2(n / alpha): the cover-weight lower bound matching the
// extraction guarantee.
double hansel_lower_bound(int n, int alpha);

// Batch of randomized extractions for seeds seed0 .. seed0+count-1,
// with independence checked against the union graph.
struct SweepResult {
    std::vector<int> survivor_counts;
    bool all_independent = true;
};
SweepResult randomized_sweep(const BicliqueSystem& system, std::uint64_t seed0, int count);
SweepResult randomized_sweep_serial(const BicliqueSystem& system, std::uint64_t seed0, int count);

}  // namespace bcc
