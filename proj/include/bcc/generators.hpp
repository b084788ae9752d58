#pragma once

#include <cstdint>
#include <vector>

#include "bcc/graph_core.hpp"

namespace bcc {

// K_k on vertices 1..k.
Graph complete_graph(int k);

// Parts are consecutive id blocks; edges exactly between distinct parts.
Graph complete_multipartite(const std::vector<int>& sizes);

// For parts V_1..V_p, the bicliques (V_i, V_{i+1} u ... u V_p), i < p.
// Partitions the edges of complete_multipartite(sizes); for p singleton
// parts this is the classical (p-1)-biclique partition of K_p.
BicliqueSystem gp_star_partition(const std::vector<int>& sizes);

// Binary-code cover of K_k: vertex v gets the code of v-1 in ceil(log2 k)
// bits; bit position p (LSB first) yields the biclique (zeros, ones),
// omitting positions where a side would be empty. Weight is k*log2(k)
// when k is a power of two.
BicliqueSystem ks_code_cover(int k);

// Exactly m pairwise edge-disjoint bicliques on 1..n, deterministic per
// (n, m, seed). Sampled sides are shrunk around already-used edges;
// retries are bounded, failure raises GenerationError.
BicliqueSystem random_biclique_union(int n, int m, std::uint64_t seed);

}  // namespace bcc
