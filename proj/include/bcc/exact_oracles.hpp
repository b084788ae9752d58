#pragma once

#include "bcc/graph_core.hpp"

namespace bcc {

// Guards keeping every exhaustive solve at desk scale. The time budget
// raises a budget error, never a wrong answer.
struct OracleLimits {
    int max_vertices_coloring = 32;
    int max_edges_partition = 15;
    int max_edges_cover_weight = 10;
    double time_budget_seconds = 300.0;
};

// Exact chromatic number: branch and bound over color assignments with a
// greedy clique lower bound and greedy coloring upper bound.
int chromatic_number(const Graph& g, const OracleLimits& limits = {});

// Exact independence number.
int independence_number(const Graph& g, const OracleLimits& limits = {});

struct PartitionWitness {
    int count = 0;
    BicliqueSystem system;
};

// Minimum number of bicliques partitioning E(g), with one optimal
// witness. Branches on the lexicographically first uncovered edge over
// all bicliques inside the uncovered edge set.
PartitionWitness min_biclique_partition(const Graph& g, const OracleLimits& limits = {});

struct CoverWitness {
    long long weight = 0;
    BicliqueSystem system;
};

// Minimum total order of a biclique cover of E(g), with witness.
CoverWitness min_cover_weight(const Graph& g, const OracleLimits& limits = {});

}  // namespace bcc
