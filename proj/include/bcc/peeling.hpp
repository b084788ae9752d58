#pragma once

#include <optional>
#include <vector>

#include "bcc/dyadic.hpp"
#include "bcc/graph_core.hpp"

namespace bcc {

// Input system fails cover validation against the target graph.
class InvalidCoverError : public Error {
public:
    explicit InvalidCoverError(CoverReport r)
        : Error("system does not cover the graph"), report(std::move(r)) {}
    CoverReport report;
};

struct PeelRound {
    int n_vertices = 0;      // vertices before this round
    long long weight = 0;    // weight of the cover restricted to them
    VertexSet extracted;     // independent set removed
    Dyadic guarantee;        // expectation for the restricted cover
};

struct PeelTrace {
    std::vector<PeelRound> rounds;
    double beta = 0.0;       // max over rounds of 2^(w_i/n_i)
    int p = -1;              // first round achieving beta
    int t = -1;              // last round index (rounds.size()-1)
    VertexSet final_vertices;  // first vertex set smaller than k
    int initial_n = 0;
    int k = 0;
};

// Repeatedly remove derandomized Hansel independent sets while at least
// k vertices remain. Requires the system to cover g.
PeelTrace peel(const Graph& g, const BicliqueSystem& system, int k);

struct TraceAnalysis {
    double beta = 0.0;
    int p = -1;
    int t = -1;
    double log_ratio = 0.0;       // log2(n/k)
    bool t_bound_holds = false;   // t <= beta * log2(n/k)
    bool case_one = false;        // t >= k / log2(k)
    double case_threshold = 0.0;  // k / log2(k)
    std::optional<double> case1_lhs;  // 2^(w_p/n_p) * log2(n/k)
    std::optional<double> theorem3;   // only defined for k >= 5
    long long initial_weight = 0;     // w_0, reported, never asserted
};

TraceAnalysis analyze_trace(const PeelTrace& trace, int k, int n);

// k log2 k - k log2 log2 k - k log2 log2 log2 k, defined for k >= 5.
double theorem3_bound(int k);

}  // namespace bcc
