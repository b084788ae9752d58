#include "bcc/peeling.hpp"

#include <cmath>
#include <string>

#include "bcc/hansel.hpp"

namespace bcc {

namespace {

// Reindex a restricted system onto the compact universe 1..|s| so the
// extractor's per-vertex expectation ranges over exactly the vertices
// still present. ids[i] is the original id of compact vertex i+1.
BicliqueSystem compact_system(const BicliqueSystem& restricted, const std::vector<int>& ids,
                              const std::vector<int>& position) {
    BicliqueSystem out(static_cast<int>(ids.size()));
    for (const Biclique& b : restricted.bicliques()) {
        Biclique c{VertexSet(out.universe()), VertexSet(out.universe())};
        b.left.for_each([&](int v) { c.left.insert(position[v - 1]); });
        b.right.for_each([&](int v) { c.right.insert(position[v - 1]); });
        out.add(std::move(c));
    }
    return out;
}

}  // namespace

PeelTrace peel(const Graph& g, const BicliqueSystem& system, int k) {
    if (k < 1) throw DomainError("peel requires k >= 1");
    CoverReport cover = validate_cover(system, g);
    if (!cover.covers) throw InvalidCoverError(cover);

    PeelTrace trace;
    trace.initial_n = g.vertex_count();
    trace.k = k;

    VertexSet current = g.vertices();
    while (current.size() >= k) {
        PeelRound round;
        round.n_vertices = current.size();

        BicliqueSystem restricted = restrict_to(system, current);
        round.weight = cover_stats(restricted).weight;

        std::vector<int> ids = current.to_vector();
        std::vector<int> position(g.vertex_count(), 0);
        for (std::size_t i = 0; i < ids.size(); ++i) position[ids[i] - 1] = static_cast<int>(i + 1);

        ExtractionResult res = derandomized_extract(compact_system(restricted, ids, position));
        round.guarantee = res.guarantee;
        round.extracted = VertexSet(g.vertex_count());
        res.survivors.for_each([&](int c) { round.extracted.insert(ids[c - 1]); });

        if (round.extracted.empty())
            throw InternalError("peel round extracted nothing; the loop cannot progress");
        current -= round.extracted;
        trace.rounds.push_back(std::move(round));
    }
    trace.final_vertices = current;
    trace.t = static_cast<int>(trace.rounds.size()) - 1;
    for (int i = 0; i <= trace.t; ++i) {
        double ratio = static_cast<double>(trace.rounds[i].weight) / trace.rounds[i].n_vertices;
        double value = std::exp2(ratio);
        if (value > trace.beta) {
            trace.beta = value;
            trace.p = i;
        }
    }
    return trace;
}

TraceAnalysis analyze_trace(const PeelTrace& trace, int k, int n) {
    if (trace.rounds.empty() && n >= k)
        throw DomainError("trace has no rounds although n >= k; it cannot come from peel");
    TraceAnalysis a;
    a.beta = trace.beta;
    a.p = trace.p;
    a.t = trace.t;
    a.log_ratio = std::log2(static_cast<double>(n) / k);
    a.t_bound_holds = trace.t <= trace.beta * a.log_ratio + 1e-9;
    a.case_threshold = k / std::log2(static_cast<double>(k));  // +inf when k = 1
    a.case_one = trace.t >= a.case_threshold;
    if (trace.p >= 0) {
        const PeelRound& peak = trace.rounds[trace.p];
        a.case1_lhs =
            std::exp2(static_cast<double>(peak.weight) / peak.n_vertices) * a.log_ratio;
    }
    if (k >= 5) a.theorem3 = theorem3_bound(k);
    a.initial_weight = trace.rounds.empty() ? 0 : trace.rounds.front().weight;
    return a;
}

double theorem3_bound(int k) {
    if (k < 5) throw DomainError("theorem3_bound requires k >= 5");
    double lk = std::log2(static_cast<double>(k));
    double llk = std::log2(lk);
    double lllk = std::log2(llk);
    return k * (lk - llk - lllk);
}

}  // namespace bcc
