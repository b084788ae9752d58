#pragma once

// Shared helpers for the test binaries: terse builders, the full
// mv-coloring invariant check reused by the acceptance suite, and tiny
// exhaustive baselines that stay independent of the library's solvers.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "bcc/generators.hpp"
#include "bcc/graph_core.hpp"
#include "bcc/mv_coloring.hpp"

namespace bcc::testsupport {

inline BicliqueSystem sys(int n,
                          const std::vector<std::pair<std::vector<int>, std::vector<int>>>& bs) {
    BicliqueSystem s(n);
    for (const auto& [l, r] : bs) s.add(l, r);
    return s;
}

// Rebuild the group a color prefix determines by replaying the labels
// from the root; the engine must agree with this reconstruction.
inline RefinementGroup replay_group(const BicliqueSystem& system, const ColorSequence& prefix) {
    RefinementGroup g;
    g.s_set = VertexSet::full(system.universe());
    for (int j = 0; j < system.size(); ++j)
        if (cuts(system.biclique(j), g.s_set)) g.cutting.push_back(j);
    for (int label : prefix) {
        if (label < 1 || label > static_cast<int>(g.cutting.size()))
            throw std::logic_error("label outside the cutting list during replay");
        int j = g.cutting[label - 1];
        CanonicalSide cs = canonical_side(j, g, system);
        const Biclique& b = system.biclique(j);
        g.s_set &= cs.side == Side::Left ? b.left : b.right;
        std::vector<int> next;
        for (int l : g.cutting)
            if (cuts(system.biclique(l), g.s_set)) next.push_back(l);
        g.cutting = std::move(next);
        g.prefix.push_back(label);
    }
    return g;
}

struct MvCheckOptions {
    bool replay_prefixes = true;  // quadratic-ish; disable for big sweeps
};

// Every invariant the coloring run promises. Returns the failure
// description, or empty when all hold.
inline std::string check_mv_invariants(const BicliqueSystem& system, const MvResult& result,
                                       const MvCheckOptions& opts = {}) {
    const int m = result.m;
    const int n = system.universe();
    const Graph g = union_graph(system);

    ProperReport proper = verify_proper_serial(g, result.coloring);
    if (!proper.proper) return "coloring is not proper";

    VertexSet bottom(n);
    for (int v = 1; v <= n; ++v)
        if (result.coloring.assignment[v - 1].empty()) bottom.insert(v);
    if (!is_independent(g, bottom)) return "empty-sequence class is not independent";

    const int max_len = m > 0 ? std::bit_width(static_cast<unsigned>(m)) : 0;
    std::vector<ColorSequence> distinct = result.coloring.assignment;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    if (static_cast<int>(distinct.size()) != result.coloring.distinct_colors)
        return "distinct color count mismatch";
    if (colors_bound(static_cast<std::uint64_t>(m)) <
        static_cast<std::uint64_t>(result.coloring.distinct_colors))
        return "distinct colors exceed colors_bound(m)";

    for (const ColorSequence& seq : result.coloring.assignment) {
        if (static_cast<int>(seq.size()) > max_len) return "sequence longer than log2(m)+1";
        for (std::size_t i = 0; i < seq.size(); ++i) {
            if (seq[i] < 1) return "label below 1";
            if (seq[i] > (m >> i)) return "label above floor(m/2^i)";
        }
    }

    // stage records: groups entering stage s have s-1 completed stages
    for (const StageRecord& stage : result.stages) {
        for (const StageGroupRecord& grp : stage.groups) {
            if (grp.cutting_size > (m >> (stage.stage - 1)))
                return "cutting list exceeds floor(m/2^i) at stage " + std::to_string(stage.stage);
        }
    }

    if (opts.replay_prefixes && !result.history.empty()) {
        for (const auto& groups : result.history) {
            for (const RefinementGroup& grp : groups) {
                if (!grp.members.is_subset_of(grp.s_set)) return "members not within s_set";
                RefinementGroup replayed = replay_group(system, grp.prefix);
                if (!(replayed.s_set == grp.s_set)) return "prefix does not determine s_set";
                if (replayed.cutting != grp.cutting) return "prefix does not determine cutting";
            }
        }
    }
    return {};
}

// Exhaustive chromatic number by trying every assignment; independent of
// the branch-and-bound path. Usable up to ~10 vertices.
inline int brute_chromatic(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return 0;
    for (int k = 1; k <= n; ++k) {
        std::vector<int> color(n, 0);
        auto ok = [&](int upto) {
            for (const Edge& e : g.edges())
                if (e.u <= upto && e.v <= upto && color[e.u - 1] == color[e.v - 1]) return false;
            return true;
        };
        // odometer over k^n assignments
        std::vector<int> digits(n, 0);
        while (true) {
            for (int i = 0; i < n; ++i) color[i] = digits[i];
            if (ok(n)) return k;
            int pos = 0;
            while (pos < n && ++digits[pos] == k) digits[pos++] = 0;
            if (pos == n) break;
        }
    }
    return n;
}

// Exhaustive independence number over all subsets; up to ~20 vertices.
inline int brute_independence(const Graph& g) {
    const int n = g.vertex_count();
    int best = 0;
    for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
        VertexSet s(n);
        for (int v = 1; v <= n; ++v)
            if (mask >> (v - 1) & 1ULL) s.insert(v);
        if (is_independent(g, s)) best = std::max(best, s.size());
    }
    return best;
}

}  // namespace bcc::testsupport
