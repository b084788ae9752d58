#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bcc/graph_core.hpp"

namespace bcc {

// A color is an ordered tuple of positive labels; the empty tuple is the
// reserved color assigned to vertices that never receive a coordinate.
using ColorSequence = std::vector<int>;

struct Coloring {
    std::vector<ColorSequence> assignment;  // assignment[v-1]
    int distinct_colors = 0;
};

enum class Side { Left, Right };

struct CanonicalSide {
    Side side = Side::Left;
    int cut_left = 0;   // members of the cutting list that cut left & s_set
    int cut_right = 0;  // likewise for right & s_set
};

// Vertices sharing a color prefix, the set that prefix determines, and
// the bicliques cutting it (0-based indices, ascending).
struct RefinementGroup {
    ColorSequence prefix;
    VertexSet members;  // subset of s_set still being refined
    VertexSet s_set;
    std::vector<int> cutting;
};

struct StageGroupRecord {
    ColorSequence prefix;
    int s_set_size = 0;
    int cutting_size = 0;
};

struct StageRecord {
    int stage = 0;
    std::vector<StageGroupRecord> groups;
};

struct MvOptions {
    bool parallel = true;      // refine a stage's groups concurrently
    bool keep_groups = false;  // retain full groups per stage (for checks)
};

struct MvResult {
    Coloring coloring;
    std::vector<StageRecord> stages;  // groups entering each stage
    std::vector<std::vector<RefinementGroup>> history;  // when keep_groups
    int m = 0;
};

// Input fails the edge-disjointness gate; carries the witness.
class InvalidPartitionError : public Error {
public:
    explicit InvalidPartitionError(PartitionReport r)
        : Error("system is not an edge-disjoint biclique partition"), report(r) {}
    PartitionReport report;
};

// Which side of biclique j a vertex must lie in to extend its sequence
// with j: the side whose intersection with s_set is cut by strictly
// fewer cutting-list bicliques, ties to the left. Requires j (0-based)
// to cut group.s_set.
CanonicalSide canonical_side(int j, const RefinementGroup& group, const BicliqueSystem& system);

// Stagewise refinement coloring of union_graph(system). Rejects systems
// that are not edge-disjoint partitions. Output is deterministic and
// independent of the parallel option.
MvResult mv_color(const BicliqueSystem& system, const MvOptions& opts = {});

struct ProperReport {
    bool proper = false;
    std::optional<Edge> witness;  // lex-first monochromatic edge
};

ProperReport verify_proper(const Graph& g, const Coloring& c);
ProperReport verify_proper_serial(const Graph& g, const Coloring& c);

// Exact count ceiling for the colors an m-biclique run can emit:
// 1 + sum over lengths i of prod_{j<i} floor(m/2^j). Saturates at
// uint64 max for huge m; exact within range.
std::uint64_t colors_bound(std::uint64_t m);

// Minimal m whose colors_bound reaches k.
std::uint64_t invert_bound(std::uint64_t k);

// Main-term lower bound 2^sqrt(2 log2 k) on the biclique count needed to
// partition a k-chromatic graph; report-level only.
double theorem1_bound(double k);

}  // namespace bcc
