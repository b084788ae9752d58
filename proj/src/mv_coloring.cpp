#include "bcc/mv_coloring.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

namespace bcc {

CanonicalSide canonical_side(int j, const RefinementGroup& group, const BicliqueSystem& system) {
    const Biclique& b = system.biclique(j);
    if (!cuts(b, group.s_set))
        throw DomainError("biclique " + std::to_string(j + 1) + " does not cut the group's set");
    VertexSet left_part = b.left & group.s_set;
    VertexSet right_part = b.right & group.s_set;
    CanonicalSide out;
    for (int l : group.cutting) {
        const Biclique& other = system.biclique(l);
        if (cuts(other, left_part)) ++out.cut_left;
        if (cuts(other, right_part)) ++out.cut_right;
    }
    out.side = out.cut_left <= out.cut_right ? Side::Left : Side::Right;
    return out;
}

namespace {

struct ChildSlot {
    RefinementGroup group;
    bool used = false;
};

// Refines one group for one stage. Members that extend move into child
// slots keyed by label; members with no eligible biclique are finalized
// into `assignment` with the group's prefix. Thread-safe across groups:
// members are disjoint, so the assignment writes never collide.
std::vector<RefinementGroup> refine_group(const RefinementGroup& group,
                                          const BicliqueSystem& system,
                                          std::vector<ColorSequence>& assignment) {
    const int csize = static_cast<int>(group.cutting.size());
    std::vector<ChildSlot> slots(csize);
    // canonical sides are a per-group property; compute lazily per position
    std::vector<std::optional<CanonicalSide>> canon(csize);

    group.members.for_each([&](int v) {
        int chosen = -1;
        for (int pos = 0; pos < csize; ++pos) {
            const Biclique& b = system.biclique(group.cutting[pos]);
            if (!b.left.contains(v) && !b.right.contains(v)) continue;
            if (!canon[pos]) canon[pos] = canonical_side(group.cutting[pos], group, system);
            const VertexSet& side = canon[pos]->side == Side::Left ? b.left : b.right;
            if (!side.contains(v)) continue;
            chosen = pos;
            break;
        }
        if (chosen < 0) {
            assignment[v - 1] = group.prefix;  // sequence is now final
            return;
        }
        ChildSlot& slot = slots[chosen];
        if (!slot.used) {
            const Biclique& b = system.biclique(group.cutting[chosen]);
            const VertexSet& side = canon[chosen]->side == Side::Left ? b.left : b.right;
            RefinementGroup child;
            child.prefix = group.prefix;
            child.prefix.push_back(chosen + 1);  // renumbered label = rank in cutting
            child.s_set = group.s_set & side;
            child.members = VertexSet(group.s_set.universe());
            for (int l : group.cutting)
                if (cuts(system.biclique(l), child.s_set)) child.cutting.push_back(l);
            // the engine of the stage bound: the chosen side is cut by at
            // most half of the cutting list
            int side_cut = canon[chosen]->side == Side::Left ? canon[chosen]->cut_left
                                                             : canon[chosen]->cut_right;
            if (side_cut > csize / 2)
                throw InternalError("canonical side cut count exceeds half the cutting list");
            if (static_cast<int>(child.cutting.size()) > side_cut)
                throw InternalError("child cutting list exceeds the canonical side count");
            slot.group = std::move(child);
            slot.used = true;
        }
        slot.group.members.insert(v);
    });

    std::vector<RefinementGroup> children;
    for (ChildSlot& slot : slots)
        if (slot.used) children.push_back(std::move(slot.group));
    return children;
}

}  // namespace

MvResult mv_color(const BicliqueSystem& system, const MvOptions& opts) {
    PartitionReport gate = validate_partition(system);
    if (!gate.is_partition) throw InvalidPartitionError(gate);

    const int n = system.universe();
    const int m = system.size();
    MvResult result;
    result.m = m;
    result.coloring.assignment.assign(n, {});
    if (n == 0) return result;

    RefinementGroup root;
    root.s_set = VertexSet::full(n);
    root.members = root.s_set;
    for (int j = 0; j < m; ++j)
        if (cuts(system.biclique(j), root.s_set)) root.cutting.push_back(j);

    std::vector<RefinementGroup> active;
    if (!root.cutting.empty()) active.push_back(std::move(root));

    int stage = 0;
    while (!active.empty()) {
        ++stage;
        StageRecord record;
        record.stage = stage;
        for (const RefinementGroup& g : active)
            record.groups.push_back(
                {g.prefix, g.s_set.size(), static_cast<int>(g.cutting.size())});
        result.stages.push_back(std::move(record));
        if (opts.keep_groups) result.history.push_back(active);

        std::vector<std::vector<RefinementGroup>> produced(active.size());
        const int group_count = static_cast<int>(active.size());
        bool failed = false;
        std::string failure;
#pragma omp parallel for schedule(dynamic) if (opts.parallel && group_count > 1)
        for (int i = 0; i < group_count; ++i) {
            // exceptions must not unwind out of the parallel region
            try {
                produced[i] = refine_group(active[i], system, result.coloring.assignment);
            } catch (const std::exception& e) {
#pragma omp critical
                {
                    failed = true;
                    failure = e.what();
                }
            }
        }
        if (failed) throw InternalError(failure);

        std::vector<RefinementGroup> next;
        for (auto& children : produced) {
            for (RefinementGroup& child : children) {
                if (static_cast<int>(child.cutting.size()) > (m >> stage))
                    throw InternalError("stage halving bound violated");
                if (child.cutting.empty()) {
                    // no further stage can touch these members
                    child.members.for_each([&](int v) {
                        result.coloring.assignment[v - 1] = child.prefix;
                    });
                } else {
                    next.push_back(std::move(child));
                }
            }
        }
        active = std::move(next);
        if (m > 0 && stage > static_cast<int>(std::bit_width(static_cast<unsigned>(m))) + 1)
            throw InternalError("stage count exceeded log2(m)+1");
    }

    std::vector<ColorSequence> seen = result.coloring.assignment;
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    result.coloring.distinct_colors = static_cast<int>(seen.size());
    return result;
}

ProperReport verify_proper_serial(const Graph& g, const Coloring& c) {
    if (static_cast<int>(c.assignment.size()) != g.vertex_count())
        throw DomainError("incomplete coloring: assignment does not cover every vertex");
    for (const Edge& e : g.edges())
        if (c.assignment[e.u - 1] == c.assignment[e.v - 1]) return {false, e};
    return {true, std::nullopt};
}

ProperReport verify_proper(const Graph& g, const Coloring& c) {
    if (static_cast<int>(c.assignment.size()) != g.vertex_count())
        throw DomainError("incomplete coloring: assignment does not cover every vertex");
    const auto& edges = g.edges();
    const std::int64_t count = static_cast<std::int64_t>(edges.size());
    std::int64_t first_bad = count;
#pragma omp parallel for schedule(static) reduction(min : first_bad)
    for (std::int64_t i = 0; i < count; ++i) {
        const Edge& e = edges[i];
        if (c.assignment[e.u - 1] == c.assignment[e.v - 1]) first_bad = std::min(first_bad, i);
    }
    if (first_bad == count) return {true, std::nullopt};
    return {false, edges[static_cast<std::size_t>(first_bad)]};
}

std::uint64_t colors_bound(std::uint64_t m) {
    if (m == 0) return 1;
    const std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
    const int stages = std::bit_width(m);  // floor(log2 m) + 1
    std::uint64_t total = 1, prod = 1;
    for (int i = 1; i <= stages; ++i) {
        std::uint64_t factor = m >> (i - 1);
        if (prod > kMax / factor) return kMax;
        prod *= factor;
        if (total > kMax - prod) return kMax;
        total += prod;
    }
    return total;
}

std::uint64_t invert_bound(std::uint64_t k) {
    if (k < 1) throw DomainError("invert_bound requires k >= 1");
    std::uint64_t m = 0;
    while (colors_bound(m) < k) ++m;
    return m;
}

double theorem1_bound(double k) {
    if (k < 2.0) throw DomainError("theorem1_bound requires k >= 2");
    return std::exp2(std::sqrt(2.0 * std::log2(k)));
}

}  // namespace bcc
