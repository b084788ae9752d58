#include "bcc/exact_oracles.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

namespace bcc {

namespace {

using Clock = std::chrono::steady_clock;

class Deadline {
public:
    explicit Deadline(double seconds)
        : end_(Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                  std::chrono::duration<double>(seconds))) {}

    // Called once per search node; a clock read is cheap next to the
    // per-node work, and checking every node makes the budget exact.
    void poll() {
        if (Clock::now() > end_)
            throw ResourceError("time budget exceeded", ResourceError::Kind::Budget);
    }

private:
    Clock::time_point end_;
};

void check_vertex_guard(const Graph& g, const OracleLimits& limits) {
    if (g.vertex_count() > limits.max_vertices_coloring)
        throw ResourceError("graph has " + std::to_string(g.vertex_count()) +
                                " vertices, over the guard of " +
                                std::to_string(limits.max_vertices_coloring),
                            ResourceError::Kind::Guard);
}

// ---- chromatic number ----------------------------------------------------

struct ColoringSearch {
    const Graph& g;
    Deadline deadline;
    int n;
    std::vector<int> color;  // color[v-1], 0 = uncolored
    int best;                // size of best complete coloring found

    ColoringSearch(const Graph& graph, double budget)
        : g(graph), deadline(budget), n(graph.vertex_count()), color(n, 0), best(n + 1) {}

    int saturation(int v) const {
        std::vector<bool> seen(best + 2, false);
        int s = 0;
        g.neighbors(v).for_each([&](int u) {
            int c = color[u - 1];
            if (c > 0 && !seen[c]) {
                seen[c] = true;
                ++s;
            }
        });
        return s;
    }

    int pick_vertex() const {
        int chosen = 0, chosen_sat = -1, chosen_deg = -1;
        for (int v = 1; v <= n; ++v) {
            if (color[v - 1] != 0) continue;
            int sat = saturation(v);
            int deg = g.neighbors(v).size();
            if (sat > chosen_sat || (sat == chosen_sat && deg > chosen_deg)) {
                chosen = v;
                chosen_sat = sat;
                chosen_deg = deg;
            }
        }
        return chosen;
    }

    void dfs(int colored, int used) {
        deadline.poll();
        if (used >= best) return;
        if (colored == n) {
            best = used;
            return;
        }
        int v = pick_vertex();
        std::vector<bool> forbidden(best + 2, false);
        g.neighbors(v).for_each([&](int u) {
            int c = color[u - 1];
            if (c > 0) forbidden[c] = true;
        });
        int limit = std::min(used + 1, best - 1);
        for (int c = 1; c <= limit; ++c) {
            if (forbidden[c]) continue;
            color[v - 1] = c;
            dfs(colored + 1, std::max(used, c));
            color[v - 1] = 0;
        }
    }
};

int greedy_clique(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i + 1;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        int da = g.neighbors(a).size(), db = g.neighbors(b).size();
        return da != db ? da > db : a < b;
    });
    VertexSet clique(n);
    int size = 0;
    for (int v : order) {
        if (clique.is_subset_of(g.neighbors(v))) {
            clique.insert(v);
            ++size;
        }
    }
    return size;
}

int greedy_coloring(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i + 1;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        int da = g.neighbors(a).size(), db = g.neighbors(b).size();
        return da != db ? da > db : a < b;
    });
    std::vector<int> color(n, 0);
    int used = 0;
    for (int v : order) {
        std::vector<bool> forbidden(n + 2, false);
        g.neighbors(v).for_each([&](int u) {
            if (color[u - 1] > 0) forbidden[color[u - 1]] = true;
        });
        int c = 1;
        while (forbidden[c]) ++c;
        color[v - 1] = c;
        used = std::max(used, c);
    }
    return used;
}

// ---- biclique enumeration shared by both cover searches --------------------

// All bicliques (L, R) with u in L, v in R whose generated edges lie in
// `allowed` (an adjacency snapshot); L holds the smaller endpoint, and the
// vertex-by-vertex three-way branching emits each pair exactly once.
struct BicliqueCandidate {
    std::uint64_t edge_mask = 0;
    std::vector<int> left, right;
};

class CandidateEnumerator {
public:
    CandidateEnumerator(int n, const std::vector<VertexSet>& allowed_adj,
                        const std::vector<std::vector<int>>& edge_id)
        : n_(n), adj_(allowed_adj), edge_id_(edge_id) {}

    std::vector<BicliqueCandidate> through(int u, int v) {
        out_.clear();
        VertexSet left(n_), right(n_);
        left.insert(u);
        right.insert(v);
        VertexSet cand_left = adj_[v - 1];
        cand_left.erase(u);
        cand_left.erase(v);
        VertexSet cand_right = adj_[u - 1];
        cand_right.erase(u);
        cand_right.erase(v);
        grow(left, right, cand_left, cand_right);
        return std::move(out_);
    }

private:
    void emit(const VertexSet& left, const VertexSet& right) {
        BicliqueCandidate c;
        c.left = left.to_vector();
        c.right = right.to_vector();
        left.for_each([&](int a) {
            right.for_each([&](int b) { c.edge_mask |= 1ULL << edge_id_[a - 1][b - 1]; });
        });
        out_.push_back(std::move(c));
    }

    void grow(VertexSet& left, VertexSet& right, VertexSet cand_left, VertexSet cand_right) {
        emit(left, right);
        while (true) {
            int w = (cand_left | cand_right).first();
            if (w == 0) return;
            bool in_l = cand_left.contains(w);
            bool in_r = cand_right.contains(w);
            cand_left.erase(w);
            cand_right.erase(w);
            if (in_l) {
                left.insert(w);
                grow(left, right, cand_left, cand_right & adj_[w - 1]);
                left.erase(w);
            }
            if (in_r) {
                right.insert(w);
                grow(left, right, cand_left & adj_[w - 1], cand_right);
                right.erase(w);
            }
            // fall through: w joins neither side; continue with the rest
        }
    }

    int n_;
    const std::vector<VertexSet>& adj_;
    const std::vector<std::vector<int>>& edge_id_;
    std::vector<BicliqueCandidate> out_;
};

std::vector<std::vector<int>> build_edge_ids(const Graph& g) {
    std::vector<std::vector<int>> id(g.vertex_count(), std::vector<int>(g.vertex_count(), -1));
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
        const Edge& e = g.edges()[i];
        id[e.u - 1][e.v - 1] = static_cast<int>(i);
        id[e.v - 1][e.u - 1] = static_cast<int>(i);
    }
    return id;
}

std::vector<VertexSet> adjacency_of_mask(const Graph& g, std::uint64_t mask) {
    std::vector<VertexSet> adj(g.vertex_count(), VertexSet(g.vertex_count()));
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
        if (!(mask >> i & 1ULL)) continue;
        const Edge& e = g.edges()[i];
        adj[e.u - 1].insert(e.v);
        adj[e.v - 1].insert(e.u);
    }
    return adj;
}

}  // namespace

int chromatic_number(const Graph& g, const OracleLimits& limits) {
    check_vertex_guard(g, limits);
    if (g.vertex_count() == 0) return 0;
    if (g.edges().empty()) return 1;
    int lower = greedy_clique(g);
    int upper = greedy_coloring(g);
    if (lower == upper) return lower;
    ColoringSearch search(g, limits.time_budget_seconds);
    search.best = upper;
    search.dfs(0, 0);
    return search.best;
}

int independence_number(const Graph& g, const OracleLimits& limits) {
    check_vertex_guard(g, limits);
    const int n = g.vertex_count();
    if (n == 0) return 0;
    Deadline deadline(limits.time_budget_seconds);
    int best = 0;
    // include-first branching on the max-degree remaining vertex
    auto dfs = [&](auto&& self, VertexSet remaining, int size) -> void {
        deadline.poll();
        if (size + remaining.size() <= best) return;
        int pick = 0, pick_deg = -1;
        remaining.for_each([&](int v) {
            int d = (g.neighbors(v) & remaining).size();
            if (d > pick_deg) {
                pick = v;
                pick_deg = d;
            }
        });
        if (pick == 0) {
            best = std::max(best, size + remaining.size());
            return;
        }
        VertexSet with = remaining - g.neighbors(pick);
        with.erase(pick);
        self(self, with, size + 1);
        remaining.erase(pick);
        self(self, remaining, size);
    };
    dfs(dfs, g.vertices(), 0);
    return best;
}

PartitionWitness min_biclique_partition(const Graph& g, const OracleLimits& limits) {
    const int e_count = static_cast<int>(g.edges().size());
    if (e_count > limits.max_edges_partition || e_count > 63)
        throw ResourceError("graph has " + std::to_string(e_count) +
                                " edges, over the partition guard of " +
                                std::to_string(std::min(limits.max_edges_partition, 63)),
                            ResourceError::Kind::Guard);
    PartitionWitness best;
    best.system = BicliqueSystem(g.vertex_count());
    if (e_count == 0) return best;

    Deadline deadline(limits.time_budget_seconds);
    auto edge_id = build_edge_ids(g);
    const std::uint64_t all_mask = (1ULL << e_count) - 1;
    best.count = e_count + 1;  // strictly improved by the one-edge-per-biclique leaf
    std::vector<BicliqueCandidate> chosen;
    std::vector<BicliqueCandidate> best_choice;

    auto dfs = [&](auto&& self, std::uint64_t uncovered) -> void {
        deadline.poll();
        if (uncovered == 0) {
            if (static_cast<int>(chosen.size()) < best.count) {
                best.count = static_cast<int>(chosen.size());
                best_choice = chosen;
            }
            return;
        }
        if (static_cast<int>(chosen.size()) + 1 >= best.count) return;
        int first = std::countr_zero(uncovered);
        const Edge& e = g.edges()[first];
        // bicliques must stay inside the uncovered edges to remain disjoint
        auto adj = adjacency_of_mask(g, uncovered);
        CandidateEnumerator enumerator(g.vertex_count(), adj, edge_id);
        for (BicliqueCandidate& cand : enumerator.through(e.u, e.v)) {
            chosen.push_back(cand);
            self(self, uncovered & ~cand.edge_mask);
            chosen.pop_back();
        }
    };
    dfs(dfs, all_mask);

    for (const BicliqueCandidate& c : best_choice) best.system.add(c.left, c.right);
    return best;
}

CoverWitness min_cover_weight(const Graph& g, const OracleLimits& limits) {
    const int e_count = static_cast<int>(g.edges().size());
    if (e_count > limits.max_edges_cover_weight || e_count > 63)
        throw ResourceError("graph has " + std::to_string(e_count) +
                                " edges, over the cover-weight guard of " +
                                std::to_string(std::min(limits.max_edges_cover_weight, 63)),
                            ResourceError::Kind::Guard);
    CoverWitness best;
    best.system = BicliqueSystem(g.vertex_count());
    if (e_count == 0) return best;

    Deadline deadline(limits.time_budget_seconds);
    auto edge_id = build_edge_ids(g);
    const std::uint64_t all_mask = (1ULL << e_count) - 1;

    // candidates may reuse covered edges, so the pool through each edge is
    // static and can be enumerated once
    auto full_adj = adjacency_of_mask(g, all_mask);
    std::vector<std::vector<BicliqueCandidate>> pool(e_count);
    {
        CandidateEnumerator enumerator(g.vertex_count(), full_adj, edge_id);
        for (int i = 0; i < e_count; ++i)
            pool[i] = enumerator.through(g.edges()[i].u, g.edges()[i].v);
    }

    // every vertex meeting an uncovered edge must appear in a future
    // biclique, so the touched-vertex count lower-bounds the future weight
    auto touched_bound = [&](std::uint64_t uncovered) {
        VertexSet touched(g.vertex_count());
        while (uncovered) {
            int i = std::countr_zero(uncovered);
            touched.insert(g.edges()[i].u);
            touched.insert(g.edges()[i].v);
            uncovered &= uncovered - 1;
        }
        return static_cast<long long>(touched.size());
    };

    best.weight = 2LL * e_count + 1;  // beaten by the all-single-edges leaf
    std::vector<const BicliqueCandidate*> chosen;
    std::vector<const BicliqueCandidate*> best_choice;

    auto dfs = [&](auto&& self, std::uint64_t uncovered, long long weight) -> void {
        deadline.poll();
        if (uncovered == 0) {
            if (weight < best.weight) {
                best.weight = weight;
                best_choice = chosen;
            }
            return;
        }
        if (weight + touched_bound(uncovered) >= best.weight) return;
        int first = std::countr_zero(uncovered);
        for (const BicliqueCandidate& cand : pool[first]) {
            long long w = static_cast<long long>(cand.left.size() + cand.right.size());
            chosen.push_back(&cand);
            self(self, uncovered & ~cand.edge_mask, weight + w);
            chosen.pop_back();
        }
    };
    dfs(dfs, all_mask, 0);

    for (const BicliqueCandidate* c : best_choice) best.system.add(c->left, c->right);
    return best;
}

}  // namespace bcc
