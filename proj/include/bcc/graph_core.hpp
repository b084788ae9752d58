#pragma once

#include <optional>
#include <vector>

#include "bcc/errors.hpp"
#include "bcc/vertex_set.hpp"

namespace bcc {

// Undirected edge, normalized so u < v.
struct Edge {
    int u = 0;
    int v = 0;
    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

// Immutable undirected graph on vertex ids 1..n. Construction validates
// (no self-loops, no duplicates, endpoints in range) and sorts the edge
// list, so edges() is always in lexicographic order.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const VertexSet& neighbors(int v) const { return adj_[v - 1]; }
    bool has_edge(int u, int v) const { return neighbors(u).contains(v); }
    VertexSet vertices() const { return VertexSet::full(n_); }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<VertexSet> adj_;
};

// Complete bipartite subgraph given by two disjoint nonempty vertex sets.
struct Biclique {
    VertexSet left;
    VertexSet right;
};

// Ordered list of bicliques over a shared universe 1..universe_n.
// Plain data holder; validate_structure checks the type invariants and
// names the first offending biclique.
class BicliqueSystem {
public:
    BicliqueSystem() = default;
    explicit BicliqueSystem(int universe_n) : universe_(universe_n) {}

    int universe() const { return universe_; }
    int size() const { return static_cast<int>(bicliques_.size()); }
    const Biclique& biclique(int i) const { return bicliques_[i]; }
    const std::vector<Biclique>& bicliques() const { return bicliques_; }

    void add(Biclique b) { bicliques_.push_back(std::move(b)); }
    void add(const std::vector<int>& left, const std::vector<int>& right);

private:
    int universe_ = 0;
    std::vector<Biclique> bicliques_;
};

struct PartitionReport {
    bool is_partition = false;
    // When not a partition: the lexicographically first edge produced by
    // more than one biclique, with the first two (0-based) producers.
    Edge witness{};
    int biclique_a = -1;
    int biclique_b = -1;
};

struct CoverReport {
    bool covers = false;
    std::optional<Edge> uncovered;  // edge of g no biclique generates
    std::optional<Edge> stray;      // generated edge absent from g
    int stray_biclique = -1;        // 0-based producer of the stray edge
};

struct CoverStats {
    long long weight = 0;           // sum of biclique orders
    std::vector<int> degrees;       // degrees[v-1] = #bicliques containing v
};

// Throws StructureError naming the first invalid biclique, if any.
void validate_structure(const BicliqueSystem& system);

// Graph on universe_n vertices whose edges are the union of all
// left x right products. Validates structure first.
Graph union_graph(const BicliqueSystem& system);

// Is every edge of union_graph(system) produced by exactly one biclique?
PartitionReport validate_partition(const BicliqueSystem& system);

// Does the system generate a subset of g's edges that covers all of them?
CoverReport validate_cover(const BicliqueSystem& system, const Graph& g);

// A biclique cuts S when S meets both of its sides.
bool cuts(const Biclique& b, const VertexSet& s);

// Intersect every biclique with s, dropping bicliques that lose a side.
BicliqueSystem restrict_to(const BicliqueSystem& system, const VertexSet& s);

CoverStats cover_stats(const BicliqueSystem& system);

// Subgraph induced on s, relabeled onto 1..|s| by ascending original id.
Graph induced_subgraph(const Graph& g, const VertexSet& s);

// First edge of g with both endpoints in s (lex order), if any.
std::optional<Edge> first_internal_edge(const Graph& g, const VertexSet& s);

inline bool is_independent(const Graph& g, const VertexSet& s) {
    return !first_internal_edge(g, s).has_value();
}

}  // namespace bcc
