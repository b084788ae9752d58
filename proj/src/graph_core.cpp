#include "bcc/graph_core.hpp"

#include <algorithm>
#include <string>

namespace bcc {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n < 0) throw DomainError("vertex count must be nonnegative");
    for (const Edge& e : edges_) {
        if (e.u == e.v) throw DomainError("self-loop at vertex " + std::to_string(e.u));
        if (e.u < 1 || e.u > n_ || e.v < 1 || e.v > n_)
            throw DomainError("edge endpoint out of range: {" + std::to_string(e.u) + "," +
                              std::to_string(e.v) + "}");
        if (e.u > e.v) throw DomainError("edge not normalized (u < v required)");
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw DomainError("duplicate edge in edge list");
    adj_.assign(n_, VertexSet(n_));
    for (const Edge& e : edges_) {
        adj_[e.u - 1].insert(e.v);
        adj_[e.v - 1].insert(e.u);
    }
}

void BicliqueSystem::add(const std::vector<int>& left, const std::vector<int>& right) {
    Biclique b{make_set(universe_, {}), make_set(universe_, {})};
    for (int v : left) {
        if (v < 1 || v > universe_)
            throw StructureError("vertex " + std::to_string(v) + " out of range in biclique " +
                                     std::to_string(bicliques_.size() + 1),
                                 static_cast<int>(bicliques_.size()));
        b.left.insert(v);
    }
    for (int v : right) {
        if (v < 1 || v > universe_)
            throw StructureError("vertex " + std::to_string(v) + " out of range in biclique " +
                                     std::to_string(bicliques_.size() + 1),
                                 static_cast<int>(bicliques_.size()));
        b.right.insert(v);
    }
    bicliques_.push_back(std::move(b));
}

void validate_structure(const BicliqueSystem& system) {
    for (int i = 0; i < system.size(); ++i) {
        const Biclique& b = system.biclique(i);
        // ids are range-checked on insertion; sides must be nonempty and disjoint
        if (b.left.empty() || b.right.empty())
            throw StructureError("biclique " + std::to_string(i + 1) + " has an empty side", i);
        if (b.left.intersects(b.right))
            throw StructureError("biclique " + std::to_string(i + 1) + " sides overlap", i);
    }
}

namespace {

// All edges one biclique generates, in lex order.
std::vector<Edge> generated_edges(const Biclique& b) {
    std::vector<Edge> out;
    b.left.for_each([&](int u) {
        b.right.for_each([&](int v) { out.push_back(make_edge(u, v)); });
    });
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

Graph union_graph(const BicliqueSystem& system) {
    validate_structure(system);
    std::vector<Edge> all;
    for (const Biclique& b : system.bicliques()) {
        auto es = generated_edges(b);
        all.insert(all.end(), es.begin(), es.end());
    }
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return Graph(system.universe(), std::move(all));
}

PartitionReport validate_partition(const BicliqueSystem& system) {
    validate_structure(system);
    // (edge, producer index) pairs, sorted by edge then producer
    std::vector<std::pair<Edge, int>> prod;
    for (int i = 0; i < system.size(); ++i)
        for (const Edge& e : generated_edges(system.biclique(i))) prod.emplace_back(e, i);
    std::sort(prod.begin(), prod.end());
    for (std::size_t i = 0; i + 1 < prod.size(); ++i) {
        if (prod[i].first == prod[i + 1].first) {
            return PartitionReport{false, prod[i].first, prod[i].second, prod[i + 1].second};
        }
    }
    return PartitionReport{true, Edge{}, -1, -1};
}

CoverReport validate_cover(const BicliqueSystem& system, const Graph& g) {
    validate_structure(system);
    if (system.universe() != g.vertex_count())
        throw DomainError("universe mismatch: system has " + std::to_string(system.universe()) +
                          " vertices, graph has " + std::to_string(g.vertex_count()));
    CoverReport report;
    std::vector<Edge> gen;
    for (int i = 0; i < system.size(); ++i) {
        for (const Edge& e : generated_edges(system.biclique(i))) {
            if (!g.has_edge(e.u, e.v)) {
                if (!report.stray || e < *report.stray) {
                    report.stray = e;
                    report.stray_biclique = i;
                }
            }
            gen.push_back(e);
        }
    }
    std::sort(gen.begin(), gen.end());
    for (const Edge& e : g.edges()) {
        if (!std::binary_search(gen.begin(), gen.end(), e)) {
            report.uncovered = e;
            break;  // g.edges() is lex sorted, first miss is the witness
        }
    }
    report.covers = !report.stray && !report.uncovered;
    return report;
}

bool cuts(const Biclique& b, const VertexSet& s) {
    return s.intersects(b.left) && s.intersects(b.right);
}

BicliqueSystem restrict_to(const BicliqueSystem& system, const VertexSet& s) {
    BicliqueSystem out(system.universe());
    for (const Biclique& b : system.bicliques()) {
        Biclique r{b.left & s, b.right & s};
        if (r.left.empty() || r.right.empty()) continue;
        out.add(std::move(r));
    }
    return out;
}

CoverStats cover_stats(const BicliqueSystem& system) {
    CoverStats stats;
    stats.degrees.assign(system.universe(), 0);
    for (const Biclique& b : system.bicliques()) {
        stats.weight += b.left.size() + b.right.size();
        b.left.for_each([&](int v) { ++stats.degrees[v - 1]; });
        b.right.for_each([&](int v) { ++stats.degrees[v - 1]; });
    }
    return stats;
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
    std::vector<int> position(g.vertex_count(), 0);
    int next = 0;
    s.for_each([&](int v) { position[v - 1] = ++next; });
    std::vector<Edge> edges;
    for (const Edge& e : g.edges())
        if (s.contains(e.u) && s.contains(e.v))
            edges.push_back(make_edge(position[e.u - 1], position[e.v - 1]));
    return Graph(next, std::move(edges));
}

std::optional<Edge> first_internal_edge(const Graph& g, const VertexSet& s) {
    for (const Edge& e : g.edges())
        if (s.contains(e.u) && s.contains(e.v)) return e;
    return std::nullopt;
}

}  // namespace bcc
