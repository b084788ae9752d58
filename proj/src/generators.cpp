#include "bcc/generators.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "bcc/rng.hpp"

namespace bcc {

Graph complete_graph(int k) {
    if (k < 1) throw DomainError("complete_graph requires k >= 1");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(k) * (k - 1) / 2);
    for (int u = 1; u <= k; ++u)
        for (int v = u + 1; v <= k; ++v) edges.push_back({u, v});
    return Graph(k, std::move(edges));
}

Graph complete_multipartite(const std::vector<int>& sizes) {
    if (sizes.empty()) throw DomainError("complete_multipartite requires a nonempty size list");
    for (int s : sizes)
        if (s < 1) throw DomainError("part sizes must be positive");
    int n = std::accumulate(sizes.begin(), sizes.end(), 0);
    std::vector<int> part_of(n + 1);
    int next = 1;
    for (std::size_t p = 0; p < sizes.size(); ++p)
        for (int i = 0; i < sizes[p]; ++i) part_of[next++] = static_cast<int>(p);
    std::vector<Edge> edges;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (part_of[u] != part_of[v]) edges.push_back({u, v});
    return Graph(n, std::move(edges));
}

BicliqueSystem gp_star_partition(const std::vector<int>& sizes) {
    if (sizes.empty()) throw DomainError("gp_star_partition requires a nonempty size list");
    for (int s : sizes)
        if (s < 1) throw DomainError("part sizes must be positive");
    int n = std::accumulate(sizes.begin(), sizes.end(), 0);
    std::vector<std::vector<int>> parts;
    int next = 1;
    for (int s : sizes) {
        std::vector<int> part(s);
        std::iota(part.begin(), part.end(), next);
        next += s;
        parts.push_back(std::move(part));
    }
    BicliqueSystem system(n);
    for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
        std::vector<int> rest;
        for (std::size_t j = i + 1; j < parts.size(); ++j)
            rest.insert(rest.end(), parts[j].begin(), parts[j].end());
        system.add(parts[i], rest);
    }
    return system;
}

BicliqueSystem ks_code_cover(int k) {
    if (k < 2) throw DomainError("ks_code_cover requires k >= 2");
    int bits = 0;
    while ((1 << bits) < k) ++bits;
    BicliqueSystem system(k);
    for (int p = 0; p < bits; ++p) {
        std::vector<int> zeros, ones;
        for (int v = 1; v <= k; ++v) ((v - 1) >> p & 1 ? ones : zeros).push_back(v);
        if (zeros.empty() || ones.empty()) continue;
        system.add(zeros, ones);
    }
    return system;
}

namespace {
constexpr int kRetriesPerBiclique = 1000;
}

BicliqueSystem random_biclique_union(int n, int m, std::uint64_t seed) {
    if (n < 2) throw DomainError("random_biclique_union requires n >= 2");
    if (m < 1) throw DomainError("random_biclique_union requires m >= 1");
    Rng rng(seed);
    BicliqueSystem system(n);
    // used[u-1] = vertices already joined to u by some placed biclique
    std::vector<VertexSet> used(n, VertexSet(n));
    std::vector<int> pool(n);
    std::iota(pool.begin(), pool.end(), 1);

    const int max_side = std::max(1, n / 4);
    for (int placed = 0; placed < m; ++placed) {
        bool ok = false;
        for (int attempt = 0; attempt < kRetriesPerBiclique && !ok; ++attempt) {
            int a = rng.range(1, std::min(max_side, n - 1));
            int b = rng.range(1, std::min(max_side, n - a));
            rng.shuffle(pool);
            VertexSet left(n), right(n);
            for (int i = 0; i < a; ++i) left.insert(pool[i]);
            // shrink the right side around already-used pairs
            for (int i = a; i < a + b; ++i) {
                int v = pool[i];
                bool conflict = false;
                left.for_each([&](int u) {
                    if (used[u - 1].contains(v)) conflict = true;
                });
                if (!conflict) right.insert(v);
            }
            if (right.empty()) continue;
            // left holds the smallest vertex of the pair
            if (right.first() < left.first()) std::swap(left, right);
            left.for_each([&](int u) {
                right.for_each([&](int v) {
                    used[u - 1].insert(v);
                    used[v - 1].insert(u);
                });
            });
            system.add(Biclique{std::move(left), std::move(right)});
            ok = true;
        }
        if (!ok)
            throw GenerationError("could not place biclique " + std::to_string(placed + 1) +
                                  " of " + std::to_string(m) + " after " +
                                  std::to_string(kRetriesPerBiclique) +
                                  " attempts; the universe may be too small");
    }
    return system;
}

}  // namespace bcc
