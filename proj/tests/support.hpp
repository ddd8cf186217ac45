#pragma once

// Test-only helpers and independent oracles. Nothing here may call into the
// implementation paths it is used to check.

#include <algorithm>
#include <vector>

#include "equiforest/generate.hpp"
#include "equiforest/graph.hpp"

namespace equiforest::testing {

/// Independent degeneracy oracle: max over all nonempty vertex subsets of
/// the minimum induced degree. Exponential; n <= ~15 only.
inline int degeneracy_by_subsets(const Graph& g) {
    const int n = g.vertex_count();
    int best = 0;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        int min_deg = n;
        for (int v = 0; v < n; ++v) {
            if (!(mask & (1u << v))) continue;
            int deg = 0;
            for (int u : g.neighbors(v))
                if (mask & (1u << u)) ++deg;
            min_deg = std::min(min_deg, deg);
        }
        best = std::max(best, min_deg);
    }
    return best;
}

/// Erdos-Renyi graph with edge probability percent/100, for test corpora.
inline Graph erdos_renyi(int n, int percent, uint64_t seed) {
    Rng rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.below(100) < percent) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

/// Uniform random subset of 0..n-1 where each vertex joins with
/// probability percent/100.
inline VertexSet random_subset(int n, int percent, Rng& rng) {
    VertexSet out;
    for (int v = 0; v < n; ++v)
        if (rng.below(100) < percent) out.push_back(v);
    return out;
}

/// Uniform-ish sub-subset: keeps each member with probability percent/100.
inline VertexSet random_subset_of(const VertexSet& s, int percent, Rng& rng) {
    VertexSet out;
    for (int v : s)
        if (rng.below(100) < percent) out.push_back(v);
    return out;
}

/// Relabels g by the permutation new_label[old].
inline Graph permuted(const Graph& g, const std::vector<int>& new_label) {
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges())
        edges.emplace_back(new_label[static_cast<size_t>(u)],
                           new_label[static_cast<size_t>(v)]);
    return Graph::from_edges(g.vertex_count(), edges);
}

inline std::vector<int> random_permutation(int n, Rng& rng) {
    std::vector<int> perm(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
    for (int i = n - 1; i > 0; --i)
        std::swap(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(rng.below(i + 1))]);
    return perm;
}

}  // namespace equiforest::testing
