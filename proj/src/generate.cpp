#include "equiforest/generate.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace equiforest {

int Rng::below(int bound) {
    if (bound <= 0) throw Error("Rng::below: bound must be positive");
    const uint64_t b = static_cast<uint64_t>(bound);
    const uint64_t limit = UINT64_MAX - UINT64_MAX % b;
    uint64_t r;
    do {
        r = engine_();
    } while (r >= limit);
    return static_cast<int>(r % b);
}

Graph make_path(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_edges(n, edges);
}

Graph make_cycle(int n) {
    if (n > 0 && n < 3) throw Error("cycle needs n = 0 or n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, edges);
}

Graph make_star(int leaves) {
    if (leaves < 0) throw Error("star needs a nonnegative leaf count");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
    return Graph::from_edges(leaves + 1, edges);
}

Graph make_complete(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

Graph make_fan(int n) {
    if (n < 0) throw Error("fan needs a nonnegative path length");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    for (int i = 0; i < n; ++i) edges.emplace_back(i, n);
    return Graph::from_edges(n + 1, edges);
}

Graph random_d_degenerate(int n, int d, uint64_t seed) {
    if (n < 0) throw Error("random_d_degenerate: n must be nonnegative");
    if (d < 1) throw Error("random_d_degenerate: d must be at least 1");
    Rng rng(seed);
    std::vector<std::pair<int, int>> edges;
    std::vector<int> pool;
    for (int i = 1; i < n; ++i) {
        const int take = std::min(d, i);
        pool.resize(static_cast<size_t>(i));
        std::iota(pool.begin(), pool.end(), 0);
        for (int t = 0; t < take; ++t) {
            int j = t + rng.below(i - t);
            std::swap(pool[static_cast<size_t>(t)], pool[static_cast<size_t>(j)]);
            edges.emplace_back(pool[static_cast<size_t>(t)], i);
        }
    }
    return Graph::from_edges(n, edges);
}

Graph stacked_triangulation(int n, uint64_t seed) {
    if (n < 0) throw Error("stacked_triangulation: n must be nonnegative");
    if (n <= 2) {
        std::vector<std::pair<int, int>> edges;
        if (n == 2) edges.emplace_back(0, 1);
        return Graph::from_edges(n, edges);
    }
    Rng rng(seed);
    std::vector<std::pair<int, int>> edges{{0, 1}, {0, 2}, {1, 2}};
    std::vector<std::array<int, 3>> faces{{0, 1, 2}};
    for (int v = 3; v < n; ++v) {
        const int f = rng.below(static_cast<int>(faces.size()));
        const std::array<int, 3> face = faces[static_cast<size_t>(f)];
        for (int c : face) edges.emplace_back(c, v);
        faces[static_cast<size_t>(f)] = {face[0], face[1], v};
        faces.push_back({face[0], face[2], v});
        faces.push_back({face[1], face[2], v});
    }
    return Graph::from_edges(n, edges);
}

Orientation random_orientation(const Graph& g, uint64_t seed) {
    Rng rng(seed);
    std::vector<std::pair<int, int>> arcs;
    arcs.reserve(static_cast<size_t>(g.edge_count()));
    for (auto [u, v] : g.edges())
        arcs.push_back(rng.below(2) == 0 ? std::pair<int, int>{u, v}
                                         : std::pair<int, int>{v, u});
    return Orientation::from_graph(g, arcs);
}

}  // namespace equiforest
