#include "equiforest/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace equiforest {

size_t Graph::check_count(int n) {
    if (n < 0) throw Error("vertex count must be nonnegative, got " + std::to_string(n));
    return static_cast<size_t>(n);
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw Error("edge endpoint out of range: (" + std::to_string(u) + "," +
                        std::to_string(v) + ") with n=" + std::to_string(n));
        if (u == v) throw Error("self-loop at vertex " + std::to_string(u));
        g.adj_[static_cast<size_t>(u)].push_back(v);
        g.adj_[static_cast<size_t>(v)].push_back(u);
    }
    for (auto& list : g.adj_) {
        std::sort(list.begin(), list.end());
        if (std::adjacent_find(list.begin(), list.end()) != list.end())
            throw Error("parallel edge detected");
    }
    g.m_ = static_cast<int>(edges.size());
    return g;
}

bool Graph::adjacent(int u, int v) const {
    const auto& list = adj_[static_cast<size_t>(u)];
    return std::binary_search(list.begin(), list.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<size_t>(m_));
    for (int u = 0; u < vertex_count(); ++u)
        for (int v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

VertexSet Graph::all_vertices() const {
    VertexSet all(static_cast<size_t>(vertex_count()));
    std::iota(all.begin(), all.end(), 0);
    return all;
}

SubgraphResult induced_subgraph(const Graph& g, const VertexSet& keep) {
    if (!is_sorted_set(keep)) throw Error("induced_subgraph: keep is not a sorted set");
    const int n = g.vertex_count();
    SubgraphResult res;
    res.from_original.assign(static_cast<size_t>(n), -1);
    res.to_original = keep;
    for (size_t i = 0; i < keep.size(); ++i) {
        int v = keep[i];
        if (v < 0 || v >= n)
            throw Error("induced_subgraph: vertex " + std::to_string(v) + " out of range");
        res.from_original[static_cast<size_t>(v)] = static_cast<int>(i);
    }
    std::vector<std::pair<int, int>> edges;
    for (int v : keep)
        for (int u : g.neighbors(v))
            if (u > v && res.from_original[static_cast<size_t>(u)] >= 0)
                edges.emplace_back(res.from_original[static_cast<size_t>(v)],
                                   res.from_original[static_cast<size_t>(u)]);
    res.graph = Graph::from_edges(static_cast<int>(keep.size()), edges);
    return res;
}

DegeneracyResult degeneracy(const Graph& g) {
    const int n = g.vertex_count();
    DegeneracyResult res;
    res.order.reserve(static_cast<size_t>(n));
    std::vector<int> deg(static_cast<size_t>(n));
    std::set<std::pair<int, int>> queue;  // (degree, vertex)
    for (int v = 0; v < n; ++v) {
        deg[static_cast<size_t>(v)] = g.degree(v);
        queue.insert({deg[static_cast<size_t>(v)], v});
    }
    std::vector<char> removed(static_cast<size_t>(n), 0);
    while (!queue.empty()) {
        auto [dv, v] = *queue.begin();
        queue.erase(queue.begin());
        res.d = std::max(res.d, dv);
        removed[static_cast<size_t>(v)] = 1;
        res.order.push_back(v);
        for (int u : g.neighbors(v)) {
            if (removed[static_cast<size_t>(u)]) continue;
            queue.erase({deg[static_cast<size_t>(u)], u});
            --deg[static_cast<size_t>(u)];
            queue.insert({deg[static_cast<size_t>(u)], u});
        }
    }
    return res;
}

Orientation Orientation::from_arcs(int n, const std::vector<std::pair<int, int>>& arcs) {
    return from_graph(Graph::from_edges(n, arcs), arcs);
}

Orientation Orientation::from_graph(Graph base, const std::vector<std::pair<int, int>>& arcs) {
    Orientation o;
    const int n = base.vertex_count();
    o.out_.assign(static_cast<size_t>(n), {});
    std::set<std::pair<int, int>> seen;  // underlying edges already oriented
    for (auto [u, v] : arcs) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw Error("arc endpoint out of range");
        if (!base.adjacent(u, v))
            throw Error("arc (" + std::to_string(u) + "," + std::to_string(v) +
                        ") is not an edge of the base graph");
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second)
            throw Error("edge {" + std::to_string(key.first) + "," + std::to_string(key.second) +
                        "} oriented more than once");
        o.out_[static_cast<size_t>(u)].push_back(v);
    }
    if (static_cast<int>(arcs.size()) != base.edge_count())
        throw Error("arc set does not cover every edge of the base graph");
    for (auto& list : o.out_) std::sort(list.begin(), list.end());
    o.base_ = std::move(base);
    return o;
}

bool Orientation::has_arc(int u, int v) const {
    const auto& list = out_[static_cast<size_t>(u)];
    return std::binary_search(list.begin(), list.end(), v);
}

std::pair<int, int> Orientation::arc_of(int u, int v) const {
    if (!base_.adjacent(u, v))
        throw Error("arc_of: {" + std::to_string(u) + "," + std::to_string(v) + "} is not an edge");
    return has_arc(u, v) ? std::pair<int, int>{u, v} : std::pair<int, int>{v, u};
}

std::vector<std::pair<int, int>> Orientation::arcs() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<size_t>(base_.edge_count()));
    for (auto [u, v] : base_.edges()) out.push_back(arc_of(u, v));
    return out;
}

}  // namespace equiforest
