#pragma once

#include <utility>
#include <vector>

#include "equiforest/types.hpp"

namespace equiforest {

/// Immutable simple undirected graph on vertices 0..n-1.
/// Adjacency lists are sorted; no self-loops, no parallel edges.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adj_(check_count(n)) {}

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return m_; }
    const std::vector<int>& neighbors(int v) const { return adj_[static_cast<size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(adj_[static_cast<size_t>(v)].size()); }
    bool adjacent(int u, int v) const;

    /// All edges as (u, v) with u < v, sorted.
    std::vector<std::pair<int, int>> edges() const;

    VertexSet all_vertices() const;

private:
    static size_t check_count(int n);

    std::vector<std::vector<int>> adj_;
    int m_ = 0;
};

struct SubgraphResult {
    Graph graph;
    std::vector<int> to_original;    // new index -> old index, ascending
    std::vector<int> from_original;  // old index -> new index, -1 when dropped
};

/// Subgraph induced by `keep`, relabeled to 0..|keep|-1 order-preservingly.
SubgraphResult induced_subgraph(const Graph& g, const VertexSet& keep);

struct DegeneracyResult {
    int d = 0;
    std::vector<int> order;  // deletion order of the min-degree peel
};

/// Degeneracy and a degeneracy ordering. Min-degree ties break on the
/// lowest vertex index, so the ordering is deterministic.
DegeneracyResult degeneracy(const Graph& g);

/// A direction for every edge of an underlying simple graph.
class Orientation {
public:
    Orientation() = default;

    /// Builds the underlying graph from the arc endpoints.
    static Orientation from_arcs(int n, const std::vector<std::pair<int, int>>& arcs);
    /// Checks that `arcs` is in bijection with the edges of `base`.
    static Orientation from_graph(Graph base, const std::vector<std::pair<int, int>>& arcs);

    const Graph& underlying() const { return base_; }
    int vertex_count() const { return base_.vertex_count(); }
    bool has_arc(int u, int v) const;
    /// The oriented pair for edge {u, v}.
    std::pair<int, int> arc_of(int u, int v) const;
    const std::vector<int>& out_neighbors(int v) const { return out_[static_cast<size_t>(v)]; }
    /// All arcs, sorted by underlying edge (min endpoint, max endpoint).
    std::vector<std::pair<int, int>> arcs() const;

private:
    Graph base_;
    std::vector<std::vector<int>> out_;  // sorted out-neighbors
};

}  // namespace equiforest
