#pragma once

#include <string>

#include "equiforest/graph.hpp"
#include "equiforest/partition.hpp"

namespace equiforest {

// Structure predicates on induced subgraphs. Conventions: the empty set and
// single vertices pass all of them; a single edge is both a star and a path,
// and a single arc is both an in-star and an out-star. These conventions make
// every predicate closed under taking subsets.

/// No cycle in the induced subgraph. Rejections carry a cycle as witness.
Verdict is_forest(const Graph& g, const VertexSet& s);
/// Forest in which every component has at most one vertex of degree >= 2.
Verdict is_star_forest(const Graph& g, const VertexSet& s);
/// Forest with maximum induced degree <= 2.
Verdict is_linear_forest(const Graph& g, const VertexSet& s);
/// No induced edge.
Verdict is_stable_set(const Graph& g, const VertexSet& s);
/// Star forest whose components are each uniformly oriented: all arcs out of
/// the center, or all arcs into it.
Verdict is_in_out_star_forest(const Orientation& o, const VertexSet& s);
/// Induced subgraph has degeneracy <= bound.
Verdict is_degenerate_at_most(const Graph& g, const VertexSet& s, int bound);

Verdict check_part_kind(const Graph& g, const VertexSet& s, PartKind kind, int degeneracy_bound);
Verdict check_part_kind(const Orientation& o, const VertexSet& s, PartKind kind,
                        int degeneracy_bound);

/// Disjointness, cover, equitability, and the part-kind predicate on every
/// part. The verdict lists every violated predicate with witnesses.
Verdict verify_partition(const Graph& g, const Partition& p);
/// Orientation-aware variant; required for in_out_star_forest parts.
Verdict verify_partition(const Orientation& o, const Partition& p);

/// Content hash of the canonical graph6 encoding of the graph as labeled.
/// No isomorphism canonization: certificates bind to labeled graphs.
std::string graph_hash(const Graph& g);
/// For orientations, hashes the canonical arc-list encoding instead.
std::string graph_hash(const Orientation& o);

/// Serializable record binding a graph hash to a labeled partition. The
/// verdict is intentionally not part of the record; verifiers recompute it.
struct Certificate {
    std::string hash;
    int k = 0;
    PartKind kind = PartKind::forest;
    int degeneracy_bound = 0;
    std::vector<VertexSet> parts;
    std::string producer;

    Partition partition() const { return {parts, kind, degeneracy_bound}; }
};

Certificate make_certificate(const Graph& g, const Partition& p, std::string producer);
Certificate make_certificate(const Orientation& o, const Partition& p, std::string producer);

std::string to_json(const Certificate& cert);
Certificate certificate_from_json(const std::string& text);

/// Recomputes the verdict: hash binding plus full partition verification.
Verdict check_certificate(const Graph& g, const Certificate& cert);
Verdict check_certificate(const Orientation& o, const Certificate& cert);

}  // namespace equiforest
