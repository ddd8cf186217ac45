#pragma once

#include <functional>

#include "equiforest/graph.hpp"
#include "equiforest/partition.hpp"

namespace equiforest {

/// A plug-in that equitably partitions any induced subgraph of the ambient
/// graph into exactly `ell` parts of a forest-hereditary kind. `produce`
/// receives the relabeled subgraph together with the original vertex ids of
/// its vertices (ascending, matching the relabeling) and answers in the
/// subgraph's index space. Every response is re-verified before use; trust
/// nothing across this boundary.
struct PartitionOracle {
    int ell = 0;
    std::function<Partition(const Graph& subgraph, const VertexSet& original_vertices)> produce;
};

/// The first `target_size` vertices of `part` in index order.
VertexSet trim_forest(const VertexSet& part, int target_size);

/// Lifts an ell-part equitable partitioner to any k >= ell parts. With
/// n = kq + s the output has exactly s parts of size q+1 followed by k-s of
/// size q: the loop repeatedly asks the oracle for the current subgraph,
/// trims its largest part to the scheduled size and removes it; the final
/// oracle response supplies the last ell parts.
///
/// Oracle part kinds must be closed under subsets: forest, star_forest,
/// linear_forest and in_out_star_forest qualify (the last is checked as a
/// star forest here since no orientation crosses the oracle interface);
/// stable_set is rejected.
Partition extend_partition(const Graph& g, const PartitionOracle& oracle, int k);

}  // namespace equiforest
