#pragma once

#include <utility>

#include "equiforest/coloring.hpp"
#include "equiforest/partition.hpp"

namespace equiforest {

enum class MergeMode { acyclic_to_forest, star_to_star_forest };

/// Picks the classes whose union the next prefix part is drawn from:
/// i1 is a minimum-size class (ties on the lower index) and i2 is the first
/// other class with (size[i1] + size[i2]) * (k - 1) >= n. The counting
/// argument guarantees i2 exists; sizes must sum to n and k must be >= 3.
std::pair<int, int> select_merge_pair(const std::vector<int>& class_sizes, int n, int k);

/// Turns a verified k-class coloring into an equitable partition into k-1
/// parts, each inducing a forest (acyclic mode) or star forest (star mode).
/// Recursion: with two classes left the rest is one part; otherwise emit the
/// minimum class plus the lowest-indexed floor(n/(k-1)) - |V1| vertices of
/// its partner, drop the merged class, and continue on what remains.
Partition merge_partition(const Graph& g, const Coloring& c, MergeMode mode);

/// Same recursion for an orientation with a star coloring whose class pairs
/// are arc-consistent; every part induces a forest of in- and out-stars.
Partition merge_partition_oriented(const Orientation& o, const Coloring& c);

}  // namespace equiforest
