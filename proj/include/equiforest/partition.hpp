#pragma once

#include <string>
#include <vector>

#include "equiforest/types.hpp"

namespace equiforest {

enum class PartKind {
    forest,
    star_forest,
    linear_forest,
    in_out_star_forest,
    stable_set,
    // Intermediate kind used by the degeneracy splitter; the bound lives in
    // Partition::degeneracy_bound.
    degenerate,
};

std::string to_string(PartKind kind);
PartKind part_kind_from_string(const std::string& name);

/// Ordered list of disjoint vertex sets covering the vertex set, equitable:
/// max part size - min part size <= 1.
struct Partition {
    std::vector<VertexSet> parts;
    PartKind kind = PartKind::forest;
    int degeneracy_bound = 0;  // meaningful only for PartKind::degenerate

    int part_count() const { return static_cast<int>(parts.size()); }
    int covered_count() const;
    std::vector<int> sizes() const;
};

}  // namespace equiforest
