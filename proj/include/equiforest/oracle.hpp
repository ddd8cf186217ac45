#pragma once

#include <cstdint>
#include <optional>

#include "equiforest/graph.hpp"
#include "equiforest/partition.hpp"

namespace equiforest {

enum class SearchStatus { sat, unsat, budget_exceeded };

struct SearchResult {
    SearchStatus status = SearchStatus::unsat;
    std::optional<Partition> partition;  // present iff sat
    uint64_t nodes = 0;
};

struct SearchLimits {
    int vertex_cap = 14;
    uint64_t node_budget = 50'000'000;
};

/// Exhaustive search for an equitable k-partition whose parts all satisfy
/// the given kind. The size profile is forced (s parts of ceil(n/k) first),
/// assignments are enumerated vertex by vertex with incremental feasibility
/// checks, and among parts with the same target size only the first empty
/// one may be opened, so each partition shape is explored once. UNSAT means
/// the canonical search space is exhausted; running out of nodes is reported
/// as a distinct result, never as UNSAT.
SearchResult brute_force_equitable(const Graph& g, int k, PartKind kind, SearchLimits limits = {},
                                   int degeneracy_bound = 0);
/// Orientation-aware variant, required for in_out_star_forest parts.
SearchResult brute_force_equitable(const Orientation& o, int k, PartKind kind,
                                   SearchLimits limits = {});

struct CrossValidation {
    Verdict certified;             // independent re-verification of the input
    bool existence_checked = false;  // false when n is above the cap or budget ran out
    bool existence_agrees = false;   // meaningful only when existence_checked
    uint64_t nodes = 0;

    bool ok() const { return certified.ok && (!existence_checked || existence_agrees); }
};

/// Re-certifies a constructed partition and, when the instance is small
/// enough, confirms the exhaustive search agrees a partition with the same
/// (k, kind) exists.
CrossValidation cross_validate(const Graph& g, const Partition& constructed,
                               SearchLimits limits = {});

}  // namespace equiforest
