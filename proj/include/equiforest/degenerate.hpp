#pragma once

#include <cstdint>

#include "equiforest/coloring.hpp"
#include "equiforest/extend.hpp"
#include "equiforest/graph.hpp"
#include "equiforest/partition.hpp"

namespace equiforest {

struct SplitterConfig {
    int exact_cap = 24;            // max n for the exhaustive splitter
    uint64_t heuristic_budget = 20'000;  // repair moves across all restarts
    uint64_t seed = 0;             // drives restart orders after the first attempt
};

/// Equitable split of a d-degenerate graph into k parts that each induce a
/// subgraph of degeneracy <= d-1 (d >= 2, k >= 3). Small instances are
/// solved exhaustively; larger ones get a round-robin assignment in reverse
/// degeneracy order followed by local repair (moves between a larger and a
/// smaller part, and swaps), accepting only strict decreases in the number
/// of vertices violating the (d-1)-peel. The result is verified before it is
/// returned; HeuristicFailure is thrown when the budget runs out, never a
/// silently wrong split.
Partition kdeg_split(const Graph& g, int d, int k, const SplitterConfig& cfg = {});

/// Equitable partition of a d-degenerate graph into exactly 3^(d-1) induced
/// forests: a 1-degenerate graph is one forest; otherwise split into three
/// parts of degeneracy <= d-1 and recurse. Global equitability of the
/// composition is re-verified; EquitabilityDrift reports the (never
/// observed) case where verified sub-splits compose inequitably.
Partition forests_from_degenerate(const Graph& g, int d, const SplitterConfig& cfg = {});

enum class Strategy { auto_pick, via_acyclic, via_degeneracy };

std::string to_string(Strategy s);
Strategy strategy_from_string(const std::string& name);

struct RouteConfig {
    SplitterConfig splitter;
    int coloring_cap = 20;  // exact coloring above this falls back to greedy
};

/// Top-level facade: equitable partition into k induced forests.
/// via_acyclic merges an acyclic coloring with c <= k+1 classes down to c-1
/// parts and extends from there; via_degeneracy needs k >= 3^(d-1) and goes
/// through forests_from_degenerate; auto_pick takes whichever applicable
/// route has the smaller base part count.
Partition equitable_forests(const Graph& g, int k, Strategy strategy,
                            const RouteConfig& cfg = {});

/// The Lemma-9 oracle behind via_acyclic: restricts a fixed coloring of the
/// ambient graph to the requested subgraph and merges. Exposed for reuse by
/// the star-forest pipeline and by tests.
PartitionOracle restriction_merge_oracle(Coloring coloring, bool star_mode);

}  // namespace equiforest
