#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "equiforest/graph.hpp"

namespace equiforest {

/// Deterministic RNG. Bounded draws are implemented here so that results
/// do not depend on the standard library's distribution internals.
class Rng {
public:
    explicit Rng(uint64_t seed) : engine_(seed) {}

    uint64_t next() { return engine_(); }

    /// Uniform in [0, bound), unbiased via rejection.
    int below(int bound);

private:
    std::mt19937_64 engine_;
};

Graph make_path(int n);
Graph make_cycle(int n);
/// Star K_{1,leaves}: center 0, leaves 1..leaves.
Graph make_star(int leaves);
Graph make_complete(int n);
/// Path on 0..n-1 plus universal vertex n.
Graph make_fan(int n);

/// Each vertex i joins min(d, i) distinct earlier vertices chosen uniformly.
/// The result is d-degenerate by construction (possibly less).
Graph random_d_degenerate(int n, int d, uint64_t seed);

/// Starts from a triangle and repeatedly places a new vertex inside a
/// uniformly chosen face, joined to the face's three corners. Planar and
/// 3-degenerate.
Graph stacked_triangulation(int n, uint64_t seed);

/// Directs every edge of g uniformly at random.
Orientation random_orientation(const Graph& g, uint64_t seed);

}  // namespace equiforest
