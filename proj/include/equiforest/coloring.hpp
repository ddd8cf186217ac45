#pragma once

#include <optional>
#include <string>

#include "equiforest/graph.hpp"

namespace equiforest {

enum class ColoringKind { proper, acyclic, star, oriented_consistent };

std::string to_string(ColoringKind kind);
ColoringKind coloring_kind_from_string(const std::string& name);

/// Ordered color classes; empty classes are permitted and count toward the
/// declared class count. The kind is only a claim until the matching
/// verifier has accepted.
struct Coloring {
    std::vector<VertexSet> classes;
    ColoringKind kind = ColoringKind::proper;

    int class_count() const { return static_cast<int>(classes.size()); }
    /// Vertex -> class index; throws if some vertex in 0..n-1 is uncovered.
    std::vector<int> assignment(int n) const;
};

Coloring coloring_from_assignment(const std::vector<int>& class_of, int class_count,
                                  ColoringKind kind);
/// Appends empty classes up to `class_count`.
Coloring pad_classes(Coloring c, int class_count);
/// Classes intersected with `keep`, relabeled into the subgraph index space
/// given by `from_original` (as produced by induced_subgraph).
Coloring restrict_coloring(const Coloring& c, const VertexSet& keep,
                           const std::vector<int>& from_original);

/// Accepts iff no edge joins two vertices of the same class.
Verdict verify_proper(const Graph& g, const Coloring& c);
/// Accepts iff every pair of classes induces a forest. Requires properness.
Verdict verify_acyclic(const Graph& g, const Coloring& c);
/// Accepts iff every pair of classes induces a star forest.
Verdict verify_star(const Graph& g, const Coloring& c);
/// Accepts iff for every ordered class pair all arcs between the two classes
/// point the same way. Requires properness on the underlying graph.
Verdict verify_oriented_consistent(const Orientation& o, const Coloring& c);

inline constexpr int kDefaultExactCap = 20;

/// Exhaustive backtracking search for a coloring of the requested kind with
/// at most k classes. Vertices are tried in descending degree order and a
/// new class may only be opened in index order, so the result is
/// deterministic. Returns the classes actually used (no trailing empties);
/// nullopt means no such coloring exists. Throws CapExceeded above `cap`.
std::optional<Coloring> exact_coloring(const Graph& g, ColoringKind kind, int k,
                                       int cap = kDefaultExactCap);

/// As exact_coloring with kind star, additionally enforcing that arcs
/// between any two classes of `o` all point the same way.
std::optional<Coloring> exact_oriented_star_coloring(const Orientation& o, int k,
                                                     int cap = kDefaultExactCap);

/// Least k for which exact_coloring succeeds.
int exact_chromatic(const Graph& g, ColoringKind kind, int cap = kDefaultExactCap);

/// Assigns each vertex, in reverse degeneracy order, the smallest class that
/// keeps the coloring proper and free of bicolored cycles. Always passes
/// verify_acyclic; the class count is not bounded a priori.
Coloring greedy_acyclic(const Graph& g);

std::string to_json(const Coloring& c);
Coloring coloring_from_json(const std::string& text);

}  // namespace equiforest
