#include "equiforest/merge.hpp"

#include <algorithm>

namespace equiforest {

std::pair<int, int> select_merge_pair(const std::vector<int>& class_sizes, int n, int k) {
    if (k < 3) throw Error("select_merge_pair: needs k >= 3");
    if (static_cast<int>(class_sizes.size()) != k)
        throw Error("select_merge_pair: k does not match the size list");
    long total = 0;
    for (int s : class_sizes) {
        if (s < 0) throw Error("select_merge_pair: negative class size");
        total += s;
    }
    if (total != n) throw Error("select_merge_pair: sizes do not sum to n");

    int i1 = 0;
    for (int i = 1; i < k; ++i)
        if (class_sizes[static_cast<size_t>(i)] < class_sizes[static_cast<size_t>(i1)]) i1 = i;
    // Exact integer form of |V1 u V2| >= n/(k-1); no floating point here.
    for (int j = 0; j < k; ++j) {
        if (j == i1) continue;
        long joint = static_cast<long>(class_sizes[static_cast<size_t>(i1)]) +
                     class_sizes[static_cast<size_t>(j)];
        if (joint * (k - 1) >= n) return {i1, j};
    }
    internal_check(false, "a partner class of joint size >= n/(k-1) always exists");
    return {-1, -1};
}

namespace {

Partition merge_impl(const Coloring& c, PartKind out_kind) {
    std::vector<VertexSet> classes = c.classes;
    const int k0 = static_cast<int>(classes.size());
    if (k0 < 2) throw Error("merge_partition: needs at least 2 declared classes");

    int n = 0;
    for (const auto& cls : classes) n += static_cast<int>(cls.size());

    Partition out;
    out.kind = out_kind;
    int k = k0;
    while (k > 2) {
        auto [i1, i2] = select_merge_pair(
            [&classes] {
                std::vector<int> sizes;
                sizes.reserve(classes.size());
                for (const auto& cls : classes) sizes.push_back(static_cast<int>(cls.size()));
                return sizes;
            }(),
            n, k);
        const int part_size = n / (k - 1);
        const int from_partner = part_size - static_cast<int>(classes[static_cast<size_t>(i1)].size());
        internal_check(from_partner >= 0, "the minimum class fits inside floor(n/(k-1))");
        internal_check(from_partner <= static_cast<int>(classes[static_cast<size_t>(i2)].size()),
                       "the partner class can fill the part");

        VertexSet& partner = classes[static_cast<size_t>(i2)];
        VertexSet part = set_union(
            classes[static_cast<size_t>(i1)],
            VertexSet(partner.begin(), partner.begin() + from_partner));
        partner.erase(partner.begin(), partner.begin() + from_partner);
        classes.erase(classes.begin() + i1);
        out.parts.push_back(std::move(part));
        n -= part_size;
        --k;
    }
    out.parts.push_back(set_union(classes[0], classes[1]));

    // Output arity and the global size profile follow from the recursion.
    internal_check(static_cast<int>(out.parts.size()) == k0 - 1, "merge emits k-1 parts");
    return out;
}

}  // namespace

Partition merge_partition(const Graph& g, const Coloring& c, MergeMode mode) {
    Verdict ok = mode == MergeMode::acyclic_to_forest ? verify_acyclic(g, c) : verify_star(g, c);
    if (!ok.ok) throw Error("merge_partition: coloring rejected: " + ok.summary());
    return merge_impl(c, mode == MergeMode::acyclic_to_forest ? PartKind::forest
                                                              : PartKind::star_forest);
}

Partition merge_partition_oriented(const Orientation& o, const Coloring& c) {
    Verdict star = verify_star(o.underlying(), c);
    if (!star.ok) throw Error("merge_partition_oriented: coloring rejected: " + star.summary());
    Verdict consistent = verify_oriented_consistent(o, c);
    if (!consistent.ok)
        throw Error("merge_partition_oriented: coloring rejected: " + consistent.summary());
    return merge_impl(c, PartKind::in_out_star_forest);
}

}  // namespace equiforest
