#include "equiforest/extend.hpp"

#include <algorithm>

#include "equiforest/certify.hpp"

namespace equiforest {

VertexSet trim_forest(const VertexSet& part, int target_size) {
    if (!is_sorted_set(part)) throw Error("trim_forest: part is not a sorted set");
    if (target_size < 0 || target_size > static_cast<int>(part.size()))
        throw Error("trim_forest: target size " + std::to_string(target_size) +
                    " outside 0..|part|");
    return VertexSet(part.begin(), part.begin() + target_size);
}

namespace {

PartKind verified_kind(PartKind kind) {
    switch (kind) {
        case PartKind::forest:
        case PartKind::star_forest:
        case PartKind::linear_forest:
            return kind;
        case PartKind::in_out_star_forest:
            return PartKind::star_forest;  // direction data does not cross the oracle boundary
        case PartKind::stable_set:
        case PartKind::degenerate:
            throw OracleViolation("extend_partition: part kind " + to_string(kind) +
                                  " is not forest-hereditary");
    }
    throw Error("unknown part kind");
}

void check_oracle_response(const Graph& h, const Partition& p, int ell) {
    if (p.part_count() != ell)
        throw OracleViolation("oracle returned " + std::to_string(p.part_count()) +
                              " parts, declared ell=" + std::to_string(ell));
    Partition checked = p;
    checked.kind = verified_kind(p.kind);
    Verdict verdict = verify_partition(h, checked);
    if (!verdict.ok)
        throw OracleViolation("oracle returned an invalid partition: " + verdict.summary());
}

int ceil_div(int a, int b) { return (a + b - 1) / b; }

}  // namespace

Partition extend_partition(const Graph& g, const PartitionOracle& oracle, int k) {
    if (oracle.ell < 1) throw Error("extend_partition: oracle must declare ell >= 1");
    if (k < oracle.ell) throw Error("extend_partition: k must be at least the oracle's ell");
    if (!oracle.produce) throw Error("extend_partition: oracle has no callable");

    const int n = g.vertex_count();
    const int q = n / k;
    const int s = n % k;

    VertexSet alive = g.all_vertices();
    Partition out;
    PartKind kind = PartKind::forest;

    auto consult = [&](const VertexSet& vertices) {
        SubgraphResult sub = induced_subgraph(g, vertices);
        Partition p = oracle.produce(sub.graph, vertices);
        check_oracle_response(sub.graph, p, oracle.ell);
        kind = p.kind;
        // Lift back to original labels; relabeling preserves index order.
        for (auto& part : p.parts)
            for (int& v : part) v = sub.to_original[static_cast<size_t>(v)];
        return p;
    };

    for (int i = 1; i <= k - oracle.ell; ++i) {
        const int target = i <= s ? q + 1 : q;
        const int remaining = static_cast<int>(alive.size());
        internal_check(ceil_div(remaining, oracle.ell) >= target,
                       "the oracle's largest part covers the scheduled size");
        Partition p = consult(alive);
        size_t largest = 0;
        for (size_t j = 1; j < p.parts.size(); ++j)
            if (p.parts[j].size() > p.parts[largest].size()) largest = j;
        internal_check(static_cast<int>(p.parts[largest].size()) >= target,
                       "an equitable part reaches the average size");
        VertexSet taken = trim_forest(p.parts[largest], target);
        alive = set_difference(alive, taken);
        out.parts.push_back(std::move(taken));
    }

    Partition last = consult(alive);
    // The residual schedule wants the larger parts first.
    std::stable_sort(last.parts.begin(), last.parts.end(),
                     [](const VertexSet& a, const VertexSet& b) { return a.size() > b.size(); });
    for (auto& part : last.parts) out.parts.push_back(std::move(part));
    out.kind = kind;

    internal_check(static_cast<int>(out.parts.size()) == k, "extend emits exactly k parts");
    for (int i = 0; i < k; ++i) {
        const int expected = i < s ? q + 1 : q;
        internal_check(static_cast<int>(out.parts[static_cast<size_t>(i)].size()) == expected,
                       "part " + std::to_string(i) + " matches the size schedule");
    }
    return out;
}

}  // namespace equiforest
