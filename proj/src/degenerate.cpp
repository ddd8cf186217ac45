#include "equiforest/degenerate.hpp"

#include <algorithm>
#include <numeric>

#include "equiforest/certify.hpp"
#include "equiforest/coloring.hpp"
#include "equiforest/generate.hpp"
#include "equiforest/merge.hpp"
#include "equiforest/oracle.hpp"

namespace equiforest {

namespace {

// Vertices of `part` surviving the peel at threshold `bound`, i.e. members
// of the (bound+1)-core. Zero survivors means degeneracy <= bound.
int peel_violations(const Graph& g, const std::vector<int>& part_of, int part,
                    const VertexSet& members, int bound) {
    std::vector<int> deg(members.size(), 0);
    std::vector<int> local(static_cast<size_t>(g.vertex_count()), -1);
    for (size_t i = 0; i < members.size(); ++i) local[static_cast<size_t>(members[i])] = static_cast<int>(i);
    for (size_t i = 0; i < members.size(); ++i)
        for (int u : g.neighbors(members[i]))
            if (part_of[static_cast<size_t>(u)] == part && local[static_cast<size_t>(u)] >= 0) ++deg[i];
    std::vector<int> queue;
    std::vector<char> gone(members.size(), 0);
    for (size_t i = 0; i < members.size(); ++i)
        if (deg[i] <= bound) {
            gone[i] = 1;
            queue.push_back(static_cast<int>(i));
        }
    while (!queue.empty()) {
        int i = queue.back();
        queue.pop_back();
        for (int u : g.neighbors(members[static_cast<size_t>(i)])) {
            int j = local[static_cast<size_t>(u)];
            if (j < 0 || gone[static_cast<size_t>(j)] ||
                part_of[static_cast<size_t>(u)] != part)
                continue;
            if (--deg[static_cast<size_t>(j)] <= bound) {
                gone[static_cast<size_t>(j)] = 1;
                queue.push_back(j);
            }
        }
    }
    return static_cast<int>(std::count(gone.begin(), gone.end(), 0));
}

class RepairSplitter {
public:
    RepairSplitter(const Graph& g, int d, int k, const SplitterConfig& cfg)
        : g_(g), d_(d), k_(k), cfg_(cfg), n_(g.vertex_count()) {
        const int q = n_ / k_;
        const int s = n_ % k_;
        for (int i = 0; i < k_; ++i) targets_.push_back(i < s ? q + 1 : q);
    }

    Partition run() {
        std::vector<int> base_order = degeneracy(g_).order;
        std::reverse(base_order.begin(), base_order.end());
        uint64_t moves_left = cfg_.heuristic_budget;
        for (int attempt = 0; attempt < 32; ++attempt) {
            std::vector<int> order = base_order;
            if (attempt > 0) {
                Rng rng(cfg_.seed * 1000003ULL + static_cast<uint64_t>(attempt));
                for (int i = n_ - 1; i > 0; --i)
                    std::swap(order[static_cast<size_t>(i)],
                              order[static_cast<size_t>(rng.below(i + 1))]);
            }
            round_robin(order);
            if (repair(moves_left)) return collect();
            if (moves_left == 0) break;
        }
        throw HeuristicFailure("kdeg_split: repair budget exhausted without a valid " +
                               std::to_string(k_) + "-way split at degeneracy bound " +
                               std::to_string(d_ - 1));
    }

private:
    void round_robin(const std::vector<int>& order) {
        part_of_.assign(static_cast<size_t>(n_), -1);
        sizes_.assign(static_cast<size_t>(k_), 0);
        int next = 0;
        for (int v : order) {
            while (sizes_[static_cast<size_t>(next)] == targets_[static_cast<size_t>(next)])
                next = (next + 1) % k_;
            part_of_[static_cast<size_t>(v)] = next;
            ++sizes_[static_cast<size_t>(next)];
            next = (next + 1) % k_;
        }
    }

    VertexSet members_of(int part) const {
        VertexSet out;
        for (int v = 0; v < n_; ++v)
            if (part_of_[static_cast<size_t>(v)] == part) out.push_back(v);
        return out;
    }

    int violations(int part) const {
        return peel_violations(g_, part_of_, part, members_of(part), d_ - 1);
    }

    // First-improvement local search; candidate order is fixed (vertices
    // ascending, then partner part or partner vertex ascending) so ties
    // resolve to the lowest vertex index.
    bool repair(uint64_t& moves_left) {
        std::vector<int> viol(static_cast<size_t>(k_));
        int total = 0;
        for (int p = 0; p < k_; ++p) {
            viol[static_cast<size_t>(p)] = violations(p);
            total += viol[static_cast<size_t>(p)];
        }
        while (total > 0) {
            if (moves_left == 0) return false;
            bool applied = false;
            for (int v = 0; v < n_ && !applied; ++v) {
                const int a = part_of_[static_cast<size_t>(v)];
                // Moving from a larger part to a smaller one keeps the size
                // profile; swaps always do.
                for (int b = 0; b < k_ && !applied; ++b) {
                    if (b == a || sizes_[static_cast<size_t>(a)] <= sizes_[static_cast<size_t>(b)])
                        continue;
                    part_of_[static_cast<size_t>(v)] = b;
                    const int va = violations(a), vb = violations(b);
                    const int delta = va + vb - viol[static_cast<size_t>(a)] -
                                      viol[static_cast<size_t>(b)];
                    if (delta < 0) {
                        --sizes_[static_cast<size_t>(a)];
                        ++sizes_[static_cast<size_t>(b)];
                        viol[static_cast<size_t>(a)] = va;
                        viol[static_cast<size_t>(b)] = vb;
                        total += delta;
                        applied = true;
                        --moves_left;
                    } else {
                        part_of_[static_cast<size_t>(v)] = a;
                    }
                }
                for (int u = v + 1; u < n_ && !applied; ++u) {
                    const int b = part_of_[static_cast<size_t>(u)];
                    if (b == a) continue;
                    part_of_[static_cast<size_t>(v)] = b;
                    part_of_[static_cast<size_t>(u)] = a;
                    const int va = violations(a), vb = violations(b);
                    const int delta = va + vb - viol[static_cast<size_t>(a)] -
                                      viol[static_cast<size_t>(b)];
                    if (delta < 0) {
                        viol[static_cast<size_t>(a)] = va;
                        viol[static_cast<size_t>(b)] = vb;
                        total += delta;
                        applied = true;
                        --moves_left;
                    } else {
                        part_of_[static_cast<size_t>(v)] = a;
                        part_of_[static_cast<size_t>(u)] = b;
                    }
                }
            }
            if (!applied) return false;  // plateau: restart with another order
        }
        return true;
    }

    Partition collect() const {
        Partition p;
        p.kind = PartKind::degenerate;
        p.degeneracy_bound = d_ - 1;
        for (int i = 0; i < k_; ++i) p.parts.push_back(members_of(i));
        std::stable_sort(p.parts.begin(), p.parts.end(),
                         [](const VertexSet& a, const VertexSet& b) { return a.size() > b.size(); });
        return p;
    }

    const Graph& g_;
    int d_;
    int k_;
    SplitterConfig cfg_;
    int n_;
    std::vector<int> targets_;
    std::vector<int> part_of_;
    std::vector<int> sizes_;
};

}  // namespace

Partition kdeg_split(const Graph& g, int d, int k, const SplitterConfig& cfg) {
    if (d < 2) throw Error("kdeg_split: needs d >= 2 (d = 1 is the recursion base)");
    if (k < 3) throw Error("kdeg_split: needs k >= 3");
    DegeneracyResult dg = degeneracy(g);
    if (dg.d > d)
        throw Error("kdeg_split: graph has degeneracy " + std::to_string(dg.d) +
                    ", above the declared d = " + std::to_string(d));

    if (g.vertex_count() <= cfg.exact_cap) {
        SearchLimits limits;
        limits.vertex_cap = g.vertex_count();
        limits.node_budget = UINT64_MAX;
        SearchResult res = brute_force_equitable(g, k, PartKind::degenerate, limits, d - 1);
        internal_check(res.status == SearchStatus::sat,
                       "an equitable split into (d-1)-degenerate parts always exists");
        return std::move(*res.partition);
    }

    Partition p = RepairSplitter(g, d, k, cfg).run();
    Verdict check = verify_partition(g, p);
    if (!check.ok)
        throw HeuristicFailure("kdeg_split: repaired split failed verification: " +
                               check.summary());
    return p;
}

Partition forests_from_degenerate(const Graph& g, int d, const SplitterConfig& cfg) {
    if (d < 1) throw Error("forests_from_degenerate: needs d >= 1");
    DegeneracyResult dg = degeneracy(g);
    if (dg.d > d)
        throw Error("forests_from_degenerate: graph has degeneracy " + std::to_string(dg.d) +
                    ", above the declared d = " + std::to_string(d));

    Partition out;
    out.kind = PartKind::forest;
    if (d == 1) {
        out.parts.push_back(g.all_vertices());
        return out;
    }

    Partition split = kdeg_split(g, d, 3, cfg);
    for (const VertexSet& block : split.parts) {
        SubgraphResult sub = induced_subgraph(g, block);
        Partition rec = forests_from_degenerate(sub.graph, d - 1, cfg);
        for (VertexSet part : rec.parts) {
            for (int& v : part) v = sub.to_original[static_cast<size_t>(v)];
            out.parts.push_back(std::move(part));
        }
    }

    long expected = 1;
    for (int i = 1; i < d; ++i) expected *= 3;
    internal_check(static_cast<long>(out.parts.size()) == expected,
                   "the recursion yields 3^(d-1) parts");

    size_t lo = 0, hi = 0;
    for (size_t i = 1; i < out.parts.size(); ++i) {
        if (out.parts[i].size() < out.parts[lo].size()) lo = i;
        if (out.parts[i].size() > out.parts[hi].size()) hi = i;
    }
    if (out.parts[hi].size() - out.parts[lo].size() > 1)
        throw EquitabilityDrift("forests_from_degenerate: composed parts of sizes " +
                                std::to_string(out.parts[hi].size()) + " and " +
                                std::to_string(out.parts[lo].size()));
    return out;
}

std::string to_string(Strategy s) {
    switch (s) {
        case Strategy::auto_pick: return "auto";
        case Strategy::via_acyclic: return "via_acyclic";
        case Strategy::via_degeneracy: return "via_degeneracy";
    }
    throw Error("unknown strategy");
}

Strategy strategy_from_string(const std::string& name) {
    if (name == "auto") return Strategy::auto_pick;
    if (name == "via_acyclic") return Strategy::via_acyclic;
    if (name == "via_degeneracy") return Strategy::via_degeneracy;
    throw ParseError("unknown strategy: " + name);
}

PartitionOracle restriction_merge_oracle(Coloring coloring, bool star_mode) {
    int ambient = 0;
    for (const VertexSet& cls : coloring.classes)
        for (int v : cls) ambient = std::max(ambient, v + 1);
    const int ell = coloring.class_count() - 1;
    if (ell < 1) throw Error("restriction_merge_oracle: coloring needs at least 2 classes");
    PartitionOracle oracle;
    oracle.ell = ell;
    oracle.produce = [coloring = std::move(coloring), ambient, star_mode](
                         const Graph& h, const VertexSet& original_vertices) {
        std::vector<int> from_original(static_cast<size_t>(ambient), -1);
        for (size_t i = 0; i < original_vertices.size(); ++i)
            from_original[static_cast<size_t>(original_vertices[i])] = static_cast<int>(i);
        Coloring restricted = restrict_coloring(coloring, original_vertices, from_original);
        return merge_partition(h, restricted,
                               star_mode ? MergeMode::star_to_star_forest
                                         : MergeMode::acyclic_to_forest);
    };
    return oracle;
}

namespace {

struct RoutePlan {
    bool feasible = false;
    long base = 0;  // parts produced before extension
};

long pow3_clamped(int exponent) {
    long out = 1;
    for (int i = 0; i < exponent; ++i) {
        out *= 3;
        if (out > 1'000'000'000L) return 1'000'000'000L;
    }
    return out;
}

}  // namespace

Partition equitable_forests(const Graph& g, int k, Strategy strategy, const RouteConfig& cfg) {
    if (k < 1) throw Error("equitable_forests: k must be at least 1");

    const bool want_acyclic = strategy != Strategy::via_degeneracy;
    const bool want_degeneracy = strategy != Strategy::via_acyclic;

    RoutePlan acyclic;
    Coloring coloring;
    if (want_acyclic) {
        if (g.vertex_count() <= cfg.coloring_cap) {
            const int chi = exact_chromatic(g, ColoringKind::acyclic, cfg.coloring_cap);
            const int classes = std::max(chi, 2);
            coloring = pad_classes(
                exact_coloring(g, ColoringKind::acyclic, classes, cfg.coloring_cap).value(),
                classes);
        } else {
            coloring = greedy_acyclic(g);
            coloring = pad_classes(std::move(coloring), std::max(coloring.class_count(), 2));
        }
        acyclic.base = coloring.class_count() - 1;
        acyclic.feasible = k >= acyclic.base;
    }

    RoutePlan degenerate;
    int d = 1;
    if (want_degeneracy) {
        d = std::max(degeneracy(g).d, 1);
        degenerate.base = pow3_clamped(d - 1);
        degenerate.feasible = k >= degenerate.base;
    }

    bool use_acyclic;
    if (acyclic.feasible && degenerate.feasible)
        use_acyclic = acyclic.base <= degenerate.base;
    else if (acyclic.feasible || degenerate.feasible)
        use_acyclic = acyclic.feasible;
    else
        throw NoRoute("equitable_forests: k=" + std::to_string(k) +
                      " is below every route's base part count" +
                      (want_acyclic ? " (acyclic needs " + std::to_string(acyclic.base) + ")"
                                    : std::string{}) +
                      (want_degeneracy ? " (degeneracy needs " + std::to_string(degenerate.base) +
                                             ")"
                                       : std::string{}));

    if (use_acyclic) return extend_partition(g, restriction_merge_oracle(coloring, false), k);

    PartitionOracle oracle;
    oracle.ell = static_cast<int>(degenerate.base);
    oracle.produce = [d, splitter = cfg.splitter](const Graph& h, const VertexSet&) {
        return forests_from_degenerate(h, d, splitter);
    };
    return extend_partition(g, oracle, k);
}

}  // namespace equiforest
