#include "equiforest/oracle.hpp"

#include <algorithm>

#include "equiforest/certify.hpp"

namespace equiforest {

namespace {

// Rollback-friendly union-find: union by size, no path compression.
class UndoableForest {
public:
    explicit UndoableForest(int n) : parent_(static_cast<size_t>(n)), size_(static_cast<size_t>(n), 1) {
        for (int v = 0; v < n; ++v) parent_[static_cast<size_t>(v)] = v;
    }

    int find(int v) const {
        while (parent_[static_cast<size_t>(v)] != v) v = parent_[static_cast<size_t>(v)];
        return v;
    }

    // Returns false (and records nothing) if u and v are already connected.
    bool link(int u, int v) {
        int ru = find(u), rv = find(v);
        if (ru == rv) return false;
        if (size_[static_cast<size_t>(ru)] < size_[static_cast<size_t>(rv)]) std::swap(ru, rv);
        parent_[static_cast<size_t>(rv)] = ru;
        size_[static_cast<size_t>(ru)] += size_[static_cast<size_t>(rv)];
        trail_.emplace_back(ru, rv);
        return true;
    }

    size_t mark() const { return trail_.size(); }

    void rewind(size_t mark) {
        while (trail_.size() > mark) {
            auto [ru, rv] = trail_.back();
            trail_.pop_back();
            size_[static_cast<size_t>(ru)] -= size_[static_cast<size_t>(rv)];
            parent_[static_cast<size_t>(rv)] = rv;
        }
    }

private:
    std::vector<int> parent_;
    std::vector<int> size_;
    std::vector<std::pair<int, int>> trail_;
};

class EquitableSearch {
public:
    EquitableSearch(const Graph& g, const Orientation* o, int k, PartKind kind, int bound,
                    uint64_t node_budget)
        : g_(g),
          o_(o),
          k_(k),
          kind_(kind),
          bound_(bound),
          budget_(node_budget),
          n_(g.vertex_count()),
          part_of_(static_cast<size_t>(n_), -1),
          members_(static_cast<size_t>(k)),
          degree_in_part_(static_cast<size_t>(n_), 0) {
        const int q = n_ / k_;
        const int s = n_ % k_;
        for (int i = 0; i < k_; ++i) targets_.push_back(i < s ? q + 1 : q);
        if (kind_ == PartKind::forest || kind_ == PartKind::linear_forest)
            for (int i = 0; i < k_; ++i) forests_.emplace_back(n_);
    }

    SearchResult run() {
        SearchResult res;
        bool found = false;
        try {
            found = assign(0);
        } catch (const BudgetStop&) {
            res.status = SearchStatus::budget_exceeded;
            res.nodes = nodes_;
            return res;
        }
        res.nodes = nodes_;
        if (found) {
            Partition p;
            p.kind = kind_;
            p.degeneracy_bound = kind_ == PartKind::degenerate ? bound_ : 0;
            p.parts = members_;
            res.status = SearchStatus::sat;
            res.partition = std::move(p);
        }
        return res;
    }

private:
    struct BudgetStop {};

    bool assign(int v) {
        if (v == n_) return true;
        for (int p = 0; p < k_; ++p) {
            if (static_cast<int>(members_[static_cast<size_t>(p)].size()) ==
                targets_[static_cast<size_t>(p)])
                continue;
            // Empty parts of one target size are interchangeable: only the
            // first of them may be opened.
            if (members_[static_cast<size_t>(p)].empty()) {
                bool skip = false;
                for (int p2 = 0; p2 < p; ++p2)
                    if (members_[static_cast<size_t>(p2)].empty() &&
                        targets_[static_cast<size_t>(p2)] == targets_[static_cast<size_t>(p)]) {
                        skip = true;
                        break;
                    }
                if (skip) continue;
            }
            if (++nodes_ > budget_) throw BudgetStop{};
            if (try_place(v, p)) {
                if (assign(v + 1)) return true;
                unplace(v, p);
            }
        }
        return false;
    }

    std::vector<int> part_neighbors(int v, int p) const {
        std::vector<int> out;
        for (int u : g_.neighbors(v))
            if (part_of_[static_cast<size_t>(u)] == p) out.push_back(u);
        return out;
    }

    // Feasibility is incremental: every kind here is closed under subsets,
    // so a violated part can never recover and the branch is dead.
    bool try_place(int v, int p) {
        std::vector<int> nbrs = part_neighbors(v, p);
        switch (kind_) {
            case PartKind::stable_set:
                if (!nbrs.empty()) return false;
                break;
            case PartKind::forest:
                if (!place_in_forest(v, p, nbrs)) return false;
                break;
            case PartKind::linear_forest: {
                if (nbrs.size() > 2) return false;
                for (int u : nbrs)
                    if (degree_in_part_[static_cast<size_t>(u)] >= 2) return false;
                if (!place_in_forest(v, p, nbrs)) return false;
                break;
            }
            case PartKind::star_forest: {
                // No edge may end up with both endpoints of degree >= 2.
                for (int u : nbrs) {
                    const int du = degree_in_part_[static_cast<size_t>(u)] + 1;
                    if (du < 2) continue;
                    if (nbrs.size() >= 2) return false;
                    for (int w : g_.neighbors(u))
                        if (w != v && part_of_[static_cast<size_t>(w)] == p &&
                            degree_in_part_[static_cast<size_t>(w)] >= 2)
                            return false;
                }
                break;
            }
            case PartKind::in_out_star_forest: {
                members_[static_cast<size_t>(p)].push_back(v);
                VertexSet sorted = normalize_set(members_[static_cast<size_t>(p)]);
                members_[static_cast<size_t>(p)].pop_back();
                if (!is_in_out_star_forest(*o_, sorted).ok) return false;
                break;
            }
            case PartKind::degenerate: {
                members_[static_cast<size_t>(p)].push_back(v);
                VertexSet sorted = normalize_set(members_[static_cast<size_t>(p)]);
                members_[static_cast<size_t>(p)].pop_back();
                bool ok = is_degenerate_at_most(g_, sorted, bound_).ok;
                if (!ok) return false;
                break;
            }
        }
        members_[static_cast<size_t>(p)].push_back(v);
        part_of_[static_cast<size_t>(v)] = p;
        for (int u : nbrs) ++degree_in_part_[static_cast<size_t>(u)];
        degree_in_part_[static_cast<size_t>(v)] = static_cast<int>(nbrs.size());
        return true;
    }

    bool place_in_forest(int v, int p, const std::vector<int>& nbrs) {
        UndoableForest& forest = forests_[static_cast<size_t>(p)];
        const size_t mark = forest.mark();
        for (int u : nbrs)
            if (!forest.link(u, v)) {
                forest.rewind(mark);
                return false;
            }
        marks_.push_back(mark);
        return true;
    }

    void unplace(int v, int p) {
        if (kind_ == PartKind::forest || kind_ == PartKind::linear_forest) {
            forests_[static_cast<size_t>(p)].rewind(marks_.back());
            marks_.pop_back();
        }
        for (int u : g_.neighbors(v))
            if (part_of_[static_cast<size_t>(u)] == p) --degree_in_part_[static_cast<size_t>(u)];
        degree_in_part_[static_cast<size_t>(v)] = 0;
        part_of_[static_cast<size_t>(v)] = -1;
        members_[static_cast<size_t>(p)].pop_back();
    }

    const Graph& g_;
    const Orientation* o_;
    int k_;
    PartKind kind_;
    int bound_;
    uint64_t budget_;
    int n_;
    uint64_t nodes_ = 0;
    std::vector<int> targets_;
    std::vector<int> part_of_;
    std::vector<VertexSet> members_;
    std::vector<int> degree_in_part_;
    std::vector<UndoableForest> forests_;
    std::vector<size_t> marks_;
};

SearchResult search_impl(const Graph& g, const Orientation* o, int k, PartKind kind, int bound,
                         SearchLimits limits) {
    if (k < 1) throw Error("brute_force_equitable: k must be positive");
    if (g.vertex_count() > limits.vertex_cap)
        throw CapExceeded("brute_force_equitable: n=" + std::to_string(g.vertex_count()) +
                          " exceeds cap " + std::to_string(limits.vertex_cap));
    SearchResult res = EquitableSearch(g, o, k, kind, bound, limits.node_budget).run();
    if (res.status == SearchStatus::sat) {
        for (auto& part : res.partition->parts) part = normalize_set(std::move(part));
        Verdict check = o != nullptr ? verify_partition(*o, *res.partition)
                                     : verify_partition(g, *res.partition);
        internal_check(check.ok, "every SAT answer re-certifies: " + check.summary());
    }
    return res;
}

}  // namespace

SearchResult brute_force_equitable(const Graph& g, int k, PartKind kind, SearchLimits limits,
                                   int degeneracy_bound) {
    if (kind == PartKind::in_out_star_forest)
        throw Error("brute_force_equitable: in_out_star_forest needs the Orientation overload");
    return search_impl(g, nullptr, k, kind, degeneracy_bound, limits);
}

SearchResult brute_force_equitable(const Orientation& o, int k, PartKind kind,
                                   SearchLimits limits) {
    return search_impl(o.underlying(), &o, k, kind, 0, limits);
}

CrossValidation cross_validate(const Graph& g, const Partition& constructed,
                               SearchLimits limits) {
    CrossValidation out;
    out.certified = verify_partition(g, constructed);
    if (g.vertex_count() > limits.vertex_cap || constructed.parts.empty()) return out;
    SearchResult sr = brute_force_equitable(g, constructed.part_count(), constructed.kind, limits,
                                            constructed.degeneracy_bound);
    out.nodes = sr.nodes;
    if (sr.status == SearchStatus::budget_exceeded) return out;
    out.existence_checked = true;
    out.existence_agrees = sr.status == SearchStatus::sat;
    return out;
}

}  // namespace equiforest
