#include "equiforest/coloring.hpp"

#include <algorithm>
#include <numeric>

#include <json.hpp>

#include "equiforest/certify.hpp"

namespace equiforest {

std::string to_string(ColoringKind kind) {
    switch (kind) {
        case ColoringKind::proper: return "proper";
        case ColoringKind::acyclic: return "acyclic";
        case ColoringKind::star: return "star";
        case ColoringKind::oriented_consistent: return "oriented-consistent";
    }
    throw Error("unknown coloring kind");
}

ColoringKind coloring_kind_from_string(const std::string& name) {
    if (name == "proper") return ColoringKind::proper;
    if (name == "acyclic") return ColoringKind::acyclic;
    if (name == "star") return ColoringKind::star;
    if (name == "oriented-consistent") return ColoringKind::oriented_consistent;
    throw ParseError("unknown coloring kind: " + name);
}

std::vector<int> Coloring::assignment(int n) const {
    std::vector<int> class_of(static_cast<size_t>(n), -1);
    for (size_t c = 0; c < classes.size(); ++c) {
        if (!is_sorted_set(classes[c]))
            throw Error("coloring class " + std::to_string(c) + " is not a sorted set");
        for (int v : classes[c]) {
            if (v < 0 || v >= n)
                throw Error("coloring mentions out-of-range vertex " + std::to_string(v));
            if (class_of[static_cast<size_t>(v)] >= 0)
                throw Error("coloring assigns vertex " + std::to_string(v) + " twice");
            class_of[static_cast<size_t>(v)] = static_cast<int>(c);
        }
    }
    for (int v = 0; v < n; ++v)
        if (class_of[static_cast<size_t>(v)] < 0)
            throw Error("coloring does not cover vertex " + std::to_string(v));
    return class_of;
}

Coloring coloring_from_assignment(const std::vector<int>& class_of, int class_count,
                                  ColoringKind kind) {
    Coloring c;
    c.kind = kind;
    c.classes.assign(static_cast<size_t>(class_count), {});
    for (size_t v = 0; v < class_of.size(); ++v) {
        int cls = class_of[v];
        if (cls < 0 || cls >= class_count)
            throw Error("assignment mentions class " + std::to_string(cls) + " outside 0.." +
                        std::to_string(class_count - 1));
        c.classes[static_cast<size_t>(cls)].push_back(static_cast<int>(v));
    }
    return c;
}

Coloring pad_classes(Coloring c, int class_count) {
    if (c.class_count() > class_count)
        throw Error("pad_classes: coloring already has more classes than requested");
    c.classes.resize(static_cast<size_t>(class_count));
    return c;
}

Coloring restrict_coloring(const Coloring& c, const VertexSet& keep,
                           const std::vector<int>& from_original) {
    Coloring out;
    out.kind = c.kind;
    out.classes.reserve(c.classes.size());
    for (const VertexSet& cls : c.classes) {
        VertexSet restricted;
        for (int v : cls)
            if (set_contains(keep, v))
                restricted.push_back(from_original[static_cast<size_t>(v)]);
        out.classes.push_back(std::move(restricted));
    }
    return out;
}

Verdict verify_proper(const Graph& g, const Coloring& c) {
    std::vector<int> class_of = c.assignment(g.vertex_count());
    for (auto [u, v] : g.edges())
        if (class_of[static_cast<size_t>(u)] == class_of[static_cast<size_t>(v)])
            return Verdict::fail("verify_proper", "edge inside one class", {u, v});
    return Verdict::pass();
}

namespace {

Verdict verify_pairwise(const Graph& g, const Coloring& c, const char* predicate,
                        Verdict (*check)(const Graph&, const VertexSet&)) {
    Verdict proper = verify_proper(g, c);
    if (!proper.ok) return proper;
    for (size_t i = 0; i < c.classes.size(); ++i) {
        for (size_t j = i + 1; j < c.classes.size(); ++j) {
            VertexSet both = set_union(c.classes[i], c.classes[j]);
            Verdict pair = check(g, both);
            if (!pair.ok) {
                Violation v = pair.violations[0];
                return Verdict::fail(predicate,
                                     "classes " + std::to_string(i) + " and " + std::to_string(j) +
                                         ": " + v.detail,
                                     v.witness);
            }
        }
    }
    return Verdict::pass();
}

}  // namespace

Verdict verify_acyclic(const Graph& g, const Coloring& c) {
    return verify_pairwise(g, c, "verify_acyclic", &is_forest);
}

Verdict verify_star(const Graph& g, const Coloring& c) {
    return verify_pairwise(g, c, "verify_star", &is_star_forest);
}

Verdict verify_oriented_consistent(const Orientation& o, const Coloring& c) {
    const Graph& g = o.underlying();
    Verdict proper = verify_proper(g, c);
    if (!proper.ok) return proper;
    std::vector<int> class_of = c.assignment(g.vertex_count());
    const int k = c.class_count();
    // first_arc[i*k + j] remembers one arc from class i to class j
    std::vector<std::pair<int, int>> first_arc(static_cast<size_t>(k) * static_cast<size_t>(k),
                                               {-1, -1});
    for (auto [u, v] : o.arcs()) {
        int i = class_of[static_cast<size_t>(u)];
        int j = class_of[static_cast<size_t>(v)];
        auto& slot = first_arc[static_cast<size_t>(i) * static_cast<size_t>(k) +
                               static_cast<size_t>(j)];
        if (slot.first < 0) slot = {u, v};
        const auto& reverse = first_arc[static_cast<size_t>(j) * static_cast<size_t>(k) +
                                        static_cast<size_t>(i)];
        if (reverse.first >= 0)
            return Verdict::fail("verify_oriented_consistent",
                                 "conflicting arcs between classes " + std::to_string(i) +
                                     " and " + std::to_string(j),
                                 {u, v, reverse.first, reverse.second});
    }
    return Verdict::pass();
}

namespace {

// Would coloring v with c close a cycle whose vertices all have colors c or
// c2? Such a cycle must run through v, i.e. two of v's c2-neighbors are
// already connected inside the (c, c2) union.
bool creates_bicolored_cycle(const Graph& g, const std::vector<int>& color, int v, int c, int c2) {
    std::vector<int> entry_points;
    for (int u : g.neighbors(v))
        if (color[static_cast<size_t>(u)] == c2) entry_points.push_back(u);
    if (entry_points.size() < 2) return false;
    std::vector<char> visited(static_cast<size_t>(g.vertex_count()), 0);
    std::vector<int> stack;
    for (size_t i = 0; i < entry_points.size(); ++i) {
        if (visited[static_cast<size_t>(entry_points[i])]) return true;
        stack.assign(1, entry_points[i]);
        visited[static_cast<size_t>(entry_points[i])] = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y : g.neighbors(x)) {
                if (y == v || visited[static_cast<size_t>(y)]) continue;
                int cy = color[static_cast<size_t>(y)];
                if (cy != c && cy != c2) continue;
                visited[static_cast<size_t>(y)] = 1;
                stack.push_back(y);
            }
        }
    }
    return false;
}

// Star forests are exactly the graphs with no edge whose endpoints both have
// degree >= 2, so only edges near v need a second look after v joins.
bool creates_star_violation(const Graph& g, const std::vector<int>& color, int v, int c, int c2) {
    auto in_union = [&](int x) {
        if (x == v) return true;
        int cx = color[static_cast<size_t>(x)];
        return cx == c || cx == c2;
    };
    auto union_degree = [&](int x) {
        int d = 0;
        for (int y : g.neighbors(x))
            if (in_union(y)) ++d;
        return d;
    };
    std::vector<int> joined;
    for (int u : g.neighbors(v))
        if (color[static_cast<size_t>(u)] == c2) joined.push_back(u);
    if (joined.empty()) return false;
    const int deg_v = static_cast<int>(joined.size());
    for (int u : joined) {
        int deg_u = union_degree(u);
        if (deg_u < 2) continue;
        if (deg_v >= 2) return true;
        for (int w : g.neighbors(u)) {
            if (w == v || !in_union(w)) continue;
            if (union_degree(w) >= 2) return true;
        }
    }
    return false;
}

class ColoringSearch {
public:
    ColoringSearch(const Graph& g, ColoringKind kind, int k, const Orientation* o)
        : g_(g),
          kind_(kind),
          k_(k),
          o_(o),
          n_(g.vertex_count()),
          color_(static_cast<size_t>(n_), -1) {
        order_.resize(static_cast<size_t>(n_));
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(),
                         [&g](int a, int b) { return g.degree(a) > g.degree(b); });
        if (o_ != nullptr)
            arc_count_.assign(static_cast<size_t>(k_) * static_cast<size_t>(k_), 0);
    }

    std::optional<Coloring> run() {
        if (!search(0, 0)) return std::nullopt;
        int used = 0;
        for (int v = 0; v < n_; ++v) used = std::max(used, color_[static_cast<size_t>(v)] + 1);
        ColoringKind claimed = o_ != nullptr ? ColoringKind::oriented_consistent : kind_;
        return coloring_from_assignment(color_, used, claimed);
    }

private:
    bool search(int pos, int used) {
        if (pos == n_) return true;
        const int v = order_[static_cast<size_t>(pos)];
        const int limit = std::min(used, k_ - 1);
        for (int c = 0; c <= limit; ++c) {
            if (!feasible(v, c, used)) continue;
            color_[static_cast<size_t>(v)] = c;
            if (o_ == nullptr || apply_arcs(v, c)) {
                if (search(pos + 1, std::max(used, c + 1))) return true;
                if (o_ != nullptr) undo_arcs(v, c);
            }
            color_[static_cast<size_t>(v)] = -1;
        }
        return false;
    }

    bool feasible(int v, int c, int used) const {
        for (int u : g_.neighbors(v))
            if (color_[static_cast<size_t>(u)] == c) return false;
        if (kind_ == ColoringKind::proper) return true;
        for (int c2 = 0; c2 < std::max(used, c + 1); ++c2) {
            if (c2 == c) continue;
            if (kind_ == ColoringKind::acyclic) {
                if (creates_bicolored_cycle(g_, color_, v, c, c2)) return false;
            } else {
                if (creates_star_violation(g_, color_, v, c, c2)) return false;
            }
        }
        return true;
    }

    int& arc_count(int i, int j) {
        return arc_count_[static_cast<size_t>(i) * static_cast<size_t>(k_) +
                          static_cast<size_t>(j)];
    }

    bool apply_arcs(int v, int c) {
        std::vector<std::pair<int, int>> added;
        for (int u : g_.neighbors(v)) {
            int cu = color_[static_cast<size_t>(u)];
            if (cu < 0 || u == v) continue;
            int i = c, j = cu;
            if (o_->has_arc(u, v)) std::swap(i, j);
            ++arc_count(i, j);
            added.emplace_back(i, j);
            if (arc_count(i, j) > 0 && arc_count(j, i) > 0) {
                for (auto [a, b] : added) --arc_count(a, b);
                return false;
            }
        }
        return true;
    }

    void undo_arcs(int v, int c) {
        for (int u : g_.neighbors(v)) {
            int cu = color_[static_cast<size_t>(u)];
            if (cu < 0) continue;
            int i = c, j = cu;
            if (o_->has_arc(u, v)) std::swap(i, j);
            --arc_count(i, j);
        }
    }

    const Graph& g_;
    ColoringKind kind_;
    int k_;
    const Orientation* o_;
    int n_;
    std::vector<int> color_;
    std::vector<int> order_;
    std::vector<int> arc_count_;
};

void check_cap(int n, int cap, const char* who) {
    if (n > cap)
        throw CapExceeded(std::string(who) + ": n=" + std::to_string(n) +
                          " exceeds the exact-solver cap " + std::to_string(cap));
}

}  // namespace

std::optional<Coloring> exact_coloring(const Graph& g, ColoringKind kind, int k, int cap) {
    if (kind == ColoringKind::oriented_consistent)
        throw Error("exact_coloring: use exact_oriented_star_coloring for oriented kinds");
    if (k < 0) throw Error("exact_coloring: k must be nonnegative");
    check_cap(g.vertex_count(), cap, "exact_coloring");
    if (g.vertex_count() > 0 && k == 0) return std::nullopt;
    return ColoringSearch(g, kind, k, nullptr).run();
}

std::optional<Coloring> exact_oriented_star_coloring(const Orientation& o, int k, int cap) {
    if (k < 0) throw Error("exact_oriented_star_coloring: k must be nonnegative");
    check_cap(o.vertex_count(), cap, "exact_oriented_star_coloring");
    if (o.vertex_count() > 0 && k == 0) return std::nullopt;
    return ColoringSearch(o.underlying(), ColoringKind::star, k, &o).run();
}

int exact_chromatic(const Graph& g, ColoringKind kind, int cap) {
    for (int k = 0;; ++k) {
        internal_check(k <= g.vertex_count(), "singleton classes always satisfy every kind");
        if (exact_coloring(g, kind, k, cap).has_value()) return k;
    }
}

Coloring greedy_acyclic(const Graph& g) {
    const int n = g.vertex_count();
    DegeneracyResult peel = degeneracy(g);
    std::vector<int> color(static_cast<size_t>(n), -1);
    int classes = 0;
    for (int pos = n - 1; pos >= 0; --pos) {
        const int v = peel.order[static_cast<size_t>(pos)];
        int chosen = -1;
        for (int c = 0; c < classes && chosen < 0; ++c) {
            bool ok = true;
            for (int u : g.neighbors(v))
                if (color[static_cast<size_t>(u)] == c) {
                    ok = false;
                    break;
                }
            for (int c2 = 0; ok && c2 < classes; ++c2)
                if (c2 != c && creates_bicolored_cycle(g, color, v, c, c2)) ok = false;
            if (ok) chosen = c;
        }
        if (chosen < 0) chosen = classes++;  // a fresh class can never conflict
        color[static_cast<size_t>(v)] = chosen;
    }
    return coloring_from_assignment(color, classes, ColoringKind::acyclic);
}

std::string to_json(const Coloring& c) {
    nlohmann::json j;
    j["kind"] = to_string(c.kind);
    j["classes"] = c.classes;
    return j.dump();
}

Coloring coloring_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("coloring: ") + e.what());
    }
    Coloring c;
    try {
        c.kind = coloring_kind_from_string(j.at("kind").get<std::string>());
        c.classes = j.at("classes").get<std::vector<VertexSet>>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("coloring: ") + e.what());
    }
    for (auto& cls : c.classes) cls = normalize_set(std::move(cls));
    return c;
}

}  // namespace equiforest
