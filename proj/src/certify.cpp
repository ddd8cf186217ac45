#include "equiforest/certify.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

#include <json.hpp>

#include "equiforest/io.hpp"

namespace equiforest {

std::string to_string(PartKind kind) {
    switch (kind) {
        case PartKind::forest: return "forest";
        case PartKind::star_forest: return "star_forest";
        case PartKind::linear_forest: return "linear_forest";
        case PartKind::in_out_star_forest: return "in_out_star_forest";
        case PartKind::stable_set: return "stable_set";
        case PartKind::degenerate: return "degenerate";
    }
    throw Error("unknown part kind");
}

PartKind part_kind_from_string(const std::string& name) {
    if (name == "forest") return PartKind::forest;
    if (name == "star_forest") return PartKind::star_forest;
    if (name == "linear_forest") return PartKind::linear_forest;
    if (name == "in_out_star_forest") return PartKind::in_out_star_forest;
    if (name == "stable_set") return PartKind::stable_set;
    if (name == "degenerate") return PartKind::degenerate;
    throw ParseError("unknown part kind: " + name);
}

int Partition::covered_count() const {
    int total = 0;
    for (const auto& part : parts) total += static_cast<int>(part.size());
    return total;
}

std::vector<int> Partition::sizes() const {
    std::vector<int> out;
    out.reserve(parts.size());
    for (const auto& part : parts) out.push_back(static_cast<int>(part.size()));
    return out;
}

namespace {

void check_subset(const Graph& g, const VertexSet& s) {
    if (!is_sorted_set(s)) throw Error("vertex set is not sorted and duplicate-free");
    if (!s.empty() && (s.front() < 0 || s.back() >= g.vertex_count()))
        throw Error("vertex set contains an out-of-range vertex");
}

// Adjacency of the subgraph induced by s, in original vertex labels.
std::map<int, std::vector<int>> induced_adjacency(const Graph& g, const VertexSet& s) {
    std::map<int, std::vector<int>> adj;
    for (int v : s) adj[v] = {};
    for (int v : s)
        for (int u : g.neighbors(v))
            if (set_contains(s, u)) adj[v].push_back(u);
    return adj;
}

std::vector<int> forest_path(const std::map<int, std::vector<int>>& forest_adj, int from, int to) {
    std::map<int, int> prev;
    prev[from] = from;
    std::deque<int> queue{from};
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        if (v == to) break;
        auto it = forest_adj.find(v);
        if (it == forest_adj.end()) continue;
        for (int u : it->second)
            if (!prev.count(u)) {
                prev[u] = v;
                queue.push_back(u);
            }
    }
    std::vector<int> path;
    for (int v = to;; v = prev.at(v)) {
        path.push_back(v);
        if (v == from) break;
    }
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace

Verdict is_forest(const Graph& g, const VertexSet& s) {
    check_subset(g, s);
    std::map<int, int> root;  // union-find over members, by original label
    for (int v : s) root[v] = v;
    auto find = [&root](int v) {
        while (root[v] != v) {
            root[v] = root[root[v]];
            v = root[v];
        }
        return v;
    };
    std::map<int, std::vector<int>> tree;  // accepted forest edges so far
    for (int v : s) tree[v] = {};
    for (int v : s) {
        for (int u : g.neighbors(v)) {
            if (u <= v || !set_contains(s, u)) continue;
            int ru = find(u), rv = find(v);
            if (ru == rv) {
                std::vector<int> cycle = forest_path(tree, v, u);
                return Verdict::fail("is_forest", "induced cycle", cycle);
            }
            root[ru] = rv;
            tree[v].push_back(u);
            tree[u].push_back(v);
        }
    }
    return Verdict::pass();
}

Verdict is_star_forest(const Graph& g, const VertexSet& s) {
    check_subset(g, s);
    // A graph is a star forest iff no edge has both endpoints of degree >= 2:
    // such an edge sits on a path on 4 vertices or a triangle, and every
    // cycle edge qualifies.
    auto adj = induced_adjacency(g, s);
    for (int v : s) {
        if (adj[v].size() < 2) continue;
        for (int u : adj[v]) {
            if (u < v || adj[u].size() < 2) continue;
            int a = adj[v][0] == u ? adj[v][1] : adj[v][0];
            int b = adj[u][0] == v ? adj[u][1] : adj[u][0];
            if (a == b)
                return Verdict::fail("is_star_forest", "induced triangle", {a, v, u});
            return Verdict::fail("is_star_forest", "induced 2-colored path on 4 vertices",
                                 {a, v, u, b});
        }
    }
    return Verdict::pass();
}

Verdict is_linear_forest(const Graph& g, const VertexSet& s) {
    check_subset(g, s);
    auto adj = induced_adjacency(g, s);
    for (int v : s)
        if (adj[v].size() > 2) {
            std::vector<int> witness{v};
            witness.insert(witness.end(), adj[v].begin(), adj[v].begin() + 3);
            return Verdict::fail("is_linear_forest", "vertex of induced degree > 2", witness);
        }
    Verdict forest = is_forest(g, s);
    if (!forest.ok)
        return Verdict::fail("is_linear_forest", "induced cycle", forest.violations[0].witness);
    return Verdict::pass();
}

Verdict is_stable_set(const Graph& g, const VertexSet& s) {
    check_subset(g, s);
    for (int v : s)
        for (int u : g.neighbors(v))
            if (u > v && set_contains(s, u))
                return Verdict::fail("is_stable_set", "induced edge", {v, u});
    return Verdict::pass();
}

Verdict is_in_out_star_forest(const Orientation& o, const VertexSet& s) {
    const Graph& g = o.underlying();
    Verdict star = is_star_forest(g, s);
    if (!star.ok) {
        star.violations[0].predicate = "is_in_out_star_forest";
        return star;
    }
    auto adj = induced_adjacency(g, s);
    for (int center : s) {
        if (adj[center].size() < 2) continue;  // 2-vertex components are always fine
        bool any_out = false, any_in = false;
        int out_leaf = -1, in_leaf = -1;
        for (int leaf : adj[center]) {
            if (o.has_arc(center, leaf)) {
                any_out = true;
                out_leaf = leaf;
            } else {
                any_in = true;
                in_leaf = leaf;
            }
        }
        if (any_out && any_in)
            return Verdict::fail("is_in_out_star_forest", "mixed arc directions at a star center",
                                 {center, out_leaf, center, in_leaf});
    }
    return Verdict::pass();
}

Verdict is_degenerate_at_most(const Graph& g, const VertexSet& s, int bound) {
    check_subset(g, s);
    SubgraphResult sub = induced_subgraph(g, s);
    DegeneracyResult res = degeneracy(sub.graph);
    if (res.d <= bound) return Verdict::pass();
    // Witness: the (bound+1)-core, i.e. what survives peeling at the bound.
    auto adj = induced_adjacency(g, s);
    std::map<int, int> deg;
    for (int v : s) deg[v] = static_cast<int>(adj[v].size());
    std::deque<int> queue;
    std::map<int, bool> gone;
    for (int v : s)
        if (deg[v] <= bound) {
            queue.push_back(v);
            gone[v] = true;
        }
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int u : adj[v])
            if (!gone[u] && --deg[u] <= bound) {
                gone[u] = true;
                queue.push_back(u);
            }
    }
    std::vector<int> core;
    for (int v : s)
        if (!gone[v]) core.push_back(v);
    return Verdict::fail("is_degenerate_at_most",
                         "induced degeneracy " + std::to_string(res.d) + " exceeds bound " +
                             std::to_string(bound),
                         core);
}

Verdict check_part_kind(const Graph& g, const VertexSet& s, PartKind kind, int degeneracy_bound) {
    switch (kind) {
        case PartKind::forest: return is_forest(g, s);
        case PartKind::star_forest: return is_star_forest(g, s);
        case PartKind::linear_forest: return is_linear_forest(g, s);
        case PartKind::stable_set: return is_stable_set(g, s);
        case PartKind::degenerate: return is_degenerate_at_most(g, s, degeneracy_bound);
        case PartKind::in_out_star_forest:
            return Verdict::fail("part_kind", "in_out_star_forest parts need an orientation");
    }
    throw Error("unknown part kind");
}

Verdict check_part_kind(const Orientation& o, const VertexSet& s, PartKind kind,
                        int degeneracy_bound) {
    if (kind == PartKind::in_out_star_forest) return is_in_out_star_forest(o, s);
    return check_part_kind(o.underlying(), s, kind, degeneracy_bound);
}

namespace {

template <typename GraphLike>
Verdict verify_partition_impl(const GraphLike& host, int n, const Partition& p) {
    Verdict verdict;
    std::vector<int> owner(static_cast<size_t>(n), -1);
    for (size_t i = 0; i < p.parts.size(); ++i) {
        const VertexSet& part = p.parts[i];
        if (!is_sorted_set(part)) {
            verdict.add("partition", "part " + std::to_string(i) + " is not a sorted set");
            continue;
        }
        for (int v : part) {
            if (v < 0 || v >= n) {
                verdict.add("partition", "part " + std::to_string(i) + " has out-of-range vertex",
                            {v});
                continue;
            }
            if (owner[static_cast<size_t>(v)] >= 0)
                verdict.add("disjoint",
                            "vertex in parts " + std::to_string(owner[static_cast<size_t>(v)]) +
                                " and " + std::to_string(i),
                            {v});
            else
                owner[static_cast<size_t>(v)] = static_cast<int>(i);
        }
    }
    for (int v = 0; v < n; ++v)
        if (owner[static_cast<size_t>(v)] < 0) verdict.add("cover", "vertex not covered", {v});
    if (!p.parts.empty()) {
        size_t lo = 0, hi = 0;
        for (size_t i = 1; i < p.parts.size(); ++i) {
            if (p.parts[i].size() < p.parts[lo].size()) lo = i;
            if (p.parts[i].size() > p.parts[hi].size()) hi = i;
        }
        if (p.parts[hi].size() - p.parts[lo].size() > 1)
            verdict.add("equitable",
                        "part sizes " + std::to_string(p.parts[hi].size()) + " and " +
                            std::to_string(p.parts[lo].size()) + " differ by more than one",
                        {static_cast<int>(hi), static_cast<int>(lo)});
    }
    for (size_t i = 0; i < p.parts.size(); ++i) {
        if (!is_sorted_set(p.parts[i])) continue;
        Verdict kind = check_part_kind(host, p.parts[i], p.kind, p.degeneracy_bound);
        for (auto& violation : kind.violations) {
            violation.predicate = "part " + std::to_string(i) + " " + violation.predicate;
            verdict.ok = false;
            verdict.violations.push_back(std::move(violation));
        }
    }
    return verdict;
}

}  // namespace

Verdict verify_partition(const Graph& g, const Partition& p) {
    return verify_partition_impl(g, g.vertex_count(), p);
}

Verdict verify_partition(const Orientation& o, const Partition& p) {
    return verify_partition_impl(o, o.vertex_count(), p);
}

namespace {

std::string fnv1a_hex(const std::string& data) {
    uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream os;
    os << std::hex;
    for (int shift = 60; shift >= 0; shift -= 4) os << ((h >> shift) & 0xf);
    return os.str();
}

}  // namespace

std::string graph_hash(const Graph& g) { return fnv1a_hex(write_graph6(g)); }

std::string graph_hash(const Orientation& o) { return fnv1a_hex(write_arc_list(o)); }

namespace {

Certificate make_certificate_impl(std::string hash, const Partition& p, std::string producer) {
    Certificate cert;
    cert.hash = std::move(hash);
    cert.k = p.part_count();
    cert.kind = p.kind;
    cert.degeneracy_bound = p.kind == PartKind::degenerate ? p.degeneracy_bound : 0;
    cert.parts = p.parts;
    cert.producer = std::move(producer);
    return cert;
}

}  // namespace

Certificate make_certificate(const Graph& g, const Partition& p, std::string producer) {
    return make_certificate_impl(graph_hash(g), p, std::move(producer));
}

Certificate make_certificate(const Orientation& o, const Partition& p, std::string producer) {
    return make_certificate_impl(graph_hash(o), p, std::move(producer));
}

std::string to_json(const Certificate& cert) {
    nlohmann::json j;
    j["graph_hash"] = cert.hash;
    j["k"] = cert.k;
    j["part_kind"] = to_string(cert.kind);
    if (cert.kind == PartKind::degenerate) j["degeneracy_bound"] = cert.degeneracy_bound;
    j["parts"] = cert.parts;
    j["producer"] = cert.producer;
    return j.dump();
}

Certificate certificate_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("certificate: ") + e.what());
    }
    Certificate cert;
    try {
        cert.hash = j.at("graph_hash").get<std::string>();
        cert.k = j.at("k").get<int>();
        cert.kind = part_kind_from_string(j.at("part_kind").get<std::string>());
        if (cert.kind == PartKind::degenerate)
            cert.degeneracy_bound = j.at("degeneracy_bound").get<int>();
        cert.parts = j.at("parts").get<std::vector<VertexSet>>();
        cert.producer = j.value("producer", std::string{});
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("certificate: ") + e.what());
    }
    if (cert.k != static_cast<int>(cert.parts.size()))
        throw ParseError("certificate: k does not match the number of parts");
    return cert;
}

namespace {

template <typename GraphLike>
Verdict check_certificate_impl(const GraphLike& host, const std::string& expected_hash,
                               const Certificate& cert) {
    Verdict verdict;
    if (cert.hash != expected_hash)
        verdict.add("graph_hash", "certificate hash " + cert.hash +
                                      " does not match the supplied graph " + expected_hash);
    Verdict partition = verify_partition(host, cert.partition());
    if (!partition.ok) {
        verdict.ok = false;
        for (auto& violation : partition.violations)
            verdict.violations.push_back(std::move(violation));
    }
    return verdict;
}

}  // namespace

Verdict check_certificate(const Graph& g, const Certificate& cert) {
    return check_certificate_impl(g, graph_hash(g), cert);
}

Verdict check_certificate(const Orientation& o, const Certificate& cert) {
    return check_certificate_impl(o, graph_hash(o), cert);
}

}  // namespace equiforest
