#include "equiforest/io.hpp"

#include <charconv>
#include <sstream>
#include <string>

namespace equiforest {

namespace {

constexpr long kMaxGraph6Order = 68719476735L;  // 2^36 - 1

int g6_byte(char c) {
    unsigned char b = static_cast<unsigned char>(c);
    if (b < 63 || b > 126) throw ParseError("graph6: byte out of printable range");
    return b - 63;
}

std::string_view strip(std::string_view s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' '))
        s.remove_suffix(1);
    while (!s.empty() && (s.front() == ' ')) s.remove_prefix(1);
    return s;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
    std::string_view s = strip(text);
    constexpr std::string_view header = ">>graph6<<";
    if (s.substr(0, header.size()) == header) s.remove_prefix(header.size());
    if (s.empty()) throw ParseError("graph6: empty input");

    size_t pos = 0;
    long n = 0;
    if (static_cast<unsigned char>(s[0]) == 126) {
        if (s.size() >= 2 && static_cast<unsigned char>(s[1]) == 126) {
            if (s.size() < 8) throw ParseError("graph6: truncated 36-bit order");
            for (int i = 2; i < 8; ++i) n = (n << 6) | g6_byte(s[static_cast<size_t>(i)]);
            pos = 8;
        } else {
            if (s.size() < 4) throw ParseError("graph6: truncated 18-bit order");
            for (int i = 1; i < 4; ++i) n = (n << 6) | g6_byte(s[static_cast<size_t>(i)]);
            pos = 4;
        }
    } else {
        n = g6_byte(s[0]);
        if (n > 62) throw ParseError("graph6: malformed order byte");
        pos = 1;
    }

    const long bits = n * (n - 1) / 2;
    const size_t chars = static_cast<size_t>((bits + 5) / 6);
    if (s.size() - pos != chars)
        throw ParseError("graph6: body has " + std::to_string(s.size() - pos) +
                         " characters, expected " + std::to_string(chars));

    std::vector<std::pair<int, int>> edges;
    long bit = 0;
    int cur = 0;
    int have = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++bit) {
            if (have == 0) {
                cur = g6_byte(s[pos++]);
                have = 6;
            }
            if (cur & (1 << (have - 1))) edges.emplace_back(u, v);
            --have;
        }
    }
    // Trailing padding must be zero bits.
    if (have > 0 && (cur & ((1 << have) - 1)) != 0)
        throw ParseError("graph6: nonzero padding bits");
    return Graph::from_edges(static_cast<int>(n), edges);
}

std::string write_graph6(const Graph& g) {
    const long n = g.vertex_count();
    if (n > kMaxGraph6Order) throw Error("graph6: order too large to encode");
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 0x3f) + 63));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 0x3f) + 63));
    }
    int cur = 0;
    int have = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            cur = (cur << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++have == 6) {
                out.push_back(static_cast<char>(cur + 63));
                cur = 0;
                have = 0;
            }
        }
    }
    if (have > 0) out.push_back(static_cast<char>((cur << (6 - have)) + 63));
    return out;
}

namespace {

struct PairList {
    std::vector<std::pair<int, int>> pairs;
    int declared_n = -1;
    int max_index = -1;
};

PairList parse_pairs(std::string_view text, const char* what) {
    PairList out;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view sv = strip(line);
        if (sv.empty()) continue;
        if (sv.front() == '#') {
            if (sv.substr(0, 3) == "#n=") {
                int n = -1;
                auto [ptr, ec] = std::from_chars(sv.data() + 3, sv.data() + sv.size(), n);
                if (ec != std::errc() || ptr != sv.data() + sv.size() || n < 0)
                    throw ParseError(std::string(what) + ": malformed header on line " +
                                     std::to_string(lineno));
                out.declared_n = n;
            }
            continue;
        }
        std::istringstream ls{std::string(sv)};
        long u = -1, v = -1;
        std::string extra;
        if (!(ls >> u >> v) || (ls >> extra))
            throw ParseError(std::string(what) + ": expected \"u v\" on line " +
                             std::to_string(lineno));
        if (u < 0 || v < 0)
            throw ParseError(std::string(what) + ": negative index on line " +
                             std::to_string(lineno));
        if (u == v)
            throw ParseError(std::string(what) + ": self-loop on line " + std::to_string(lineno));
        out.pairs.emplace_back(static_cast<int>(u), static_cast<int>(v));
        out.max_index = std::max(out.max_index, static_cast<int>(std::max(u, v)));
    }
    if (out.declared_n >= 0 && out.max_index >= out.declared_n)
        throw ParseError(std::string(what) + ": vertex index " + std::to_string(out.max_index) +
                         " is outside declared n=" + std::to_string(out.declared_n));
    return out;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
    PairList pl = parse_pairs(text, "edge list");
    int n = pl.declared_n >= 0 ? pl.declared_n : pl.max_index + 1;
    try {
        return Graph::from_edges(n, pl.pairs);
    } catch (const Error& e) {
        throw ParseError(std::string("edge list: ") + e.what());
    }
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream os;
    os << "#n=" << g.vertex_count() << "\n";
    for (auto [u, v] : g.edges()) os << u << " " << v << "\n";
    return os.str();
}

Orientation parse_arc_list(std::string_view text) {
    PairList pl = parse_pairs(text, "arc list");
    int n = pl.declared_n >= 0 ? pl.declared_n : pl.max_index + 1;
    try {
        return Orientation::from_arcs(n, pl.pairs);
    } catch (const Error& e) {
        throw ParseError(std::string("arc list: ") + e.what());
    }
}

std::string write_arc_list(const Orientation& o) {
    std::ostringstream os;
    os << "#n=" << o.vertex_count() << "\n";
    for (auto [u, v] : o.arcs()) os << u << " " << v << "\n";
    return os.str();
}

}  // namespace equiforest
