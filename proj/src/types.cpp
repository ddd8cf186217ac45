#include "equiforest/types.hpp"

#include <algorithm>
#include <sstream>

namespace equiforest {

bool is_sorted_set(const VertexSet& s) {
    for (size_t i = 1; i < s.size(); ++i)
        if (s[i - 1] >= s[i]) return false;
    return true;
}

VertexSet normalize_set(VertexSet s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

bool set_contains(const VertexSet& s, int v) {
    return std::binary_search(s.begin(), s.end(), v);
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    out.reserve(a.size());
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Verdict Verdict::fail(std::string predicate, std::string detail, std::vector<int> witness) {
    Verdict v;
    v.add(std::move(predicate), std::move(detail), std::move(witness));
    return v;
}

void Verdict::add(std::string predicate, std::string detail, std::vector<int> witness) {
    ok = false;
    violations.push_back({std::move(predicate), std::move(detail), std::move(witness)});
}

std::string Verdict::summary() const {
    if (ok) return "valid";
    std::ostringstream os;
    for (size_t i = 0; i < violations.size(); ++i) {
        if (i) os << "; ";
        os << violations[i].predicate << ": " << violations[i].detail;
        if (!violations[i].witness.empty()) {
            os << " [";
            for (size_t j = 0; j < violations[i].witness.size(); ++j) {
                if (j) os << ",";
                os << violations[i].witness[j];
            }
            os << "]";
        }
    }
    return os.str();
}

void internal_check(bool cond, const std::string& what) {
    if (!cond) throw std::logic_error("internal invariant violated: " + what);
}

}  // namespace equiforest
