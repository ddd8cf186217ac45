#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace equiforest {

// A set of vertex indices, kept sorted ascending with no duplicates.
using VertexSet = std::vector<int>;

bool is_sorted_set(const VertexSet& s);
VertexSet normalize_set(VertexSet s);
bool set_contains(const VertexSet& s, int v);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);

struct Violation {
    std::string predicate;
    std::string detail;
    std::vector<int> witness;
};

// Result of a verification predicate. `violations` is empty iff `ok`.
struct Verdict {
    bool ok = true;
    std::vector<Violation> violations;

    static Verdict pass() { return {}; }
    static Verdict fail(std::string predicate, std::string detail,
                        std::vector<int> witness = {});
    void add(std::string predicate, std::string detail,
             std::vector<int> witness = {});
    std::string summary() const;
};

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class ParseError : public Error {
public:
    using Error::Error;
};

// An exact solver or search was asked to run above its configured size cap.
class CapExceeded : public Error {
public:
    using Error::Error;
};

// The repair heuristic exhausted its budget without a valid split.
class HeuristicFailure : public Error {
public:
    using Error::Error;
};

// A composition of verified-equitable splits came out inequitable.
class EquitabilityDrift : public Error {
public:
    using Error::Error;
};

// No partitioning route is applicable for the requested part count.
class NoRoute : public Error {
public:
    using Error::Error;
};

// A plugged-in partition oracle returned something outside its contract.
class OracleViolation : public Error {
public:
    using Error::Error;
};

// Invariant that must hold whenever the caller met the preconditions.
// A failure here is a bug in this library and aborts loudly.
void internal_check(bool cond, const std::string& what);

}  // namespace equiforest
