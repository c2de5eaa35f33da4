// Interval ledger [lo, hi] for f(n,k,d) over a parameter rectangle, closed
// under the closed-form bounds and the recursions in n and k.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace affcover {

enum class Rule {
    DoubleCount,
    ThmA,
    ThmB,
    ThmC,
    Jamison,
    Lemma31,
    NRecursion,
    KRecursionLo,
    KRecursionHi,
    Construction,
    Anchor,
};

struct Provenance {
    Rule rule;
    std::string detail; // construction family or anchor source

    std::string to_string() const;
    friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct BoundEntry {
    int n = 0;
    int k = 0;
    int d = 0;
    std::int64_t lo = 0;
    std::int64_t hi = 0;
    std::vector<Provenance> lo_provenance;
    std::vector<Provenance> hi_provenance;

    bool exact() const { return lo == hi; }
    /// Exact and equal to the n + 2^d k - d - 2 upper bound (marked "*").
    bool attains_general_upper() const;
    bool lo_has(Rule r) const;
    bool hi_has(Rule r) const;
};

/// Externally established fact about one cell (solver result, code bound, ...).
struct Anchor {
    int n = 0;
    int k = 0;
    int d = 1;
    std::optional<std::int64_t> lower;
    std::optional<std::int64_t> upper;
    std::string source;

    static Anchor exact(int n, int k, int d, std::int64_t value, std::string source) {
        return {n, k, d, value, value, std::move(source)};
    }
    static Anchor upper_bound(int n, int k, int d, std::int64_t value, std::string source) {
        return {n, k, d, std::nullopt, value, std::move(source)};
    }
};

struct Rectangle {
    int n_min = 1;
    int n_max = 6;
    int k_min = 1;
    int k_max = 16;
    int d_min = 1;
    int d_max = 1;
};

class ContradictionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class BoundLedger {
public:
    const Rectangle& rectangle() const { return rect_; }
    const BoundEntry& at(int n, int k, int d = 1) const;
    const BoundEntry* find(int n, int k, int d = 1) const;
    /// Entries inside the requested rectangle, ordered by (d, n, k).
    std::vector<BoundEntry> cells() const;
    const std::vector<Anchor>& anchors() const { return anchors_; }

    /// Number of sweeps the last propagation needed to reach its fixpoint.
    int passes() const { return passes_; }

private:
    friend BoundLedger propagate(const Rectangle&, const std::vector<Anchor>&);
    friend BoundLedger propagate(const BoundLedger&);

    Rectangle rect_;
    std::vector<Anchor> anchors_;
    // every cell the propagation tracked, including the support outside rect_
    std::map<std::tuple<int, int, int>, BoundEntry> grid_;
    int passes_ = 0;
};

/// Least fixpoint of all bound rules over the rectangle (extended internally
/// down to n = d and k = 1, and up to every anchored cell). Throws
/// ContradictionError when some cell ends with lo > hi.
BoundLedger propagate(const Rectangle& rect, const std::vector<Anchor>& anchors);

/// Re-runs propagation seeded with an existing ledger's intervals.
BoundLedger propagate(const BoundLedger& ledger);

struct N0Report {
    int k = 0;
    bool determined = false;
    int lower = 1;            // n0(k) >= lower
    std::optional<int> upper; // n0(k) <= upper
    std::string to_string() const;
};

/// Threshold n0(k): least n from which f(n,k,1) = n + 2k - 3. Uses the
/// largest n with hi < n + 2k - 3 and the least n where the bound is attained.
N0Report n0_report(int k, const BoundLedger& ledger);

enum class TableFormat { Markdown, Csv, Json };

/// Renders rows n_min..n_max and columns k_min..k_max for one d. Exact cells
/// print their value with "*" when they attain the general upper bound;
/// open cells print "lo-hi".
std::string render_table(const BoundLedger& ledger, int n_min, int n_max, int k_min, int k_max, int d,
                         TableFormat format);

std::string cell_text(const BoundEntry& e);

} // namespace affcover
