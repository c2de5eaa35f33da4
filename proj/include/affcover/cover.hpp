// Multisets of equal-codimension affine subspaces and exact verification of
// the (k,d;s) covering property.

#pragma once

#include "affcover/gf2.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace affcover {

enum class Family { ThmA, Lemma31, ReduceD, Lift, SMax, Diagonal, GolayCover, GVRandom, ParallelPad, Restricted, FromCode };

std::string to_string(Family f);
std::optional<Family> family_from_string(const std::string& s);

/// Which construction produced a cover and with which parameters.
struct ConstructionTag {
    Family family;
    int n = 0;
    int k = 0;
    int d = 0;
    std::optional<int> s;

    friend bool operator==(const ConstructionTag&, const ConstructionTag&) = default;
};

struct CoverEntry {
    AffineSubspace subspace;
    std::uint32_t mult;

    friend bool operator==(const CoverEntry&, const CoverEntry&) = default;
};

class Cover {
public:
    /// Empty cover of F_2^n by codimension-d subspaces.
    Cover(int n, int d);

    /// Entries are merged by subspace and sorted; all must share (n, d).
    static Cover from_subspaces(int n, int d, const std::vector<AffineSubspace>& subspaces);
    static Cover from_entries(int n, int d, std::vector<CoverEntry> entries);

    int dim() const { return n_; }
    int codim() const { return d_; }
    const std::vector<CoverEntry>& entries() const { return entries_; }
    std::uint64_t size() const;
    std::uint64_t multiplicity(const AffineSubspace& s) const;
    /// Number of subspaces (with multiplicity) through the origin.
    std::uint64_t origin_count() const;

    void add(const AffineSubspace& s, std::uint32_t mult = 1);
    void add(const Cover& other);

    /// Subspaces with multiplicity, in canonical order.
    std::vector<AffineSubspace> expanded() const;

    const std::optional<ConstructionTag>& tag() const { return tag_; }
    Cover& with_tag(ConstructionTag t) {
        tag_ = t;
        return *this;
    }

    /// Multiset equality; the provenance tag is ignored.
    friend bool operator==(const Cover& a, const Cover& b) {
        return a.n_ == b.n_ && a.d_ == b.d_ && a.entries_ == b.entries_;
    }

private:
    int n_;
    int d_;
    std::vector<CoverEntry> entries_;
    std::optional<ConstructionTag> tag_;
};

struct CoverReport {
    int n = 0;
    int d = 0;
    int k = 0;
    std::uint64_t size = 0;
    std::uint64_t origin_count = 0;
    std::uint64_t min_nonzero = 0;
    std::uint64_t max_nonzero = 0;
    std::uint64_t total_incidences = 0;
    std::uint64_t profile_checksum = 0;

    bool is_cover_for(int kk) const {
        return kk >= 1 && min_nonzero >= static_cast<std::uint64_t>(kk) &&
               origin_count <= static_cast<std::uint64_t>(kk - 1);
    }
    bool is_cover() const { return is_cover_for(k); }

    friend bool operator==(const CoverReport&, const CoverReport&) = default;
};

/// Per-point coverage counts, indexed by point mask. Subspace-major: each
/// subspace enumerates its own points. Worker threads (if threads > 1) own
/// disjoint slices of the entry list and their counts are summed afterwards.
std::vector<std::uint32_t> coverage_profile(const Cover& c, int threads = 1);

/// Same counts computed point-major (every point tests every subspace).
std::vector<std::uint32_t> coverage_profile_point_major(const Cover& c);

/// FNV-1a over the counts as little-endian 32-bit words, in point order.
std::uint64_t profile_checksum(const std::vector<std::uint32_t>& counts);

CoverReport report_from_profile(const Cover& c, int k, const std::vector<std::uint32_t>& counts);

CoverReport verify(const Cover& c, int k, int threads = 1);

/// Adds the two hyperplanes x.u = 0 and x.u = 1 (d = 1 only).
Cover add_parallel_pair(const Cover& c, Mask u = 1);

struct Restriction {
    Cover cover;
    std::uint64_t discarded = 0; // subspaces disjoint from the hyperplane
    std::uint64_t split = 0;     // subspaces contained in it, each replaced by two halves
};

/// Restricts c to the linear hyperplane H = {x : x.u = 0} and re-expresses H
/// as F_2^{n-1}. With p the lowest set bit of u, the coordinates of H are x_j
/// for j != p (in order) and x_p is recovered as the parity of the rest of u.
Restriction restrict_to_hyperplane(const Cover& c, Mask u);

/// Embedding F_2^{n-1} -> H used by restrict_to_hyperplane.
Mask lift_from_hyperplane(Mask y, Mask u);

/// Counts |X| and |Y| (with multiplicity) without building the restricted cover.
std::pair<std::uint64_t, std::uint64_t> restriction_counts(const Cover& c, Mask u);

} // namespace affcover
