#include "affcover/cover.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <thread>

namespace affcover {

namespace {

constexpr std::array<std::pair<Family, const char*>, 11> kFamilyNames{{
    {Family::ThmA, "ThmA"},
    {Family::Lemma31, "Lemma31"},
    {Family::ReduceD, "ReduceD"},
    {Family::Lift, "Lift"},
    {Family::SMax, "SMax"},
    {Family::Diagonal, "Diagonal"},
    {Family::GolayCover, "GolayCover"},
    {Family::GVRandom, "GVRandom"},
    {Family::ParallelPad, "ParallelPad"},
    {Family::Restricted, "Restricted"},
    {Family::FromCode, "FromCode"},
}};

void merge_sorted(std::vector<CoverEntry>& entries) {
    std::sort(entries.begin(), entries.end(),
              [](const CoverEntry& a, const CoverEntry& b) { return a.subspace < b.subspace; });
    std::vector<CoverEntry> merged;
    merged.reserve(entries.size());
    for (auto& e : entries) {
        if (e.mult == 0) continue;
        if (!merged.empty() && merged.back().subspace == e.subspace) {
            merged.back().mult += e.mult;
        } else {
            merged.push_back(std::move(e));
        }
    }
    entries = std::move(merged);
}

} // namespace

std::string to_string(Family f) {
    for (const auto& [fam, name] : kFamilyNames) {
        if (fam == f) return name;
    }
    return "?";
}

std::optional<Family> family_from_string(const std::string& s) {
    for (const auto& [fam, name] : kFamilyNames) {
        if (s == name) return fam;
    }
    return std::nullopt;
}

Cover::Cover(int n, int d) : n_(n), d_(d) {
    check_dim(n);
    if (d < 1 || d > n) {
        throw std::invalid_argument("cover codimension must satisfy 1 <= d <= n");
    }
}

Cover Cover::from_subspaces(int n, int d, const std::vector<AffineSubspace>& subspaces) {
    std::vector<CoverEntry> entries;
    entries.reserve(subspaces.size());
    for (const auto& s : subspaces) entries.push_back({s, 1});
    return from_entries(n, d, std::move(entries));
}

Cover Cover::from_entries(int n, int d, std::vector<CoverEntry> entries) {
    Cover c(n, d);
    for (const auto& e : entries) {
        if (e.subspace.dim() != n || e.subspace.codim() != d) {
            throw DimensionError("cover entry " + e.subspace.to_string() + " does not have (n,d) = (" +
                                 std::to_string(n) + "," + std::to_string(d) + ")");
        }
    }
    merge_sorted(entries);
    c.entries_ = std::move(entries);
    return c;
}

std::uint64_t Cover::size() const {
    std::uint64_t total = 0;
    for (const auto& e : entries_) total += e.mult;
    return total;
}

std::uint64_t Cover::multiplicity(const AffineSubspace& s) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), s,
                               [](const CoverEntry& e, const AffineSubspace& key) { return e.subspace < key; });
    return (it != entries_.end() && it->subspace == s) ? it->mult : 0;
}

std::uint64_t Cover::origin_count() const {
    std::uint64_t total = 0;
    for (const auto& e : entries_) {
        if (e.subspace.contains_origin()) total += e.mult;
    }
    return total;
}

void Cover::add(const AffineSubspace& s, std::uint32_t mult) {
    if (s.dim() != n_ || s.codim() != d_) {
        throw DimensionError("cannot add " + s.to_string() + " to a cover with (n,d) = (" + std::to_string(n_) +
                             "," + std::to_string(d_) + ")");
    }
    if (mult == 0) return;
    auto it = std::lower_bound(entries_.begin(), entries_.end(), s,
                               [](const CoverEntry& e, const AffineSubspace& key) { return e.subspace < key; });
    if (it != entries_.end() && it->subspace == s) {
        it->mult += mult;
    } else {
        entries_.insert(it, CoverEntry{s, mult});
    }
}

void Cover::add(const Cover& other) {
    for (const auto& e : other.entries()) add(e.subspace, e.mult);
}

std::vector<AffineSubspace> Cover::expanded() const {
    std::vector<AffineSubspace> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (const auto& e : entries_) {
        for (std::uint32_t i = 0; i < e.mult; ++i) out.push_back(e.subspace);
    }
    return out;
}

std::vector<std::uint32_t> coverage_profile(const Cover& c, int threads) {
    const std::size_t npoints = std::size_t{1} << c.dim();
    const auto& entries = c.entries();
    auto count_range = [&](std::size_t lo, std::size_t hi, std::vector<std::uint32_t>& counts) {
        for (std::size_t i = lo; i < hi; ++i) {
            const std::uint32_t m = entries[i].mult;
            for_each_point(entries[i].subspace, [&](Mask x) { counts[x] += m; });
        }
    };

    std::vector<std::uint32_t> counts(npoints, 0);
    const std::size_t workers =
        std::clamp<std::size_t>(static_cast<std::size_t>(std::max(threads, 1)), 1, std::max<std::size_t>(entries.size(), 1));
    if (workers == 1) {
        count_range(0, entries.size(), counts);
        return counts;
    }
    std::vector<std::vector<std::uint32_t>> partial(workers, std::vector<std::uint32_t>(npoints, 0));
    std::vector<std::thread> pool;
    const std::size_t chunk = (entries.size() + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t lo = std::min(entries.size(), w * chunk);
        const std::size_t hi = std::min(entries.size(), lo + chunk);
        pool.emplace_back([&, w, lo, hi] { count_range(lo, hi, partial[w]); });
    }
    for (auto& t : pool) t.join();
    for (const auto& p : partial) {
        for (std::size_t x = 0; x < npoints; ++x) counts[x] += p[x];
    }
    return counts;
}

std::vector<std::uint32_t> coverage_profile_point_major(const Cover& c) {
    const std::size_t npoints = std::size_t{1} << c.dim();
    std::vector<std::uint32_t> counts(npoints, 0);
    for (std::size_t x = 0; x < npoints; ++x) {
        std::uint32_t total = 0;
        for (const auto& e : c.entries()) {
            if (e.subspace.contains(static_cast<Mask>(x))) total += e.mult;
        }
        counts[x] = total;
    }
    return counts;
}

std::uint64_t profile_checksum(const std::vector<std::uint32_t>& counts) {
    std::uint64_t h = 14695981039346656037ull;
    for (const std::uint32_t v : counts) {
        for (int b = 0; b < 4; ++b) {
            h ^= (v >> (8 * b)) & 0xffu;
            h *= 1099511628211ull;
        }
    }
    return h;
}

CoverReport report_from_profile(const Cover& c, int k, const std::vector<std::uint32_t>& counts) {
    CoverReport r;
    r.n = c.dim();
    r.d = c.codim();
    r.k = k;
    r.size = c.size();
    r.origin_count = counts.at(0);
    r.min_nonzero = std::numeric_limits<std::uint64_t>::max();
    r.max_nonzero = 0;
    for (std::size_t x = 0; x < counts.size(); ++x) {
        r.total_incidences += counts[x];
        if (x == 0) continue;
        r.min_nonzero = std::min<std::uint64_t>(r.min_nonzero, counts[x]);
        r.max_nonzero = std::max<std::uint64_t>(r.max_nonzero, counts[x]);
    }
    r.profile_checksum = profile_checksum(counts);
    return r;
}

CoverReport verify(const Cover& c, int k, int threads) {
    if (k < 1) {
        throw std::invalid_argument("verify: multiplicity k must be >= 1");
    }
    return report_from_profile(c, k, coverage_profile(c, threads));
}

Cover add_parallel_pair(const Cover& c, Mask u) {
    if (c.codim() != 1) {
        throw std::invalid_argument("add_parallel_pair: only defined for hyperplane covers (d = 1)");
    }
    if (u == 0 || (u & ~full_mask(c.dim())) != 0) {
        throw DimensionError("add_parallel_pair: normal must be a nonzero vector of F_2^n");
    }
    Cover out = c;
    out.add(AffineSubspace::hyperplane(c.dim(), u, 0));
    out.add(AffineSubspace::hyperplane(c.dim(), u, 1));
    ConstructionTag t{Family::ParallelPad, c.dim(), 0, 1, std::nullopt};
    if (c.tag()) t.k = c.tag()->k + 1;
    out.with_tag(t);
    return out;
}

namespace {

// Deletes bit p from a mask, shifting higher bits down.
Mask drop_bit(Mask x, int p) {
    const Mask low = x & (unit(p) - 1);
    const Mask high = (x >> (p + 1)) << p;
    return low | high;
}

void check_restriction_args(const Cover& c, Mask u) {
    if (u == 0 || (u & ~full_mask(c.dim())) != 0) {
        throw DimensionError("restrict_to_hyperplane: u must be a nonzero vector of F_2^n");
    }
    if (c.codim() >= c.dim()) {
        throw std::invalid_argument("restrict_to_hyperplane: requires d < n");
    }
}

// Constraints of s expressed in the coordinates of H = {x.u = 0}.
std::vector<Mask> restricted_normals(const AffineSubspace& s, Mask u) {
    const int p = __builtin_ctz(u);
    std::vector<Mask> normals;
    normals.reserve(s.normals().size());
    for (const Mask a : s.normals()) {
        const Mask reduced = (a & unit(p)) ? (a ^ u) : a;
        normals.push_back(drop_bit(reduced, p));
    }
    return normals;
}

// Keeps a maximal independent subset of the (consistent) restricted rows.
// Canonical rows of a maximal independent subset of the restricted system
// (empty when S = H).
std::pair<std::vector<Mask>, Mask> independent_subsystem(int n, const std::vector<Mask>& normals,
                                                         const AffineSubspace& original) {
    std::vector<Mask> basis;
    Mask basis_rhs = 0;
    for (std::size_t i = 0; i < normals.size(); ++i) {
        std::vector<Mask> trial = basis;
        trial.push_back(normals[i]);
        const Mask trial_rhs =
            basis_rhs | (static_cast<Mask>(original.rhs_bit(static_cast<int>(i))) << basis.size());
        if (std::holds_alternative<AffineSubspace>(canonicalize(n, trial, trial_rhs))) {
            basis = std::move(trial);
            basis_rhs = trial_rhs;
        }
    }
    if (basis.empty()) return {};
    const AffineSubspace canon = AffineSubspace::from_constraints(n, basis, basis_rhs);
    return {canon.normals(), canon.rhs()};
}

} // namespace

Mask lift_from_hyperplane(Mask y, Mask u) {
    const int p = __builtin_ctz(u);
    const Mask low = y & (unit(p) - 1);
    const Mask high = (y >> p) << (p + 1);
    Mask x = low | high;
    if (parity(x & u)) x |= unit(p);
    return x;
}

Restriction restrict_to_hyperplane(const Cover& c, Mask u) {
    check_restriction_args(c, u);
    const int n = c.dim();
    const int d = c.codim();
    Restriction out{Cover(n - 1, d), 0, 0};
    for (const auto& e : c.entries()) {
        const auto normals = restricted_normals(e.subspace, u);
        auto res = canonicalize(n - 1, normals, e.subspace.rhs());
        if (std::holds_alternative<EmptySet>(res)) {
            out.discarded += e.mult;
        } else if (auto* s = std::get_if<AffineSubspace>(&res)) {
            out.cover.add(*s, e.mult);
        } else {
            // S lies inside H: it has codimension d-1 there; halve it along
            // the first coordinate that is free in its canonical form.
            auto [halves, rhs] = independent_subsystem(n - 1, normals, e.subspace);
            Mask pivots = 0;
            for (const Mask row : halves) pivots |= row & (~row + 1);
            const int free_col = __builtin_ctz(~pivots & full_mask(n - 1));
            const Mask top = Mask{1} << halves.size();
            halves.push_back(unit(free_col));
            out.cover.add(AffineSubspace::from_constraints(n - 1, halves, rhs), e.mult);
            out.cover.add(AffineSubspace::from_constraints(n - 1, halves, rhs | top), e.mult);
            out.split += e.mult;
        }
    }
    out.cover.with_tag({Family::Restricted, n - 1, 0, d, std::nullopt});
    return out;
}

std::pair<std::uint64_t, std::uint64_t> restriction_counts(const Cover& c, Mask u) {
    check_restriction_args(c, u);
    std::uint64_t disjoint = 0;
    std::uint64_t contained = 0;
    for (const auto& e : c.entries()) {
        auto res = canonicalize(c.dim() - 1, restricted_normals(e.subspace, u), e.subspace.rhs());
        if (std::holds_alternative<EmptySet>(res)) {
            disjoint += e.mult;
        } else if (std::holds_alternative<Degenerate>(res)) {
            contained += e.mult;
        }
    }
    return {disjoint, contained};
}

} // namespace affcover
