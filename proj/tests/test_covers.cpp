#include "affcover/constructions.hpp"
#include "affcover/cover.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace affcover;

namespace {

std::vector<std::uint32_t> oracle_counts(const Cover& c) {
    std::vector<std::uint32_t> counts(std::size_t{1} << c.dim(), 0);
    for (const auto& s : c.expanded()) {
        for (Mask x = 0; x <= full_mask(c.dim()); ++x) {
            bool in = true;
            for (int i = 0; i < s.codim(); ++i) in = in && parity(x & s.normals()[static_cast<std::size_t>(i)]) == s.rhs_bit(i);
            counts[x] += in ? 1 : 0;
        }
    }
    return counts;
}

std::uint64_t oracle_fnv(const std::vector<std::uint32_t>& counts) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const std::uint32_t v : counts) {
        for (int b = 0; b < 4; ++b) {
            h ^= (v >> (8 * b)) & 0xff;
            h *= 0x100000001b3ULL;
        }
    }
    return h;
}

Cover random_cover(std::mt19937_64& rng, int n, int d, int size) {
    const auto pool = enumerate_subspaces(n, d);
    std::vector<AffineSubspace> picks;
    for (int i = 0; i < size; ++i) picks.push_back(pool[rng() % pool.size()]);
    return Cover::from_subspaces(n, d, picks);
}

Cover basis_planes(int n) {
    std::vector<AffineSubspace> v;
    for (int i = 0; i < n; ++i) v.push_back(AffineSubspace::hyperplane(n, unit(i), 1));
    return Cover::from_subspaces(n, 1, v);
}

// Lift of y in F_2^{n-1} into H = {x.u = 0}, built independently of the library.
Mask embed(Mask y, Mask u, int n) {
    const int p = __builtin_ctz(u);
    Mask x = 0;
    int j = 0;
    for (int i = 0; i < n; ++i) {
        if (i == p) continue;
        if ((y >> j) & 1) x |= unit(i);
        ++j;
    }
    if (parity(x & u)) x |= unit(p);
    return x;
}

} // namespace

TEST_CASE("coordinate hyperplanes form a 1-cover") {
    const CoverReport r = verify(basis_planes(3), 1);
    CHECK(r.origin_count == 0);
    CHECK(r.min_nonzero == 1);
    CHECK(r.is_cover_for(1));
    CHECK(r.size == 3);
}

TEST_CASE("a parallel pair partitions the space") {
    Cover c(4, 1);
    c.add(AffineSubspace::hyperplane(4, 0b0110, 0));
    c.add(AffineSubspace::hyperplane(4, 0b0110, 1));
    const auto counts = coverage_profile(c);
    CHECK(std::all_of(counts.begin(), counts.end(), [](std::uint32_t v) { return v == 1; }));
    const CoverReport r = verify(c, 1);
    CHECK(r.origin_count == 1);
    CHECK_FALSE(r.is_cover_for(1));
}

TEST_CASE("the diagonal cover of F_2^5") {
    const CoverReport r = verify(diagonal_cover(5), 5);
    CHECK(r.is_cover_for(5));
    CHECK(r.size == 11);
}

TEST_CASE("add_parallel_pair raises every count by one") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 30; ++t) {
        const int n = 2 + static_cast<int>(rng() % 5);
        const Cover c = random_cover(rng, n, 1, 1 + static_cast<int>(rng() % 8));
        const Mask u = 1 + static_cast<Mask>(rng() % full_mask(n));
        const Cover p = add_parallel_pair(c, u);
        const auto before = coverage_profile(c);
        const auto after = coverage_profile(p);
        for (std::size_t x = 0; x < before.size(); ++x) CHECK(after[x] == before[x] + 1);
        CHECK(p.size() == c.size() + 2);
        CHECK(p.origin_count() == c.origin_count() + 1);
        CHECK(verify(p, 3).min_nonzero == verify(c, 3).min_nonzero + 1);
    }
    Cover c2(3, 2);
    c2.add(AffineSubspace::from_constraints(3, {1, 2}, 0));
    CHECK_THROWS(add_parallel_pair(c2, 1));
    CHECK_THROWS(add_parallel_pair(basis_planes(3), 0));
}

TEST_CASE("padding the coordinate family with parallel pairs") {
    for (int k = 2; k <= 6; ++k) {
        Cover c = basis_planes(5);
        c.add(AffineSubspace::hyperplane(5, full_mask(5), 1));
        for (int i = 0; i < k - 2; ++i) c = add_parallel_pair(c, 0b00011);
        const CoverReport r = verify(c, k);
        CHECK(r.is_cover_for(k));
        CHECK(r.origin_count == static_cast<std::uint64_t>(k - 2));
    }
}

TEST_CASE("verify agrees with a definition-level oracle") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 60; ++t) {
        const int n = 1 + static_cast<int>(rng() % 7);
        const int d = 1 + static_cast<int>(rng() % static_cast<unsigned>(n));
        const Cover c = random_cover(rng, n, d, 1 + static_cast<int>(rng() % 12));
        const auto counts = oracle_counts(c);
        CHECK(coverage_profile(c) == counts);
        CHECK(coverage_profile(c, 3) == counts);
        CHECK(coverage_profile_point_major(c) == counts);
        CHECK(profile_checksum(counts) == oracle_fnv(counts));

        std::uint64_t total = 0;
        for (const auto v : counts) total += v;
        CHECK(total == c.size() * (std::uint64_t{1} << (n - d)));

        const int k = 1 + static_cast<int>(rng() % 4);
        const CoverReport r = verify(c, k);
        CHECK(r.origin_count == counts[0]);
        if (n > 0 && counts.size() > 1) {
            CHECK(r.min_nonzero == *std::min_element(counts.begin() + 1, counts.end()));
            CHECK(r.max_nonzero == *std::max_element(counts.begin() + 1, counts.end()));
        }
        CHECK(r.total_incidences == total);
        CHECK(verify(c, k, 4) == r);

        // entry order does not matter
        auto members = c.expanded();
        std::shuffle(members.begin(), members.end(), rng);
        CHECK(verify(Cover::from_subspaces(n, d, members), k) == r);
    }
}

TEST_CASE("multiset bookkeeping") {
    Cover c(3, 1);
    const auto h = AffineSubspace::hyperplane(3, 0b101, 1);
    c.add(h, 2);
    c.add(h);
    c.add(AffineSubspace::hyperplane(3, 0b001, 0));
    CHECK(c.size() == 4);
    CHECK(c.multiplicity(h) == 3);
    CHECK(c.entries().size() == 2);
    CHECK(c.origin_count() == 1);
    CHECK(std::is_sorted(c.entries().begin(), c.entries().end(),
                         [](const CoverEntry& a, const CoverEntry& b) { return a.subspace < b.subspace; }));
    CHECK_THROWS(c.add(AffineSubspace::hyperplane(4, 1, 1)));
}

TEST_CASE("restricting the coordinate family") {
    const Restriction r = restrict_to_hyperplane(basis_planes(4), unit(3));
    CHECK(r.cover == basis_planes(3));
    CHECK(r.discarded == 1);
    CHECK(r.split == 0);
}

TEST_CASE("restriction preserves coverage and the size identity") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 40; ++t) {
        const int n = 2 + static_cast<int>(rng() % 4);
        const int d = 1 + static_cast<int>(rng() % static_cast<unsigned>(n - 1));
        const Cover c = random_cover(rng, n, d, 1 + static_cast<int>(rng() % 10));
        const auto counts = oracle_counts(c);
        for (Mask u = 1; u <= full_mask(n); ++u) {
            const Restriction r = restrict_to_hyperplane(c, u);
            REQUIRE(r.cover.dim() == n - 1);
            const auto sub = oracle_counts(r.cover);
            for (Mask y = 0; y <= full_mask(n - 1); ++y) CHECK(sub[y] == counts[embed(y, u, n)]);

            // X: members missing H, Y: members inside H
            std::uint64_t x_count = 0, y_count = 0;
            for (const auto& s : c.expanded()) {
                bool meets = false, inside = true;
                for (const Mask p : enumerate_points(s)) {
                    const bool in_h = parity(p & u) == 0;
                    meets = meets || in_h;
                    inside = inside && in_h;
                }
                x_count += meets ? 0 : 1;
                y_count += inside ? 1 : 0;
            }
            CHECK(r.discarded == x_count);
            CHECK(r.split == y_count);
            CHECK(r.cover.size() == c.size() - x_count + y_count);
            CHECK(restriction_counts(c, u) == std::make_pair(x_count, y_count));
        }
    }
}

TEST_CASE("restriction keeps (k,d;s)-covers") {
    const Cover c = smax_cover(5, 3, 2);
    const CoverReport r0 = verify(c, 3);
    REQUIRE(r0.is_cover());
    for (Mask u = 1; u < 32; ++u) {
        const Restriction r = restrict_to_hyperplane(c, u);
        const CoverReport r1 = verify(r.cover, 3);
        CHECK(r1.is_cover());
        CHECK(r1.origin_count == r0.origin_count);
    }
    CHECK_THROWS(restrict_to_hyperplane(Cover::from_subspaces(2, 2, {AffineSubspace::point(2, 1)}), 1));
    CHECK_THROWS(restrict_to_hyperplane(c, 0));
}

TEST_CASE("lifting points into the hyperplane") {
    for (Mask u = 1; u < 32; ++u) {
        for (Mask y = 0; y < 16; ++y) {
            CHECK(lift_from_hyperplane(y, u) == embed(y, u, 5));
            CHECK(parity(lift_from_hyperplane(y, u) & u) == 0);
        }
    }
}
