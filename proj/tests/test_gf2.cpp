#include "affcover/gf2.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace affcover;

namespace {

// Point set of a raw constraint system, straight from the definition.
std::vector<Mask> raw_points(int n, const std::vector<Mask>& normals, Mask rhs) {
    std::vector<Mask> pts;
    for (Mask x = 0; x <= full_mask(n); ++x) {
        bool ok = true;
        for (std::size_t i = 0; i < normals.size(); ++i) ok = ok && parity(x & normals[i]) == static_cast<int>((rhs >> i) & 1);
        if (ok) pts.push_back(x);
    }
    return pts;
}

int raw_rank(std::vector<Mask> rows) {
    int rank = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (!rows[i]) continue;
        ++rank;
        const Mask low = rows[i] & (~rows[i] + 1);
        for (std::size_t j = i + 1; j < rows.size(); ++j) {
            if (rows[j] & low) rows[j] ^= rows[i];
        }
    }
    return rank;
}

} // namespace

TEST_CASE("dot products") {
    CHECK(dot(GFVector(0b101, 3), GFVector(0b100, 3)) == 1);
    CHECK(dot(GFVector(0b111, 3), GFVector(0b110, 3)) == 0);
    for (Mask x = 0; x < 16; ++x) CHECK(dot(GFVector(x, 4), GFVector(0, 4)) == 0);
    CHECK_THROWS_AS(dot(GFVector(1, 3), GFVector(1, 4)), DimensionError);
    CHECK_THROWS_AS(GFVector(0b1000, 3), DimensionError);
}

TEST_CASE("canonicalize sentinels and normal form") {
    const auto h = canonicalize(4, {0b1010}, 1);
    REQUIRE(std::holds_alternative<AffineSubspace>(h));
    CHECK(std::get<AffineSubspace>(h) == AffineSubspace::hyperplane(4, 0b1010, 1));
    CHECK(std::get<AffineSubspace>(h).codim() == 1);

    CHECK(std::holds_alternative<EmptySet>(canonicalize(3, {0b011, 0b011}, 0b10)));
    const auto deg = canonicalize(3, {0b011, 0b011}, 0b11);
    REQUIRE(std::holds_alternative<Degenerate>(deg));
    CHECK(std::get<Degenerate>(deg).rank == 1);

    const auto rref = canonicalize(3, {0b001, 0b011}, 0);
    REQUIRE(std::holds_alternative<AffineSubspace>(rref));
    CHECK(std::get<AffineSubspace>(rref).normals() == std::vector<Mask>{0b001, 0b010});
    CHECK(std::get<AffineSubspace>(rref).rhs() == 0);

    CHECK_THROWS(AffineSubspace::from_constraints(3, {0b011, 0b011}, 0b10));
    CHECK_THROWS(AffineSubspace::hyperplane(3, 0, 1));
}

TEST_CASE("canonical form agrees with raw point sets on every small system") {
    // all pairs of normals in F_2^4 with every rhs
    for (Mask u = 0; u < 16; ++u) {
        for (Mask v = 0; v < 16; ++v) {
            for (Mask c = 0; c < 4; ++c) {
                const auto pts = raw_points(4, {u, v}, c);
                const auto r = canonicalize(4, {u, v}, c);
                if (pts.empty()) {
                    CHECK(std::holds_alternative<EmptySet>(r));
                } else if (raw_rank({u, v}) < 2) {
                    REQUIRE(std::holds_alternative<Degenerate>(r));
                    CHECK(std::get<Degenerate>(r).rank == raw_rank({u, v}));
                } else {
                    REQUIRE(std::holds_alternative<AffineSubspace>(r));
                    const AffineSubspace& s = std::get<AffineSubspace>(r);
                    CHECK(enumerate_points(s) == pts);
                    // idempotence
                    CHECK(AffineSubspace::from_constraints(4, s.normals(), s.rhs()) == s);
                }
            }
        }
    }
}

TEST_CASE("membership survives canonicalization on random systems") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 400; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 9);
        const int d = 1 + static_cast<int>(rng() % static_cast<unsigned>(n));
        std::vector<Mask> normals;
        for (int i = 0; i < d; ++i) normals.push_back(rng() & full_mask(n));
        const Mask rhs = rng() & full_mask(d);
        const auto r = canonicalize(n, normals, rhs);
        if (!std::holds_alternative<AffineSubspace>(r)) continue;
        const AffineSubspace& s = std::get<AffineSubspace>(r);
        for (int q = 0; q < 20; ++q) {
            const Mask x = rng() & full_mask(n);
            bool raw = true;
            for (int i = 0; i < d; ++i) raw = raw && parity(x & normals[static_cast<std::size_t>(i)]) == static_cast<int>((rhs >> i) & 1);
            CHECK(s.contains(x) == raw);
            CHECK(contains(s, GFVector(x, n)) == raw);
        }
    }
}

TEST_CASE("contains") {
    for (Mask u = 1; u < 32; ++u) CHECK_FALSE(AffineSubspace::hyperplane(5, u, 1).contains(0));
    CHECK(AffineSubspace::hyperplane(3, 0b001, 0).contains(0b010));
    CHECK_THROWS_AS(contains(AffineSubspace::hyperplane(3, 1, 1), GFVector(1, 4)), DimensionError);
}

TEST_CASE("enumerate_points") {
    CHECK(enumerate_points(AffineSubspace::hyperplane(2, 0b01, 1)) == std::vector<Mask>{0b01, 0b11});
    CHECK(enumerate_points(AffineSubspace::point(4, 0b1011)) == std::vector<Mask>{0b1011});
    for (const auto& s : enumerate_subspaces(5, 2)) {
        const auto pts = enumerate_points(s);
        CHECK(pts.size() == 8);
        CHECK(std::is_sorted(pts.begin(), pts.end()));
        std::vector<Mask> gray;
        for_each_point(s, [&](Mask x) { gray.push_back(x); });
        std::sort(gray.begin(), gray.end());
        CHECK(gray == pts);
    }
}

TEST_CASE("enumerate_subspaces counts") {
    CHECK(enumerate_subspaces(3, 1).size() == 14);
    CHECK(enumerate_subspaces(2, 2).size() == 4);
    CHECK(enumerate_subspaces(4, 2).size() == 140);
    CHECK(gaussian_binomial2(4, 2) == 35);
    for (int n = 1; n <= 6; ++n) {
        for (int d = 1; d <= n; ++d) {
            const auto all = enumerate_subspaces(n, d);
            CHECK(all.size() == gaussian_binomial2(n, d) * (std::uint64_t{1} << d));
            CHECK(std::is_sorted(all.begin(), all.end()));
            // distinct point sets, and the incidence double count
            std::set<std::vector<Mask>> sets;
            std::uint64_t incidences = 0;
            for (const auto& s : all) {
                auto pts = enumerate_points(s);
                incidences += pts.size();
                sets.insert(std::move(pts));
            }
            CHECK(sets.size() == all.size());
            CHECK(incidences == all.size() * (std::uint64_t{1} << (n - d)));
        }
    }
    CHECK_THROWS_AS(enumerate_subspaces(12, 6, EnumerationLimits{20, 1000}), ResourceLimitError);
}

TEST_CASE("exhaustive canonicalization reproduces the enumerated pools") {
    // (3,1): every nonzero normal with both right-hand sides
    std::set<AffineSubspace> hyper;
    for (Mask u = 1; u < 8; ++u) {
        for (int c = 0; c < 2; ++c) hyper.insert(AffineSubspace::hyperplane(3, u, c));
    }
    const auto pool31 = enumerate_subspaces(3, 1);
    CHECK(std::vector<AffineSubspace>(hyper.begin(), hyper.end()) == pool31);

    // (4,2): every consistent independent pair
    std::set<AffineSubspace> planes;
    for (Mask u = 1; u < 16; ++u) {
        for (Mask v = 1; v < 16; ++v) {
            for (Mask c = 0; c < 4; ++c) {
                const auto r = canonicalize(4, {u, v}, c);
                if (std::holds_alternative<AffineSubspace>(r)) planes.insert(std::get<AffineSubspace>(r));
            }
        }
    }
    CHECK(planes.size() == 140);
    CHECK(std::vector<AffineSubspace>(planes.begin(), planes.end()) == enumerate_subspaces(4, 2));
}

TEST_CASE("canonical bytes order matches value order") {
    const auto all = enumerate_subspaces(4, 2);
    for (std::size_t i = 0; i + 1 < all.size(); ++i) {
        CHECK(all[i].canonical_bytes() < all[i + 1].canonical_bytes());
    }
    const auto b = AffineSubspace::hyperplane(4, 0b0101, 1).canonical_bytes();
    CHECK(b == std::vector<std::uint8_t>{4, 1, 0, 0, 0, 0x15});
}

TEST_CASE("dimension guards") {
    CHECK_THROWS_AS(check_dim(25), DimensionError);
    CHECK_NOTHROW(check_dim(24));
    CHECK_THROWS_AS(check_dim(21, kDefaultMaxDim), DimensionError);
}
