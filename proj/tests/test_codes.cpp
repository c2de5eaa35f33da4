#include "affcover/codes.hpp"
#include "affcover/constructions.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

using namespace affcover;

namespace {

// Weight of A x for every nonzero x, straight from the definition.
int oracle_distance(int dim, const std::vector<Mask>& rows) {
    int best = static_cast<int>(rows.size()) + 1;
    for (Mask x = 1; x <= full_mask(dim); ++x) {
        int w = 0;
        for (const Mask u : rows) w += parity(x & u);
        best = std::min(best, w);
    }
    return best;
}

double log2_binom_sum(int len, int t) {
    double s = 0;
    double c = 1;
    for (int i = 0; i <= t; ++i) {
        s += c;
        c = c * (len - i) / (i + 1);
    }
    return std::log2(s);
}

} // namespace

TEST_CASE("identity rows") {
    for (int n = 1; n <= 8; ++n) {
        std::vector<Mask> rows;
        std::vector<AffineSubspace> planes;
        for (int i = 0; i < n; ++i) {
            rows.push_back(unit(i));
            planes.push_back(AffineSubspace::hyperplane(n, unit(i), 1));
        }
        const LinearCode code(n, rows);
        CHECK(min_distance(code) == 1);
        const Cover c = Cover::from_subspaces(n, 1, planes);
        CHECK(cover_from_code(code) == c);
        CHECK(code_from_cover(c) == code);
    }
}

TEST_CASE("the l31 base gives the parity-extended identity") {
    for (int n = 2; n <= 9; ++n) {
        const LinearCode code = code_from_cover(lemma31_cover(n, 2, 1));
        CHECK(code.length() == n + 1);
        CHECK(min_distance(code) == 2);
    }
}

TEST_CASE("repetition rows") {
    const LinearCode code(1, std::vector<Mask>(5, 1));
    CHECK(min_distance(code) == 5);
    const Cover c = cover_from_code(code);
    CHECK(c.size() == 5);
    CHECK(verify(c, 5).is_cover());
}

TEST_CASE("zero rows and origin planes are rejected") {
    CHECK_THROWS(cover_from_code(LinearCode(3, {1, 0, 2})));
    CHECK_THROWS(code_from_cover(smax_cover(3, 2, 1)));
    CHECK_THROWS(code_from_cover(lemma31_cover(4, 2, 2)));
    CHECK_THROWS(min_distance(LinearCode(25, {1})));
}

TEST_CASE("non-spanning rows have distance 0") {
    CHECK(min_distance(LinearCode(3, {1, 2, 3})) == 0);
    CHECK(min_distance_naive(LinearCode(3, {1, 2, 3})) == 0);
}

TEST_CASE("min_distance matches the definition on random codes") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 200; ++t) {
        const int n = 1 + static_cast<int>(rng() % 10);
        const int m = 1 + static_cast<int>(rng() % 20);
        std::vector<Mask> rows;
        for (int i = 0; i < m; ++i) rows.push_back(static_cast<Mask>(rng()) & full_mask(n));
        const LinearCode code(n, rows);
        const int want = oracle_distance(n, rows);
        CHECK(min_distance(code) == want);
        CHECK(min_distance(code, 3) == want);
        CHECK(min_distance_naive(code) == want);
    }
}

TEST_CASE("Golay generator") {
    const LinearCode g = golay_generator();
    CHECK(g.dim() == 12);
    CHECK(g.length() == 24);
    CHECK(g.length() - g.dim() == 12);
    CHECK(min_distance(g) == 8);
    CHECK(oracle_distance(12, g.rows()) == 8);
    const Cover c = cover_from_code(g);
    const CoverReport r = verify(c, 8);
    CHECK(r.size == 24);
    CHECK(r.origin_count == 0);
    CHECK(r.is_cover());
}

TEST_CASE("Hamming packing inequality") {
    CHECK(satisfies_hamming_bound(12, 24, 8));
    CHECK(satisfies_hamming_bound(12, 23, 7)); // the perfect binary Golay code
    CHECK_FALSE(satisfies_hamming_bound(12, 22, 7));
    std::mt19937_64 rng(23);
    for (int t = 0; t < 100; ++t) {
        const int n = 1 + static_cast<int>(rng() % 8);
        const int m = n + static_cast<int>(rng() % 12);
        std::vector<Mask> rows;
        for (int i = 0; i < m; ++i) rows.push_back(static_cast<Mask>(rng()) & full_mask(n));
        const LinearCode code(n, rows);
        const int dist = min_distance(code);
        if (dist == 0) continue;
        CHECK(satisfies_hamming_bound(n, m, dist));
        // floating-point oracle with a safety margin
        CHECK(n + log2_binom_sum(m, (dist - 1) / 2) <= m + 1e-9);
    }
}

TEST_CASE("cover/code equivalence in both directions") {
    std::mt19937_64 rng(29);
    for (int t = 0; t < 40; ++t) {
        const int n = 2 + static_cast<int>(rng() % 9);
        const int k = 1 + static_cast<int>(rng() % 4);
        const Cover c = gv_random_cover(n, k, rng(), 512);
        const LinearCode code = code_from_cover(c);
        CHECK(min_distance(code) >= k);
        CHECK(cover_from_code(code) == c);

        std::vector<Mask> rows;
        const int m = n + static_cast<int>(rng() % 10);
        for (int i = 0; i < m; ++i) rows.push_back(1 + static_cast<Mask>(rng() % full_mask(n)));
        const LinearCode random_code(n, rows);
        const int dist = min_distance(random_code);
        const CoverReport r = verify(cover_from_code(random_code), std::max(dist, 1));
        CHECK(r.origin_count == 0);
        CHECK(r.min_nonzero == static_cast<std::uint64_t>(dist));
    }
}
