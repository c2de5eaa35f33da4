#include "affcover/constructions.hpp"

#include "affcover/codes.hpp"

#include <cmath>
#include <random>

namespace affcover {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

std::int64_t pow2(int e) { return std::int64_t{1} << e; }

// Hyperplane cover for k >= 2^{n-2} (d = 1), size 2k - floor(k / 2^{n-1}).
Cover thm_a_hyperplanes(int n, int k) {
    Cover c(n, 1);
    const Mask all = full_mask(n);
    if (2 * std::int64_t{k} >= pow2(n)) {
        // k = a 2^{n-1} + b: a copies of every origin-avoiding plane, b pairs
        const std::int64_t half = pow2(n - 1);
        const auto a = static_cast<std::uint32_t>(k / half);
        const auto b = static_cast<std::uint32_t>(k % half);
        for (Mask u = 1; u <= all; ++u) c.add(AffineSubspace::hyperplane(n, u, 1), a);
        for (std::uint32_t i = 0; i < b; ++i) c = add_parallel_pair(c);
    } else {
        // 2^{n-2} <= k < 2^{n-1}: the planes H_u with u_n = 1, then pairs
        const Mask top = unit(n - 1);
        for (Mask u = top; u <= all; ++u) c.add(AffineSubspace::hyperplane(n, u, 1));
        const std::int64_t pairs = k - pow2(n - 2);
        for (std::int64_t i = 0; i < pairs; ++i) c = add_parallel_pair(c);
    }
    return c;
}

AffineSubspace embed_in_s0(const AffineSubspace& s, int n, int d) {
    std::vector<Mask> normals;
    normals.reserve(static_cast<std::size_t>(d));
    for (const Mask a : s.normals()) normals.push_back(a << (d - 1));
    for (int i = 0; i < d - 1; ++i) normals.push_back(unit(i));
    // the appended prefix constraints all have rhs 0
    return AffineSubspace::from_constraints(n, normals, s.rhs());
}

} // namespace

Cover thm_a_cover(int n, int k, int d) {
    require(n >= d && d >= 1 && k >= 1, "thm_a_cover: need n >= d >= 1 and k >= 1");
    check_dim(n);
    require(2 * std::int64_t{k} >= pow2(n - d), "thm_a_cover: requires k >= 2^{n-d-1}");
    const int inner_n = n - d + 1;
    Cover c = thm_a_hyperplanes(inner_n, k);
    if (d >= 2) c = reduce_d(c, n, k, d);
    c.with_tag({Family::ThmA, n, k, d, std::nullopt});
    return c;
}

Cover lemma31_cover(int n, int k, int d) {
    require(n >= d && d >= 1, "lemma31_cover: need n >= d >= 1");
    require(k >= 2, "lemma31_cover: requires k >= 2");
    check_dim(n);
    const int inner_n = n - d + 1;
    Cover c(inner_n, 1);
    for (int i = 0; i < inner_n; ++i) c.add(AffineSubspace::hyperplane(inner_n, unit(i), 1));
    c.add(AffineSubspace::hyperplane(inner_n, full_mask(inner_n), 1));
    for (int i = 0; i < k - 2; ++i) c = add_parallel_pair(c);
    if (d >= 2) c = reduce_d(c, n, k, d);
    c.with_tag({Family::Lemma31, n, k, d, k - 2});
    return c;
}

Cover reduce_d(const Cover& inner, int n, int k, int d) {
    require(d >= 2 && n >= d, "reduce_d: need n >= d >= 2");
    require(inner.codim() == 1 && inner.dim() == n - d + 1, "reduce_d: inner must be a hyperplane cover of F_2^{n-d+1}");
    const CoverReport rep = verify(inner, k);
    require(rep.is_cover_for(k), "reduce_d: inner is not a (k,1)-cover");

    Cover out(n, d);
    const Mask prefix_all = full_mask(d - 1);
    for (Mask t = 1; t <= prefix_all; ++t) {
        std::vector<Mask> normals;
        for (int i = 0; i < d - 1; ++i) normals.push_back(unit(i));
        normals.push_back(unit(d - 1));
        for (Mask xd = 0; xd <= 1; ++xd) {
            const Mask rhs = t | (xd << (d - 1));
            out.add(AffineSubspace::from_constraints(n, normals, rhs), static_cast<std::uint32_t>(k));
        }
    }
    for (const auto& e : inner.entries()) out.add(embed_in_s0(e.subspace, n, d), e.mult);
    out.with_tag({Family::ReduceD, n, k, d, static_cast<int>(rep.origin_count)});
    return out;
}

Cover lift(const Cover& c) {
    const int n = c.dim();
    const int d = c.codim();
    check_dim(n + 1);
    Cover out(n + 1, d);
    for (const auto& e : c.entries()) {
        out.add(AffineSubspace::from_constraints(n + 1, e.subspace.normals(), e.subspace.rhs()), e.mult);
    }
    std::vector<Mask> normals{unit(n)};
    for (int i = 0; i < d - 1; ++i) normals.push_back(unit(i));
    out.add(AffineSubspace::from_constraints(n + 1, normals, 1));
    if (c.tag()) {
        auto t = *c.tag();
        t.family = Family::Lift;
        t.n = n + 1;
        out.with_tag(t);
    } else {
        out.with_tag({Family::Lift, n + 1, 0, d, std::nullopt});
    }
    return out;
}

Cover smax_cover(int n, int k, int d) {
    require(n >= d && d >= 1 && k >= 1, "smax_cover: need n >= d >= 1 and k >= 1");
    check_dim(n);
    Cover c(d, d);
    for (Mask x = 1; x <= full_mask(d); ++x) c.add(AffineSubspace::point(d, x), static_cast<std::uint32_t>(k));
    c.add(AffineSubspace::point(d, 0), static_cast<std::uint32_t>(k - 1));
    for (int m = d; m < n; ++m) c = lift(c);
    c.with_tag({Family::SMax, n, k, d, k - 1});
    return c;
}

Cover diagonal_cover(int k) {
    require(k >= 4, "diagonal_cover: requires k >= 4");
    check_dim(k);
    const Mask ones = full_mask(k);
    Cover c(k, 1);
    for (int i = 0; i < k; ++i) {
        c.add(AffineSubspace::hyperplane(k, unit(i), 1));
        c.add(AffineSubspace::hyperplane(k, ones ^ unit(i), 1));
    }
    c.add(AffineSubspace::hyperplane(k, ones, 0), static_cast<std::uint32_t>(k - 4));
    c.with_tag({Family::Diagonal, k, k, 1, k - 4});
    return c;
}

int gv_initial_size(int n, int k) {
    return n + static_cast<int>(std::ceil((k - 1) * std::log2(2.0 * n) - 1e-12));
}

Cover gv_random_cover(int n, int k, std::uint64_t seed, int max_tries) {
    require(k >= 1 && max_tries >= 1, "gv_random_cover: need k >= 1 and max_tries >= 1");
    check_dim(n, kMaxCodeDim);
    std::mt19937_64 rng(seed);
    // top bits of the raw engine output; rejection of 0 keeps u uniform
    auto draw = [&]() -> Mask {
        for (;;) {
            const Mask u = static_cast<Mask>(rng() >> (64 - n));
            if (u != 0) return u;
        }
    };
    const int patience = (max_tries + 3) / 4;
    int m = gv_initial_size(n, k);
    for (int attempt = 0; attempt < max_tries; ++attempt) {
        if (attempt > 0 && attempt % patience == 0) ++m;
        std::vector<Mask> rows(static_cast<std::size_t>(m));
        for (auto& u : rows) u = draw();
        const LinearCode code(n, rows);
        if (min_distance(code) >= k) {
            Cover c = cover_from_code(code);
            c.with_tag({Family::GVRandom, n, k, 1, 0});
            return c;
        }
    }
    throw ExhaustedError("gv_random_cover: no (" + std::to_string(k) + ",1;0)-cover of F_2^" + std::to_string(n) +
                         " found in " + std::to_string(max_tries) + " tries");
}

Cover golay_cover() {
    Cover c = cover_from_code(golay_generator());
    c.with_tag({Family::GolayCover, 12, 8, 1, 0});
    return c;
}

} // namespace affcover
