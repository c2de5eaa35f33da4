// Exact minimum (k,d)-covers by depth-first branch and bound over subspace
// multiplicities.
//
// Search: at every node pick the nonzero point (or the origin, when an
// origin multiplicity is demanded) with the largest remaining deficiency,
// ties broken by fewest usable candidates. Branch i adds candidate c_i
// through that point and forbids c_1..c_{i-1} in its subtree, so each
// multiset is reached once. A node is pruned when even the r best remaining
// choices cannot remove the total deficiency:
//
//   sum_p def(p) > top-r of { |c ∩ {p : def(p) >= j}| : c usable, j <= copies }
//
// which sharpens the double-count bound ceil(sum def / 2^{n-d}) <= r.
//
// Multiplicities are capped at k: a subspace used more than k times can lose
// a copy without any point dropping below k.
//
// For d = 1 the non-origin normals of any (k,1;s)-cover span F_2^n (a point
// orthogonal to all of them would be covered at most s < k times), so after
// a change of basis every cover contains H_{e_1}, ..., H_{e_n}. The search
// starts from those n planes unless SearchOptions::fix_basis is off.
//
// Also for d = 1: restricting a cover of size m to {x.u = 0} leaves a cover
// of F_2^{n-1} of size m - X_u + Y_u with the same origin count s, where X_u
// and Y_u count the copies of {x.u = 1} and {x.u = 0}. Hence
// g(n,k;s) >= g(n-1,k;s) + 1 and X_u - Y_u <= m - g(n-1,k;s) for every u;
// since the Y_u add up to s,
//
//   sum_u max(Y_u, X_u - (m - g(n-1,k;s))) <= s.
//
// With the restriction_bound option f is searched one origin count at a
// time, each slice using a recursively solved g(n-1,k;s).
//
// Coordinate permutations map covers to covers. With the symmetry option on
// (n <= 7), a branch is skipped when a permutation fixing the current state
// and the branch point sends its subspace to an earlier sibling.

#pragma once

#include "affcover/cover.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace affcover {

struct OriginConstraint {
    enum class Kind { AtMostKMinus1, Exact };
    Kind kind = Kind::AtMostKMinus1;
    int s = 0;

    static OriginConstraint at_most() { return {}; }
    static OriginConstraint exact(int s) { return {Kind::Exact, s}; }
};

struct Budgets {
    std::uint64_t max_nodes = 0; // 0 = unlimited
    double max_seconds = 0;      // 0 = unlimited
};

struct SearchOptions {
    bool seed_from_constructions = true;
    bool fix_basis = true;
    bool restriction_bound = true;
    bool symmetry = true;
    /// Require at least k-2 subspaces through the origin. Only accepted when
    /// origin_mult_floor(n,k,d) = k-2, i.e. when it is a proven property of
    /// optimal covers; recorded in SolveResult::assumptions.
    bool origin_at_least_k_minus_2 = false;
};

struct SearchProblem {
    int n = 0;
    int k = 0;
    int d = 1;
    OriginConstraint origin;
    Budgets budgets;
    SearchOptions options;
};

enum class SolveStatus { Optimal, Feasible, Infeasible, Unknown };
std::string to_string(SolveStatus s);

struct SolveResult {
    SolveStatus status = SolveStatus::Unknown;
    std::int64_t value = 0;
    std::optional<Cover> certificate;
    std::uint64_t nodes = 0;
    std::int64_t proof_lo = 0;
    std::vector<std::string> assumptions;
    std::vector<std::string> reductions;
    std::string seed; // construction that provided the first incumbent
};

enum class Decision { Yes, No, Unknown };
std::string to_string(Decision d);

struct DecideResult {
    Decision decision = Decision::Unknown;
    std::optional<Cover> certificate;
    std::uint64_t nodes = 0;
    std::vector<std::string> assumptions;
};

/// Exact f(n,k,d) (or g(n,k,d;s) under OriginConstraint::exact(s)).
SolveResult solve_min(const SearchProblem& problem);

/// Is there a cover of size <= m? Yes carries a verified certificate.
DecideResult decide(const SearchProblem& problem, std::int64_t m);

/// solve_min with OriginConstraint::exact(s).
SolveResult solve_g(int n, int k, int d, int s, Budgets budgets = {});

/// Smallest verified cover among the built-in constructions that satisfies
/// the origin constraint, padding with origin subspaces where needed.
std::optional<Cover> best_construction(int n, int k, int d, const OriginConstraint& origin);

} // namespace affcover
