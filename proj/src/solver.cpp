#include "affcover/solver.hpp"

#include "affcover/bounds.hpp"
#include "affcover/constructions.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <map>
#include <tuple>

namespace affcover {

namespace {

struct OriginRange {
    int min = 0;
    int max = 0;
};

OriginRange origin_range(const SearchProblem& p) {
    OriginRange r;
    if (p.origin.kind == OriginConstraint::Kind::Exact) {
        r.min = r.max = p.origin.s;
    } else {
        r.max = p.k - 1;
    }
    if (p.options.origin_at_least_k_minus_2) r.min = std::max(r.min, p.k - 2);
    return r;
}

void validate(const SearchProblem& p) {
    if (p.d < 1 || p.n < p.d || p.k < 1) {
        throw std::invalid_argument("solver: need n >= d >= 1 and k >= 1");
    }
    check_dim(p.n, 12);
    if (p.origin.kind == OriginConstraint::Kind::Exact && (p.origin.s < 0 || p.origin.s >= p.k)) {
        throw std::invalid_argument("solver: origin multiplicity s must satisfy 0 <= s < k");
    }
    if (p.options.origin_at_least_k_minus_2) {
        if (p.k < 2 || origin_mult_floor(p.n, p.k, p.d) != p.k - 2) {
            throw std::invalid_argument(
                "solver: origin >= k-2 is only a theorem when n > 2^(2^d k - k - d + 1); refusing to assume it");
        }
        if (p.origin.kind == OriginConstraint::Kind::Exact && p.origin.s < p.k - 2) {
            throw std::invalid_argument("solver: exact origin multiplicity contradicts origin >= k-2");
        }
    }
}

std::vector<std::string> assumption_log(const SearchProblem& p) {
    std::vector<std::string> a;
    if (p.options.origin_at_least_k_minus_2) a.push_back("OriginAtLeast(k-2)");
    return a;
}

class MulticoverSearch {
public:
    MulticoverSearch(const SearchProblem& p, std::int64_t limit, bool stop_at_first, std::int64_t restricted_lo = -1)
        : restricted_lo_(p.d == 1 ? restricted_lo : -1), n_(p.n), d_(p.d), k_(p.k), origin_(origin_range(p)), budgets_(p.budgets), limit_(limit),
          stop_at_first_(stop_at_first), start_(std::chrono::steady_clock::now()) {
        pool_ = enumerate_subspaces(n_, d_, EnumerationLimits{12, 2'000'000});
        npoints_ = std::size_t{1} << n_;
        words_ = (npoints_ + 63) / 64;
        cwords_ = (pool_.size() + 63) / 64;
        masks_.assign(pool_.size() * words_, 0);
        point_cands_.assign(npoints_ * cwords_, 0);
        points_.resize(pool_.size());
        has_origin_.resize(pool_.size());
        for (std::size_t c = 0; c < pool_.size(); ++c) {
            has_origin_[c] = pool_[c].contains_origin();
            for_each_point(pool_[c], [&](Mask x) {
                masks_[c * words_ + x / 64] |= std::uint64_t{1} << (x % 64);
                point_cands_[x * cwords_ + c / 64] |= std::uint64_t{1} << (c % 64);
                points_[c].push_back(x);
            });
        }
        need_.assign(npoints_, k_);
        need_[0] = origin_.min;
        cov_.assign(npoints_, 0);
        mult_.assign(pool_.size(), 0);
        forbidden_.assign(pool_.size(), 0);
        gain_hist_.assign((std::size_t{1} << (n_ - d_)) + 1, 0);
        if (restricted_lo_ >= 0) {
            away_.assign(npoints_, 0);
            through_.assign(npoints_, 0);
        }
        if (p.options.symmetry) build_permutations();
    }

    /// Adds a subspace before the search starts (e.g. a basis normalization).
    void force(const AffineSubspace& s) {
        auto it = std::lower_bound(pool_.begin(), pool_.end(), s);
        apply(static_cast<int>(it - pool_.begin()));
    }

    void run() {
        std::vector<std::uint16_t> group(nperms_);
        for (std::size_t i = 0; i < nperms_; ++i) group[i] = static_cast<std::uint16_t>(i);
        dfs(group);
    }

    bool budget_hit() const { return budget_hit_; }
    std::uint64_t nodes() const { return nodes_; }
    const std::optional<Cover>& best() const { return best_; }

private:
    // Tables for every coordinate permutation; index 0 is the identity.
    void build_permutations() {
        std::size_t count = 1;
        for (int i = 2; i <= n_; ++i) count *= static_cast<std::size_t>(i);
        if (n_ > 7 || count * pool_.size() > 4'000'000) return;
        std::vector<int> sigma(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i) sigma[static_cast<std::size_t>(i)] = i;
        auto image = [&](Mask x) {
            Mask y = 0;
            for (int i = 0; i < n_; ++i) {
                if ((x >> i) & 1) y |= unit(sigma[static_cast<std::size_t>(i)]);
            }
            return y;
        };
        perm_point_.reserve(count * npoints_);
        perm_cand_.reserve(count * pool_.size());
        do {
            for (Mask x = 0; x < npoints_; ++x) perm_point_.push_back(image(x));
            for (const AffineSubspace& s : pool_) {
                std::vector<Mask> normals;
                for (const Mask u : s.normals()) normals.push_back(image(u));
                const AffineSubspace t = AffineSubspace::from_constraints(n_, normals, s.rhs());
                perm_cand_.push_back(static_cast<int>(std::lower_bound(pool_.begin(), pool_.end(), t) - pool_.begin()));
            }
        } while (std::next_permutation(sigma.begin(), sigma.end()));
        nperms_ = count;
    }

    int perm_cand(std::uint16_t g, int c) const { return perm_cand_[g * pool_.size() + static_cast<std::size_t>(c)]; }

    int deficiency(std::size_t p) const { return std::max(0, need_[p] - cov_[p]); }

    int copies_left(std::size_t c, std::int64_t r) const {
        if (forbidden_[c]) return 0;
        std::int64_t left = std::min<std::int64_t>(k_ - mult_[c], r);
        if (has_origin_[c]) left = std::min<std::int64_t>(left, origin_.max - cov_[0]);
        return static_cast<int>(std::max<std::int64_t>(left, 0));
    }

    void apply(int c) {
        if (restricted_lo_ >= 0) tally(c, 1);
        ++mult_[static_cast<std::size_t>(c)];
        for (const Mask x : points_[static_cast<std::size_t>(c)]) ++cov_[x];
        chosen_.push_back(c);
    }

    void undo(int c) {
        if (restricted_lo_ >= 0) tally(c, -1);
        --mult_[static_cast<std::size_t>(c)];
        for (const Mask x : points_[static_cast<std::size_t>(c)]) --cov_[x];
        chosen_.pop_back();
    }

    void tally(int c, int delta) {
        const AffineSubspace& h = pool_[static_cast<std::size_t>(c)];
        auto& counts = h.contains_origin() ? through_ : away_;
        counts[h.normals()[0]] += delta;
    }

    bool restriction_prunes(std::int64_t r) const {
        const std::int64_t slack = limit_ - restricted_lo_;
        std::int64_t origin_needed = 0;
        std::int64_t extra_picks = 0;
        for (std::size_t u = 1; u < npoints_; ++u) {
            const std::int64_t forced = away_[u] - slack;
            origin_needed += std::max<std::int64_t>(through_[u], forced);
            extra_picks += std::max<std::int64_t>(0, forced - through_[u]);
        }
        return origin_needed > origin_.max || extra_picks > r;
    }

    bool out_of_budget() {
        if (budget_hit_) return true;
        if (budgets_.max_nodes && nodes_ >= budgets_.max_nodes) budget_hit_ = true;
        if (budgets_.max_seconds > 0 && (nodes_ & 1023) == 0) {
            const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start_;
            if (dt.count() > budgets_.max_seconds) budget_hit_ = true;
        }
        return budget_hit_;
    }

    void record_solution() {
        Cover c(n_, d_);
        for (const int i : chosen_) c.add(pool_[static_cast<std::size_t>(i)]);
        best_ = std::move(c);
        limit_ = static_cast<std::int64_t>(chosen_.size()) - 1;
        if (stop_at_first_) done_ = true;
    }

    // True when the r best remaining choices cannot clear the deficiency.
    bool gain_bound_prunes(std::int64_t r, std::int64_t total, int max_def) {
        levels_.assign(static_cast<std::size_t>(max_def) * words_, 0);
        for (std::size_t p = 0; p < npoints_; ++p) {
            const int def = deficiency(p);
            for (int j = 0; j < def; ++j) levels_[static_cast<std::size_t>(j) * words_ + p / 64] |= std::uint64_t{1} << (p % 64);
        }
        std::fill(gain_hist_.begin(), gain_hist_.end(), 0);
        for (std::size_t c = 0; c < pool_.size(); ++c) {
            const int copies = std::min(copies_left(c, r), max_def);
            for (int j = 0; j < copies; ++j) {
                int g = 0;
                for (std::size_t w = 0; w < words_; ++w) {
                    g += __builtin_popcountll(masks_[c * words_ + w] & levels_[static_cast<std::size_t>(j) * words_ + w]);
                }
                if (g == 0) break;
                ++gain_hist_[static_cast<std::size_t>(g)];
            }
        }
        std::int64_t reach = 0;
        std::int64_t picks = r;
        for (std::size_t g = gain_hist_.size() - 1; g > 0 && picks > 0; --g) {
            const std::int64_t take = std::min<std::int64_t>(picks, gain_hist_[g]);
            reach += take * static_cast<std::int64_t>(g);
            picks -= take;
        }
        return reach < total;
    }

    // `group` holds permutations that fix the chosen multiset and the
    // forbidden set; it always contains the identity.
    void dfs(const std::vector<std::uint16_t>& group) {
        if (done_ || out_of_budget()) return;
        ++nodes_;
        std::int64_t total = 0;
        int max_def = 0;
        for (std::size_t p = 0; p < npoints_; ++p) {
            const int def = deficiency(p);
            total += def;
            max_def = std::max(max_def, def);
        }
        if (total == 0) {
            record_solution();
            return;
        }
        const std::int64_t r = limit_ - static_cast<std::int64_t>(chosen_.size());
        if (r <= 0 || max_def > r) return;
        const std::int64_t per_subspace = std::int64_t{1} << (n_ - d_);
        if ((total + per_subspace - 1) / per_subspace > r) return;
        if (restricted_lo_ >= 0 && restriction_prunes(r)) return;
        if (gain_bound_prunes(r, total, max_def)) return;

        std::vector<std::uint64_t> usable(cwords_, 0);
        for (std::size_t c = 0; c < pool_.size(); ++c) {
            if (copies_left(c, r) > 0) usable[c / 64] |= std::uint64_t{1} << (c % 64);
        }
        std::size_t branch_point = npoints_;
        int branch_def = 0;
        int branch_options = std::numeric_limits<int>::max();
        for (std::size_t p = 0; p < npoints_; ++p) {
            const int def = deficiency(p);
            if (def == 0) continue;
            int options = 0;
            for (std::size_t w = 0; w < cwords_; ++w) {
                options += __builtin_popcountll(usable[w] & point_cands_[p * cwords_ + w]);
            }
            if (options == 0) return;
            if (def > branch_def || (def == branch_def && options < branch_options)) {
                branch_point = p;
                branch_def = def;
                branch_options = options;
            }
        }

        std::vector<std::uint16_t> stab;
        if (group.size() > 1) {
            for (const std::uint16_t g : group) {
                if (g != 0 && perm_point_[g * npoints_ + branch_point] == branch_point) stab.push_back(g);
            }
        }
        std::vector<int> tried;
        std::vector<std::uint16_t> child;
        tried.reserve(static_cast<std::size_t>(branch_options));
        for (std::size_t w = 0; w < cwords_ && !done_; ++w) {
            std::uint64_t bits = usable[w] & point_cands_[branch_point * cwords_ + w];
            while (bits && !done_) {
                const int c = static_cast<int>(w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits)));
                bits &= bits - 1;
                // an earlier sibling in the same orbit already covers this branch
                const bool redundant = std::any_of(stab.begin(), stab.end(), [&](std::uint16_t g) { return perm_cand(g, c) < c; });
                if (!redundant) {
                    child.assign(1, 0);
                    for (const std::uint16_t g : group) {
                        if (g == 0 || perm_cand(g, c) != c) continue;
                        const bool keeps = std::all_of(tried.begin(), tried.end(),
                                                       [&](int f) { return forbidden_[static_cast<std::size_t>(perm_cand(g, f))] != 0; });
                        if (keeps) child.push_back(g);
                    }
                    apply(c);
                    dfs(child);
                    undo(c);
                }
                if (budget_hit_) break;
                forbidden_[static_cast<std::size_t>(c)] = 1;
                tried.push_back(c);
                // the incumbent may have tightened the limit
                if (limit_ - static_cast<std::int64_t>(chosen_.size()) <= 0) break;
            }
            if (budget_hit_) break;
        }
        for (const int c : tried) forbidden_[static_cast<std::size_t>(c)] = 0;
    }

    std::int64_t restricted_lo_;
    int n_;
    int d_;
    int k_;
    OriginRange origin_;
    Budgets budgets_;
    std::int64_t limit_;
    bool stop_at_first_;
    std::chrono::steady_clock::time_point start_;

    std::vector<AffineSubspace> pool_;
    std::size_t npoints_ = 0;
    std::size_t words_ = 0;
    std::size_t cwords_ = 0;
    std::vector<std::uint64_t> masks_;
    std::vector<std::uint64_t> point_cands_;
    std::vector<std::vector<Mask>> points_;
    std::vector<char> has_origin_;

    std::vector<int> need_;
    std::vector<int> cov_;
    std::vector<int> mult_;
    std::vector<std::int64_t> away_;    // X_u
    std::vector<std::int64_t> through_; // Y_u
    std::vector<char> forbidden_;
    std::vector<int> chosen_;
    std::vector<std::uint64_t> levels_;
    std::size_t nperms_ = 1;
    std::vector<Mask> perm_point_;
    std::vector<int> perm_cand_;
    std::vector<std::int64_t> gain_hist_;

    std::uint64_t nodes_ = 0;
    bool budget_hit_ = false;
    bool done_ = false;
    std::optional<Cover> best_;
};

bool satisfies(const Cover& c, int k, const OriginRange& origin) {
    const CoverReport rep = verify(c, k);
    return rep.min_nonzero >= static_cast<std::uint64_t>(k) && rep.origin_count >= static_cast<std::uint64_t>(origin.min) &&
           rep.origin_count <= static_cast<std::uint64_t>(origin.max);
}

AffineSubspace origin_filler(int n, int d) {
    std::vector<Mask> normals;
    for (int i = 0; i < d; ++i) normals.push_back(unit(i));
    return AffineSubspace::from_constraints(n, normals, 0);
}

std::vector<Cover> direct_seeds(int n, int k, int d) {
    std::vector<Cover> seeds;
    auto attempt = [&](auto&& make) {
        try {
            seeds.push_back(make());
        } catch (const std::invalid_argument&) {
        }
    };
    attempt([&] { return thm_a_cover(n, k, d); });
    attempt([&] { return lemma31_cover(n, k, d); });
    attempt([&] { return smax_cover(n, k, d); });
    attempt([&] {
        Cover base = smax_cover(n, 1, d);
        Cover c(n, d);
        for (int i = 0; i < k; ++i) c.add(base);
        c.with_tag({Family::SMax, n, k, d, 0});
        return c;
    });
    if (d == 1 && n == k && k >= 4) attempt([&] { return diagonal_cover(k); });
    if (d == 1 && n == 12 && k <= 8) attempt([&] { return golay_cover(); });
    return seeds;
}

std::optional<Cover> smallest_valid(std::vector<Cover>& seeds, int k, const OriginRange& range, int n, int d) {
    std::optional<Cover> best;
    for (Cover& c : seeds) {
        const auto s0 = static_cast<int>(c.origin_count());
        if (s0 > range.max) continue;
        if (s0 < range.min) c.add(origin_filler(n, d), static_cast<std::uint32_t>(range.min - s0));
        if (!satisfies(c, k, range)) continue;
        if (!best || c.size() < best->size()) best = c;
    }
    return best;
}

std::optional<Cover> best_seed(const SearchProblem& p, std::string* name) {
    std::vector<Cover> seeds = direct_seeds(p.n, p.k, p.d);
    if (p.d == 1 && p.k >= 2) {
        // best (k'-1)-cover plus a parallel pair is a k'-cover with one more
        // origin plane, so the chain stays within s <= k' - 1
        std::vector<Cover> base = direct_seeds(p.n, 1, 1);
        std::optional<Cover> chain = smallest_valid(base, 1, {0, 0}, p.n, 1);
        for (int kk = 2; chain && kk <= p.k; ++kk) {
            std::vector<Cover> level = direct_seeds(p.n, kk, 1);
            level.push_back(add_parallel_pair(*chain));
            if (kk == p.k) {
                seeds.push_back(level.back());
                break;
            }
            chain = smallest_valid(level, kk, {0, kk - 1}, p.n, 1);
        }
    }
    std::optional<Cover> best = smallest_valid(seeds, p.k, origin_range(p), p.n, p.d);
    if (best && name && best->tag()) *name = to_string(best->tag()->family);
    return best;
}

std::int64_t root_lower_bound(const SearchProblem& p) {
    const OriginRange range = origin_range(p);
    return lb_double_count(p.n, p.k, p.d, range.min);
}

void prepare(MulticoverSearch& search, const SearchProblem& p, std::vector<std::string>& reductions) {
    if (p.options.fix_basis && p.d == 1) {
        for (int i = 0; i < p.n; ++i) search.force(AffineSubspace::hyperplane(p.n, unit(i), 1));
        reductions.push_back("fix-basis");
    }
}

} // namespace

SolveResult solve_min(const SearchProblem& problem);

namespace {

bool uses_restriction(const SearchProblem& p) { return p.d == 1 && p.n >= 2 && p.options.restriction_bound; }

// Lower bound on g(n-1,k;s) from a recursive solve. Restriction keeps the
// origin count, so this also gives g(n,k;s) >= g(n-1,k;s) + 1.
std::int64_t restricted_g(const SearchProblem& p, int s) {
    using Key = std::tuple<int, int, int, bool, bool, bool, double, std::uint64_t>;
    static thread_local std::map<Key, std::int64_t> memo;
    const Key key{p.n - 1, p.k, s, p.options.seed_from_constructions, p.options.fix_basis, p.options.symmetry,
                  p.budgets.max_seconds, p.budgets.max_nodes};
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    SearchProblem sub = p;
    sub.n = p.n - 1;
    sub.origin = OriginConstraint::exact(s);
    sub.options.origin_at_least_k_minus_2 = false;
    const SolveResult r = solve_min(sub);
    const std::int64_t lo = r.status == SolveStatus::Optimal ? r.value : r.proof_lo;
    if (r.status == SolveStatus::Optimal) memo.emplace(key, lo);
    return lo;
}

struct Slice {
    int s = 0;
    std::int64_t lo = 0;            // lower bound on g(n,k;s)
    std::int64_t restricted_lo = -1; // lower bound on g(n-1,k;s), or -1
};

// One slice per admissible origin count, or a single unsplit slice (s = -1)
// when the restriction bound is off.
std::vector<Slice> slices(const SearchProblem& p) {
    const OriginRange range = origin_range(p);
    if (!uses_restriction(p)) return {{-1, root_lower_bound(p), -1}};
    std::vector<Slice> out;
    for (int s = range.min; s <= range.max; ++s) {
        Slice sl{s, lb_double_count(p.n, p.k, p.d, s), restricted_g(p, s)};
        sl.lo = std::max(sl.lo, sl.restricted_lo + 1);
        out.push_back(sl);
    }
    return out;
}

SearchProblem slice_problem(const SearchProblem& p, const Slice& sl) {
    SearchProblem q = p;
    if (sl.s >= 0) q.origin = OriginConstraint::exact(sl.s);
    return q;
}

// Budgets left for the next slice; false once either is used up.
bool remaining_budget(const Budgets& total, std::chrono::steady_clock::time_point start, std::uint64_t nodes, Budgets& left) {
    left = total;
    if (total.max_nodes) {
        if (nodes >= total.max_nodes) return false;
        left.max_nodes = total.max_nodes - nodes;
    }
    if (total.max_seconds > 0) {
        const std::chrono::duration<double> used = std::chrono::steady_clock::now() - start;
        if (used.count() >= total.max_seconds) return false;
        left.max_seconds = total.max_seconds - used.count();
    }
    return true;
}

std::string slice_note(const SearchProblem& p, const Slice& sl) {
    return "restriction(g(" + std::to_string(p.n - 1) + "," + std::to_string(p.k) + ";" + std::to_string(sl.s) +
           ")>=" + std::to_string(sl.restricted_lo) + ")";
}

} // namespace

std::string to_string(SolveStatus s) {
    switch (s) {
    case SolveStatus::Optimal: return "Optimal";
    case SolveStatus::Feasible: return "Feasible";
    case SolveStatus::Infeasible: return "Infeasible";
    case SolveStatus::Unknown: return "Unknown";
    }
    return "?";
}

std::string to_string(Decision d) {
    switch (d) {
    case Decision::Yes: return "Yes";
    case Decision::No: return "No";
    case Decision::Unknown: return "Unknown";
    }
    return "?";
}

std::optional<Cover> best_construction(int n, int k, int d, const OriginConstraint& origin) {
    SearchProblem p;
    p.n = n;
    p.k = k;
    p.d = d;
    p.origin = origin;
    validate(p);
    return best_seed(p, nullptr);
}

SolveResult solve_min(const SearchProblem& problem) {
    validate(problem);
    const auto start = std::chrono::steady_clock::now();
    SolveResult result;
    result.assumptions = assumption_log(problem);
    result.proof_lo = root_lower_bound(problem);
    std::optional<Cover> incumbent;
    if (problem.options.seed_from_constructions) incumbent = best_seed(problem, &result.seed);
    auto settled = [&] { return incumbent && static_cast<std::int64_t>(incumbent->size()) <= result.proof_lo; };
    std::vector<Slice> parts;
    if (!settled()) {
        parts = slices(problem);
        result.proof_lo = std::numeric_limits<std::int64_t>::max();
        for (const Slice& sl : parts) result.proof_lo = std::min(result.proof_lo, sl.lo);
    }

    // without an incumbent every pick still removes some deficiency
    std::int64_t limit = ((std::int64_t{1} << problem.n) - 1) * problem.k + origin_range(problem).min;
    if (incumbent) limit = static_cast<std::int64_t>(incumbent->size()) - 1;
    bool exhausted = true;
    std::int64_t open_lo = std::numeric_limits<std::int64_t>::max();
    for (const Slice& sl : parts) {
        if (settled()) break;
        if (sl.restricted_lo >= 0) result.reductions.push_back(slice_note(problem, sl));
        if (sl.lo > limit) continue;
        SearchProblem q = slice_problem(problem, sl);
        if (!remaining_budget(problem.budgets, start, result.nodes, q.budgets)) {
            exhausted = false;
            open_lo = std::min(open_lo, sl.lo);
            continue;
        }
        MulticoverSearch search(q, limit, false, sl.restricted_lo);
        prepare(search, q, result.reductions);
        search.run();
        result.nodes += search.nodes();
        if (search.best()) {
            incumbent = search.best();
            limit = static_cast<std::int64_t>(incumbent->size()) - 1;
        }
        if (search.budget_hit()) {
            exhausted = false;
            open_lo = std::min(open_lo, sl.lo);
        }
    }
    std::sort(result.reductions.begin(), result.reductions.end());
    result.reductions.erase(std::unique(result.reductions.begin(), result.reductions.end()), result.reductions.end());

    if (!exhausted) {
        result.status = incumbent ? SolveStatus::Feasible : SolveStatus::Unknown;
    } else {
        result.status = incumbent ? SolveStatus::Optimal : SolveStatus::Infeasible;
    }
    if (incumbent) {
        if (!satisfies(*incumbent, problem.k, origin_range(problem))) {
            throw std::logic_error("solver produced an invalid certificate");
        }
        result.value = static_cast<std::int64_t>(incumbent->size());
        result.certificate = std::move(incumbent);
        // every unfinished slice was searched below the incumbent
        if (result.status == SolveStatus::Optimal) result.proof_lo = result.value;
        else result.proof_lo = std::min(open_lo, result.value);
    }
    return result;
}

DecideResult decide(const SearchProblem& problem, std::int64_t m) {
    validate(problem);
    const auto start = std::chrono::steady_clock::now();
    DecideResult result;
    result.assumptions = assumption_log(problem);
    if (m < root_lower_bound(problem)) {
        result.decision = Decision::No;
        return result;
    }
    if (problem.options.seed_from_constructions) {
        if (auto seed = best_seed(problem, nullptr); seed && static_cast<std::int64_t>(seed->size()) <= m) {
            result.decision = Decision::Yes;
            result.certificate = std::move(seed);
            return result;
        }
    }
    bool exhausted = true;
    std::vector<std::string> reductions;
    for (const Slice& sl : slices(problem)) {
        if (sl.lo > m) continue;
        SearchProblem q = slice_problem(problem, sl);
        if (!remaining_budget(problem.budgets, start, result.nodes, q.budgets)) {
            exhausted = false;
            continue;
        }
        MulticoverSearch search(q, m, true, sl.restricted_lo);
        prepare(search, q, reductions);
        search.run();
        result.nodes += search.nodes();
        if (search.best()) {
            result.decision = Decision::Yes;
            result.certificate = search.best();
            return result;
        }
        exhausted = exhausted && !search.budget_hit();
    }
    result.decision = exhausted ? Decision::No : Decision::Unknown;
    return result;
}

SolveResult solve_g(int n, int k, int d, int s, Budgets budgets) {
    SearchProblem p;
    p.n = n;
    p.k = k;
    p.d = d;
    p.origin = OriginConstraint::exact(s);
    p.budgets = budgets;
    return solve_min(p);
}

} // namespace affcover
