#include "affcover/cli.hpp"

#include "affcover/bounds.hpp"
#include "affcover/codes.hpp"
#include "affcover/constructions.hpp"
#include "affcover/json_io.hpp"
#include "affcover/ledger.hpp"
#include "affcover/solver.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace affcover::cli {

namespace {

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

std::string slurp(const std::string& path, std::istream& in) {
    std::ostringstream os;
    if (path.empty() || path == "-") {
        os << in.rdbuf();
    } else {
        std::ifstream f(path);
        if (!f) throw UsageError("cannot open " + path);
        os << f.rdbuf();
    }
    return os.str();
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

void require_range(const char* name, long long v, long long lo, long long hi) {
    if (v < lo || v > hi) {
        throw UsageError(std::string("--") + name + " must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) +
                         "]");
    }
}

template <class T>
std::optional<T> env_number(const char* name) {
    const char* v = std::getenv(name);
    if (!v || !*v) return std::nullopt;
    std::istringstream is(v);
    T x{};
    if (!(is >> x) || x < 0) throw UsageError(std::string("bad value for ") + name);
    return x;
}

struct ConstructArgs {
    std::string family;
    int n = 0;
    int k = 1;
    int d = 1;
    std::uint64_t seed = 1;
    int max_tries = 256;
};

struct SolveArgs {
    int n = 0;
    int k = 0;
    int d = 1;
    int s = -1;
    bool s_max = false;
    std::uint64_t budget_nodes = 0;
    double budget_seconds = 0;
    bool seed = true;
    bool no_basis_fix = false;
    bool no_restriction = false;
    bool no_symmetry = false;
    bool assume_origin_floor = false;
    int threads = 1;
    std::int64_t size = 0;
};

int do_construct(const ConstructArgs& a, std::ostream& out, std::ostream& err) {
    require_range("k", a.k, 1, 1 << 20);
    Cover c(1, 1);
    int k = a.k;
    if (a.family == "golay") {
        c = golay_cover();
        k = 8;
    } else if (a.family == "diag") {
        if (a.n != 0 && a.n != a.k) throw UsageError("diag: the cover lives in F_2^k, so --n must equal --k");
        c = diagonal_cover(a.k);
    } else {
        require_range("n", a.n, 1, kHardMaxDim);
        require_range("d", a.d, 1, a.n);
        if (a.family == "thma") {
            c = thm_a_cover(a.n, a.k, a.d);
        } else if (a.family == "l31") {
            c = lemma31_cover(a.n, a.k, a.d);
        } else if (a.family == "smax") {
            c = smax_cover(a.n, a.k, a.d);
        } else if (a.family == "gv") {
            if (a.d != 1) throw UsageError("gv: only d = 1");
            c = gv_random_cover(a.n, a.k, a.seed, a.max_tries);
        } else {
            throw UsageError("unknown family " + a.family);
        }
    }
    const CoverReport rep = verify(c, k);
    emit(out, to_json(c, &rep));
    err << a.family << ": n=" << c.dim() << " d=" << c.codim() << " k=" << k << " size=" << c.size()
        << " origin=" << rep.origin_count << (rep.is_cover() ? " verified" : " NOT a cover") << '\n';
    return rep.is_cover() ? kExitOk : kExitNegative;
}

int do_verify(int k, int threads, const std::string& path, std::istream& in, std::ostream& out, std::ostream& err) {
    require_range("k", k, 1, 1 << 20);
    require_range("threads", threads, 1, 256);
    const Cover c = cover_from_json(parse_json(slurp(path, in)));
    const CoverReport rep = verify(c, k, threads);
    Json j;
    j["version"] = kJsonVersion;
    j["report"] = to_json(rep);
    emit(out, j);
    err << "size " << rep.size << ", origin " << rep.origin_count << ", min nonzero coverage " << rep.min_nonzero
        << (rep.is_cover() ? ": cover\n" : ": not a cover\n");
    return rep.is_cover() ? kExitOk : kExitNegative;
}

int do_restrict(const std::string& u_text, const std::string& path, std::istream& in, std::ostream& out,
                std::ostream& err) {
    const Cover c = cover_from_json(parse_json(slurp(path, in)));
    const Mask u = parse_mask(Json(u_text));
    const Restriction r = restrict_to_hyperplane(c, u);
    Json j = to_json(r.cover);
    j["restriction"] = {{"u", hex_mask(u)}, {"discarded", r.discarded}, {"split", r.split}};
    emit(out, j);
    err << "restricted to x." << hex_mask(u) << "=0: size " << c.size() << " -> " << r.cover.size() << " (discarded "
        << r.discarded << ", split " << r.split << ")\n";
    return kExitOk;
}

int do_code(const std::string& action, int threads, const std::string& path, std::istream& in, std::ostream& out,
            std::ostream& err) {
    if (action == "golay") {
        emit(out, to_json(golay_generator()));
        return kExitOk;
    }
    const Json doc = parse_json(slurp(path, in));
    if (action == "from-cover") {
        const LinearCode code = code_from_cover(cover_from_json(doc));
        emit(out, to_json(code));
        err << "code of dimension " << code.dim() << " and length " << code.length() << '\n';
        return kExitOk;
    }
    if (action == "to-cover") {
        const Cover c = cover_from_code(code_from_json(doc));
        emit(out, to_json(c));
        err << "hyperplane cover of F_2^" << c.dim() << " with " << c.size() << " members\n";
        return kExitOk;
    }
    if (action == "mindist") {
        require_range("threads", threads, 1, 256);
        const LinearCode code = code_from_json(doc);
        const int dist = min_distance(code, threads);
        Json j;
        j["version"] = kJsonVersion;
        j["dim"] = code.dim();
        j["len"] = code.length();
        j["min_distance"] = dist;
        emit(out, j);
        err << "[" << code.length() << "," << code.dim() << "," << dist << "] code\n";
        return kExitOk;
    }
    throw UsageError("unknown code action " + action);
}

Json optional_json(const std::optional<std::int64_t>& v) { return v ? Json(*v) : Json(nullptr); }

int do_bound(int n, int k, int d, const std::string& rule, std::ostream& out, std::ostream& err) {
    require_range("n", n, 1, 62);
    require_range("d", d, 1, n);
    require_range("k", k, 1, 1 << 20);
    Json j;
    j["version"] = kJsonVersion;
    j["n"] = n;
    j["k"] = k;
    j["d"] = d;
    j["double_count"] = lb_double_count(n, k, d);
    j["thm_a"] = optional_json(exact_thm_a(n, k, d));
    j["general_upper"] = k >= 2 ? Json(lemma31_upper(n, k, d)) : Json(jamison_value(n, d));
    j["g_smax"] = g_smax_formula(n, k, d);
    const auto bc = bounds_thm_bc(n, k, d);
    if (bc) {
        const char* src = bc->source == ThmBCLowerSource::ThmB   ? "ThmB"
                          : bc->source == ThmBCLowerSource::ThmC ? "ThmC"
                                                                    : "DoubleCount";
        j["thm_bc"] = {{"lo", bc->lo}, {"hi", bc->hi}, {"source", src}};
    } else {
        j["thm_bc"] = nullptr;
    }
    if (d == 1 && k >= 2) {
        const Log2Value h = lb_hamming_s0(n, k);
        j["hamming_s0"] = {{"exact", h.to_string()}, {"approx", h.approx()}, {"ceil", h.ceil()}};
    }
    j["origin_floor"] = origin_mult_floor(n, k, d);
    if (n <= 16 && k <= 64) {
        const BoundLedger ledger = propagate(Rectangle{n, n, k, k, d, d}, {});
        j["ledger"] = to_json(ledger.at(n, k, d));
    }
    emit(out, j);

    bool applicable = true;
    if (rule == "thma") {
        applicable = exact_thm_a(n, k, d).has_value();
    } else if (rule == "thmb") {
        applicable = k >= 2 && thm_b_applies(n, k, d);
    } else if (rule == "thmc") {
        applicable = bc && bc->source != ThmBCLowerSource::DoubleCount;
    } else if (!rule.empty()) {
        throw UsageError("unknown rule " + rule);
    }
    if (!rule.empty()) err << rule << (applicable ? " applies\n" : " does not apply\n");
    return applicable ? kExitOk : kExitNegative;
}

int do_table(int nmin, int nmax, int kmin, int kmax, int d, const std::string& anchors_path,
             const std::string& format, std::istream& in, std::ostream& out, std::ostream& err) {
    require_range("d", d, 1, 8);
    require_range("nmin", nmin, d, 40);
    require_range("nmax", nmax, nmin, 40);
    require_range("kmin", kmin, 1, 256);
    require_range("kmax", kmax, kmin, 256);
    TableFormat fmt = TableFormat::Markdown;
    if (format == "json") {
        fmt = TableFormat::Json;
    } else if (format == "csv") {
        fmt = TableFormat::Csv;
    } else if (format != "md") {
        throw UsageError("--format must be json, md or csv");
    }
    std::vector<Anchor> anchors;
    if (!anchors_path.empty()) anchors = anchors_from_json(parse_json(slurp(anchors_path, in)));
    try {
        const BoundLedger ledger = propagate(Rectangle{nmin, nmax, kmin, kmax, d, d}, anchors);
        out << render_table(ledger, nmin, nmax, kmin, kmax, d, fmt);
        std::size_t open = 0;
        for (const auto& c : ledger.cells()) open += c.exact() ? 0 : 1;
        err << "fixpoint after " << ledger.passes() << " passes; " << open << " open cells\n";
    } catch (const ContradictionError& e) {
        err << "contradiction: " << e.what() << '\n';
        return kExitNegative;
    }
    return kExitOk;
}

SearchProblem make_problem(const SolveArgs& a) {
    require_range("n", a.n, 1, 12);
    require_range("d", a.d, 1, a.n);
    require_range("k", a.k, 1, 64);
    SearchProblem p;
    p.n = a.n;
    p.k = a.k;
    p.d = a.d;
    if (a.s_max && a.s >= 0) throw UsageError("--s and --s-max are exclusive");
    if (a.s_max) {
        p.origin = OriginConstraint::exact(a.k - 1);
    } else if (a.s >= 0) {
        require_range("s", a.s, 0, a.k - 1);
        p.origin = OriginConstraint::exact(a.s);
    }
    p.budgets.max_nodes = a.budget_nodes ? a.budget_nodes : env_number<std::uint64_t>("AFFCOVER_BUDGET_NODES").value_or(0);
    p.budgets.max_seconds =
        a.budget_seconds > 0 ? a.budget_seconds : env_number<double>("AFFCOVER_BUDGET_SECONDS").value_or(0.0);
    p.options.seed_from_constructions = a.seed;
    p.options.fix_basis = !a.no_basis_fix;
    p.options.restriction_bound = !a.no_restriction;
    p.options.symmetry = !a.no_symmetry;
    p.options.origin_at_least_k_minus_2 = a.assume_origin_floor;
    require_range("threads", a.threads, 1, 256);
    return p;
}

int do_solve(const SolveArgs& a, std::ostream& out, std::ostream& err) {
    const SolveResult r = solve_min(make_problem(a));
    emit(out, to_json(r));
    err << to_string(r.status);
    if (r.certificate) err << " value " << r.value;
    err << " (" << r.nodes << " nodes, lower bound " << r.proof_lo << ")\n";
    switch (r.status) {
    case SolveStatus::Optimal: return kExitOk;
    case SolveStatus::Infeasible: return kExitNegative;
    default: return kExitBudget;
    }
}

int do_decide(const SolveArgs& a, std::ostream& out, std::ostream& err) {
    if (a.size < 0) throw UsageError("--size must be nonnegative");
    const DecideResult r = decide(make_problem(a), a.size);
    emit(out, to_json(r));
    err << "cover of size <= " << a.size << ": " << to_string(r.decision) << " (" << r.nodes << " nodes)\n";
    switch (r.decision) {
    case Decision::Yes: return kExitOk;
    case Decision::No: return kExitNegative;
    default: return kExitBudget;
    }
}

void add_solve_flags(CLI::App* cmd, SolveArgs& a) {
    cmd->add_option("--n", a.n, "dimension")->required();
    cmd->add_option("--k", a.k, "coverage multiplicity")->required();
    cmd->add_option("--d", a.d, "codimension")->capture_default_str();
    cmd->add_option("--s", a.s, "exact origin multiplicity");
    cmd->add_flag("--s-max", a.s_max, "origin multiplicity k-1");
    cmd->add_option("--budget-nodes", a.budget_nodes, "node budget (env AFFCOVER_BUDGET_NODES)");
    cmd->add_option("--budget-seconds", a.budget_seconds, "time budget (env AFFCOVER_BUDGET_SECONDS)");
    cmd->add_flag("--seed-construction,!--no-seed-construction", a.seed, "seed the incumbent from constructions");
    cmd->add_flag("--no-basis-fix", a.no_basis_fix, "disable the d=1 basis normalization");
    cmd->add_flag("--no-restriction", a.no_restriction, "disable the hyperplane restriction bound");
    cmd->add_flag("--no-symmetry", a.no_symmetry, "disable coordinate-permutation pruning");
    cmd->add_flag("--assume-origin-floor", a.assume_origin_floor, "require >= k-2 origin subspaces where proven");
    cmd->add_option("--threads", a.threads, "accepted for interface parity; the search is single-threaded");
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact and constructive tools for multiple covers of F_2^n by affine subspaces", "affcover"};
    app.require_subcommand(1);

    ConstructArgs ca;
    auto* construct = app.add_subcommand("construct", "build a cover from a named family");
    construct->add_option("--family", ca.family, "thma|l31|smax|diag|gv|golay")
        ->required()
        ->check(CLI::IsMember({"thma", "l31", "smax", "diag", "gv", "golay"}));
    construct->add_option("--n", ca.n, "dimension");
    construct->add_option("--k", ca.k, "coverage multiplicity");
    construct->add_option("--d", ca.d, "codimension");
    construct->add_option("--seed", ca.seed, "RNG seed (gv)");
    construct->add_option("--max-tries", ca.max_tries, "sample budget (gv)");

    int vk = 0;
    int threads = 1;
    std::string in_path;
    auto* verify_cmd = app.add_subcommand("verify", "check the covering property of a cover document");
    verify_cmd->add_option("--k", vk, "coverage multiplicity")->required();
    verify_cmd->add_option("--in", in_path, "input file (default stdin)");
    verify_cmd->add_option("--threads", threads, "worker threads");

    std::string u_text;
    auto* restrict_cmd = app.add_subcommand("restrict", "restrict a cover to the hyperplane x.u = 0");
    restrict_cmd->add_option("--u", u_text, "normal vector, e.g. 0x3")->required();
    restrict_cmd->add_option("--in", in_path, "input file (default stdin)");

    std::string code_action;
    auto* code_cmd = app.add_subcommand("code", "convert between origin-free hyperplane covers and linear codes");
    code_cmd->add_option("action", code_action, "from-cover|to-cover|mindist|golay")
        ->required()
        ->check(CLI::IsMember({"from-cover", "to-cover", "mindist", "golay"}));
    code_cmd->add_option("--in", in_path, "input file (default stdin)");
    code_cmd->add_option("--threads", threads, "worker threads (mindist)");

    int bn = 0, bk = 0, bd = 1;
    std::string rule;
    auto* bound_cmd = app.add_subcommand("bound", "closed-form bounds and the propagated interval for one cell");
    bound_cmd->add_option("--n", bn, "dimension")->required();
    bound_cmd->add_option("--k", bk, "coverage multiplicity")->required();
    bound_cmd->add_option("--d", bd, "codimension");
    bound_cmd->add_option("--rule", rule, "exit 1 unless this rule applies: thma|thmb|thmc");

    int nmin = 3, nmax = 6, kmin = 3, kmax = 16, td = 1;
    std::string anchors_path, format = "md";
    auto* table_cmd = app.add_subcommand("table", "propagate bounds over a rectangle and render the table");
    table_cmd->add_option("--nmin", nmin)->capture_default_str();
    table_cmd->add_option("--nmax", nmax)->capture_default_str();
    table_cmd->add_option("--kmin", kmin)->capture_default_str();
    table_cmd->add_option("--kmax", kmax)->capture_default_str();
    table_cmd->add_option("--d", td)->capture_default_str();
    table_cmd->add_option("--anchors", anchors_path, "JSON list of known cell values");
    table_cmd->add_option("--format", format, "md|json|csv")->capture_default_str();

    SolveArgs sa;
    auto* solve_cmd = app.add_subcommand("solve", "exact minimum cover by branch and bound");
    add_solve_flags(solve_cmd, sa);
    SolveArgs da;
    auto* decide_cmd = app.add_subcommand("decide", "is there a cover of size at most --size?");
    add_solve_flags(decide_cmd, da);
    decide_cmd->add_option("--size", da.size, "size m")->required();

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*construct) return do_construct(ca, out, err);
        if (*verify_cmd) return do_verify(vk, threads, in_path, in, out, err);
        if (*restrict_cmd) return do_restrict(u_text, in_path, in, out, err);
        if (*code_cmd) return do_code(code_action, threads, in_path, in, out, err);
        if (*bound_cmd) return do_bound(bn, bk, bd, rule, out, err);
        if (*table_cmd) return do_table(nmin, nmax, kmin, kmax, td, anchors_path, format, in, out, err);
        if (*solve_cmd) return do_solve(sa, out, err);
        if (*decide_cmd) return do_decide(da, out, err);
    } catch (const ExhaustedError& e) {
        err << "error: " << e.what() << '\n';
        return kExitBudget;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

int run(int argc, const char* const* argv) {
    std::vector<std::string> args(argv, argv + argc);
    return run(args, std::cin, std::cout, std::cerr);
}

} // namespace affcover::cli
