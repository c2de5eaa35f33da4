#include "affcover/ledger.hpp"

#include "affcover/bounds.hpp"

#include <algorithm>
#include <limits>
#include <nlohmann/json.hpp>
#include <sstream>

namespace affcover {

namespace {

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

using Key = std::tuple<int, int, int>; // (d, n, k)
using Grid = std::map<Key, BoundEntry>;

struct Candidate {
    std::int64_t value;
    Provenance why;
};

const BoundEntry* lookup(const Grid& g, int n, int k, int d) {
    auto it = g.find({d, n, k});
    return it == g.end() ? nullptr : &it->second;
}

std::vector<Candidate> lower_candidates(const Grid& g, const std::vector<Anchor>& anchors, int n, int k, int d) {
    std::vector<Candidate> out;
    out.push_back({lb_double_count(n, k, d), {Rule::DoubleCount, ""}});
    if (auto v = exact_thm_a(n, k, d)) out.push_back({*v, {Rule::ThmA, ""}});
    if (k == 1) out.push_back({jamison_value(n, d), {Rule::Jamison, ""}});
    if (auto bc = bounds_thm_bc(n, k, d)) {
        if (bc->source == ThmBCLowerSource::ThmB) out.push_back({bc->lo, {Rule::ThmB, ""}});
        if (bc->source == ThmBCLowerSource::ThmC) out.push_back({bc->lo, {Rule::ThmC, ""}});
    }
    for (const auto& a : anchors) {
        if (a.n == n && a.k == k && a.d == d && a.lower) out.push_back({*a.lower, {Rule::Anchor, a.source}});
    }
    if (const auto* below = lookup(g, n - 1, k, d); below && n - 1 >= d) {
        out.push_back({below->lo + 1, {Rule::NRecursion, ""}});
    }
    if (const auto* left = lookup(g, n, k - 1, d)) {
        out.push_back({left->lo + 1, {Rule::KRecursionLo, ""}});
    }
    if (d == 1) {
        if (const auto* right = lookup(g, n, k + 1, d)) {
            out.push_back({right->lo - 2, {Rule::KRecursionHi, ""}});
        }
    }
    return out;
}

std::vector<Candidate> upper_candidates(const Grid& g, const std::vector<Anchor>& anchors, int n, int k, int d) {
    std::vector<Candidate> out;
    if (k >= 2) {
        out.push_back({lemma31_upper(n, k, d), {Rule::Lemma31, ""}});
    } else {
        out.push_back({jamison_value(n, d), {Rule::Jamison, ""}});
    }
    if (auto v = exact_thm_a(n, k, d)) out.push_back({*v, {Rule::ThmA, ""}});
    out.push_back({g_smax_formula(n, k, d), {Rule::Construction, "SMax"}});
    if (d == 1 && n == k && k >= 4) out.push_back({3 * std::int64_t{k} - 4, {Rule::Construction, "Diagonal"}});
    if (d >= 2) {
        if (const auto* inner = lookup(g, n - d + 1, k, 1)) {
            const std::int64_t pad = 2 * std::int64_t{k} * ((std::int64_t{1} << (d - 1)) - 1);
            out.push_back({inner->hi + pad, {Rule::Construction, "ReduceD"}});
        }
    }
    for (const auto& a : anchors) {
        if (a.n == n && a.k == k && a.d == d && a.upper) out.push_back({*a.upper, {Rule::Anchor, a.source}});
    }
    if (const auto* above = lookup(g, n + 1, k, d)) {
        out.push_back({above->hi - 1, {Rule::NRecursion, ""}});
    }
    if (const auto* right = lookup(g, n, k + 1, d)) {
        out.push_back({right->hi - 1, {Rule::KRecursionLo, ""}});
    }
    if (d == 1) {
        if (const auto* left = lookup(g, n, k - 1, d)) {
            out.push_back({left->hi + 2, {Rule::KRecursionHi, ""}});
        }
    }
    return out;
}

void validate(const Rectangle& r) {
    if (r.d_min < 1 || r.d_max < r.d_min || r.k_min < 1 || r.k_max < r.k_min || r.n_max < r.n_min || r.n_max > 62) {
        throw std::invalid_argument("propagate: malformed rectangle");
    }
}

int run_fixpoint(Grid& grid, const std::vector<Anchor>& anchors) {
    int passes = 0;
    for (bool changed = true; changed;) {
        changed = false;
        ++passes;
        for (auto& [key, e] : grid) {
            for (const auto& c : lower_candidates(grid, anchors, e.n, e.k, e.d)) {
                if (c.value > e.lo) {
                    e.lo = c.value;
                    changed = true;
                }
            }
            for (const auto& c : upper_candidates(grid, anchors, e.n, e.k, e.d)) {
                if (c.value < e.hi) {
                    e.hi = c.value;
                    changed = true;
                }
            }
            if (e.lo > e.hi) {
                std::ostringstream os;
                os << "contradiction at f(" << e.n << "," << e.k << "," << e.d << "): lo " << e.lo << " > hi " << e.hi;
                throw ContradictionError(os.str());
            }
        }
    }
    for (auto& [key, e] : grid) {
        e.lo_provenance.clear();
        e.hi_provenance.clear();
        for (const auto& c : lower_candidates(grid, anchors, e.n, e.k, e.d)) {
            if (c.value == e.lo) e.lo_provenance.push_back(c.why);
        }
        for (const auto& c : upper_candidates(grid, anchors, e.n, e.k, e.d)) {
            if (c.value == e.hi) e.hi_provenance.push_back(c.why);
        }
    }
    return passes;
}

} // namespace

std::string Provenance::to_string() const {
    static const char* names[] = {"DoubleCount", "ThmA",         "ThmB",         "ThmC",         "Jamison",  "Lemma31",
                                  "NRecursion",  "KRecursionLo", "KRecursionHi", "Construction", "Anchor"};
    std::string s = names[static_cast<int>(rule)];
    if (!detail.empty()) s += "(" + detail + ")";
    return s;
}

bool BoundEntry::attains_general_upper() const {
    return exact() && k >= 2 && lo == lemma31_upper(n, k, d);
}

bool BoundEntry::lo_has(Rule r) const {
    return std::any_of(lo_provenance.begin(), lo_provenance.end(), [r](const Provenance& p) { return p.rule == r; });
}

bool BoundEntry::hi_has(Rule r) const {
    return std::any_of(hi_provenance.begin(), hi_provenance.end(), [r](const Provenance& p) { return p.rule == r; });
}

const BoundEntry* BoundLedger::find(int n, int k, int d) const { return lookup(grid_, n, k, d); }

const BoundEntry& BoundLedger::at(int n, int k, int d) const {
    if (const auto* e = find(n, k, d)) return *e;
    throw std::out_of_range("ledger has no cell f(" + std::to_string(n) + "," + std::to_string(k) + "," +
                            std::to_string(d) + ")");
}

std::vector<BoundEntry> BoundLedger::cells() const {
    std::vector<BoundEntry> out;
    for (const auto& [key, e] : grid_) {
        if (e.d >= rect_.d_min && e.d <= rect_.d_max && e.n >= rect_.n_min && e.n <= rect_.n_max && e.k >= rect_.k_min &&
            e.k <= rect_.k_max) {
            out.push_back(e);
        }
    }
    return out;
}

BoundLedger propagate(const Rectangle& rect, const std::vector<Anchor>& anchors) {
    validate(rect);
    int n_top = rect.n_max;
    int k_top = rect.k_max;
    for (const auto& a : anchors) {
        if (a.d < 1 || a.n < a.d || a.k < 1 || a.n > 62) {
            throw std::invalid_argument("propagate: anchor with invalid parameters");
        }
        if (a.lower && a.upper && *a.lower > *a.upper) {
            throw ContradictionError("anchor " + a.source + " has lower > upper");
        }
        n_top = std::max(n_top, a.n);
        k_top = std::max(k_top, a.k);
    }
    BoundLedger ledger;
    ledger.rect_ = rect;
    ledger.anchors_ = anchors;
    auto add_layer = [&](int d) {
        for (int n = d; n <= n_top; ++n) {
            for (int k = 1; k <= k_top; ++k) {
                ledger.grid_.emplace(Key{d, n, k}, BoundEntry{n, k, d, -kInf, kInf, {}, {}});
            }
        }
    };
    if (rect.d_max >= 2) add_layer(1);
    for (int d = rect.d_min; d <= rect.d_max; ++d) add_layer(d);
    for (const auto& a : anchors) {
        if (!ledger.grid_.count({a.d, a.n, a.k})) add_layer(a.d);
    }
    ledger.passes_ = run_fixpoint(ledger.grid_, ledger.anchors_);
    return ledger;
}

BoundLedger propagate(const BoundLedger& ledger) {
    BoundLedger out = ledger;
    out.passes_ = run_fixpoint(out.grid_, out.anchors_);
    return out;
}

std::string N0Report::to_string() const {
    std::ostringstream os;
    os << "n0(" << k << ") ";
    if (determined) {
        os << "= " << lower;
    } else if (upper) {
        os << "in [" << lower << ", " << *upper << "]";
    } else {
        os << ">= " << lower;
    }
    return os.str();
}

N0Report n0_report(int k, const BoundLedger& ledger) {
    if (k < 2) throw std::invalid_argument("n0_report: requires k >= 2");
    N0Report r;
    r.k = k;
    std::optional<int> loose;
    std::optional<int> tight;
    for (int n = 1;; ++n) {
        const BoundEntry* e = ledger.find(n, k, 1);
        if (!e) break;
        const std::int64_t general = n + 2 * std::int64_t{k} - 3;
        if (e->hi < general) loose = n;
        if (!tight && e->exact() && e->lo == general) tight = n;
    }
    r.lower = loose ? *loose + 1 : 1;
    r.upper = tight;
    r.determined = tight && *tight == r.lower;
    return r;
}

std::string cell_text(const BoundEntry& e) {
    if (!e.exact()) return std::to_string(e.lo) + "-" + std::to_string(e.hi);
    return std::to_string(e.lo) + (e.attains_general_upper() ? "*" : "");
}

std::string render_table(const BoundLedger& ledger, int n_min, int n_max, int k_min, int k_max, int d,
                         TableFormat format) {
    std::ostringstream os;
    switch (format) {
    case TableFormat::Markdown: {
        os << "| n\\k |";
        for (int k = k_min; k <= k_max; ++k) os << ' ' << k << " |";
        os << "\n|---|";
        for (int k = k_min; k <= k_max; ++k) os << "---|";
        os << '\n';
        for (int n = n_min; n <= n_max; ++n) {
            os << "| " << n << " |";
            for (int k = k_min; k <= k_max; ++k) os << ' ' << cell_text(ledger.at(n, k, d)) << " |";
            os << '\n';
        }
        break;
    }
    case TableFormat::Csv: {
        os << "n,k,d,lo,hi,exact,attains_upper,lo_provenance,hi_provenance\n";
        for (int n = n_min; n <= n_max; ++n) {
            for (int k = k_min; k <= k_max; ++k) {
                const BoundEntry& e = ledger.at(n, k, d);
                auto join = [](const std::vector<Provenance>& ps) {
                    std::string s;
                    for (const auto& p : ps) s += (s.empty() ? "" : ";") + p.to_string();
                    return s;
                };
                os << n << ',' << k << ',' << d << ',' << e.lo << ',' << e.hi << ',' << (e.exact() ? 1 : 0) << ','
                   << (e.attains_general_upper() ? 1 : 0) << ',' << join(e.lo_provenance) << ','
                   << join(e.hi_provenance) << '\n';
            }
        }
        break;
    }
    case TableFormat::Json: {
        nlohmann::ordered_json doc;
        doc["version"] = 1;
        doc["d"] = d;
        auto cells = nlohmann::ordered_json::array();
        for (int n = n_min; n <= n_max; ++n) {
            for (int k = k_min; k <= k_max; ++k) {
                const BoundEntry& e = ledger.at(n, k, d);
                nlohmann::ordered_json c;
                c["n"] = n;
                c["k"] = k;
                c["lo"] = e.lo;
                c["hi"] = e.hi;
                c["exact"] = e.exact();
                c["attains_upper"] = e.attains_general_upper();
                auto prov = [](const std::vector<Provenance>& ps) {
                    auto a = nlohmann::ordered_json::array();
                    for (const auto& p : ps) a.push_back(p.to_string());
                    return a;
                };
                c["lo_provenance"] = prov(e.lo_provenance);
                c["hi_provenance"] = prov(e.hi_provenance);
                cells.push_back(std::move(c));
            }
        }
        doc["cells"] = std::move(cells);
        os << doc.dump(2) << '\n';
        break;
    }
    }
    return os.str();
}

} // namespace affcover
