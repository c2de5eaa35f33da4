#include "affcover/bounds.hpp"
#include "affcover/ledger.hpp"

#include <doctest.h>
#include <json.hpp>

#include <fstream>
#include <sstream>

using namespace affcover;

namespace {

std::string slurp(const std::string& name) {
    std::ifstream in(std::string(AFFCOVER_TEST_DATA) + "/" + name);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// Published red cells plus the Golay upper bound.
std::vector<Anchor> table_anchors() {
    std::vector<Anchor> a;
    for (const auto& [n, k, v] : std::vector<std::tuple<int, int, int>>{
             {5, 4, 10}, {6, 5, 13}, {6, 8, 18}, {6, 9, 20}, {6, 10, 22}, {6, 11, 23}, {7, 6, 16}, {8, 7, 19}}) {
        a.push_back(Anchor::exact(n, k, 1, v, "search"));
    }
    a.push_back(Anchor::upper_bound(12, 8, 1, 24, "golay"));
    return a;
}

const BoundLedger& full_ledger() {
    static const BoundLedger ledger = propagate(Rectangle{3, 12, 3, 16, 1, 1}, table_anchors());
    return ledger;
}

} // namespace

TEST_CASE("n = 3 is closed by the formula regime alone") {
    const BoundLedger l = propagate(Rectangle{3, 3, 1, 16, 1, 1}, {});
    for (int k = 2; k <= 16; ++k) {
        const BoundEntry& e = l.at(3, k);
        CHECK(e.exact());
        CHECK(e.lo == 2 * k - k / 4);
        CHECK(e.lo_has(Rule::ThmA));
    }
    CHECK(l.at(3, 1).lo == 3);
}

TEST_CASE("both golden tables are reproduced") {
    const BoundLedger& l = full_ledger();
    CHECK(render_table(l, 3, 6, 3, 16, 1, TableFormat::Markdown) == slurp("table1_golden.md"));
    CHECK(render_table(l, 6, 12, 3, 10, 1, TableFormat::Markdown) == slurp("table2_golden.md"));
}

TEST_CASE("k = 8 column from one search value and the Golay cover") {
    const BoundLedger& l = full_ledger();
    for (int n = 6; n <= 12; ++n) {
        CHECK(l.at(n, 8).exact());
        CHECK(l.at(n, 8).lo == n + 12);
        CHECK_FALSE(l.at(n, 8).attains_general_upper());
    }
    CHECK(l.at(12, 8).hi_has(Rule::Anchor));
}

TEST_CASE("thresholds n0(k)") {
    const BoundLedger& l = full_ledger();
    const N0Report r4 = n0_report(4, l);
    CHECK(r4.determined);
    CHECK(r4.lower == 5);
    const N0Report r5 = n0_report(5, l);
    CHECK(r5.determined);
    CHECK(r5.lower == 6);
    const N0Report r8 = n0_report(8, l);
    CHECK_FALSE(r8.determined);
    CHECK(r8.lower == 13);
    CHECK_FALSE(r8.upper.has_value());
    CHECK_THROWS(n0_report(1, l));
}

TEST_CASE("k = 3 for n = 9..12 comes from the origin argument") {
    const BoundLedger& l = full_ledger();
    for (int n = 9; n <= 12; ++n) {
        CHECK(l.at(n, 3).lo == n + 3);
        CHECK(l.at(n, 3).lo_has(Rule::ThmB));
    }
}

TEST_CASE("fixpoint is closed under every rule") {
    const BoundLedger& l = full_ledger();
    for (int n = 3; n <= 12; ++n) {
        for (int k = 3; k <= 16; ++k) {
            const BoundEntry& e = l.at(n, k);
            CHECK(e.lo <= e.hi);
            CHECK(e.lo >= lb_double_count(n, k, 1));
            CHECK(e.hi <= g_smax_formula(n, k, 1));
            CHECK(e.hi <= n + 2 * k - 3);
            if (n > 3) {
                const BoundEntry& below = l.at(n - 1, k);
                CHECK(e.lo >= below.lo + 1);
                CHECK(below.hi <= e.hi - 1);
            }
            if (k > 3) {
                const BoundEntry& left = l.at(n, k - 1);
                CHECK(e.lo >= left.lo + 1);
                CHECK(e.hi <= left.hi + 2);
                CHECK(e.lo <= left.hi + 2);
            }
        }
    }
}

TEST_CASE("propagation is idempotent") {
    const BoundLedger& l = full_ledger();
    const BoundLedger again = propagate(l);
    const auto a = l.cells();
    const auto b = again.cells();
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].lo == b[i].lo);
        CHECK(a[i].hi == b[i].hi);
    }
    CHECK(a.size() == 10 * 14);
}

TEST_CASE("a contradicting anchor is reported") {
    CHECK_THROWS_AS(propagate(Rectangle{3, 4, 3, 4, 1, 1}, {Anchor::exact(3, 3, 1, 5, "bad")}), ContradictionError);
    CHECK_THROWS_AS(propagate(Rectangle{3, 6, 3, 8, 1, 1}, {Anchor::exact(6, 8, 1, 30, "bad")}), ContradictionError);
    CHECK_NOTHROW(propagate(Rectangle{3, 4, 3, 4, 1, 1}, {Anchor::exact(3, 3, 1, 6, "ok")}));
}

TEST_CASE("anchors outside the rectangle still propagate inward") {
    const BoundLedger l = propagate(Rectangle{6, 6, 8, 8, 1, 1}, {Anchor::upper_bound(12, 8, 1, 24, "golay")});
    CHECK(l.at(6, 8).hi == 18);
    CHECK(l.cells().size() == 1);
}

TEST_CASE("csv and json renderings") {
    const BoundLedger& l = full_ledger();
    const std::string csv = render_table(l, 6, 7, 3, 5, 1, TableFormat::Csv);
    std::istringstream lines(csv);
    std::string line;
    int rows = 0;
    std::getline(lines, line);
    CHECK(line.rfind("n,k,d,lo,hi", 0) == 0);
    while (std::getline(lines, line)) ++rows;
    CHECK(rows == 6);
    CHECK(csv.find("6,5,1,13,13") != std::string::npos);

    const auto doc = nlohmann::json::parse(render_table(l, 6, 7, 3, 5, 1, TableFormat::Json));
    CHECK(doc["version"] == 1);
    CHECK(doc["cells"].size() == 6);
}

TEST_CASE("cell text") {
    BoundEntry e{5, 3, 1, 8, 8, {}, {}};
    CHECK(cell_text(e) == "8*");
    e.hi = 9;
    CHECK(cell_text(e) == "8-9");
    BoundEntry f{5, 5, 1, 11, 11, {}, {}};
    CHECK(cell_text(f) == "11");
}
