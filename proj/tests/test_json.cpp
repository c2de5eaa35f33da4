#include "affcover/constructions.hpp"
#include "affcover/json_io.hpp"

#include <doctest.h>

#include <random>

using namespace affcover;

TEST_CASE("mask strings") {
    CHECK(parse_mask(Json("0x1f")) == 31);
    CHECK(parse_mask(Json("0b101")) == 5);
    CHECK(parse_mask(Json("12")) == 12);
    CHECK(parse_mask(Json(7)) == 7);
    CHECK(hex_mask(255) == "0xff");
    CHECK(bin_mask(5, 4) == "0b0101");
    for (Mask m : {0u, 1u, 0xabcu, 0xffffffu}) CHECK(parse_mask(Json(hex_mask(m))) == m);
    for (const char* bad : {"0x", "0xzz", "abc", "0b102", ""}) CHECK_THROWS_AS(parse_mask(Json(bad)), JsonFormatError);
    CHECK_THROWS_AS(parse_mask(Json(-1)), JsonFormatError);
    CHECK_THROWS_AS(parse_mask(Json(1.5)), JsonFormatError);
}

TEST_CASE("subspace round trip") {
    for (const auto& s : enumerate_subspaces(4, 2)) CHECK(subspace_from_json(to_json(s)) == s);
    const Json raw = Json::parse(R"({"normals": ["0x3", "0x1"], "rhs": "0b10", "n": 3})");
    const AffineSubspace s = subspace_from_json(raw);
    CHECK(s == AffineSubspace::from_constraints(3, {0x3, 0x1}, 0b10));
    CHECK_THROWS_AS(subspace_from_json(Json::parse(R"({"normals": ["0x8"], "rhs": "0b1", "n": 3})")), JsonFormatError);
    CHECK_THROWS_AS(subspace_from_json(Json::parse(R"({"normals": ["0x1", "0x1"], "rhs": "0b0", "n": 3})")), JsonFormatError);
    CHECK_THROWS_AS(subspace_from_json(Json::parse(R"({"normals": [], "rhs": "0b0", "n": 3})")), JsonFormatError);
    CHECK_THROWS_AS(subspace_from_json(Json::parse(R"({"normals": ["0x1"], "rhs": "0b11", "n": 3})")), JsonFormatError);
}

TEST_CASE("cover round trip is byte stable") {
    std::mt19937_64 rng(41);
    std::vector<Cover> covers{diagonal_cover(5), golay_cover(), smax_cover(5, 3, 2), lemma31_cover(6, 3, 2)};
    for (int t = 0; t < 10; ++t) covers.push_back(gv_random_cover(4 + t % 5, 2, rng(), 512));
    for (const Cover& c : covers) {
        const CoverReport r = verify(c, 2);
        const Json j = to_json(c, &r);
        const Cover back = cover_from_json(j);
        CHECK(back == c);
        CHECK(back.tag() == c.tag());
        CHECK(to_json(back, &r).dump() == j.dump());
        CHECK(cover_from_json(parse_json(j.dump(2))) == c);
        CHECK(report_from_json(j.at("report")) == r);
    }
}

TEST_CASE("cover documents are validated") {
    Json j = to_json(diagonal_cover(4));
    Json bad = j;
    bad["version"] = 2;
    CHECK_THROWS_AS(cover_from_json(bad), JsonFormatError);
    bad = j;
    bad.erase("entries");
    CHECK_THROWS_AS(cover_from_json(bad), JsonFormatError);
    bad = j;
    bad["size"] = 99;
    CHECK_THROWS_AS(cover_from_json(bad), JsonFormatError);
    bad = j;
    bad["d"] = 2;
    CHECK_THROWS_AS(cover_from_json(bad), JsonFormatError);
    bad = j;
    bad["entries"][0]["mult"] = 0;
    CHECK_THROWS_AS(cover_from_json(bad), JsonFormatError);
    bad = j;
    bad["construction"]["family"] = "Nope";
    CHECK_THROWS_AS(cover_from_json(bad), JsonFormatError);
    bad = j;
    bad["n"] = "four";
    CHECK_THROWS_AS(cover_from_json(bad), JsonFormatError);
    CHECK_THROWS_AS(parse_json("{\"version\": 1,"), JsonFormatError);

    // multiplicities merge and default to one
    const Json dup = Json::parse(R"({"version": 1, "n": 2, "d": 1, "entries": [
        {"subspace": {"normals": ["0x1"], "rhs": "0b1", "n": 2}},
        {"subspace": {"normals": ["0x1"], "rhs": "0b1", "n": 2}, "mult": 2}]})");
    const Cover c = cover_from_json(dup);
    CHECK(c.size() == 3);
    CHECK(c.entries().size() == 1);
}

TEST_CASE("code round trip") {
    const LinearCode g = golay_generator();
    const Json j = to_json(g);
    CHECK(j.at("dim") == 12);
    CHECK(j.at("len") == 24);
    CHECK(code_from_json(j) == g);
    Json bad = j;
    bad["len"] = 23;
    CHECK_THROWS_AS(code_from_json(bad), JsonFormatError);
    bad = j;
    bad["rows"][0] = "0x10000";
    CHECK_THROWS_AS(code_from_json(bad), JsonFormatError);
}

TEST_CASE("anchors") {
    const std::vector<Anchor> in{Anchor::exact(6, 8, 1, 18, "search"), Anchor::upper_bound(12, 8, 1, 24, "golay"),
                                 Anchor{5, 3, 1, 7, std::nullopt, "lower"}};
    Json arr = Json::array();
    for (const auto& a : in) arr.push_back(to_json(a));
    CHECK(arr[0].contains("value"));
    CHECK_FALSE(arr[1].contains("lower"));
    for (const Json& doc : {arr, Json{{"anchors", arr}}}) {
        const auto out = anchors_from_json(doc);
        REQUIRE(out.size() == in.size());
        for (std::size_t i = 0; i < in.size(); ++i) {
            CHECK(out[i].n == in[i].n);
            CHECK(out[i].k == in[i].k);
            CHECK(out[i].lower == in[i].lower);
            CHECK(out[i].upper == in[i].upper);
            CHECK(out[i].source == in[i].source);
        }
    }
    CHECK_THROWS_AS(anchors_from_json(Json::parse(R"([{"n": 3, "k": 3}])")), JsonFormatError);
    CHECK_THROWS_AS(anchors_from_json(Json::parse(R"({"cells": []})")), JsonFormatError);
}

TEST_CASE("solver results") {
    SearchProblem p;
    p.n = 3;
    p.k = 3;
    const SolveResult r = solve_min(p);
    const Json j = to_json(r);
    CHECK(j.at("status") == "Optimal");
    CHECK(j.at("value") == 6);
    CHECK(cover_from_json(j.at("certificate")) == *r.certificate);

    const Json d = to_json(decide(p, 5));
    CHECK(d.at("decision") == "No");
    CHECK_FALSE(d.contains("certificate"));
}
