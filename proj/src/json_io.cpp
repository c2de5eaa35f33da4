#include "affcover/json_io.hpp"

#include <sstream>

namespace affcover {

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) {
        throw JsonFormatError(std::string("missing field \"") + key + "\"");
    }
    return j.at(key);
}

int int_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_number_integer()) throw JsonFormatError(std::string("field \"") + key + "\" must be an integer");
    return v.get<int>();
}

void check_version(const Json& j) {
    if (j.is_object() && j.contains("version") && j.at("version") != kJsonVersion) {
        throw JsonFormatError("unsupported document version " + j.at("version").dump());
    }
}

std::uint64_t u64_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_number_unsigned() && !v.is_number_integer()) {
        throw JsonFormatError(std::string("field \"") + key + "\" must be an integer");
    }
    return v.get<std::uint64_t>();
}

Json provenance_list(const std::vector<Provenance>& ps) {
    Json a = Json::array();
    for (const auto& p : ps) a.push_back(p.to_string());
    return a;
}

} // namespace

Mask parse_mask(const Json& j) {
    if (j.is_number_unsigned() || j.is_number_integer()) {
        const auto v = j.get<std::int64_t>();
        if (v < 0 || v > static_cast<std::int64_t>(full_mask(32))) throw JsonFormatError("mask out of range");
        return static_cast<Mask>(v);
    }
    if (!j.is_string()) throw JsonFormatError("mask must be a string or integer");
    const std::string s = j.get<std::string>();
    int base = 10;
    std::size_t start = 0;
    if (s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) {
        base = 16;
        start = 2;
    } else if (s.size() > 2 && s[0] == '0' && (s[1] == 'b' || s[1] == 'B')) {
        base = 2;
        start = 2;
    }
    const std::string digits = s.substr(start);
    if (digits.empty()) throw JsonFormatError("empty mask \"" + s + "\"");
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(digits, &used, base);
    } catch (const std::exception&) {
        throw JsonFormatError("bad mask \"" + s + "\"");
    }
    if (used != digits.size() || v > full_mask(32)) throw JsonFormatError("bad mask \"" + s + "\"");
    return static_cast<Mask>(v);
}

std::string hex_mask(Mask m) {
    std::ostringstream os;
    os << "0x" << std::hex << m;
    return os.str();
}

std::string bin_mask(Mask m, int width) {
    std::string s = "0b";
    for (int i = std::max(width, 1) - 1; i >= 0; --i) s += ((m >> i) & 1) ? '1' : '0';
    return s;
}

Json to_json(const AffineSubspace& s) {
    Json j;
    Json normals = Json::array();
    for (const Mask u : s.normals()) normals.push_back(hex_mask(u));
    j["normals"] = normals;
    j["rhs"] = bin_mask(s.rhs(), s.codim());
    j["n"] = s.dim();
    return j;
}

AffineSubspace subspace_from_json(const Json& j) {
    const int n = int_field(j, "n");
    check_dim(n);
    const Json& arr = field(j, "normals");
    if (!arr.is_array() || arr.empty()) throw JsonFormatError("\"normals\" must be a nonempty array");
    std::vector<Mask> normals;
    for (const auto& u : arr) {
        const Mask m = parse_mask(u);
        if (m & ~full_mask(n)) throw JsonFormatError("normal " + hex_mask(m) + " has bits beyond n");
        normals.push_back(m);
    }
    const Mask rhs = parse_mask(field(j, "rhs"));
    if (rhs >> normals.size()) throw JsonFormatError("rhs has more bits than there are normals");
    try {
        return AffineSubspace::from_constraints(n, normals, rhs);
    } catch (const std::invalid_argument& e) {
        throw JsonFormatError(std::string("subspace: ") + e.what());
    }
}

Json to_json(const ConstructionTag& t) {
    Json j;
    j["family"] = to_string(t.family);
    j["n"] = t.n;
    j["k"] = t.k;
    j["d"] = t.d;
    if (t.s) j["s"] = *t.s;
    return j;
}

Json to_json(const CoverReport& r) {
    Json j;
    j["n"] = r.n;
    j["d"] = r.d;
    j["k"] = r.k;
    j["size"] = r.size;
    j["origin_count"] = r.origin_count;
    j["min_nonzero"] = r.min_nonzero;
    j["max_nonzero"] = r.max_nonzero;
    j["total_incidences"] = r.total_incidences;
    std::ostringstream cs;
    cs << "0x" << std::hex << r.profile_checksum;
    j["profile_checksum"] = cs.str();
    j["is_cover"] = r.is_cover();
    return j;
}

CoverReport report_from_json(const Json& j) {
    CoverReport r;
    r.n = int_field(j, "n");
    r.d = int_field(j, "d");
    r.k = int_field(j, "k");
    r.size = u64_field(j, "size");
    r.origin_count = u64_field(j, "origin_count");
    r.min_nonzero = u64_field(j, "min_nonzero");
    r.max_nonzero = u64_field(j, "max_nonzero");
    r.total_incidences = u64_field(j, "total_incidences");
    const Json& cs = field(j, "profile_checksum");
    if (!cs.is_string()) throw JsonFormatError("profile_checksum must be a hex string");
    try {
        r.profile_checksum = std::stoull(cs.get<std::string>(), nullptr, 16);
    } catch (const std::exception&) {
        throw JsonFormatError("bad profile_checksum");
    }
    return r;
}

Json to_json(const Cover& c, const CoverReport* report) {
    Json j;
    j["version"] = kJsonVersion;
    j["n"] = c.dim();
    j["d"] = c.codim();
    j["size"] = c.size();
    Json entries = Json::array();
    for (const auto& e : c.entries()) {
        Json x;
        x["subspace"] = to_json(e.subspace);
        x["mult"] = e.mult;
        entries.push_back(x);
    }
    j["entries"] = entries;
    if (c.tag()) j["construction"] = to_json(*c.tag());
    if (report) j["report"] = to_json(*report);
    return j;
}

Cover cover_from_json(const Json& j) {
    check_version(j);
    const int n = int_field(j, "n");
    const int d = int_field(j, "d");
    check_dim(n);
    if (d < 1 || d > n) throw JsonFormatError("cover: need 1 <= d <= n");
    const Json& arr = field(j, "entries");
    if (!arr.is_array()) throw JsonFormatError("\"entries\" must be an array");
    std::vector<CoverEntry> entries;
    for (const auto& e : arr) {
        AffineSubspace s = subspace_from_json(field(e, "subspace"));
        const std::uint64_t mult = e.contains("mult") ? u64_field(e, "mult") : 1;
        if (s.dim() != n || s.codim() != d) throw JsonFormatError("cover entry " + s.to_string() + " has the wrong (n, d)");
        if (mult == 0 || mult > full_mask(32)) throw JsonFormatError("multiplicity out of range");
        entries.push_back({std::move(s), static_cast<std::uint32_t>(mult)});
    }
    Cover c = Cover::from_entries(n, d, std::move(entries));
    if (j.contains("size") && u64_field(j, "size") != c.size()) {
        throw JsonFormatError("\"size\" disagrees with the entries");
    }
    if (j.contains("construction")) {
        const Json& t = j.at("construction");
        const auto fam = family_from_string(field(t, "family").get<std::string>());
        if (!fam) throw JsonFormatError("unknown construction family");
        ConstructionTag tag{*fam, int_field(t, "n"), int_field(t, "k"), int_field(t, "d"), std::nullopt};
        if (t.contains("s")) tag.s = int_field(t, "s");
        c.with_tag(tag);
    }
    return c;
}

Json to_json(const LinearCode& code) {
    Json j;
    j["version"] = kJsonVersion;
    j["dim"] = code.dim();
    j["len"] = code.length();
    Json rows = Json::array();
    for (const Mask r : code.rows()) rows.push_back(hex_mask(r));
    j["rows"] = rows;
    return j;
}

LinearCode code_from_json(const Json& j) {
    check_version(j);
    const int dim = int_field(j, "dim");
    const Json& arr = field(j, "rows");
    if (!arr.is_array()) throw JsonFormatError("\"rows\" must be an array");
    std::vector<Mask> rows;
    for (const auto& r : arr) rows.push_back(parse_mask(r));
    if (j.contains("len") && int_field(j, "len") != static_cast<int>(rows.size())) {
        throw JsonFormatError("\"len\" disagrees with the number of rows");
    }
    try {
        return LinearCode(dim, std::move(rows));
    } catch (const std::invalid_argument& e) {
        throw JsonFormatError(std::string("code: ") + e.what());
    }
}

Json to_json(const Anchor& a) {
    Json j;
    j["n"] = a.n;
    j["k"] = a.k;
    j["d"] = a.d;
    if (a.lower && a.upper && *a.lower == *a.upper) {
        j["value"] = *a.lower;
    } else {
        if (a.lower) j["lower"] = *a.lower;
        if (a.upper) j["upper"] = *a.upper;
    }
    j["source"] = a.source;
    return j;
}

std::vector<Anchor> anchors_from_json(const Json& j) {
    const Json& arr = j.is_object() ? field(j, "anchors") : j;
    if (!arr.is_array()) throw JsonFormatError("anchors must be an array");
    std::vector<Anchor> out;
    for (const auto& x : arr) {
        Anchor a;
        a.n = int_field(x, "n");
        a.k = int_field(x, "k");
        a.d = x.contains("d") ? int_field(x, "d") : 1;
        if (x.contains("value")) {
            a.lower = a.upper = x.at("value").get<std::int64_t>();
        }
        if (x.contains("lower")) a.lower = x.at("lower").get<std::int64_t>();
        if (x.contains("upper")) a.upper = x.at("upper").get<std::int64_t>();
        if (!a.lower && !a.upper) throw JsonFormatError("anchor needs value, lower or upper");
        a.source = x.contains("source") ? x.at("source").get<std::string>() : std::string("anchor");
        out.push_back(std::move(a));
    }
    return out;
}

Json to_json(const BoundEntry& e) {
    Json j;
    j["n"] = e.n;
    j["k"] = e.k;
    j["d"] = e.d;
    j["lo"] = e.lo;
    j["hi"] = e.hi;
    j["exact"] = e.exact();
    j["star"] = e.attains_general_upper();
    j["lo_provenance"] = provenance_list(e.lo_provenance);
    j["hi_provenance"] = provenance_list(e.hi_provenance);
    return j;
}

Json to_json(const SolveResult& r) {
    Json j;
    j["version"] = kJsonVersion;
    j["status"] = to_string(r.status);
    if (r.certificate) j["value"] = r.value;
    j["nodes"] = r.nodes;
    j["proof_lo"] = r.proof_lo;
    j["assumptions"] = r.assumptions;
    j["reductions"] = r.reductions;
    if (!r.seed.empty()) j["seed"] = r.seed;
    if (r.certificate) j["certificate"] = to_json(*r.certificate);
    return j;
}

Json to_json(const DecideResult& r) {
    Json j;
    j["version"] = kJsonVersion;
    j["decision"] = to_string(r.decision);
    j["nodes"] = r.nodes;
    j["assumptions"] = r.assumptions;
    if (r.certificate) j["certificate"] = to_json(*r.certificate);
    return j;
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw JsonFormatError(std::string("invalid JSON: ") + e.what());
    }
}

} // namespace affcover
