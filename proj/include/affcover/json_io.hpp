// JSON documents exchanged by the command-line tool. Every top-level document
// carries "version": 1. Masks are strings: "0x.." for normals and code rows,
// "0b.." (bit i = rhs of normal i, printed most significant first) for rhs.

#pragma once

#include "affcover/codes.hpp"
#include "affcover/cover.hpp"
#include "affcover/ledger.hpp"
#include "affcover/solver.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace affcover {

using Json = nlohmann::ordered_json;

inline constexpr int kJsonVersion = 1;

class JsonFormatError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Accepts "0x..", "0b.." or decimal strings, and plain JSON integers.
Mask parse_mask(const Json& j);
std::string hex_mask(Mask m);
std::string bin_mask(Mask m, int width);

Json to_json(const AffineSubspace& s);
AffineSubspace subspace_from_json(const Json& j);

Json to_json(const ConstructionTag& t);
Json to_json(const CoverReport& r);
CoverReport report_from_json(const Json& j);

/// Cover document; the report is embedded when given.
Json to_json(const Cover& c, const CoverReport* report = nullptr);
Cover cover_from_json(const Json& j);

Json to_json(const LinearCode& code);
LinearCode code_from_json(const Json& j);

Json to_json(const Anchor& a);
/// Accepts an array of anchors or {"anchors": [...]}.
std::vector<Anchor> anchors_from_json(const Json& j);

Json to_json(const BoundEntry& e);
Json to_json(const SolveResult& r);
Json to_json(const DecideResult& r);

/// Parses text, rethrowing syntax errors as JsonFormatError.
Json parse_json(const std::string& text);

} // namespace affcover
