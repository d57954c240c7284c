#pragma once

// JSON file formats. Big integers and rationals are decimal strings.
//
//   algebra:  {"dim": N, "basis": [...], "brackets": [{"i": "a", "j": "b",
//              "terms": [{"k": "c", "c": "1"}]}]}
//   grading:  {"d": 2, "degrees": {"e1": [1, 0], ...}}
//   poly:     {"d": 1, "terms": [{"e": [4], "c": "-1"}, ...]}
//   factors:  {"factors": [{"e": [2], "m": 156}, ...]}

#include <filesystem>
#include <string>

#include "json.hpp"

#include "gnl/bigpoly.hpp"
#include "gnl/cohomology.hpp"
#include "gnl/family.hpp"
#include "gnl/grading.hpp"
#include "gnl/liealg.hpp"
#include "gnl/verify.hpp"

namespace gnl::io {

using Json = nlohmann::ordered_json;

Rational parse_rational(const std::string& s);
BigInt parse_bigint(const std::string& s);

Json to_json(const StructureConstants& L);
StructureConstants algebra_from_json(const Json& j);

Json to_json(const StructureConstants& L, const Grading& G);
Grading grading_from_json(const Json& j, const StructureConstants& L);

Json to_json(const MultiPoly& p);
MultiPoly poly_from_json(const Json& j);

Json factors_to_json(const FactorList& f);
/// Returns the factors and their common variable count.
std::pair<FactorList, std::size_t> factors_from_json(const Json& j);

Json to_json(const family::Dims& d);
Json to_json(const BettiVector& b);
Json to_json(const verify::Verdict& v, bool with_timing = true);
Json to_json(const verify::Report& r, bool with_timing = true);
verify::Report report_from_json(const Json& j);

/// Parses a JSON file; InputError carries the path on failure.
Json read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const Json& j);

}  // namespace gnl::io
