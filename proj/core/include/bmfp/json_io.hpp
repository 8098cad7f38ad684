#pragma once

#include <nlohmann/json.hpp>

#include <map>
#include <string>
#include <vector>

#include "bmfp/certify.hpp"
#include "bmfp/demo.hpp"
#include "bmfp/picard.hpp"
#include "bmfp/space.hpp"

namespace bmfp {

/// Insertion-ordered JSON so that serialized output is stable byte-for-byte.
using Json = nlohmann::ordered_json;

/// Reads and parses a file; parse errors carry the byte position in what().
Json load_json_file(const std::string& path);

/// A numeric field that may be written as a number or as the string
/// "sqrt(<number>)" (for irrational constants like sqrt(3)).
double parse_real(const Json& value, const std::string& field);

/// Space file schema:
///   {"points": [string...], "distances": [[number...]...], "coefficient": number}
/// Structural problems (missing fields, ragged rows, non-numbers) throw
/// std::invalid_argument; axiom violations throw SpaceBuildError.
struct SpaceInput {
    std::vector<std::string> points;
    DistanceMatrix distances;
    double coefficient = 1.0;
};

SpaceInput parse_space_input(const Json& j);
FiniteBMetricSpace space_from_json(const Json& j, const Tolerance& tol = {});
Json space_to_json(const FiniteBMetricSpace& space);

/// Map file schema: {"table": {point: image, ...}}.
std::map<std::string, std::string> map_table_from_json(const Json& j);
Json map_table_to_json(const std::map<std::string, std::string>& table);

/// Suite file schema:
///   {"theta": {"kind": "affine_plus_one"|"exponential"},
///    "fc":    {"kind": "ratio", "c": number},          // c optional, default 1
///    "j":     {"kind": "scaled_ratio", "k": number}}   // k accepts "sqrt(x)"
FunctionSuite suite_from_json(const Json& j);
Json suite_to_json(const FunctionSuite& suite);

Json to_json(const ValidationReport& report, const std::vector<std::string>* labels = nullptr);
Json to_json(const PairRecord& record);
Json to_json(const ContractionCertificate& certificate);
Json to_json(const Trajectory& trajectory);
Json to_json(const FixedPointReport& report);
Json to_json(const ConsequenceReport& report);
Json to_json(const MembershipRuling& ruling);
Json to_json(const ContinuityRuling& ruling);
Json to_json(const DemoReport& report);

}  // namespace bmfp
