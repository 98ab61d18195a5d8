#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "isbell/cocomplete.hpp"
#include "isbell/oracle.hpp"

namespace isbell {

using Json = nlohmann::json;

/// [0,inf] values serialize as JSON numbers, with the string "inf" for
/// infinity.
Json to_json(ExtNonNeg v);
ExtNonNeg extnn_from_json(const Json& j);

/// {"points": ["a", ...], "d": [[0, ...], ...]}
Json to_json(const Space& space);
Space space_from_json(const Json& j, double tol = kDefaultTol);

/// CSV alternative: header row of labels, then the square matrix.
Space space_from_csv(const std::string& text, double tol = kDefaultTol);

/// Reads .json or .csv by extension.
Space read_space_file(const std::filesystem::path& path,
                      double tol = kDefaultTol);

/// Functional values, ordered by the base space's labels.  Readers accept a
/// bare array or {"values": [...]}.
Json to_json(const Functional& f);
std::vector<ExtNonNeg> table_from_json(const Json& j);
Functional functional_from_json(const Json& j, const SpaceRef& base,
                                Role role = Role::raw,
                                double tol = kDefaultTol);

/// {"f": [...], "g": [...]}
Json to_json(const IsbellPoint& p);
IsbellPoint isbell_point_from_json(const Json& j, const SpaceRef& base,
                                   double tol = kDefaultTol);

/// {"shape": <space>, "J": ["x", ...], "W": [...]} with J naming points of
/// the target space.
Json to_json(const WeightedDiagram& d);
WeightedDiagram weighted_diagram_from_json(const Json& j, const SpaceRef& target,
                                           bool for_colimit,
                                           double tol = kDefaultTol);

Json to_json(const VerifyReport& report);

}  // namespace isbell
