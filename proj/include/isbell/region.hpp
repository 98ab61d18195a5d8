#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "isbell/io.hpp"
#include "isbell/oracle.hpp"

namespace isbell {

/// Closed-form (or sampled) description of the completion's shape inside the
/// presheaf space, for external plotting.
struct RegionDescription {
  std::string kind;  // square | rectangle | three-point-complex | grid-sample
  std::map<std::string, ExtNonNeg> parameters;
  std::vector<std::vector<ExtNonNeg>> points;  // grid-sample mode only

  // Annotations for the closed forms.
  std::vector<std::vector<ExtNonNeg>> tight_span_endpoints;  // square only
  std::vector<std::string> order;  // three-point role order a', b', c'
  std::map<std::string, std::vector<ExtNonNeg>> vertices;
};

/// Closed forms for two-point spaces and classical three-point spaces,
/// cross-validated against the brute-force fixed set on a sampling grid;
/// anything else falls back to a membership-filtered grid sample (with a
/// diagnostic on `warnings` when that happens because the shape is
/// unsupported).  `debug`, when set, receives the change-of-variable branch
/// conditions for the three-point complex.
RegionDescription export_region(const SpaceRef& space,
                                std::optional<Grid> sample = std::nullopt,
                                double tol = kDefaultTol,
                                std::ostream* warnings = nullptr,
                                std::ostream* debug = nullptr);

/// Closed-form membership of a presheaf-space point in the completion of a
/// classical three-point space with sorted distances r >= s >= t; the four
/// branches of the polyhedral description.
bool three_point_complex_member(ExtNonNeg alpha, ExtNonNeg beta,
                                ExtNonNeg gamma, ExtNonNeg r, ExtNonNeg s,
                                ExtNonNeg t, double tol = kDefaultTol);

Json to_json(const RegionDescription& region);

}  // namespace isbell
