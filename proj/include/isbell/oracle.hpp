#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "isbell/cocomplete.hpp"
#include "isbell/tightspan.hpp"

namespace isbell {

inline constexpr std::size_t kDefaultBudget = 10'000'000;

/// Quantized value grid {0, step, 2*step, ..., bound} (plus inf when
/// flagged) used for exhaustive enumeration.  When the step divides every
/// finite distance, min/max/plus/monus of grid values stay on the grid, so
/// exact equality is sound.
struct Grid {
  double step = 0.25;
  ExtNonNeg bound = ExtNonNeg(1.0);
  bool include_infinity = false;

  std::vector<ExtNonNeg> values() const;
  std::size_t values_per_point() const { return values().size(); }

  /// Largest step dividing all finite distances when they are commensurable,
  /// min positive distance / 4 otherwise; bound defaults to the largest
  /// finite distance.  `refine` subdivides the step.
  static Grid commensurate(const Space& space,
                           std::optional<double> bound_override = std::nullopt,
                           int refine = 1);
};

/// Visits every table over the grid satisfying the role constraint, in
/// lexicographic order by point index.  Throws BudgetExceeded before
/// visiting anything when the raw count exceeds the budget.
void for_each_functional(
    const SpaceRef& space, const Grid& grid, Role role, std::size_t budget,
    const std::function<void(std::span<const ExtNonNeg>)>& visit);

std::vector<Functional> enumerate_functionals(
    const SpaceRef& space, const Grid& grid, Role role,
    std::size_t budget = kDefaultBudget);

/// All grid tables with RL(f) = f, exactly by default (tol = 0).
std::vector<Functional> brute_fixed_set(const SpaceRef& space,
                                        const Grid& grid,
                                        std::size_t budget = kDefaultBudget,
                                        double tol = 0.0);

/// All minimal triangular pairs over the grid, found by exhaustive
/// dominance comparison among all enumerated triangular pairs.
std::vector<TriangularPair> brute_minimal_pairs(
    const SpaceRef& space, const Grid& grid,
    std::size_t budget = kDefaultBudget);

struct VerifyConfig {
  std::optional<double> step;
  std::optional<double> bound;
  int trials = 200;
  std::uint64_t seed = 0;
  double tol = kDefaultTol;
  std::size_t budget = kDefaultBudget;
};

struct VerifyReport {
  std::string theorem;
  bool passed = false;
  long checks = 0;
  std::string detail;  // first counterexample, or a summary note
};

/// Runs the registered brute-force check for one theorem against a space.
/// Throws UnknownTheorem for unregistered names.
VerifyReport verify_theorem(std::string_view name, const SpaceRef& space,
                            const VerifyConfig& config = {});

/// Canonical identifiers accepted by verify_theorem.
std::vector<std::string> registered_theorems();

}  // namespace isbell
