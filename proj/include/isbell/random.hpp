#pragma once

#include <cstdint>
#include <random>

#include "isbell/cocomplete.hpp"

namespace isbell {

using Rng = std::mt19937_64;

/// Knobs for random space generation.  Distances are drawn as step
/// multiples in [step, max_steps*step] and closed under the triangle
/// inequality by a min-plus Floyd-Warshall pass, so dyadic steps keep every
/// derived quantity exact in doubles.
struct SpaceOptions {
  std::size_t points = 3;
  bool symmetric = false;
  double step = 0.25;
  int max_steps = 8;
  double infinity_prob = 0.0;  // chance a raw entry starts at inf
  double zero_prob = 0.0;      // chance a raw entry starts at 0
};

Space random_space(Rng& rng, const SpaceOptions& options);

/// A table of step multiples in [0, max_steps*step], optionally with inf
/// entries.
std::vector<ExtNonNeg> random_table(Rng& rng, std::size_t size, double step,
                                    int max_steps, double infinity_prob = 0.0);

/// Random presheaf built as a pointwise min of shifted distance-to
/// functionals (always valid, stays on dyadic grids).
Functional random_presheaf(Rng& rng, const SpaceRef& space, double step,
                           int max_steps);

/// Dual construction for copresheaves.
Functional random_copresheaf(Rng& rng, const SpaceRef& space, double step,
                             int max_steps);

/// Random point of the completion: the RL projection of a random raw table.
IsbellPoint random_completion_point(Rng& rng, const SpaceRef& space,
                                    double step, int max_steps);

/// A short map into `target` from a fresh `points`-sized source whose
/// distances dominate the image distances by construction.
ShortMap random_short_map(Rng& rng, SpaceRef target, std::size_t points,
                          double step, int max_steps);

/// Random weighted diagram of points of `target` (presheaf weighting when
/// `for_colimit`, copresheaf otherwise).
WeightedDiagram random_point_diagram(Rng& rng, SpaceRef target,
                                     std::size_t shape_points, double step,
                                     int max_steps, bool for_colimit = true);

}  // namespace isbell
