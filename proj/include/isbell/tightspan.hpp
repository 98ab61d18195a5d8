#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "isbell/completion.hpp"

namespace isbell {

/// f(x) + f(y) >= d(x,y) for all pairs (classical base only; x = y forces
/// f >= 0, which the value type already guarantees).
bool in_aim(const Functional& f, double tol = kDefaultTol);

/// The tight-span condition: f(x) = sup_y (d(x,y) (-) f(y)) at every x.
bool is_tight(const Functional& f, double tol = kDefaultTol);

/// Pointwise minimality in the aim, decided by perturbation: lowering any
/// single value by each probe step must leave the aim.  Probes are 10*tol
/// and, when given, one grid step.  Throws NotInAim when f fails in_aim.
bool is_minimal_in_aim(const Functional& f, double tol = kDefaultTol,
                       std::optional<double> grid_step = std::nullopt);

/// sup_x |f(x) - g(x)| for tight f, g (throws NotTight otherwise); also
/// asserts the two asymmetric distances already agree symmetrically.
ExtNonNeg tightspan_dist(const Functional& f, const Functional& g,
                         double tol = kDefaultTol);

/// A pair (distances in, distances out) with f(x) + g(y) >= d(x,y).
struct TriangularPair {
  Functional f;
  Functional g;
};

bool is_triangular(const Functional& f, const Functional& g,
                   double tol = kDefaultTol);

/// Validating factory; throws NotTriangular.
TriangularPair make_triangular_pair(Functional f, Functional g,
                                    double tol = kDefaultTol);

/// Minimality of a triangular pair, decided by the invariance criterion:
/// minimal exactly when (f, g) is a point of the Isbell completion.
bool is_minimal_pair(const Functional& f, const Functional& g,
                     double tol = kDefaultTol);

/// Independent minimality witness: lowering any single coordinate of f or g
/// by each probe step must break triangularity.  Probes are 10*tol and,
/// when given, `step` (callers usually pass min positive distance / 4).
bool is_minimal_pair_perturbative(const Functional& f, const Functional& g,
                                  double tol = kDefaultTol,
                                  std::optional<double> step = std::nullopt);

/// Default perturbation step for the oracle checks.
double default_perturbation_step(const Space& space);

/// The directed-tight-span metric:
/// sup_x max(f'(x) (-) f(x), g'(x) (-) g(x)).
ExtNonNeg hk_dist(const TriangularPair& p, const TriangularPair& q);

/// Membership of a completion point in the maximal classical subspace,
/// i.e. the tight span: true iff the two halves agree.
bool maximal_classical_subspace_check(const IsbellPoint& p,
                                      double tol = kDefaultTol);

}  // namespace isbell
