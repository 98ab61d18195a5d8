#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "isbell/functionals.hpp"

namespace isbell {

/// In-place conjugations on raw tables; `out` must have base->size() slots.
/// These are the hot path for grid enumeration.
void conjugate_L_into(const Space& base, std::span<const ExtNonNeg> f,
                      std::span<ExtNonNeg> out);
void conjugate_R_into(const Space& base, std::span<const ExtNonNeg> g,
                      std::span<ExtNonNeg> out);

/// L(f)(y) = sup_x (d(x,y) (-) f(x)).  Total on any table; the result is
/// always a copresheaf.
Functional conjugate_L(const Functional& f);

/// R(g)(x) = sup_y (d(x,y) (-) g(y)).  Dual to L; always a presheaf.
Functional conjugate_R(const Functional& g);

/// The idempotent projections R(L(f)) and L(R(g)).
Functional project_RL(const Functional& f);
Functional project_LR(const Functional& g);

/// L(f) = g and R(g) = f within tol.
bool is_isbell_point(const Functional& f, const Functional& g,
                     double tol = kDefaultTol);

/// A point of the Isbell completion: distances from X (the presheaf half f)
/// and to X (the copresheaf half g), each determining the other through the
/// conjugations.  Both halves are kept so the two distance formulas can
/// cross-check each other.
class IsbellPoint {
 public:
  /// Requires RL(f) = f within tol; throws NotFixed reporting the worst
  /// deviating coordinate.  g is recomputed as L(f).
  static IsbellPoint from_presheaf(Functional f, double tol = kDefaultTol);

  /// Dual: requires LR(g) = g; f is recomputed as R(g).
  static IsbellPoint from_copresheaf(Functional g, double tol = kDefaultTol);

  /// Accepts a pair already known to satisfy both equations.
  static IsbellPoint from_pair(Functional f, Functional g,
                               double tol = kDefaultTol);

  const Functional& f() const { return f_; }
  const Functional& g() const { return g_; }
  const SpaceRef& base() const { return f_.base(); }

  bool operator==(const IsbellPoint& other) const {
    return f_ == other.f_ && g_ == other.g_;
  }

 private:
  IsbellPoint(Functional f, Functional g)
      : f_(std::move(f)), g_(std::move(g)) {}

  Functional f_;
  Functional g_;
};

/// Distance in the completion, evaluated on the presheaf halves and checked
/// against the copresheaf halves; throws InternalInconsistency if the two
/// formulas disagree beyond tol.
ExtNonNeg isbell_dist(const IsbellPoint& p, const IsbellPoint& q,
                      double tol = kDefaultTol);

/// The isometric embedding x |-> (d(-,x), d(x,-)).
IsbellPoint embed(const SpaceRef& space, std::size_t x);

/// Initial point of the completion: distance 0 to everything.  Equals
/// RL(const inf).
IsbellPoint top_point(const SpaceRef& space);

/// Terminal point: distance 0 from everything.  Equals LR(const inf) on the
/// copresheaf side.
IsbellPoint bottom_point(const SpaceRef& space);

/// Points x, y of X with d(x,P) + d(P,z) <= d(x,z) + eps and
/// d(z,P) + d(P,y) <= d(z,y) + eps; exists for every genuine completion
/// point, so NoWitness signals a corrupted P.
std::pair<std::size_t, std::size_t> geodesic_witness(const IsbellPoint& p,
                                                     std::size_t z,
                                                     double eps);

}  // namespace isbell
