#pragma once

#include <span>
#include <vector>

#include "isbell/completion.hpp"

namespace isbell {

/// Colimit in [0,inf]: inf_d (W(d) + J(d)).  Empty diagram gives inf.
ExtNonNeg colim_interval(std::span<const ExtNonNeg> weights,
                         std::span<const ExtNonNeg> legs);

/// Limit in [0,inf]: sup_d (J(d) (-) W(d)).  Empty diagram gives 0.
ExtNonNeg lim_interval(std::span<const ExtNonNeg> weights,
                       std::span<const ExtNonNeg> legs);

/// A diagram of points of a space: shape D, short map J : D -> X, and a
/// weighting on D (presheaf role for colimits, copresheaf for limits).
struct WeightedDiagram {
  ShortMap j;
  Functional weight;

  const SpaceRef& shape() const { return weight.base(); }
  const SpaceRef& target() const { return j.target(); }
};

WeightedDiagram make_weighted_diagram(ShortMap j, Functional weight);

/// A diagram whose legs are functionals over a common base.  The base is
/// carried explicitly so empty shapes still know where they land.
struct FunctionalDiagram {
  SpaceRef shape;
  SpaceRef base;
  std::vector<Functional> legs;
  Functional weight;
};

FunctionalDiagram make_functional_diagram(SpaceRef shape, SpaceRef base,
                                          std::vector<Functional> legs,
                                          Functional weight);

/// A diagram whose legs are points of the Isbell completion.
struct CompletionDiagram {
  SpaceRef shape;
  SpaceRef base;
  std::vector<IsbellPoint> legs;
  Functional weight;
};

CompletionDiagram make_completion_diagram(SpaceRef shape, SpaceRef base,
                                          std::vector<IsbellPoint> legs,
                                          Functional weight);

/// Pointwise colimit in the presheaf space: result(x) = inf_d (W(d) +
/// J(d)(x)).  Requires a presheaf weighting; the result is a presheaf.
Functional colim_presheaf(const FunctionalDiagram& diagram);

/// Pointwise limit in the op-copresheaf space; the same inf(W + J) formula,
/// landing in copresheaves.  Requires a copresheaf weighting.
Functional lim_opcopresheaf(const FunctionalDiagram& diagram);

/// Colimit in the completion: project the pointwise presheaf colimit back
/// with RL.
IsbellPoint colim_fixed(const CompletionDiagram& diagram,
                        double tol = kDefaultTol);

/// Limit in the completion: pointwise limit of the copresheaf halves, then
/// the LR projection.
IsbellPoint lim_fixed(const CompletionDiagram& diagram,
                      double tol = kDefaultTol);

/// All points c of the target with d(c,x) = sup_d (d(J(d),x) (-) W(d)) at
/// every x.  Empty when no colimit exists; several results are mutually
/// isomorphic when the target is not skeletal.
std::vector<std::size_t> colimit_search(const WeightedDiagram& diagram,
                                        double tol = kDefaultTol);

/// Dual search: d(x,l) = sup_d (d(x,J(d)) (-) W(d)).
std::vector<std::size_t> limit_search(const WeightedDiagram& diagram,
                                      double tol = kDefaultTol);

/// Pulls the diagram back along the identity-on-points map from the
/// discretized shape; colimits are invariant under this.
WeightedDiagram discretize_diagram(const WeightedDiagram& diagram);
FunctionalDiagram discretize_diagram(const FunctionalDiagram& diagram);

/// Pull-back of a functional along a short map: G*V = V o G.
Functional kan_pullback(const ShortMap& g, const Functional& v);

/// Left Kan extension (push-forward): G_!W(z) = inf_y (W(y) + d(G(y),z)).
/// Left adjoint to the pull-back; on isometric embeddings it is the
/// pointwise-largest copresheaf extension.
Functional kan_left(const ShortMap& g, const Functional& w);

/// Right Kan extension: G_*W(z) = sup_y (W(y) (-) d(z,G(y))).  Right adjoint
/// to the pull-back; the pointwise-smallest extension.
Functional kan_right(const ShortMap& g, const Functional& w);

/// Pushing a weighting forward along its own diagram leaves the colimit
/// unchanged: checks G_!(J_!W) = (G o J)_!W pointwise over the target of G.
bool pushforward_colimit_check(const WeightedDiagram& diagram,
                               const ShortMap& g, double tol = kDefaultTol);

/// Co-metric semi-tropical structure on the completion: pointwise min /
/// shift of the presheaf halves followed by the RL projection.  Unit of
/// oplus is the top point.
IsbellPoint oplus(const IsbellPoint& p, const IsbellPoint& q,
                  double tol = kDefaultTol);
IsbellPoint odot(ExtNonNeg tau, const IsbellPoint& p,
                 double tol = kDefaultTol);

/// Metric structure: the same operations on the copresheaf halves followed
/// by LR.  Unit of boxplus is the bottom point.
IsbellPoint boxplus(const IsbellPoint& p, const IsbellPoint& q,
                    double tol = kDefaultTol);
IsbellPoint boxdot(ExtNonNeg tau, const IsbellPoint& p,
                   double tol = kDefaultTol);

}  // namespace isbell
