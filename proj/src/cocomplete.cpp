#include "isbell/cocomplete.hpp"

#include <string>

#include "isbell/errors.hpp"

namespace isbell {

ExtNonNeg colim_interval(std::span<const ExtNonNeg> weights,
                         std::span<const ExtNonNeg> legs) {
  if (weights.size() != legs.size())
    throw LengthMismatch(std::to_string(weights.size()) + " weights for " +
                         std::to_string(legs.size()) + " legs");
  ExtNonNeg acc = ExtNonNeg::infinity();
  for (std::size_t d = 0; d < weights.size(); ++d)
    acc = min(acc, weights[d] + legs[d]);
  return acc;
}

ExtNonNeg lim_interval(std::span<const ExtNonNeg> weights,
                       std::span<const ExtNonNeg> legs) {
  if (weights.size() != legs.size())
    throw LengthMismatch(std::to_string(weights.size()) + " weights for " +
                         std::to_string(legs.size()) + " legs");
  ExtNonNeg acc(0.0);
  for (std::size_t d = 0; d < weights.size(); ++d)
    acc = max(acc, monus(legs[d], weights[d]));
  return acc;
}

WeightedDiagram make_weighted_diagram(ShortMap j, Functional weight) {
  if (!same_space(j.source(), weight.base()))
    throw BaseMismatch("weighting is not over the diagram shape");
  return WeightedDiagram{std::move(j), std::move(weight)};
}

FunctionalDiagram make_functional_diagram(SpaceRef shape, SpaceRef base,
                                          std::vector<Functional> legs,
                                          Functional weight) {
  if (!same_space(shape, weight.base()))
    throw BaseMismatch("weighting is not over the diagram shape");
  if (legs.size() != shape->size())
    throw LengthMismatch(std::to_string(legs.size()) + " legs for shape of " +
                         std::to_string(shape->size()) + " points");
  for (const Functional& leg : legs)
    if (!same_space(base, leg.base()))
      throw BaseMismatch("diagram legs live over different spaces");
  return FunctionalDiagram{std::move(shape), std::move(base), std::move(legs),
                           std::move(weight)};
}

CompletionDiagram make_completion_diagram(SpaceRef shape, SpaceRef base,
                                          std::vector<IsbellPoint> legs,
                                          Functional weight) {
  if (!same_space(shape, weight.base()))
    throw BaseMismatch("weighting is not over the diagram shape");
  if (legs.size() != shape->size())
    throw LengthMismatch(std::to_string(legs.size()) + " legs for shape of " +
                         std::to_string(shape->size()) + " points");
  for (const IsbellPoint& leg : legs)
    if (!same_space(base, leg.base()))
      throw BaseMismatch("completion points live over different spaces");
  return CompletionDiagram{std::move(shape), std::move(base), std::move(legs),
                           std::move(weight)};
}

namespace {

// inf_d (W(d) + legs[d](x)) for every x of the common base.
std::vector<ExtNonNeg> pointwise_min_plus(const SpaceRef& base,
                                          std::span<const ExtNonNeg> weights,
                                          const std::vector<Functional>& legs) {
  std::vector<ExtNonNeg> out(base->size(), ExtNonNeg::infinity());
  for (std::size_t d = 0; d < legs.size(); ++d)
    for (std::size_t x = 0; x < base->size(); ++x)
      out[x] = min(out[x], weights[d] + legs[d][x]);
  return out;
}

}  // namespace

Functional colim_presheaf(const FunctionalDiagram& diagram) {
  if (diagram.weight.role() != Role::presheaf)
    throw RoleViolation("colimit weighting must be a presheaf on the shape");
  return Functional::unchecked(
      diagram.base,
      pointwise_min_plus(diagram.base, diagram.weight.values(), diagram.legs),
      Role::presheaf);
}

Functional lim_opcopresheaf(const FunctionalDiagram& diagram) {
  if (diagram.weight.role() != Role::copresheaf)
    throw RoleViolation("limit weighting must be a copresheaf on the shape");
  return Functional::unchecked(
      diagram.base,
      pointwise_min_plus(diagram.base, diagram.weight.values(), diagram.legs),
      Role::copresheaf);
}

IsbellPoint colim_fixed(const CompletionDiagram& diagram, double tol) {
  if (diagram.weight.role() != Role::presheaf)
    throw RoleViolation("colimit weighting must be a presheaf on the shape");
  std::vector<Functional> halves;
  halves.reserve(diagram.legs.size());
  for (const IsbellPoint& p : diagram.legs) halves.push_back(p.f());
  Functional formal = Functional::unchecked(
      diagram.base,
      pointwise_min_plus(diagram.base, diagram.weight.values(), halves),
      Role::presheaf);
  return IsbellPoint::from_presheaf(project_RL(formal), tol);
}

IsbellPoint lim_fixed(const CompletionDiagram& diagram, double tol) {
  if (diagram.weight.role() != Role::copresheaf)
    throw RoleViolation("limit weighting must be a copresheaf on the shape");
  std::vector<Functional> halves;
  halves.reserve(diagram.legs.size());
  for (const IsbellPoint& p : diagram.legs) halves.push_back(p.g());
  Functional formal = Functional::unchecked(
      diagram.base,
      pointwise_min_plus(diagram.base, diagram.weight.values(), halves),
      Role::copresheaf);
  return IsbellPoint::from_copresheaf(project_LR(formal), tol);
}

std::vector<std::size_t> colimit_search(const WeightedDiagram& diagram,
                                        double tol) {
  const Space& target = *diagram.target();
  const Space& shape = *diagram.shape();
  std::vector<std::size_t> found;
  for (std::size_t c = 0; c < target.size(); ++c) {
    bool ok = true;
    for (std::size_t x = 0; x < target.size() && ok; ++x) {
      ExtNonNeg rhs(0.0);
      for (std::size_t d = 0; d < shape.size(); ++d)
        rhs = max(rhs, monus(target.d(diagram.j(d), x), diagram.weight[d]));
      ok = approx_eq(target.d(c, x), rhs, tol);
    }
    if (ok) found.push_back(c);
  }
  return found;
}

std::vector<std::size_t> limit_search(const WeightedDiagram& diagram,
                                      double tol) {
  const Space& target = *diagram.target();
  const Space& shape = *diagram.shape();
  std::vector<std::size_t> found;
  for (std::size_t l = 0; l < target.size(); ++l) {
    bool ok = true;
    for (std::size_t x = 0; x < target.size() && ok; ++x) {
      ExtNonNeg rhs(0.0);
      for (std::size_t d = 0; d < shape.size(); ++d)
        rhs = max(rhs, monus(target.d(x, diagram.j(d)), diagram.weight[d]));
      ok = approx_eq(target.d(x, l), rhs, tol);
    }
    if (ok) found.push_back(l);
  }
  return found;
}

WeightedDiagram discretize_diagram(const WeightedDiagram& diagram) {
  SpaceRef shape = share(diagram.shape()->discretize());
  // Any table is a presheaf and a copresheaf on a discrete shape, and any
  // assignment out of one is short.
  ShortMap j = ShortMap::checked(shape, diagram.j.target(),
                                 diagram.j.assignment());
  std::vector<ExtNonNeg> w(diagram.weight.values().begin(),
                           diagram.weight.values().end());
  Functional weight =
      Functional::unchecked(shape, std::move(w), diagram.weight.role());
  return WeightedDiagram{std::move(j), std::move(weight)};
}

FunctionalDiagram discretize_diagram(const FunctionalDiagram& diagram) {
  SpaceRef shape = share(diagram.shape->discretize());
  std::vector<ExtNonNeg> w(diagram.weight.values().begin(),
                           diagram.weight.values().end());
  Functional weight =
      Functional::unchecked(shape, std::move(w), diagram.weight.role());
  return FunctionalDiagram{std::move(shape), diagram.legs, std::move(weight)};
}

Functional kan_pullback(const ShortMap& g, const Functional& v) {
  if (!same_space(v.base(), g.target()))
    throw BaseMismatch("functional is not over the map's target");
  std::vector<ExtNonNeg> out(g.source()->size());
  for (std::size_t y = 0; y < out.size(); ++y) out[y] = v[g(y)];
  Role role = v.role() == Role::copresheaf ? Role::copresheaf : Role::raw;
  return Functional::unchecked(g.source(), std::move(out), role);
}

Functional kan_left(const ShortMap& g, const Functional& w) {
  if (!same_space(w.base(), g.source()))
    throw BaseMismatch("functional is not over the map's source");
  const Space& target = *g.target();
  std::vector<ExtNonNeg> out(target.size(), ExtNonNeg::infinity());
  for (std::size_t z = 0; z < target.size(); ++z)
    for (std::size_t y = 0; y < g.source()->size(); ++y)
      out[z] = min(out[z], w[y] + target.d(g(y), z));
  return Functional::unchecked(g.target(), std::move(out), Role::copresheaf);
}

Functional kan_right(const ShortMap& g, const Functional& w) {
  if (!same_space(w.base(), g.source()))
    throw BaseMismatch("functional is not over the map's source");
  const Space& target = *g.target();
  std::vector<ExtNonNeg> out(target.size(), ExtNonNeg(0.0));
  for (std::size_t z = 0; z < target.size(); ++z)
    for (std::size_t y = 0; y < g.source()->size(); ++y)
      out[z] = max(out[z], monus(w[y], target.d(z, g(y))));
  return Functional::unchecked(g.target(), std::move(out), Role::copresheaf);
}

bool pushforward_colimit_check(const WeightedDiagram& diagram,
                               const ShortMap& g, double tol) {
  if (!same_space(diagram.target(), g.source()))
    throw BaseMismatch("map does not start at the diagram's target");
  // Both sides as formal colimits over the target of g: first push the
  // weighting along J and then along G, or push it along G o J at once.
  Functional via_x = kan_left(g, kan_left(diagram.j, diagram.weight));
  Functional direct = kan_left(diagram.j.then(g), diagram.weight);
  for (std::size_t z = 0; z < via_x.size(); ++z)
    if (!approx_eq(via_x[z], direct[z], tol)) return false;
  return true;
}

namespace {

std::vector<ExtNonNeg> pointwise_min(std::span<const ExtNonNeg> a,
                                     std::span<const ExtNonNeg> b) {
  std::vector<ExtNonNeg> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = min(a[i], b[i]);
  return out;
}

std::vector<ExtNonNeg> shifted(ExtNonNeg tau, std::span<const ExtNonNeg> a) {
  std::vector<ExtNonNeg> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = tau + a[i];
  return out;
}

}  // namespace

IsbellPoint oplus(const IsbellPoint& p, const IsbellPoint& q, double tol) {
  if (!same_space(p.base(), q.base()))
    throw BaseMismatch("points live over different spaces");
  Functional merged = Functional::unchecked(
      p.base(), pointwise_min(p.f().values(), q.f().values()),
      Role::presheaf);
  return IsbellPoint::from_presheaf(project_RL(merged), tol);
}

IsbellPoint odot(ExtNonNeg tau, const IsbellPoint& p, double tol) {
  Functional shifted_f = Functional::unchecked(
      p.base(), shifted(tau, p.f().values()), Role::presheaf);
  return IsbellPoint::from_presheaf(project_RL(shifted_f), tol);
}

IsbellPoint boxplus(const IsbellPoint& p, const IsbellPoint& q, double tol) {
  if (!same_space(p.base(), q.base()))
    throw BaseMismatch("points live over different spaces");
  Functional merged = Functional::unchecked(
      p.base(), pointwise_min(p.g().values(), q.g().values()),
      Role::copresheaf);
  return IsbellPoint::from_copresheaf(project_LR(merged), tol);
}

IsbellPoint boxdot(ExtNonNeg tau, const IsbellPoint& p, double tol) {
  Functional shifted_g = Functional::unchecked(
      p.base(), shifted(tau, p.g().values()), Role::copresheaf);
  return IsbellPoint::from_copresheaf(project_LR(shifted_g), tol);
}

}  // namespace isbell
