#include "isbell/completion.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "isbell/errors.hpp"

namespace isbell {

void conjugate_L_into(const Space& base, std::span<const ExtNonNeg> f,
                      std::span<ExtNonNeg> out) {
  const std::size_t n = base.size();
  for (std::size_t y = 0; y < n; ++y) {
    ExtNonNeg acc(0.0);
    for (std::size_t x = 0; x < n; ++x)
      acc = max(acc, monus(base.d(x, y), f[x]));
    out[y] = acc;
  }
}

void conjugate_R_into(const Space& base, std::span<const ExtNonNeg> g,
                      std::span<ExtNonNeg> out) {
  const std::size_t n = base.size();
  for (std::size_t x = 0; x < n; ++x) {
    ExtNonNeg acc(0.0);
    for (std::size_t y = 0; y < n; ++y)
      acc = max(acc, monus(base.d(x, y), g[y]));
    out[x] = acc;
  }
}

Functional conjugate_L(const Functional& f) {
  std::vector<ExtNonNeg> out(f.size());
  conjugate_L_into(*f.base(), f.values(), out);
  return Functional::unchecked(f.base(), std::move(out), Role::copresheaf);
}

Functional conjugate_R(const Functional& g) {
  std::vector<ExtNonNeg> out(g.size());
  conjugate_R_into(*g.base(), g.values(), out);
  return Functional::unchecked(g.base(), std::move(out), Role::presheaf);
}

Functional project_RL(const Functional& f) {
  return conjugate_R(conjugate_L(f));
}

Functional project_LR(const Functional& g) {
  return conjugate_L(conjugate_R(g));
}

bool is_isbell_point(const Functional& f, const Functional& g, double tol) {
  require_same_base(f, g);
  Functional lf = conjugate_L(f);
  for (std::size_t i = 0; i < g.size(); ++i)
    if (!approx_eq(lf[i], g[i], tol)) return false;
  Functional rg = conjugate_R(g);
  for (std::size_t i = 0; i < f.size(); ++i)
    if (!approx_eq(rg[i], f[i], tol)) return false;
  return true;
}

namespace {

// Worst |fixed - original| coordinate, as (index, deviation).
std::pair<std::size_t, double> max_deviation(std::span<const ExtNonNeg> a,
                                             std::span<const ExtNonNeg> b) {
  std::size_t where = 0;
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    double dev;
    if (!a[i].finite() || !b[i].finite())
      dev = (a[i].finite() == b[i].finite())
                ? 0.0
                : std::numeric_limits<double>::infinity();
    else
      dev = std::abs(a[i].value() - b[i].value());
    if (dev > worst) {
      worst = dev;
      where = i;
    }
  }
  return {where, worst};
}

[[noreturn]] void throw_not_fixed(const Space& base, std::size_t where,
                                  double deviation, const char* which) {
  std::ostringstream msg;
  msg << which << " deviates at " << base.label(where) << " by " << deviation;
  throw NotFixed(msg.str());
}

}  // namespace

IsbellPoint IsbellPoint::from_presheaf(Functional f, double tol) {
  Functional g = conjugate_L(f);
  Functional rlf = conjugate_R(g);
  auto [where, dev] = max_deviation(rlf.values(), f.values());
  if (dev > tol) throw_not_fixed(*f.base(), where, dev, "RL(f)");
  return IsbellPoint(std::move(f), std::move(g));
}

IsbellPoint IsbellPoint::from_copresheaf(Functional g, double tol) {
  Functional f = conjugate_R(g);
  Functional lrg = conjugate_L(f);
  auto [where, dev] = max_deviation(lrg.values(), g.values());
  if (dev > tol) throw_not_fixed(*g.base(), where, dev, "LR(g)");
  return IsbellPoint(std::move(f), std::move(g));
}

IsbellPoint IsbellPoint::from_pair(Functional f, Functional g, double tol) {
  if (!is_isbell_point(f, g, tol))
    throw NotFixed("pair is not invariant under the conjugations");
  return IsbellPoint(std::move(f), std::move(g));
}

ExtNonNeg isbell_dist(const IsbellPoint& p, const IsbellPoint& q, double tol) {
  ExtNonNeg via_f = presheaf_dist(p.f(), q.f());
  ExtNonNeg via_g = opcopresheaf_dist(p.g(), q.g());
  if (!approx_eq(via_f, via_g, tol)) {
    std::ostringstream msg;
    msg << "presheaf half gives " << via_f << ", copresheaf half " << via_g;
    throw InternalInconsistency(msg.str());
  }
  return via_f;
}

IsbellPoint embed(const SpaceRef& space, std::size_t x) {
  // Invariant under the conjugations by the Yoneda commutation.
  return IsbellPoint::from_pair(yoneda(space, x), coyoneda(space, x));
}

IsbellPoint top_point(const SpaceRef& space) {
  std::vector<ExtNonNeg> all_inf(space->size(), ExtNonNeg::infinity());
  Functional f = project_RL(Functional::raw(space, std::move(all_inf)));
  return IsbellPoint::from_presheaf(std::move(f));
}

IsbellPoint bottom_point(const SpaceRef& space) {
  std::vector<ExtNonNeg> all_inf(space->size(), ExtNonNeg::infinity());
  Functional g = project_LR(Functional::raw(space, std::move(all_inf)));
  return IsbellPoint::from_copresheaf(std::move(g));
}

std::pair<std::size_t, std::size_t> geodesic_witness(const IsbellPoint& p,
                                                     std::size_t z,
                                                     double eps) {
  const Space& base = *p.base();
  if (z >= base.size()) throw UnknownPoint("index " + std::to_string(z));
  if (eps <= 0.0) throw std::invalid_argument("eps must be positive");

  // d(x,P) = f(x) and d(P,z) = g(z) by the embedding identities.
  auto found_x = base.size();
  auto found_y = base.size();
  for (std::size_t x = 0; x < base.size() && found_x == base.size(); ++x) {
    ExtNonNeg path = p.f()[x] + p.g()[z];
    ExtNonNeg direct = base.d(x, z);
    if (!path.finite() && !direct.finite()) {
      found_x = x;
    } else if (path.value() <= direct.value() + eps) {
      found_x = x;
    }
  }
  for (std::size_t y = 0; y < base.size() && found_y == base.size(); ++y) {
    ExtNonNeg path = p.f()[z] + p.g()[y];
    ExtNonNeg direct = base.d(z, y);
    if (!path.finite() && !direct.finite()) {
      found_y = y;
    } else if (path.value() <= direct.value() + eps) {
      found_y = y;
    }
  }
  if (found_x == base.size() || found_y == base.size())
    throw NoWitness("no geodesic witness at " + base.label(z) +
                    "; point is not in the completion");
  return {found_x, found_y};
}

}  // namespace isbell
