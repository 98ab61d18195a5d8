#include "isbell/tightspan.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "isbell/errors.hpp"

namespace isbell {

namespace {

void require_classical(const Functional& f) {
  if (!f.base()->is_classical())
    throw NotClassical("base space is not a classical metric space");
}

// f(x) + f(y) >= d(x,y) - tol with the x-th value lowered by delta.
bool in_aim_lowered(const Functional& f, std::size_t lowered, double delta,
                    double tol) {
  const Space& base = *f.base();
  if (f[lowered].finite() && f[lowered].value() < delta)
    return false;  // would go negative, which breaks the pair (x, x)
  auto value = [&](std::size_t i) {
    if (i != lowered || !f[i].finite()) return f[i];
    return ExtNonNeg(f[i].value() - delta);
  };
  for (std::size_t x = 0; x < base.size(); ++x)
    for (std::size_t y = 0; y < base.size(); ++y) {
      ExtNonNeg lhs = value(x) + value(y);
      if (lhs.value() + tol < base.d(x, y).value()) return false;
    }
  return true;
}

}  // namespace

bool in_aim(const Functional& f, double tol) {
  require_classical(f);
  const Space& base = *f.base();
  for (std::size_t x = 0; x < base.size(); ++x)
    for (std::size_t y = 0; y < base.size(); ++y)
      if ((f[x] + f[y]).value() + tol < base.d(x, y).value()) return false;
  return true;
}

bool is_tight(const Functional& f, double tol) {
  require_classical(f);
  // On a symmetric base the two conjugations coincide, so (+) reads f = R(f).
  Functional rf = conjugate_R(Functional::raw(
      f.base(), std::vector<ExtNonNeg>(f.values().begin(), f.values().end())));
  for (std::size_t x = 0; x < f.size(); ++x)
    if (!approx_eq(f[x], rf[x], tol)) return false;
  return true;
}

bool is_minimal_in_aim(const Functional& f, double tol,
                       std::optional<double> grid_step) {
  if (!in_aim(f, tol)) throw NotInAim("functional is not in the aim");
  std::vector<double> probes{10.0 * tol};
  if (grid_step && *grid_step > 0.0) probes.push_back(*grid_step);
  for (std::size_t x = 0; x < f.size(); ++x)
    for (double delta : probes)
      if (in_aim_lowered(f, x, delta, tol)) return false;
  return true;
}

ExtNonNeg tightspan_dist(const Functional& f, const Functional& g,
                         double tol) {
  require_same_base(f, g);
  if (!is_tight(f, tol) || !is_tight(g, tol))
    throw NotTight("tightspan_dist needs tight functionals");
  ExtNonNeg forward = presheaf_dist(f, g);
  ExtNonNeg backward = presheaf_dist(g, f);
  if (!approx_eq(forward, backward, tol)) {
    std::ostringstream msg;
    msg << "asymmetric distances " << forward << " and " << backward
        << " on tight functionals";
    throw InternalInconsistency(msg.str());
  }
  return max(forward, backward);
}

bool is_triangular(const Functional& f, const Functional& g, double tol) {
  require_same_base(f, g);
  const Space& base = *f.base();
  for (std::size_t x = 0; x < base.size(); ++x)
    for (std::size_t y = 0; y < base.size(); ++y)
      if ((f[x] + g[y]).value() + tol < base.d(x, y).value()) return false;
  return true;
}

TriangularPair make_triangular_pair(Functional f, Functional g, double tol) {
  if (!is_triangular(f, g, tol))
    throw NotTriangular("f(x) + g(y) < d(x,y) for some pair");
  return TriangularPair{std::move(f), std::move(g)};
}

bool is_minimal_pair(const Functional& f, const Functional& g, double tol) {
  if (!is_triangular(f, g, tol)) return false;
  return is_isbell_point(f, g, tol);
}

bool is_minimal_pair_perturbative(const Functional& f, const Functional& g,
                                  double tol, std::optional<double> step) {
  if (!is_triangular(f, g, tol)) return false;
  std::vector<double> probes{10.0 * tol};
  if (step && *step > 0.0) probes.push_back(*step);

  // Values live in [0,inf]; a coordinate at 0 has nothing below it.  An inf
  // coordinate is probed with the largest finite distance instead: a finite
  // probe fails only on inf constraints, which no finite value satisfies.
  double largest_finite = 0.0;
  for (std::size_t i = 0; i < f.base()->size(); ++i)
    for (std::size_t j = 0; j < f.base()->size(); ++j)
      if (f.base()->d(i, j).finite())
        largest_finite = std::max(largest_finite, f.base()->d(i, j).value());

  auto lowered = [largest_finite](const Functional& h, std::size_t at,
                                  double delta) {
    std::vector<ExtNonNeg> values(h.values().begin(), h.values().end());
    if (!values[at].finite())
      values[at] = ExtNonNeg(largest_finite);
    else if (values[at].value() == 0.0)
      return std::optional<std::vector<ExtNonNeg>>{};
    else
      values[at] = ExtNonNeg(std::max(values[at].value() - delta, 0.0));
    return std::optional(std::move(values));
  };

  for (std::size_t i = 0; i < f.size(); ++i)
    for (double delta : probes) {
      if (auto fv = lowered(f, i, delta)) {
        Functional f2 = Functional::raw(f.base(), std::move(*fv));
        if (is_triangular(f2, g, tol)) return false;
      }
      if (auto gv = lowered(g, i, delta)) {
        Functional g2 = Functional::raw(g.base(), std::move(*gv));
        if (is_triangular(f, g2, tol)) return false;
      }
    }
  return true;
}

double default_perturbation_step(const Space& space) {
  double smallest = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < space.size(); ++i)
    for (std::size_t j = 0; j < space.size(); ++j) {
      double v = space.d(i, j).value();
      if (v > 0.0 && v < smallest) smallest = v;
    }
  if (!std::isfinite(smallest)) return 0.25;
  return smallest / 4.0;
}

ExtNonNeg hk_dist(const TriangularPair& p, const TriangularPair& q) {
  require_same_base(p.f, q.f);
  require_same_base(p.g, q.g);
  require_same_base(p.f, p.g);
  return max(sup_excess(q.f.values(), p.f.values()),
             sup_excess(q.g.values(), p.g.values()));
}

bool maximal_classical_subspace_check(const IsbellPoint& p, double tol) {
  if (!p.base()->is_classical())
    throw NotClassical("base space is not a classical metric space");
  for (std::size_t x = 0; x < p.f().size(); ++x)
    if (!approx_eq(p.f()[x], p.g()[x], tol)) return false;
  return true;
}

}  // namespace isbell
