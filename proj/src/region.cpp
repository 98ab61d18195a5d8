#include "isbell/region.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "isbell/errors.hpp"

namespace isbell {

namespace {

bool all_finite(const Space& space) {
  for (std::size_t i = 0; i < space.size(); ++i)
    for (std::size_t j = 0; j < space.size(); ++j)
      if (!space.d(i, j).finite()) return false;
  return true;
}

Grid sampling_grid(const Space& space, const std::optional<Grid>& requested) {
  if (requested) return *requested;
  Grid grid = Grid::commensurate(space, std::nullopt, 2);
  // Reach beyond the largest distance so non-membership is exercised too.
  grid.bound = ExtNonNeg(grid.bound.value() + 4.0 * grid.step);
  return grid;
}

bool brute_member(const Space& space, std::span<const ExtNonNeg> table,
                  double tol) {
  std::vector<ExtNonNeg> lbuf(space.size()), rbuf(space.size());
  conjugate_L_into(space, table, lbuf);
  conjugate_R_into(space, lbuf, rbuf);
  for (std::size_t i = 0; i < space.size(); ++i)
    if (!approx_eq(rbuf[i], table[i], tol)) return false;
  return true;
}

void cross_validate(const SpaceRef& space, const Grid& grid, double tol,
                    const std::function<bool(std::span<const ExtNonNeg>)>&
                        closed_member) {
  for_each_functional(space, grid, Role::raw, kDefaultBudget,
                      [&](std::span<const ExtNonNeg> table) {
                        bool closed = closed_member(table);
                        bool brute = brute_member(*space, table, tol);
                        if (closed != brute)
                          throw InternalInconsistency(
                              "closed-form region disagrees with the "
                              "brute-force fixed set on the sampling grid");
                      });
}

RegionDescription grid_sample_region(const SpaceRef& space, const Grid& grid,
                                     double tol) {
  RegionDescription region;
  region.kind = "grid-sample";
  for_each_functional(space, grid, Role::raw, kDefaultBudget,
                      [&](std::span<const ExtNonNeg> table) {
                        if (brute_member(*space, table, tol))
                          region.points.emplace_back(table.begin(),
                                                     table.end());
                      });
  return region;
}

}  // namespace

bool three_point_complex_member(ExtNonNeg alpha, ExtNonNeg beta,
                                ExtNonNeg gamma, ExtNonNeg r, ExtNonNeg s,
                                ExtNonNeg t, double tol) {
  if (!alpha.finite() || !beta.finite() || !gamma.finite()) return false;
  double A = alpha.value() + r.value();
  double B = beta.value() + s.value();
  double C = gamma.value() + t.value();
  double rv = r.value(), sv = s.value(), tv = t.value();
  auto eq = [tol](double x, double y) { return std::abs(x - y) <= tol; };
  auto le = [tol](double x, double y) { return x <= y + tol; };

  if (le(C, B) && eq(A, B) && le(A, rv + sv)) return true;
  if (le(A, C) && eq(C, B) && le(B, sv + tv)) return true;
  if (le(B, A) && eq(A, C) && le(C, rv + tv)) return true;
  if (eq(alpha.value(), 0.0) && le(beta.value(), rv - sv) &&
      le(gamma.value(), rv - tv))
    return true;
  return false;
}

RegionDescription export_region(const SpaceRef& space,
                                std::optional<Grid> sample, double tol,
                                std::ostream* warnings, std::ostream* debug) {
  const std::size_t n = space->size();
  Grid grid = sampling_grid(*space, sample);

  if (n == 2 && all_finite(*space)) {
    ExtNonNeg r = space->d(0, 1);
    ExtNonNeg s = space->d(1, 0);
    RegionDescription region;
    if (r == s) {
      region.kind = "square";
      region.parameters["r"] = r;
      region.tight_span_endpoints = {{ExtNonNeg(0.0), r}, {r, ExtNonNeg(0.0)}};
    } else {
      region.kind = "rectangle";
      region.parameters["r"] = r;
      region.parameters["s"] = s;
    }
    cross_validate(space, grid, tol, [&](std::span<const ExtNonNeg> f) {
      return f[0].value() <= r.value() + tol &&
             f[1].value() <= s.value() + tol;
    });
    return region;
  }

  if (n == 3 && space->is_classical()) {
    // Sort the points into roles a', b', c' with r = d(b',c') >= s = d(a',c')
    // >= t = d(a',b'); r pairs the two points realizing the largest distance.
    std::array<std::array<std::size_t, 2>, 3> pairs = {{{0, 1}, {0, 2}, {1, 2}}};
    std::size_t best = 0;
    for (std::size_t k = 1; k < 3; ++k)
      if (space->d(pairs[k][0], pairs[k][1]) >
          space->d(pairs[best][0], pairs[best][1]))
        best = k;
    std::size_t bp = pairs[best][0], cp = pairs[best][1];
    std::size_t ap = 3 - bp - cp;
    if (space->d(ap, cp) < space->d(ap, bp)) std::swap(bp, cp);
    ExtNonNeg r = space->d(bp, cp);
    ExtNonNeg s = space->d(ap, cp);
    ExtNonNeg t = space->d(ap, bp);

    RegionDescription region;
    region.kind = "three-point-complex";
    region.parameters["r"] = r;
    region.parameters["s"] = s;
    region.parameters["t"] = t;
    region.order = {space->label(ap), space->label(bp), space->label(cp)};
    for (std::size_t x = 0; x < 3; ++x) {
      auto f = yoneda(space, x).values();
      region.vertices[space->label(x)] =
          std::vector<ExtNonNeg>(f.begin(), f.end());
    }
    {
      auto tp = top_point(space).f().values();
      auto bt = bottom_point(space).f().values();
      region.vertices["top"] = std::vector<ExtNonNeg>(tp.begin(), tp.end());
      region.vertices["bottom"] = std::vector<ExtNonNeg>(bt.begin(), bt.end());
    }

    if (debug) {
      *debug << "change of variables: A = f(" << space->label(ap) << ") + "
             << r << ", B = f(" << space->label(bp) << ") + " << s
             << ", C = f(" << space->label(cp) << ") + " << t << "\n"
             << "branches: C<=B=A<=r+s | A<=C=B<=s+t | B<=A=C<=r+t | "
             << "A=r, B<=r, C<=r\n";
    }

    cross_validate(space, grid, tol, [&](std::span<const ExtNonNeg> f) {
      return three_point_complex_member(f[ap], f[bp], f[cp], r, s, t, tol);
    });
    return region;
  }

  if (warnings)
    *warnings << "UnsupportedShape: no closed form for this space; "
                 "falling back to a grid sample\n";
  return grid_sample_region(space, grid, tol);
}

Json to_json(const RegionDescription& region) {
  Json j;
  j["kind"] = region.kind;
  Json params = Json::object();
  for (const auto& [key, value] : region.parameters)
    params[key] = to_json(value);
  j["parameters"] = std::move(params);
  if (!region.points.empty()) {
    Json pts = Json::array();
    for (const auto& point : region.points) {
      Json p = Json::array();
      for (ExtNonNeg v : point) p.push_back(to_json(v));
      pts.push_back(std::move(p));
    }
    j["points"] = std::move(pts);
  }
  if (!region.tight_span_endpoints.empty()) {
    Json endpoints = Json::array();
    for (const auto& e : region.tight_span_endpoints) {
      Json p = Json::array();
      for (ExtNonNeg v : e) p.push_back(to_json(v));
      endpoints.push_back(std::move(p));
    }
    j["tight_span"] = Json{{"endpoints", std::move(endpoints)}};
  }
  if (!region.order.empty()) j["order"] = region.order;
  if (!region.vertices.empty()) {
    Json verts = Json::object();
    for (const auto& [label, point] : region.vertices) {
      Json p = Json::array();
      for (ExtNonNeg v : point) p.push_back(to_json(v));
      verts[label] = std::move(p);
    }
    j["vertices"] = std::move(verts);
  }
  return j;
}

}  // namespace isbell
