#include "isbell/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "isbell/errors.hpp"
#include "isbell/random.hpp"

namespace isbell {

namespace {

double float_gcd(double a, double b) {
  while (b > 1e-12) {
    double r = std::fmod(a, b);
    a = b;
    b = r;
  }
  return a;
}

bool space_has_inf(const Space& space) {
  for (std::size_t i = 0; i < space.size(); ++i)
    for (std::size_t j = 0; j < space.size(); ++j)
      if (!space.d(i, j).finite()) return true;
  return false;
}

}  // namespace

std::vector<ExtNonNeg> Grid::values() const {
  std::vector<ExtNonNeg> out;
  for (std::size_t k = 0;; ++k) {
    double v = step * static_cast<double>(k);
    if (v > bound.value() + step * 0.5) break;
    out.emplace_back(v);
  }
  if (include_infinity) out.push_back(ExtNonNeg::infinity());
  return out;
}

Grid Grid::commensurate(const Space& space, std::optional<double> bound_override,
                        int refine) {
  double min_pos = std::numeric_limits<double>::infinity();
  double max_finite = 0.0;
  double g = 0.0;
  for (std::size_t i = 0; i < space.size(); ++i)
    for (std::size_t j = 0; j < space.size(); ++j) {
      double v = space.d(i, j).value();
      if (!std::isfinite(v) || v == 0.0) continue;
      min_pos = std::min(min_pos, v);
      max_finite = std::max(max_finite, v);
      g = (g == 0.0) ? v : float_gcd(g, v);
    }
  if (!std::isfinite(min_pos)) {  // no positive finite distance at all
    min_pos = 1.0;
    max_finite = 1.0;
    g = 1.0;
  }
  if (g < min_pos / 1024.0) g = min_pos / 4.0;  // not commensurable
  Grid grid;
  grid.step = g / refine;
  grid.bound = ExtNonNeg(bound_override.value_or(max_finite));
  return grid;
}

void for_each_functional(
    const SpaceRef& space, const Grid& grid, Role role, std::size_t budget,
    const std::function<void(std::span<const ExtNonNeg>)>& visit) {
  const std::size_t n = space->size();
  const std::vector<ExtNonNeg> levels = grid.values();
  const std::size_t m = levels.size();

  double count = 1.0;
  for (std::size_t i = 0; i < n; ++i) count *= static_cast<double>(m);
  if (count > static_cast<double>(budget))
    throw BudgetExceeded(std::to_string(count) + " tables exceed budget of " +
                         std::to_string(budget));

  std::vector<std::size_t> odo(n, 0);
  std::vector<ExtNonNeg> table(n, levels.empty() ? ExtNonNeg(0.0) : levels[0]);
  if (levels.empty()) return;
  while (true) {
    bool admissible = true;
    if (role == Role::presheaf)
      admissible = is_presheaf_table(*space, table, 0.0);
    else if (role == Role::copresheaf)
      admissible = is_copresheaf_table(*space, table, 0.0);
    if (admissible) visit(table);

    // lexicographic by point index: last coordinate fastest
    std::size_t pos = n;
    while (pos > 0) {
      --pos;
      if (++odo[pos] < m) {
        table[pos] = levels[odo[pos]];
        break;
      }
      odo[pos] = 0;
      table[pos] = levels[0];
      if (pos == 0) return;
    }
    if (n == 0) return;  // single empty table already visited
  }
}

std::vector<Functional> enumerate_functionals(const SpaceRef& space,
                                              const Grid& grid, Role role,
                                              std::size_t budget) {
  std::vector<Functional> out;
  for_each_functional(space, grid, role, budget,
                      [&](std::span<const ExtNonNeg> table) {
                        out.push_back(Functional::unchecked(
                            space,
                            std::vector<ExtNonNeg>(table.begin(), table.end()),
                            role));
                      });
  return out;
}

std::vector<Functional> brute_fixed_set(const SpaceRef& space, const Grid& grid,
                                        std::size_t budget, double tol) {
  const std::size_t n = space->size();
  std::vector<ExtNonNeg> lbuf(n), rbuf(n);
  std::vector<Functional> out;
  for_each_functional(space, grid, Role::raw, budget,
                      [&](std::span<const ExtNonNeg> table) {
                        conjugate_L_into(*space, table, lbuf);
                        conjugate_R_into(*space, lbuf, rbuf);
                        for (std::size_t i = 0; i < n; ++i)
                          if (!approx_eq(rbuf[i], table[i], tol)) return;
                        out.push_back(Functional::unchecked(
                            space,
                            std::vector<ExtNonNeg>(table.begin(), table.end()),
                            Role::presheaf));
                      });
  return out;
}

std::vector<TriangularPair> brute_minimal_pairs(const SpaceRef& space,
                                                const Grid& grid,
                                                std::size_t budget) {
  const std::size_t n = space->size();
  std::vector<std::vector<ExtNonNeg>> tables;
  for_each_functional(space, grid, Role::raw, budget,
                      [&](std::span<const ExtNonNeg> table) {
                        tables.emplace_back(table.begin(), table.end());
                      });
  double pair_count =
      static_cast<double>(tables.size()) * static_cast<double>(tables.size());
  if (pair_count > static_cast<double>(budget))
    throw BudgetExceeded(std::to_string(pair_count) +
                         " pairs exceed budget of " + std::to_string(budget));

  struct Candidate {
    std::size_t fi, gi;
    double total;
  };
  std::vector<Candidate> triangular;
  for (std::size_t fi = 0; fi < tables.size(); ++fi)
    for (std::size_t gi = 0; gi < tables.size(); ++gi) {
      const auto& f = tables[fi];
      const auto& g = tables[gi];
      bool ok = true;
      for (std::size_t x = 0; x < n && ok; ++x)
        for (std::size_t y = 0; y < n && ok; ++y)
          if ((f[x] + g[y]).value() < space->d(x, y).value()) ok = false;
      if (!ok) continue;
      double total = 0.0;
      for (std::size_t x = 0; x < n; ++x)
        total += f[x].value() + g[x].value();
      triangular.push_back({fi, gi, total});
    }

  // Pointwise domination forces a <= total sum, so sorting by the sum lets
  // each candidate scan only its prefix (plus ties, which matter when inf
  // coordinates make sums equal without making the pairs equal).
  std::sort(triangular.begin(), triangular.end(),
            [](const Candidate& a, const Candidate& b) {
              return a.total < b.total;
            });

  auto leq = [&](const std::vector<ExtNonNeg>& a,
                 const std::vector<ExtNonNeg>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] > b[i]) return false;
    return true;
  };

  std::vector<TriangularPair> minimal;
  for (std::size_t i = 0; i < triangular.size(); ++i) {
    const auto& p = triangular[i];
    bool dominated = false;
    for (std::size_t j = 0;
         j < triangular.size() && triangular[j].total <= p.total && !dominated;
         ++j) {
      if (j == i) continue;
      const auto& q = triangular[j];
      if (q.fi == p.fi && q.gi == p.gi) continue;
      dominated = leq(tables[q.fi], tables[p.fi]) &&
                  leq(tables[q.gi], tables[p.gi]);
    }
    if (!dominated)
      minimal.push_back(TriangularPair{
          Functional::unchecked(space, tables[p.fi], Role::raw),
          Functional::unchecked(space, tables[p.gi], Role::raw)});
  }
  return minimal;
}

// ---------------------------------------------------------------------------
// Theorem checks
// ---------------------------------------------------------------------------

namespace {

struct CheckContext {
  SpaceRef space;
  VerifyConfig cfg;
  Rng rng;
  long checks = 0;
  std::string failure;
  std::vector<std::string> flags;

  CheckContext(SpaceRef s, const VerifyConfig& c)
      : space(std::move(s)), cfg(c), rng(c.seed) {}

  bool ok() const { return failure.empty(); }
  void fail(std::string msg) {
    if (failure.empty()) failure = std::move(msg);
  }
};

std::string table_str(std::span<const ExtNonNeg> v) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << "]";
  return os.str();
}

bool equal_tables(std::span<const ExtNonNeg> a, std::span<const ExtNonNeg> b,
                  double tol) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!approx_eq(a[i], b[i], tol)) return false;
  return true;
}

Grid grid_for(const Space& space, const VerifyConfig& cfg, int refine = 1) {
  Grid grid = Grid::commensurate(space, cfg.bound, refine);
  if (cfg.step) grid.step = *cfg.step;
  grid.include_infinity = space_has_inf(space);
  return grid;
}

int steps_to_bound(const Grid& grid) {
  if (!grid.bound.finite()) return 8;
  int k = static_cast<int>(std::floor(grid.bound.value() / grid.step + 0.5));
  return std::max(1, std::min(k, 64));
}

// Fixed points for property probing: exhaustive on tiny spaces, RL images of
// random tables otherwise; always includes the embedded points, top and
// bottom.
std::vector<IsbellPoint> sampled_completion_points(CheckContext& ctx,
                                                   std::size_t cap) {
  const SpaceRef& space = ctx.space;
  std::vector<IsbellPoint> out;
  for (std::size_t x = 0; x < space->size(); ++x)
    out.push_back(embed(space, x));
  out.push_back(top_point(space));
  out.push_back(bottom_point(space));

  if (space->size() <= 3) {
    Grid grid = grid_for(*space, ctx.cfg);
    try {
      auto fixed = brute_fixed_set(space, grid, ctx.cfg.budget, 0.0);
      std::size_t stride = std::max<std::size_t>(1, fixed.size() / cap);
      for (std::size_t i = 0; i < fixed.size(); i += stride)
        out.push_back(IsbellPoint::from_presheaf(fixed[i], ctx.cfg.tol));
      return out;
    } catch (const BudgetExceeded&) {
      // fall through to random sampling
    }
  }
  Grid grid = grid_for(*space, ctx.cfg);
  int ms = steps_to_bound(grid);
  while (out.size() < cap)
    out.push_back(random_completion_point(ctx.rng, space, grid.step, ms));
  return out;
}

void check_thm3_1(CheckContext& ctx) {
  const SpaceRef& space = ctx.space;
  Grid grid = grid_for(*space, ctx.cfg);
  int ms = steps_to_bound(grid);

  for (std::size_t x = 0; x < space->size(); ++x) {
    Functional ly = conjugate_L(yoneda(space, x));
    Functional ry = conjugate_R(coyoneda(space, x));
    ++ctx.checks;
    if (!equal_tables(ly.values(), coyoneda(space, x).values(), ctx.cfg.tol) ||
        !equal_tables(ry.values(), yoneda(space, x).values(), ctx.cfg.tol))
      return ctx.fail("conjugations do not commute with the Yoneda maps at " +
                      space->label(x));
  }

  for (int t = 0; t < ctx.cfg.trials; ++t) {
    Functional f = Functional::raw(
        space, random_table(ctx.rng, space->size(), grid.step, ms, 0.1));
    Functional g = Functional::raw(
        space, random_table(ctx.rng, space->size(), grid.step, ms, 0.1));
    ExtNonNeg lhs = opcopresheaf_dist(conjugate_L(f), g);
    ExtNonNeg rhs = presheaf_dist(f, conjugate_R(g));
    ++ctx.checks;
    if (!approx_eq(lhs, rhs, ctx.cfg.tol))
      return ctx.fail("adjunction identity fails for f=" +
                      table_str(f.values()) + ", g=" + table_str(g.values()) +
                      ": " + table_str({&lhs, 1}) + " vs " +
                      table_str({&rhs, 1}));

    Functional rl = project_RL(f);
    Functional rlrl = project_RL(rl);
    ++ctx.checks;
    if (!equal_tables(rl.values(), rlrl.values(), ctx.cfg.tol))
      return ctx.fail("RLRL != RL at f=" + table_str(f.values()));
    Functional lr = project_LR(g);
    Functional lrlr = project_LR(lr);
    ++ctx.checks;
    if (!equal_tables(lr.values(), lrlr.values(), ctx.cfg.tol))
      return ctx.fail("LRLR != LR at g=" + table_str(g.values()));

    Functional f2 = Functional::raw(
        space, random_table(ctx.rng, space->size(), grid.step, ms, 0.1));
    ++ctx.checks;
    if (opcopresheaf_dist(conjugate_L(f), conjugate_L(f2)).value() >
        presheaf_dist(f, f2).value() + ctx.cfg.tol)
      return ctx.fail("L is expansive between " + table_str(f.values()) +
                      " and " + table_str(f2.values()));
  }
}

void check_lemma3_2(CheckContext& ctx) {
  auto points = sampled_completion_points(ctx, 48);
  for (const IsbellPoint& p : points)
    for (const IsbellPoint& q : points) {
      ExtNonNeg via_f = presheaf_dist(p.f(), q.f());
      ExtNonNeg via_g = opcopresheaf_dist(p.g(), q.g());
      ++ctx.checks;
      if (!approx_eq(via_f, via_g, ctx.cfg.tol))
        return ctx.fail("metric formulas disagree between f=" +
                        table_str(p.f().values()) + " and f'=" +
                        table_str(q.f().values()));
    }
}

void check_thm4_1(CheckContext& ctx) {
  if (!ctx.space->is_classical())
    throw NotClassical("tight-span comparison needs a classical space");
  auto points = sampled_completion_points(ctx, 64);
  std::vector<const IsbellPoint*> tight;
  for (const IsbellPoint& p : points) {
    bool halves_equal = maximal_classical_subspace_check(p, ctx.cfg.tol);
    bool dagger = is_tight(p.f(), ctx.cfg.tol);
    ++ctx.checks;
    if (halves_equal != dagger)
      return ctx.fail("membership criteria disagree at f=" +
                      table_str(p.f().values()));
    if (halves_equal) tight.push_back(&p);
  }
  for (const auto* p : tight)
    for (const auto* q : tight) {
      ++ctx.checks;
      if (!approx_eq(presheaf_dist(p->f(), q->f()),
                     presheaf_dist(q->f(), p->f()), ctx.cfg.tol))
        return ctx.fail("tight-span metric not symmetric between " +
                        table_str(p->f().values()) + " and " +
                        table_str(q->f().values()));
    }
}

void check_thm4_2(CheckContext& ctx) {
  const SpaceRef& space = ctx.space;
  Grid grid = grid_for(*space, ctx.cfg);
  auto minimal = brute_minimal_pairs(space, grid, ctx.cfg.budget);
  auto fixed = brute_fixed_set(space, grid, ctx.cfg.budget, 0.0);

  using Key = std::pair<std::vector<ExtNonNeg>, std::vector<ExtNonNeg>>;
  std::vector<Key> lhs, rhs;
  for (const auto& p : minimal)
    lhs.emplace_back(
        std::vector<ExtNonNeg>(p.f.values().begin(), p.f.values().end()),
        std::vector<ExtNonNeg>(p.g.values().begin(), p.g.values().end()));
  for (const auto& f : fixed) {
    Functional g = conjugate_L(f);
    rhs.emplace_back(
        std::vector<ExtNonNeg>(f.values().begin(), f.values().end()),
        std::vector<ExtNonNeg>(g.values().begin(), g.values().end()));
  }
  std::sort(lhs.begin(), lhs.end());
  std::sort(rhs.begin(), rhs.end());
  ctx.checks += static_cast<long>(lhs.size() + rhs.size());
  if (lhs != rhs) {
    std::ostringstream msg;
    msg << "minimal pairs (" << lhs.size() << ") and completion points ("
        << rhs.size() << ") differ on the grid";
    if (space_has_inf(*space))
      ctx.flags.push_back(msg.str() + " [space has infinite distances]");
    else
      ctx.fail(msg.str());
  }
}

void check_sec5_3(CheckContext& ctx) {
  const SpaceRef& space = ctx.space;
  Grid grid = grid_for(*space, ctx.cfg);
  int ms = steps_to_bound(grid);
  for (int t = 0; t < ctx.cfg.trials; ++t) {
    std::size_t k = 1 + static_cast<std::size_t>(t % 3);
    bool colimit_side = (t % 2 == 0);
    WeightedDiagram wd = random_point_diagram(ctx.rng, space, k, grid.step, ms,
                                              colimit_side);
    WeightedDiagram disc = discretize_diagram(wd);
    ++ctx.checks;
    if (colimit_side) {
      if (colimit_search(wd, ctx.cfg.tol) != colimit_search(disc, ctx.cfg.tol))
        return ctx.fail("colimit search changed under discretization");
      Functional before = kan_left(wd.j, wd.weight);
      Functional after = kan_left(disc.j, disc.weight);
      if (!equal_tables(before.values(), after.values(), ctx.cfg.tol))
        return ctx.fail("formal colimit changed under discretization");
    } else {
      if (limit_search(wd, ctx.cfg.tol) != limit_search(disc, ctx.cfg.tol))
        return ctx.fail("limit search changed under discretization");
    }
  }
}

void check_lemma5_1(CheckContext& ctx) {
  const SpaceRef& space = ctx.space;
  Grid grid = grid_for(*space, ctx.cfg);
  int ms = steps_to_bound(grid);
  for (int t = 0; t < ctx.cfg.trials; ++t) {
    std::size_t k = static_cast<std::size_t>(t % 4);
    SpaceRef shape = share(discrete_space(k));
    std::vector<IsbellPoint> legs;
    for (std::size_t i = 0; i < k; ++i)
      legs.push_back(random_completion_point(ctx.rng, space, grid.step, ms));
    Functional weight = Functional::unchecked(
        shape, random_table(ctx.rng, k, grid.step, ms, 0.1), Role::presheaf);

    IsbellPoint via_formula =
        k == 0 ? top_point(space)
               : colim_fixed(make_completion_diagram(shape, space, legs, weight),
                             ctx.cfg.tol);
    IsbellPoint folded = top_point(space);
    for (std::size_t i = 0; i < k; ++i)
      folded = oplus(folded, odot(weight[i], legs[i], ctx.cfg.tol), ctx.cfg.tol);
    ++ctx.checks;
    if (!equal_tables(via_formula.f().values(), folded.f().values(),
                      ctx.cfg.tol))
      return ctx.fail("colimit does not decompose into fat-out points and "
                      "coproducts (shape size " + std::to_string(k) + ")");
  }
}

void check_thm5_1(CheckContext& ctx) {
  SpaceRef space = ctx.space;
  std::string note;
  if (!space->is_skeletal()) {
    space = share(space->skeletalize());
    note = "checked on the skeletalization; ";
  }
  Grid grid = grid_for(*space, ctx.cfg);
  std::vector<ExtNonNeg> weights = grid.values();
  if (!grid.include_infinity) weights.push_back(ExtNonNeg::infinity());

  auto coproduct_of = [&](std::size_t x, std::size_t y) {
    SpaceRef shape = share(discrete_space(2));
    ShortMap j = ShortMap::checked(shape, space, {x, y});
    Functional w = Functional::unchecked(
        shape, {ExtNonNeg(0.0), ExtNonNeg(0.0)}, Role::presheaf);
    return colimit_search(make_weighted_diagram(j, w), ctx.cfg.tol);
  };
  auto fat_out_of = [&](std::size_t x, ExtNonNeg r) {
    SpaceRef shape = share(discrete_space(1));
    ShortMap j = ShortMap::checked(shape, space, {x});
    Functional w = Functional::unchecked(shape, {r}, Role::presheaf);
    return colimit_search(make_weighted_diagram(j, w), ctx.cfg.tol);
  };

  bool cocomplete = true;
  std::string first_missing;
  std::vector<std::vector<std::size_t>> coproduct(space->size() * space->size());
  for (std::size_t x = 0; x < space->size() && cocomplete; ++x)
    for (std::size_t y = 0; y < space->size() && cocomplete; ++y) {
      coproduct[x * space->size() + y] = coproduct_of(x, y);
      if (coproduct[x * space->size() + y].empty()) {
        cocomplete = false;
        first_missing = "coproduct of " + space->label(x) + " and " +
                        space->label(y);
      }
    }
  for (std::size_t x = 0; x < space->size() && cocomplete; ++x)
    for (ExtNonNeg r : weights) {
      if (!fat_out_of(x, r).empty()) continue;
      cocomplete = false;
      std::ostringstream os;
      os << "fat out point at " << space->label(x) << " of radius " << r;
      first_missing = os.str();
      break;
    }

  if (!cocomplete) {
    // The morphism law forces oplus to be a coproduct and odot a fat out
    // point, so a missing colimit rules the structure out as well.
    ctx.flags.push_back(note + "not finitely cocomplete (" + first_missing +
                        "); no co-metric module structure can exist");
    ++ctx.checks;
    return;
  }

  auto op = [&](std::size_t x, std::size_t y) {
    return coproduct[x * space->size() + y][0];
  };
  auto act = [&](ExtNonNeg r, std::size_t x) { return fat_out_of(x, r)[0]; };

  for (std::size_t x = 0; x < space->size(); ++x)
    for (std::size_t y = 0; y < space->size(); ++y) {
      ++ctx.checks;
      if (op(x, y) != op(y, x))
        return ctx.fail(note + "coproduct is not commutative");
      for (std::size_t z = 0; z < space->size(); ++z) {
        ++ctx.checks;
        if (op(op(x, y), z) != op(x, op(y, z)))
          return ctx.fail(note + "coproduct is not associative");
        // co-metric morphism law with unit weights
        ExtNonNeg lhs = space->d(op(x, y), z);
        ExtNonNeg rhs = max(space->d(x, z), space->d(y, z));
        ++ctx.checks;
        if (!approx_eq(lhs, rhs, ctx.cfg.tol))
          return ctx.fail(note + "coproduct distance law fails");
      }
    }
  std::size_t initial = act(ExtNonNeg::infinity(), 0);
  for (std::size_t x = 0; x < space->size(); ++x) {
    ++ctx.checks;
    if (act(ExtNonNeg::infinity(), x) != initial)
      return ctx.fail(note + "initial point is not unique");
    if (op(initial, x) != x) return ctx.fail(note + "unit law fails");
    for (ExtNonNeg r : weights)
      for (ExtNonNeg s : weights) {
        ++ctx.checks;
        if (act(r + s, x) != act(r, act(s, x)))
          return ctx.fail(note + "action is not additive");
        // morphism law at every point
        std::size_t m = act(r, x);
        for (std::size_t zz = 0; zz < space->size(); ++zz) {
          ++ctx.checks;
          if (!approx_eq(space->d(m, zz), monus(space->d(x, zz), r),
                         ctx.cfg.tol))
            return ctx.fail(note + "fat-out distance law fails");
        }
      }
  }
  if (!note.empty()) ctx.flags.push_back(note + "finitely cocomplete and the "
                                                "forced module laws hold");
}

void check_thm6_1(CheckContext& ctx) {
  const SpaceRef& target = ctx.space;
  Grid grid = grid_for(*target, ctx.cfg);
  int ms = steps_to_bound(grid);
  for (int t = 0; t < ctx.cfg.trials; ++t) {
    std::size_t mid_points = 2 + static_cast<std::size_t>(t % 3);
    ShortMap g = random_short_map(ctx.rng, target, mid_points, grid.step, ms);
    std::size_t shape_points = 1 + static_cast<std::size_t>(t % 3);
    ShortMap j = random_short_map(ctx.rng, g.source(), shape_points, grid.step,
                                  ms);
    Functional w = random_presheaf(ctx.rng, j.source(), grid.step, ms);
    ++ctx.checks;
    if (!pushforward_colimit_check(make_weighted_diagram(j, w), g,
                                   ctx.cfg.tol))
      return ctx.fail("pushing the weighting forward changed the colimit");
  }
}

void check_thm6_2(CheckContext& ctx) {
  const SpaceRef& space = ctx.space;
  Grid grid = grid_for(*space, ctx.cfg);
  int ms = steps_to_bound(grid);
  for (int t = 0; t < ctx.cfg.trials; ++t) {
    SpaceRef shape;
    std::vector<Functional> legs;
    if (t % 2 == 0) {
      shape = share(discrete_space(static_cast<std::size_t>(t % 4)));
      for (std::size_t d = 0; d < shape->size(); ++d)
        legs.push_back(random_presheaf(ctx.rng, space, grid.step, ms));
    } else {
      ShortMap sigma = random_short_map(ctx.rng, space,
                                        1 + static_cast<std::size_t>(t % 3),
                                        grid.step, ms);
      shape = sigma.source();
      for (std::size_t d = 0; d < shape->size(); ++d)
        legs.push_back(yoneda(space, sigma(d)));
    }
    Functional weight =
        shape->size() == 0
            ? Functional::unchecked(shape, {}, Role::presheaf)
            : random_presheaf(ctx.rng, shape, grid.step, ms);
    FunctionalDiagram diagram =
        make_functional_diagram(shape, space, legs, weight);
    Functional colim = colim_presheaf(diagram);

    std::vector<Functional> probes;
    for (std::size_t x = 0; x < space->size(); ++x)
      probes.push_back(yoneda(space, x));
    for (int i = 0; i < 4; ++i)
      probes.push_back(random_presheaf(ctx.rng, space, grid.step, ms));
    probes.push_back(colim);

    for (const Functional& probe : probes) {
      ExtNonNeg lhs = presheaf_dist(colim, probe);
      ExtNonNeg rhs(0.0);
      for (std::size_t d = 0; d < legs.size(); ++d)
        rhs = max(rhs, monus(presheaf_dist(legs[d], probe), weight[d]));
      ++ctx.checks;
      if (!approx_eq(lhs, rhs, ctx.cfg.tol))
        return ctx.fail("pointwise colimit misses its universal property");
    }
  }
}

void check_thm7_1(CheckContext& ctx) {
  const SpaceRef& space = ctx.space;
  Grid grid = grid_for(*space, ctx.cfg);
  int ms = steps_to_bound(grid);
  auto points = sampled_completion_points(ctx, 24);
  for (int t = 0; t < ctx.cfg.trials; ++t) {
    Functional f =
        (t % 2 == 0)
            ? random_presheaf(ctx.rng, space, grid.step, ms)
            : Functional::raw(space, random_table(ctx.rng, space->size(),
                                                  grid.step, ms, 0.1));
    Functional rl = project_RL(f);
    for (const IsbellPoint& p : points) {
      ++ctx.checks;
      if (!approx_eq(presheaf_dist(rl, p.f()), presheaf_dist(f, p.f()),
                     ctx.cfg.tol))
        return ctx.fail("projection adjunction fails at f=" +
                        table_str(f.values()));
    }
  }
}

CompletionDiagram random_completion_diagram(CheckContext& ctx, double step,
                                            int ms, bool for_colimit) {
  const SpaceRef& space = ctx.space;
  int variant = static_cast<int>(ctx.rng() % 2);
  SpaceRef shape;
  std::vector<IsbellPoint> legs;
  if (variant == 0) {
    shape = share(discrete_space(ctx.rng() % 4));
    for (std::size_t d = 0; d < shape->size(); ++d)
      legs.push_back(random_completion_point(ctx.rng, space, step, ms));
  } else {
    ShortMap sigma =
        random_short_map(ctx.rng, space, 1 + ctx.rng() % 3, step, ms);
    shape = sigma.source();
    for (std::size_t d = 0; d < shape->size(); ++d)
      legs.push_back(embed(space, sigma(d)));
  }
  Functional weight =
      shape->size() == 0
          ? Functional::unchecked(shape, {},
                                  for_colimit ? Role::presheaf
                                              : Role::copresheaf)
          : (for_colimit ? random_presheaf(ctx.rng, shape, step, ms)
                         : random_copresheaf(ctx.rng, shape, step, ms));
  return make_completion_diagram(shape, space, legs, weight);
}

void check_thm7_2(CheckContext& ctx) {
  Grid grid = grid_for(*ctx.space, ctx.cfg);
  int ms = steps_to_bound(grid);
  auto probes = sampled_completion_points(ctx, 16);
  for (int t = 0; t < ctx.cfg.trials; ++t) {
    CompletionDiagram diagram =
        random_completion_diagram(ctx, grid.step, ms, true);
    IsbellPoint colim = colim_fixed(diagram, ctx.cfg.tol);
    for (const IsbellPoint& p : probes) {
      ExtNonNeg lhs = isbell_dist(colim, p, ctx.cfg.tol);
      ExtNonNeg rhs(0.0);
      for (std::size_t d = 0; d < diagram.legs.size(); ++d)
        rhs = max(rhs, monus(isbell_dist(diagram.legs[d], p, ctx.cfg.tol),
                             diagram.weight[d]));
      ++ctx.checks;
      if (!approx_eq(lhs, rhs, ctx.cfg.tol))
        return ctx.fail("completion colimit misses its universal property");
    }
  }
}

void check_thm7_6(CheckContext& ctx) {
  Grid grid = grid_for(*ctx.space, ctx.cfg);
  int ms = steps_to_bound(grid);
  auto probes = sampled_completion_points(ctx, 16);
  for (int t = 0; t < ctx.cfg.trials; ++t) {
    CompletionDiagram diagram =
        random_completion_diagram(ctx, grid.step, ms, false);
    IsbellPoint limit = lim_fixed(diagram, ctx.cfg.tol);
    for (const IsbellPoint& p : probes) {
      ExtNonNeg lhs = isbell_dist(p, limit, ctx.cfg.tol);
      ExtNonNeg rhs(0.0);
      for (std::size_t d = 0; d < diagram.legs.size(); ++d)
        rhs = max(rhs, monus(isbell_dist(p, diagram.legs[d], ctx.cfg.tol),
                             diagram.weight[d]));
      ++ctx.checks;
      if (!approx_eq(lhs, rhs, ctx.cfg.tol))
        return ctx.fail("completion limit misses its universal property");
    }
  }
}

void check_thm7_7(CheckContext& ctx) {
  const SpaceRef& space = ctx.space;
  Grid grid = grid_for(*space, ctx.cfg);
  int ms = steps_to_bound(grid);

  auto run_one = [&](const WeightedDiagram& wd, bool colimit_side) {
    SpaceRef shape = wd.shape();
    std::vector<IsbellPoint> legs;
    for (std::size_t d = 0; d < shape->size(); ++d)
      legs.push_back(embed(space, wd.j(d)));
    CompletionDiagram embedded = make_completion_diagram(
        shape, space, legs,
        Functional::unchecked(shape,
                              std::vector<ExtNonNeg>(wd.weight.values().begin(),
                                                     wd.weight.values().end()),
                              wd.weight.role()));
    if (colimit_side) {
      for (std::size_t c : colimit_search(wd, ctx.cfg.tol)) {
        IsbellPoint lifted = colim_fixed(embedded, ctx.cfg.tol);
        ++ctx.checks;
        if (!equal_tables(lifted.f().values(), embed(space, c).f().values(),
                          ctx.cfg.tol))
          ctx.fail("embedding does not preserve the colimit at " +
                   space->label(c));
      }
    } else {
      for (std::size_t l : limit_search(wd, ctx.cfg.tol)) {
        IsbellPoint lifted = lim_fixed(embedded, ctx.cfg.tol);
        ++ctx.checks;
        if (!equal_tables(lifted.g().values(), embed(space, l).g().values(),
                          ctx.cfg.tol))
          ctx.fail("embedding does not preserve the limit at " +
                   space->label(l));
      }
    }
  };

  // Weight-zero singletons always have their base point as (co)limit, so
  // there is guaranteed coverage beyond whatever the random diagrams hit.
  for (std::size_t x = 0; x < space->size(); ++x) {
    SpaceRef shape = share(discrete_space(1));
    ShortMap j = ShortMap::checked(shape, space, {x});
    Functional w0p =
        Functional::unchecked(shape, {ExtNonNeg(0.0)}, Role::presheaf);
    Functional w0c =
        Functional::unchecked(shape, {ExtNonNeg(0.0)}, Role::copresheaf);
    run_one(make_weighted_diagram(j, w0p), true);
    run_one(make_weighted_diagram(j, w0c), false);
    if (!ctx.ok()) return;
  }
  for (int t = 0; t < ctx.cfg.trials; ++t) {
    bool colimit_side = (t % 2 == 0);
    WeightedDiagram wd = random_point_diagram(
        ctx.rng, space, 1 + static_cast<std::size_t>(t % 3), grid.step, ms,
        colimit_side);
    run_one(wd, colimit_side);
    if (!ctx.ok()) return;
  }
}

void check_cor7_modules(CheckContext& ctx) {
  const SpaceRef& space = ctx.space;
  Grid grid = grid_for(*space, ctx.cfg);
  int ms = steps_to_bound(grid);
  IsbellPoint top = top_point(space);
  IsbellPoint bottom = bottom_point(space);
  auto scalars = grid.values();
  scalars.push_back(ExtNonNeg::infinity());

  auto eq = [&](const IsbellPoint& a, const IsbellPoint& b) {
    return equal_tables(a.f().values(), b.f().values(), ctx.cfg.tol) &&
           equal_tables(a.g().values(), b.g().values(), ctx.cfg.tol);
  };

  for (int t = 0; t < ctx.cfg.trials; ++t) {
    IsbellPoint p = random_completion_point(ctx.rng, space, grid.step, ms);
    IsbellPoint q = random_completion_point(ctx.rng, space, grid.step, ms);
    IsbellPoint r = random_completion_point(ctx.rng, space, grid.step, ms);
    ExtNonNeg tau = scalars[ctx.rng() % scalars.size()];
    ExtNonNeg sigma = scalars[ctx.rng() % scalars.size()];

    ++ctx.checks;
    if (!eq(oplus(p, q), oplus(q, p))) return ctx.fail("oplus not commutative");
    if (!eq(oplus(oplus(p, q), r), oplus(p, oplus(q, r))))
      return ctx.fail("oplus not associative");
    if (!eq(oplus(top, p), p)) return ctx.fail("top is not the oplus unit");
    if (!eq(oplus(p, p), p)) return ctx.fail("oplus not idempotent");
    if (!eq(odot(tau + sigma, p), odot(tau, odot(sigma, p))))
      return ctx.fail("odot action not additive");
    if (!eq(odot(ExtNonNeg(0.0), p), p)) return ctx.fail("0 odot p != p");
    if (!eq(odot(ExtNonNeg::infinity(), p), top))
      return ctx.fail("inf odot p != top");
    if (!eq(odot(tau, oplus(p, q)), oplus(odot(tau, p), odot(tau, q))))
      return ctx.fail("odot does not distribute over oplus");

    if (!eq(boxplus(p, q), boxplus(q, p)))
      return ctx.fail("boxplus not commutative");
    if (!eq(boxplus(boxplus(p, q), r), boxplus(p, boxplus(q, r))))
      return ctx.fail("boxplus not associative");
    if (!eq(boxplus(bottom, p), p))
      return ctx.fail("bottom is not the boxplus unit");
    if (!eq(boxdot(tau + sigma, p), boxdot(tau, boxdot(sigma, p))))
      return ctx.fail("boxdot action not additive");
    if (!eq(boxdot(ExtNonNeg(0.0), p), p)) return ctx.fail("0 boxdot p != p");
    if (!eq(boxdot(ExtNonNeg::infinity(), p), bottom))
      return ctx.fail("inf boxdot p != bottom");
    if (!eq(boxdot(tau, boxplus(p, q)),
            boxplus(boxdot(tau, p), boxdot(tau, q))))
      return ctx.fail("boxdot does not distribute over boxplus");

    // Morphism laws, probed at the embedded points.
    for (std::size_t x = 0; x < space->size(); ++x) {
      IsbellPoint ex = embed(space, x);
      ExtNonNeg lhs = isbell_dist(oplus(odot(tau, p), odot(sigma, q)), ex,
                                  ctx.cfg.tol);
      ExtNonNeg rhs = max(monus(isbell_dist(p, ex, ctx.cfg.tol), tau),
                          monus(isbell_dist(q, ex, ctx.cfg.tol), sigma));
      ++ctx.checks;
      if (!approx_eq(lhs, rhs, ctx.cfg.tol))
        return ctx.fail("co-metric morphism law fails at " + space->label(x));

      lhs = isbell_dist(ex, boxplus(boxdot(tau, p), boxdot(sigma, q)),
                        ctx.cfg.tol);
      rhs = max(monus(isbell_dist(ex, p, ctx.cfg.tol), tau),
                monus(isbell_dist(ex, q, ctx.cfg.tol), sigma));
      ++ctx.checks;
      if (!approx_eq(lhs, rhs, ctx.cfg.tol))
        return ctx.fail("metric morphism law fails at " + space->label(x));
    }

    // Fat-out law at embedded points.
    for (std::size_t x0 = 0; x0 < space->size(); ++x0)
      for (std::size_t x = 0; x < space->size(); ++x) {
        ++ctx.checks;
        if (!approx_eq(isbell_dist(odot(tau, embed(space, x0)),
                                   embed(space, x), ctx.cfg.tol),
                       monus(space->d(x0, x), tau), ctx.cfg.tol))
          return ctx.fail("fat-out distance law fails");
      }
  }
}

struct RegisteredCheck {
  const char* canonical;
  std::vector<const char*> aliases;
  void (*fn)(CheckContext&);
};

const std::vector<RegisteredCheck>& registry() {
  static const std::vector<RegisteredCheck> entries = {
      {"thm3_1_adjunction", {"thm3_1"}, check_thm3_1},
      {"lemma3_2_metric", {"lemma3_2"}, check_lemma3_2},
      {"thm4_1_tight_span", {"thm4_1"}, check_thm4_1},
      {"thm4_2_hirai_koichi", {"thm4_2"}, check_thm4_2},
      {"sec5_3_discretization", {"sec5_3"}, check_sec5_3},
      {"lemma5_1_fat_out_coproducts", {"lemma5_1"}, check_lemma5_1},
      {"thm5_1_cocomplete_iff_module", {"thm5_1"}, check_thm5_1},
      {"thm6_1_pushforward", {"thm6_1"}, check_thm6_1},
      {"thm6_2_pointwise_colimits", {"thm6_2"}, check_thm6_2},
      {"thm7_1_projection_adjunction", {"thm7_1"}, check_thm7_1},
      {"thm7_2_fixed_colimits", {"thm7_2"}, check_thm7_2},
      {"thm7_6_fixed_limits", {"thm7_6"}, check_thm7_6},
      {"thm7_7_bicontinuity", {"thm7_7"}, check_thm7_7},
      {"cor7_module_structures", {"cor7", "cor7_1", "cor7_2"},
       check_cor7_modules},
  };
  return entries;
}

}  // namespace

VerifyReport verify_theorem(std::string_view name, const SpaceRef& space,
                            const VerifyConfig& config) {
  for (const RegisteredCheck& entry : registry()) {
    bool match = name == entry.canonical;
    for (const char* alias : entry.aliases) match = match || name == alias;
    if (!match) continue;

    CheckContext ctx(space, config);
    entry.fn(ctx);
    VerifyReport report;
    report.theorem = entry.canonical;
    report.passed = ctx.ok();
    report.checks = ctx.checks;
    if (!ctx.ok()) {
      report.detail = ctx.failure;
    } else if (!ctx.flags.empty()) {
      std::string joined;
      for (const auto& f : ctx.flags) {
        if (!joined.empty()) joined += "; ";
        joined += f;
      }
      report.detail = joined;
    } else {
      report.detail = "ok";
    }
    return report;
  }
  throw UnknownTheorem(std::string(name));
}

std::vector<std::string> registered_theorems() {
  std::vector<std::string> names;
  for (const RegisteredCheck& entry : registry())
    names.push_back(entry.canonical);
  return names;
}

}  // namespace isbell
