#include "isbell/random.hpp"

#include <string>

namespace isbell {

namespace {

// Min-plus transitive closure; preserves zero diagonal and step multiples.
void close_triangles(std::vector<ExtNonNeg>& d, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        d[i * n + j] = min(d[i * n + j], d[i * n + k] + d[k * n + j]);
}

}  // namespace

Space random_space(Rng& rng, const SpaceOptions& options) {
  const std::size_t n = options.points;
  std::uniform_int_distribution<int> steps(1, options.max_steps);
  std::uniform_real_distribution<double> coin(0.0, 1.0);

  std::vector<ExtNonNeg> d(n * n, ExtNonNeg(0.0));
  auto draw = [&]() -> ExtNonNeg {
    double toss = coin(rng);
    if (toss < options.infinity_prob) return ExtNonNeg::infinity();
    if (toss < options.infinity_prob + options.zero_prob) return ExtNonNeg(0.0);
    return ExtNonNeg(options.step * steps(rng));
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (options.symmetric && j < i) {
        d[i * n + j] = d[j * n + i];
        continue;
      }
      d[i * n + j] = draw();
    }
  close_triangles(d, n);

  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    labels.push_back(std::string(1, static_cast<char>('a' + i % 26)) +
                     (i >= 26 ? std::to_string(i / 26) : ""));
  return Space::validated_flat(std::move(labels), std::move(d), 0.0);
}

std::vector<ExtNonNeg> random_table(Rng& rng, std::size_t size, double step,
                                    int max_steps, double infinity_prob) {
  std::uniform_int_distribution<int> steps(0, max_steps);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<ExtNonNeg> out(size);
  for (auto& v : out) {
    if (infinity_prob > 0.0 && coin(rng) < infinity_prob)
      v = ExtNonNeg::infinity();
    else
      v = ExtNonNeg(step * steps(rng));
  }
  return out;
}

Functional random_presheaf(Rng& rng, const SpaceRef& space, double step,
                           int max_steps) {
  std::uniform_int_distribution<std::size_t> pick(0, space->size() - 1);
  std::uniform_int_distribution<int> steps(0, max_steps);
  std::uniform_int_distribution<int> count(1, 3);
  std::vector<ExtNonNeg> out(space->size(), ExtNonNeg::infinity());
  for (int c = count(rng); c > 0; --c) {
    std::size_t j = pick(rng);
    ExtNonNeg w(step * steps(rng));
    for (std::size_t x = 0; x < space->size(); ++x)
      out[x] = min(out[x], space->d(x, j) + w);
  }
  return Functional::unchecked(space, std::move(out), Role::presheaf);
}

Functional random_copresheaf(Rng& rng, const SpaceRef& space, double step,
                             int max_steps) {
  std::uniform_int_distribution<std::size_t> pick(0, space->size() - 1);
  std::uniform_int_distribution<int> steps(0, max_steps);
  std::uniform_int_distribution<int> count(1, 3);
  std::vector<ExtNonNeg> out(space->size(), ExtNonNeg::infinity());
  for (int c = count(rng); c > 0; --c) {
    std::size_t j = pick(rng);
    ExtNonNeg w(step * steps(rng));
    for (std::size_t x = 0; x < space->size(); ++x)
      out[x] = min(out[x], space->d(j, x) + w);
  }
  return Functional::unchecked(space, std::move(out), Role::copresheaf);
}

IsbellPoint random_completion_point(Rng& rng, const SpaceRef& space,
                                    double step, int max_steps) {
  Functional raw = Functional::raw(
      space, random_table(rng, space->size(), step, max_steps));
  return IsbellPoint::from_presheaf(project_RL(raw), 0.0);
}

ShortMap random_short_map(Rng& rng, SpaceRef target, std::size_t points,
                          double step, int max_steps) {
  std::uniform_int_distribution<std::size_t> pick(0, target->size() - 1);
  std::uniform_int_distribution<int> extra(0, max_steps);
  std::vector<std::size_t> assignment(points);
  for (auto& a : assignment) a = pick(rng);

  // Source distances dominate the image distances, so the map is short and
  // the triangle closure cannot dip below them.
  const std::size_t n = points;
  std::vector<ExtNonNeg> d(n * n, ExtNonNeg(0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      d[i * n + j] =
          target->d(assignment[i], assignment[j]) + ExtNonNeg(step * extra(rng));
    }
  close_triangles(d, n);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("s" + std::to_string(i));
  SpaceRef source = share(Space::validated_flat(std::move(labels), std::move(d), 0.0));
  return ShortMap::checked(std::move(source), std::move(target),
                           std::move(assignment), 0.0);
}

WeightedDiagram random_point_diagram(Rng& rng, SpaceRef target,
                                     std::size_t shape_points, double step,
                                     int max_steps, bool for_colimit) {
  ShortMap j = random_short_map(rng, std::move(target), shape_points, step,
                                max_steps);
  SpaceRef shape = j.source();
  Functional weight = for_colimit
                          ? random_presheaf(rng, shape, step, max_steps)
                          : random_copresheaf(rng, shape, step, max_steps);
  return make_weighted_diagram(std::move(j), std::move(weight));
}

}  // namespace isbell
