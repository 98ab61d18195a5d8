#include "isbell/space.hpp"

#include <algorithm>
#include <sstream>

#include "isbell/errors.hpp"

namespace isbell {

namespace {

std::string pair_msg(const Space& s, std::size_t i, std::size_t j) {
  return s.label(i) + ", " + s.label(j);
}

}  // namespace

Space Space::validated(std::vector<std::string> labels,
                       const std::vector<std::vector<ExtNonNeg>>& table,
                       double tol) {
  if (table.size() != labels.size())
    throw ShapeMismatch("table has " + std::to_string(table.size()) +
                        " rows for " + std::to_string(labels.size()) +
                        " labels");
  std::vector<ExtNonNeg> flat;
  flat.reserve(labels.size() * labels.size());
  for (const auto& row : table) {
    if (row.size() != labels.size())
      throw ShapeMismatch("row has " + std::to_string(row.size()) +
                          " entries for " + std::to_string(labels.size()) +
                          " labels");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return validated_flat(std::move(labels), std::move(flat), tol);
}

Space Space::validated_flat(std::vector<std::string> labels,
                            std::vector<ExtNonNeg> table, double tol) {
  const std::size_t n = labels.size();
  if (table.size() != n * n)
    throw ShapeMismatch("flat table has " + std::to_string(table.size()) +
                        " entries, expected " + std::to_string(n * n));
  Space space(std::move(labels), std::move(table));
  for (std::size_t i = 0; i < n; ++i)
    if (!approx_eq(space.d(i, i), ExtNonNeg(0.0), tol))
      throw ZeroDiagonalViolation(space.label(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        ExtNonNeg via = space.d(i, j) + space.d(j, k);
        if (via.value() + tol < space.d(i, k).value()) {
          std::ostringstream msg;
          msg << space.label(i) << ", " << space.label(j) << ", "
              << space.label(k) << ": d=" << space.d(i, k)
              << " exceeds path " << via;
          throw TriangleViolation(msg.str());
        }
      }
  return space;
}

std::size_t Space::index(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  throw UnknownPoint(std::string(label));
}

Space Space::opposite() const {
  const std::size_t n = size();
  std::vector<ExtNonNeg> transposed(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) transposed[j * n + i] = d(i, j);
  return Space(labels_, std::move(transposed));
}

Space Space::discretize() const {
  const std::size_t n = size();
  std::vector<ExtNonNeg> table(n * n, ExtNonNeg::infinity());
  for (std::size_t i = 0; i < n; ++i) table[i * n + i] = ExtNonNeg(0.0);
  return Space(labels_, std::move(table));
}

Space Space::skeletalize() const {
  const std::size_t n = size();
  std::vector<std::size_t> rep(n);
  for (std::size_t i = 0; i < n; ++i) {
    rep[i] = i;
    for (std::size_t j = 0; j < i; ++j)
      if (d(i, j) == ExtNonNeg(0.0) && d(j, i) == ExtNonNeg(0.0)) {
        rep[i] = rep[j];
        break;
      }
  }
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < n; ++i)
    if (rep[i] == i) kept.push_back(i);
  std::vector<std::string> labels;
  labels.reserve(kept.size());
  for (std::size_t i : kept) labels.push_back(labels_[i]);
  std::vector<ExtNonNeg> table(kept.size() * kept.size());
  for (std::size_t a = 0; a < kept.size(); ++a)
    for (std::size_t b = 0; b < kept.size(); ++b)
      table[a * kept.size() + b] = d(kept[a], kept[b]);
  return Space(std::move(labels), std::move(table));
}

bool Space::is_skeletal() const {
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = i + 1; j < size(); ++j)
      if (d(i, j) == ExtNonNeg(0.0) && d(j, i) == ExtNonNeg(0.0)) return false;
  return true;
}

bool Space::is_classical() const {
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j) {
      if (!d(i, j).finite()) return false;
      if (d(i, j) != d(j, i)) return false;
    }
  return is_skeletal();
}

bool same_space(const SpaceRef& a, const SpaceRef& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

Space two_point_space(ExtNonNeg ab, ExtNonNeg ba) {
  return Space::validated({"a", "b"}, {{ExtNonNeg(0.0), ab},
                                       {ba, ExtNonNeg(0.0)}});
}

Space triangle_space(ExtNonNeg ab, ExtNonNeg ac, ExtNonNeg bc) {
  return Space::validated({"a", "b", "c"},
                          {{ExtNonNeg(0.0), ab, ac},
                           {ab, ExtNonNeg(0.0), bc},
                           {ac, bc, ExtNonNeg(0.0)}});
}

Space point_space() {
  return Space::validated({"pt"}, {{ExtNonNeg(0.0)}});
}

Space discrete_space(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back("d" + std::to_string(i));
  std::vector<std::vector<ExtNonNeg>> table(
      n, std::vector<ExtNonNeg>(n, ExtNonNeg::infinity()));
  for (std::size_t i = 0; i < n; ++i) table[i][i] = ExtNonNeg(0.0);
  return Space::validated(std::move(labels), table);
}

ShortMap ShortMap::checked(SpaceRef source, SpaceRef target,
                           std::vector<std::size_t> assignment, double tol) {
  if (assignment.size() != source->size())
    throw ShapeMismatch("assignment covers " +
                        std::to_string(assignment.size()) + " of " +
                        std::to_string(source->size()) + " points");
  for (std::size_t i : assignment)
    if (i >= target->size())
      throw UnknownPoint("target index " + std::to_string(i));
  for (std::size_t x = 0; x < source->size(); ++x)
    for (std::size_t y = 0; y < source->size(); ++y) {
      ExtNonNeg from = source->d(x, y);
      ExtNonNeg to = target->d(assignment[x], assignment[y]);
      if (from.value() + tol < to.value())
        throw Expansive(pair_msg(*source, x, y) + ": " +
                        std::to_string(from.value()) + " < " +
                        std::to_string(to.value()));
    }
  return ShortMap(std::move(source), std::move(target), std::move(assignment));
}

ShortMap ShortMap::checked_by_labels(SpaceRef source, SpaceRef target,
                                     const std::vector<std::string>& images,
                                     double tol) {
  std::vector<std::size_t> assignment;
  assignment.reserve(images.size());
  for (const auto& label : images) assignment.push_back(target->index(label));
  return checked(std::move(source), std::move(target), std::move(assignment),
                 tol);
}

ShortMap ShortMap::identity(SpaceRef space) {
  std::vector<std::size_t> assignment(space->size());
  for (std::size_t i = 0; i < assignment.size(); ++i) assignment[i] = i;
  return ShortMap(space, space, std::move(assignment));
}

ShortMap ShortMap::then(const ShortMap& next) const {
  if (!same_space(target_, next.source()))
    throw BaseMismatch("composition targets do not line up");
  std::vector<std::size_t> composed(assignment_.size());
  for (std::size_t i = 0; i < assignment_.size(); ++i)
    composed[i] = next(assignment_[i]);
  return ShortMap(source_, next.target(), std::move(composed));
}

}  // namespace isbell
