#include "isbell/functionals.hpp"

#include <string>

#include "isbell/errors.hpp"

namespace isbell {

namespace {

void require_table_size(const SpaceRef& base,
                        const std::vector<ExtNonNeg>& values) {
  if (!base) throw BaseMismatch("functional has no base space");
  if (values.size() != base->size())
    throw ShapeMismatch("table has " + std::to_string(values.size()) +
                        " values for " + std::to_string(base->size()) +
                        " points");
}

}  // namespace

bool is_presheaf_table(const Space& base, std::span<const ExtNonNeg> values,
                       double tol) {
  for (std::size_t x = 0; x < base.size(); ++x)
    for (std::size_t y = 0; y < base.size(); ++y)
      if (base.d(x, y).value() + tol < monus(values[x], values[y]).value())
        return false;
  return true;
}

bool is_copresheaf_table(const Space& base, std::span<const ExtNonNeg> values,
                         double tol) {
  for (std::size_t x = 0; x < base.size(); ++x)
    for (std::size_t y = 0; y < base.size(); ++y)
      if (base.d(x, y).value() + tol < monus(values[y], values[x]).value())
        return false;
  return true;
}

RoleFlags classify_table(const Space& base, std::span<const ExtNonNeg> values,
                         double tol) {
  return RoleFlags{is_presheaf_table(base, values, tol),
                   is_copresheaf_table(base, values, tol)};
}

RoleFlags classify(const Functional& f, double tol) {
  return classify_table(*f.base(), f.values(), tol);
}

Functional Functional::raw(SpaceRef base, std::vector<ExtNonNeg> values) {
  require_table_size(base, values);
  return Functional(std::move(base), std::move(values), Role::raw);
}

Functional Functional::presheaf(SpaceRef base, std::vector<ExtNonNeg> values,
                                double tol) {
  require_table_size(base, values);
  if (!is_presheaf_table(*base, values, tol))
    throw RoleViolation("table is not a presheaf on its base");
  return Functional(std::move(base), std::move(values), Role::presheaf);
}

Functional Functional::copresheaf(SpaceRef base, std::vector<ExtNonNeg> values,
                                  double tol) {
  require_table_size(base, values);
  if (!is_copresheaf_table(*base, values, tol))
    throw RoleViolation("table is not a copresheaf on its base");
  return Functional(std::move(base), std::move(values), Role::copresheaf);
}

Functional Functional::with_role(SpaceRef base, std::vector<ExtNonNeg> values,
                                 Role role, double tol) {
  switch (role) {
    case Role::raw:
      return raw(std::move(base), std::move(values));
    case Role::presheaf:
      return presheaf(std::move(base), std::move(values), tol);
    case Role::copresheaf:
      return copresheaf(std::move(base), std::move(values), tol);
  }
  throw std::invalid_argument("unknown role");
}

Functional Functional::unchecked(SpaceRef base, std::vector<ExtNonNeg> values,
                                 Role role) {
  require_table_size(base, values);
  return Functional(std::move(base), std::move(values), role);
}

void require_same_base(const Functional& a, const Functional& b) {
  if (!same_space(a.base(), b.base()))
    throw BaseMismatch("functionals live over different spaces");
}

ExtNonNeg sup_excess(std::span<const ExtNonNeg> u,
                     std::span<const ExtNonNeg> v) {
  ExtNonNeg acc(0.0);
  for (std::size_t x = 0; x < u.size(); ++x)
    acc = max(acc, monus(u[x], v[x]));
  return acc;
}

ExtNonNeg presheaf_dist(const Functional& f, const Functional& g) {
  require_same_base(f, g);
  return sup_excess(g.values(), f.values());
}

ExtNonNeg opcopresheaf_dist(const Functional& g, const Functional& g2) {
  require_same_base(g, g2);
  return sup_excess(g.values(), g2.values());
}

Functional yoneda(const SpaceRef& space, std::size_t x) {
  if (x >= space->size()) throw UnknownPoint("index " + std::to_string(x));
  std::vector<ExtNonNeg> values(space->size());
  for (std::size_t i = 0; i < space->size(); ++i) values[i] = space->d(i, x);
  return Functional::unchecked(space, std::move(values), Role::presheaf);
}

Functional coyoneda(const SpaceRef& space, std::size_t x) {
  if (x >= space->size()) throw UnknownPoint("index " + std::to_string(x));
  std::vector<ExtNonNeg> values(space->size());
  for (std::size_t i = 0; i < space->size(); ++i) values[i] = space->d(x, i);
  return Functional::unchecked(space, std::move(values), Role::copresheaf);
}

}  // namespace isbell
