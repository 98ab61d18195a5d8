#pragma once

#include <span>
#include <vector>

#include "isbell/space.hpp"

namespace isbell {

/// Role a table X -> [0,inf] plays over its base space.  Presheaves are
/// "distance-to" functionals (d(x,x') >= f(x) (-) f(x')), copresheaves
/// "distance-from" ones (d(x,x') >= f(x') (-) f(x)); raw tables carry no
/// constraint, which is what the Isbell operators consume.
enum class Role { raw, presheaf, copresheaf };

struct RoleFlags {
  bool presheaf = false;
  bool copresheaf = false;
};

/// A table over the points of a fixed base space, tagged with its role.
class Functional {
 public:
  static Functional raw(SpaceRef base, std::vector<ExtNonNeg> values);

  /// Validating factories; throw RoleViolation when the table does not
  /// satisfy the claimed constraint.
  static Functional presheaf(SpaceRef base, std::vector<ExtNonNeg> values,
                             double tol = kDefaultTol);
  static Functional copresheaf(SpaceRef base, std::vector<ExtNonNeg> values,
                               double tol = kDefaultTol);
  static Functional with_role(SpaceRef base, std::vector<ExtNonNeg> values,
                              Role role, double tol = kDefaultTol);

  /// No validation; for tables whose role is guaranteed by construction.
  static Functional unchecked(SpaceRef base, std::vector<ExtNonNeg> values,
                              Role role);

  const SpaceRef& base() const { return base_; }
  Role role() const { return role_; }
  std::span<const ExtNonNeg> values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  ExtNonNeg operator[](std::size_t i) const { return values_[i]; }

  bool operator==(const Functional& other) const {
    return values_ == other.values_ && same_space(base_, other.base_);
  }

 private:
  Functional(SpaceRef base, std::vector<ExtNonNeg> values, Role role)
      : base_(std::move(base)), values_(std::move(values)), role_(role) {}

  SpaceRef base_;
  std::vector<ExtNonNeg> values_;
  Role role_;
};

/// Throws BaseMismatch unless both functionals live over the same space.
void require_same_base(const Functional& a, const Functional& b);

/// sup_x (u(x) (-) v(x)): how far u rises above v.  The building block of
/// every functional-space metric here.
ExtNonNeg sup_excess(std::span<const ExtNonNeg> u,
                     std::span<const ExtNonNeg> v);

/// Distance in the presheaf space: sup_x (g(x) (-) f(x)).
ExtNonNeg presheaf_dist(const Functional& f, const Functional& g);

/// Distance in the op-copresheaf space: sup_x (g(x) (-) g'(x)).
ExtNonNeg opcopresheaf_dist(const Functional& g, const Functional& g2);

/// x |-> d(-, x), the distance-to-x presheaf.
Functional yoneda(const SpaceRef& space, std::size_t x);

/// x |-> d(x, -), the distance-from-x copresheaf.
Functional coyoneda(const SpaceRef& space, std::size_t x);

/// Which role constraints the table satisfies (independent of its tag).
RoleFlags classify(const Functional& f, double tol = kDefaultTol);
RoleFlags classify_table(const Space& base, std::span<const ExtNonNeg> values,
                         double tol = kDefaultTol);

bool is_presheaf_table(const Space& base, std::span<const ExtNonNeg> values,
                       double tol = kDefaultTol);
bool is_copresheaf_table(const Space& base, std::span<const ExtNonNeg> values,
                         double tol = kDefaultTol);

}  // namespace isbell
