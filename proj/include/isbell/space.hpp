#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "isbell/extnn.hpp"

namespace isbell {

/// A finite generalized metric space: labelled points and a distance table
/// with d(x,x) = 0 and the triangle inequality.  No symmetry is required and
/// inf is an allowed distance.  Immutable after construction.
class Space {
 public:
  /// Validates the axioms and returns the space, or throws ShapeMismatch /
  /// ZeroDiagonalViolation / TriangleViolation naming the witnessing points.
  static Space validated(std::vector<std::string> labels,
                         const std::vector<std::vector<ExtNonNeg>>& table,
                         double tol = kDefaultTol);

  /// Same, from a row-major flat table.
  static Space validated_flat(std::vector<std::string> labels,
                              std::vector<ExtNonNeg> table,
                              double tol = kDefaultTol);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Index of a labelled point; throws UnknownPoint.
  std::size_t index(std::string_view label) const;

  /// Distance from point i to point j.
  ExtNonNeg d(std::size_t i, std::size_t j) const {
    return table_[i * size() + j];
  }

  /// The same points with the metric reversed.
  Space opposite() const;

  /// Same points, every distance between distinct points set to inf.
  Space discretize() const;

  /// Quotient by the "mutual distance zero" relation; each class is
  /// represented by its lowest-index member.
  Space skeletalize() const;

  bool is_skeletal() const;

  /// Symmetric, skeletal and all distances finite.
  bool is_classical() const;

  bool operator==(const Space&) const = default;

 private:
  Space(std::vector<std::string> labels, std::vector<ExtNonNeg> table)
      : labels_(std::move(labels)), table_(std::move(table)) {}

  std::vector<std::string> labels_;
  std::vector<ExtNonNeg> table_;  // row-major, row = from, column = to
};

using SpaceRef = std::shared_ptr<const Space>;

inline SpaceRef share(Space space) {
  return std::make_shared<const Space>(std::move(space));
}

/// True when the two references denote the same space (same object or equal
/// labels and tables).
bool same_space(const SpaceRef& a, const SpaceRef& b);

/// Two points "a", "b" with d(a,b) = ab and d(b,a) = ba.
Space two_point_space(ExtNonNeg ab, ExtNonNeg ba);

/// Classical three-point space on "a", "b", "c" with the given pairwise
/// distances; validates the triangle inequality.
Space triangle_space(ExtNonNeg ab, ExtNonNeg ac, ExtNonNeg bc);

/// The one-point space.
Space point_space();

/// Discrete space on `n` points labelled d0, d1, ...  (all distances inf).
Space discrete_space(std::size_t n);

/// A distance non-increasing map between spaces, stored as an index table.
class ShortMap {
 public:
  /// Validates d_src(x,x') >= d_tgt(F(x),F(x')) for all pairs; throws
  /// Expansive naming the witnessing pair.
  static ShortMap checked(SpaceRef source, SpaceRef target,
                          std::vector<std::size_t> assignment,
                          double tol = kDefaultTol);

  /// Label-based convenience for the checked factory.
  static ShortMap checked_by_labels(SpaceRef source, SpaceRef target,
                                    const std::vector<std::string>& images,
                                    double tol = kDefaultTol);

  static ShortMap identity(SpaceRef space);

  const SpaceRef& source() const { return source_; }
  const SpaceRef& target() const { return target_; }
  std::size_t operator()(std::size_t i) const { return assignment_[i]; }
  const std::vector<std::size_t>& assignment() const { return assignment_; }

  /// Composition source -> target -> next.target; short by construction.
  ShortMap then(const ShortMap& next) const;

 private:
  ShortMap(SpaceRef source, SpaceRef target,
           std::vector<std::size_t> assignment)
      : source_(std::move(source)),
        target_(std::move(target)),
        assignment_(std::move(assignment)) {}

  SpaceRef source_;
  SpaceRef target_;
  std::vector<std::size_t> assignment_;
};

}  // namespace isbell
