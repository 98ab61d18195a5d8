#pragma once

#include <cmath>
#include <compare>
#include <cstddef>
#include <limits>
#include <ostream>
#include <span>
#include <stdexcept>

namespace isbell {

/// Default tolerance for approximate comparisons.  Dyadic inputs need none;
/// callers working with arbitrary doubles can widen it.
inline constexpr double kDefaultTol = 1e-9;

/// A value in [0, inf]: the hom-object of the enriching structure and the
/// scalar of the semi-tropical semiring ([0,inf], min, +).
///
/// The asymmetric metric on it is d(a, b) = max(b - a, 0), the truncated
/// difference.  Conventions: finite + inf = inf, inf - finite "truncates" to
/// inf, finite - inf to 0, and inf - inf to 0 (so d(a, a) = 0 holds at inf
/// too).  NaN and negative values are not representable.
class ExtNonNeg {
 public:
  constexpr ExtNonNeg() = default;

  constexpr ExtNonNeg(double v) : v_(v) {
    if (!(v >= 0.0))  // also rejects NaN
      throw std::invalid_argument("ExtNonNeg: value must be >= 0 and not NaN");
  }

  static constexpr ExtNonNeg infinity() {
    return ExtNonNeg(std::numeric_limits<double>::infinity());
  }

  constexpr double value() const { return v_; }
  constexpr bool finite() const {
    return v_ != std::numeric_limits<double>::infinity();
  }

  friend constexpr bool operator==(ExtNonNeg, ExtNonNeg) = default;
  friend constexpr auto operator<=>(ExtNonNeg, ExtNonNeg) = default;

  friend constexpr ExtNonNeg operator+(ExtNonNeg a, ExtNonNeg b) {
    return ExtNonNeg(a.v_ + b.v_);  // IEEE handles inf absorption
  }

  friend std::ostream& operator<<(std::ostream& os, ExtNonNeg v) {
    if (!v.finite()) return os << "inf";
    return os << v.value();
  }

 private:
  double v_ = 0.0;
};

/// Truncated difference b (-) a = max(b - a, 0), with inf (-) inf = 0.
constexpr ExtNonNeg monus(ExtNonNeg b, ExtNonNeg a) {
  if (b.value() <= a.value()) return ExtNonNeg(0.0);
  return ExtNonNeg(b.value() - a.value());  // a finite here; b may be inf
}

/// The asymmetric metric on [0, inf]: d(a, b) = b (-) a.
constexpr ExtNonNeg dist_interval(ExtNonNeg a, ExtNonNeg b) {
  return monus(b, a);
}

constexpr ExtNonNeg min(ExtNonNeg a, ExtNonNeg b) { return a < b ? a : b; }
constexpr ExtNonNeg max(ExtNonNeg a, ExtNonNeg b) { return a < b ? b : a; }

/// Supremum with the empty convention sup({}) = 0.
constexpr ExtNonNeg sup(std::span<const ExtNonNeg> values) {
  ExtNonNeg acc(0.0);
  for (ExtNonNeg v : values) acc = max(acc, v);
  return acc;
}

/// Infimum with the empty convention inf({}) = inf.
constexpr ExtNonNeg inf(std::span<const ExtNonNeg> values) {
  ExtNonNeg acc = ExtNonNeg::infinity();
  for (ExtNonNeg v : values) acc = min(acc, v);
  return acc;
}

/// |a - b| <= tol, treating inf as equal only to inf.
constexpr bool approx_eq(ExtNonNeg a, ExtNonNeg b, double tol = kDefaultTol) {
  if (!a.finite() || !b.finite()) return a.finite() == b.finite();
  double diff = a.value() - b.value();
  return diff <= tol && -diff <= tol;
}

}  // namespace isbell
