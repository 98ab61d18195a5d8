#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace isbell {

/// Base class for all structured failures; `name()` is the stable identifier
/// the CLI reports verbatim.
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& message)
      : std::runtime_error(name + ": " + message), name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

#define ISBELL_DEFINE_ERROR(NAME)                                       \
  class NAME : public Error {                                           \
   public:                                                              \
    explicit NAME(const std::string& message) : Error(#NAME, message) {} \
  }

ISBELL_DEFINE_ERROR(ShapeMismatch);
ISBELL_DEFINE_ERROR(ZeroDiagonalViolation);
ISBELL_DEFINE_ERROR(TriangleViolation);
ISBELL_DEFINE_ERROR(Expansive);
ISBELL_DEFINE_ERROR(UnknownPoint);
ISBELL_DEFINE_ERROR(BaseMismatch);
ISBELL_DEFINE_ERROR(RoleViolation);
ISBELL_DEFINE_ERROR(NotFixed);
ISBELL_DEFINE_ERROR(InternalInconsistency);
ISBELL_DEFINE_ERROR(NoWitness);
ISBELL_DEFINE_ERROR(NotClassical);
ISBELL_DEFINE_ERROR(NotInAim);
ISBELL_DEFINE_ERROR(NotTight);
ISBELL_DEFINE_ERROR(NotTriangular);
ISBELL_DEFINE_ERROR(LengthMismatch);
ISBELL_DEFINE_ERROR(BudgetExceeded);
ISBELL_DEFINE_ERROR(UnknownTheorem);

#undef ISBELL_DEFINE_ERROR

}  // namespace isbell
