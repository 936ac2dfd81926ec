#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace foliage {

enum class ErrorKind {
  ComplexityNegative,
  NotEnumerable,
  NotFlippable,
  NotRealizable,
  BadLength,
  MatchingViolation,
  EmptyVector,
  NoEssentialComponent,
  NotDisjoint,
  UnknownGenerator,
  EmptyClass,
  PieceTooSimple,
  SpuriousCurve,
  MixedSurfaces,
  UniverseTooSmall,
  Parse,
};

std::string_view to_string(ErrorKind kind);

/// Every recoverable failure in the library is reported through this type.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace foliage
