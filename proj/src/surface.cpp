#include "foliage/surface.hpp"

#include <charconv>

#include "foliage/error.hpp"

namespace foliage {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ComplexityNegative: return "ComplexityNegative";
    case ErrorKind::NotEnumerable: return "NotEnumerable";
    case ErrorKind::NotFlippable: return "NotFlippable";
    case ErrorKind::NotRealizable: return "NotRealizable";
    case ErrorKind::BadLength: return "BadLength";
    case ErrorKind::MatchingViolation: return "MatchingViolation";
    case ErrorKind::EmptyVector: return "EmptyVector";
    case ErrorKind::NoEssentialComponent: return "NoEssentialComponent";
    case ErrorKind::NotDisjoint: return "NotDisjoint";
    case ErrorKind::UnknownGenerator: return "UnknownGenerator";
    case ErrorKind::EmptyClass: return "EmptyClass";
    case ErrorKind::PieceTooSimple: return "PieceTooSimple";
    case ErrorKind::SpuriousCurve: return "SpuriousCurve";
    case ErrorKind::MixedSurfaces: return "MixedSurfaces";
    case ErrorKind::UniverseTooSmall: return "UniverseTooSmall";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

int complexity(SurfaceType s) {
  const int xi = 3 * s.genus - 3 + s.punctures;
  if (xi < 0) throw Error(ErrorKind::ComplexityNegative, to_string(s));
  return xi;
}

int euler_characteristic(SurfaceType s) { return 2 - 2 * s.genus - s.punctures; }

Admissibility admissibility(SurfaceType s) {
  Admissibility a;
  const bool small_sphere = s.genus == 0 && s.punctures <= 4;
  const bool small_torus = s.genus == 1 && s.punctures <= 2;
  a.theorem_part1 = !(small_sphere || small_torus);
  a.theorem_part2 = a.theorem_part1 && !(s.genus == 2 && s.punctures == 0);
  a.enumerable = s.punctures >= 1 && 3 * s.genus - 3 + s.punctures >= 1;
  return a;
}

SurfaceType parse_surface(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw Error(ErrorKind::Parse, "surface must be 'g,p': " + text);
  SurfaceType s;
  const char* b = text.data();
  const char* e = b + text.size();
  auto r1 = std::from_chars(b, b + comma, s.genus);
  auto r2 = std::from_chars(b + comma + 1, e, s.punctures);
  if (r1.ec != std::errc{} || r1.ptr != b + comma || r2.ec != std::errc{} || r2.ptr != e ||
      s.genus < 0 || s.punctures < 0)
    throw Error(ErrorKind::Parse, "surface must be 'g,p': " + text);
  return s;
}

std::string to_string(SurfaceType s) {
  return "S(" + std::to_string(s.genus) + "," + std::to_string(s.punctures) + ")";
}

}  // namespace foliage
