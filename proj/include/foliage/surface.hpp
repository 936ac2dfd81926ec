#pragma once

#include <compare>
#include <string>

namespace foliage {

/// Orientable surface of genus `genus` with `punctures` punctures.
struct SurfaceType {
  int genus = 0;
  int punctures = 0;

  friend auto operator<=>(const SurfaceType&, const SurfaceType&) = default;
};

/// 3g - 3 + p; throws ComplexityNegative below zero.
int complexity(SurfaceType s);

/// 2 - 2g - p.
int euler_characteristic(SurfaceType s);

struct Admissibility {
  bool theorem_part1 = false;  // not S_{0,p<=4}, not S_{1,p<=2}
  bool theorem_part2 = false;  // additionally not the closed genus-two surface
  bool enumerable = false;     // p >= 1 and complexity >= 1
};

Admissibility admissibility(SurfaceType s);

/// Parses "g,p".
SurfaceType parse_surface(const std::string& text);

std::string to_string(SurfaceType s);

}  // namespace foliage
