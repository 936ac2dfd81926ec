#pragma once

#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "foliage/adherence.hpp"
#include "foliage/curvecomplex.hpp"
#include "foliage/error.hpp"
#include "foliage/intersection.hpp"

namespace testing {

using namespace foliage;

inline constexpr SurfaceType S05{0, 5};
inline constexpr SurfaceType S06{0, 6};

inline const TriangulationPtr& tri(SurfaceType s) { return cached_standard_model(s).triangulation; }

inline NormalVector curve(SurfaceType s, const std::string& name) { return named_curve(s, name); }

inline CurveSystem system_of(SurfaceType s, const std::vector<std::string>& names) {
  std::vector<NormalVector> curves;
  for (const auto& n : names) curves.push_back(curve(s, n));
  return CurveSystem::from_curves(tri(s), std::move(curves));
}

inline FoliationClass annuli(SurfaceType s, const std::vector<std::string>& names) {
  return annular_class(system_of(s, names));
}

/// Loop around one puncture: the link of its vertex class.
inline NormalVector peripheral(SurfaceType s, int vertex_class) {
  const auto& t = *tri(s);
  std::vector<long long> w(t.num_edges(), 0);
  for (int e = 0; e < t.num_edges(); ++e)
    for (int end : t.edge_endpoints(e)) w[e] += end == vertex_class;
  return NormalVector(tri(s), w);
}

/// Index of the complement piece of cs containing the given puncture.
inline int piece_with_puncture(const CurveSystem& cs, int vertex_class) {
  const auto pieces = complement_pieces(cs);
  for (int i = 0; i < static_cast<int>(pieces.size()); ++i)
    for (int p : pieces[i].punctures)
      if (p == vertex_class) return i;
  return -1;
}

/// Deterministic sample of index pairs (i, j), i < j < n.
inline std::vector<std::pair<int, int>> sample_pairs(int n, int count, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<std::pair<int, int>> out;
  while (static_cast<int>(out.size()) < count) {
    int i = pick(rng), j = pick(rng);
    if (i == j) continue;
    out.emplace_back(std::min(i, j), std::max(i, j));
  }
  return out;
}

}  // namespace testing
