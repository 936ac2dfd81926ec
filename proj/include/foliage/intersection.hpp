#pragma once

#include "foliage/multicurve.hpp"

namespace foliage {

/// i(a, b) = 0, decided by tracing the Haken sum a + b.
bool disjoint(const NormalVector& a, const NormalVector& b);

/// Minimal crossing number of two essential curves, counted as linked pairs
/// of maximal common segments of their dual paths.
long long geometric_intersection(const NormalVector& a, const NormalVector& b);

/// Dual path of a curve in both directions, with the positions of every
/// slot, for repeated intersection queries.
struct IndexedPath {
  CyclicPath forward, reversed;
  std::vector<std::vector<int>> at_forward, at_reversed;  // by slot index 3t+s
};

IndexedPath index_path(const IdealTriangulation& t, const CyclicPath& path);

/// geometric_intersection on indexed paths of two distinct curves.
long long path_intersection(const IdealTriangulation& t, const IndexedPath& a, const IndexedPath& b);

/// Independent computation of i(a, b): superimpose straight-chord normal
/// representatives, then remove innermost bigons until none remain.
long long oracle_intersection(const NormalVector& a, const NormalVector& b);

/// Crossings of the superimposed representatives before any bigon removal.
long long superposition_crossings(const NormalVector& a, const NormalVector& b);

}  // namespace foliage
