#pragma once

#include <array>
#include <compare>
#include <span>
#include <vector>

#include "foliage/spine.hpp"
#include "foliage/triangulation.hpp"

namespace foliage {

/// Nonzero edge-weight vector of a normal multicurve on a fixed ideal
/// triangulation. Construction validates the matching conditions.
class NormalVector {
 public:
  NormalVector(TriangulationPtr t, std::vector<long long> weights);

  const IdealTriangulation& triangulation() const { return *tri_; }
  const TriangulationPtr& triangulation_ptr() const { return tri_; }
  const std::vector<long long>& weights() const { return weights_; }
  long long total_weight() const;

  NormalVector operator+(const NormalVector& other) const;
  NormalVector scaled(long long k) const;

  friend bool operator==(const NormalVector& a, const NormalVector& b) { return a.weights_ == b.weights_; }
  friend auto operator<=>(const NormalVector& a, const NormalVector& b) { return a.weights_ <=> b.weights_; }

 private:
  TriangulationPtr tri_;
  std::vector<long long> weights_;
};

/// Validates parity and corner nonnegativity per triangle; rejects the zero
/// vector. Errors: BadLength, MatchingViolation, EmptyVector.
NormalVector validate_normal(const TriangulationPtr& t, std::vector<long long> weights);

/// Corner counts of a triangle: corner k holds (w_k + w_{k+1} - w_{k+2}) / 2 arcs.
std::array<long long, 3> corner_counts(const IdealTriangulation& t, const std::vector<long long>& w, int triangle);

enum class Classification { essential, peripheral };

struct TracedComponent {
  NormalVector primitive;
  int multiplicity = 1;
  Classification classification = Classification::essential;
  int puncture = -1;  // vertex class encircled, peripheral components only
};

/// Decomposes v into connected components, grouped by isotopy class.
/// Output is sorted by primitive vector.
std::vector<TracedComponent> trace_components(const NormalVector& v);

/// Closed dual path of a connected normal curve. Throws NotRealizable when v
/// has more than one component.
CyclicPath curve_path(const NormalVector& curve);

/// The connected normal curve carried by a reduced closed dual path.
NormalVector curve_from_path(const TriangulationPtr& t, const CyclicPath& path);

/// The same closed dual path redrawn on the target of a flip: each passage
/// through the quadrilateral is rerouted, crossing the new diagonal exactly
/// when it joins sides the diagonal separates.
CyclicPath retrace_path(const CoordinateTransport& ct, const CyclicPath& path);

/// A connected, non-peripheral curve.
bool is_essential_curve(const NormalVector& v);

/// Haken-sum disjointness of two essential primitive curves: the sum traces
/// back to exactly {a, b}. Equal curves are disjoint.
bool haken_disjoint(const NormalVector& a, const NormalVector& b);

/// Canonically ordered set of pairwise disjoint, distinct essential curves.
/// May be empty only when built with `empty`.
class CurveSystem {
 public:
  /// Validates essentiality, distinctness and pairwise disjointness.
  static CurveSystem from_curves(const TriangulationPtr& t, std::vector<NormalVector> curves);
  static CurveSystem empty(const TriangulationPtr& t);

  const TriangulationPtr& triangulation_ptr() const { return tri_; }
  const std::vector<NormalVector>& curves() const { return curves_; }
  int size() const { return static_cast<int>(curves_.size()); }
  bool contains(const NormalVector& c) const;
  /// Index of c in curves(), or -1.
  int index_of(const NormalVector& c) const;

  friend bool operator==(const CurveSystem& a, const CurveSystem& b) { return a.curves_ == b.curves_; }
  friend auto operator<=>(const CurveSystem& a, const CurveSystem& b) { return a.curves_ <=> b.curves_; }

 private:
  TriangulationPtr tri_;
  std::vector<NormalVector> curves_;
};

/// Essential components of v, multiplicities collapsed. NoEssentialComponent
/// when only peripheral components remain.
CurveSystem curve_system_from(const NormalVector& v);

/// Complementary region of a curve system. Boundary curves appear twice when
/// the region lies on both sides of the curve.
struct SubsurfacePiece {
  int genus = 0;
  std::vector<int> punctures;           // vertex classes, sorted
  std::vector<NormalVector> boundary;   // sorted, with multiplicity

  int puncture_count() const { return static_cast<int>(punctures.size()); }
  int boundary_circles() const { return static_cast<int>(boundary.size()); }
  int ends() const { return puncture_count() + boundary_circles(); }
  int complexity() const { return 3 * genus - 3 + ends(); }
  int euler_characteristic() const { return 2 - 2 * genus - ends(); }

  friend bool operator==(const SubsurfacePiece& a, const SubsurfacePiece& b) {
    return a.punctures == b.punctures && a.boundary == b.boundary && a.genus == b.genus;
  }
  friend auto operator<=>(const SubsurfacePiece& a, const SubsurfacePiece& b) {
    if (auto c = a.punctures <=> b.punctures; c != 0) return c;
    if (auto c = a.boundary <=> b.boundary; c != 0) return c;
    return a.genus <=> b.genus;
  }
};

/// Result of cutting the surface along pairwise disjoint distinct curves.
struct CutDecomposition {
  std::vector<NormalVector> curves;
  int num_regions = 0;
  std::vector<std::array<int, 2>> sides;    // regions on the two sides of each curve
  std::vector<std::vector<int>> punctures;  // per region
  std::vector<int> euler;                   // per region, punctures filled in
};

/// Throws NotDisjoint when the curves are not simultaneously disjoint.
CutDecomposition cut_along(const TriangulationPtr& t, std::span<const NormalVector> curves);

/// Complementary pieces of a system, canonically sorted. The empty system
/// yields the whole surface.
std::vector<SubsurfacePiece> complement_pieces(const CurveSystem& cs);

/// Whether region r of `cut` lies in `piece`, where piece is a complementary
/// piece of the curves of `cut` that bound it.
std::vector<bool> piece_membership(const CutDecomposition& cut, const SubsurfacePiece& piece);

/// True iff c is isotopic into the interior of the piece and not parallel to
/// a boundary circle. NotDisjoint when c crosses the piece boundary.
bool contains_curve(const TriangulationPtr& t, const SubsurfacePiece& piece, const NormalVector& c);

/// Whether the interiors of two pieces (of possibly different systems)
/// intersect after isotopy.
bool pieces_overlap(const TriangulationPtr& t, const SubsurfacePiece& a, const SubsurfacePiece& b);

}  // namespace foliage
