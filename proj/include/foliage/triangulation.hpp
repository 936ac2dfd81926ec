#pragma once

#include <array>
#include <compare>
#include <memory>
#include <utility>
#include <vector>

#include "foliage/surface.hpp"

namespace foliage {

/// A side of a triangle. Sides 0,1,2 run counterclockwise; side i goes from
/// vertex V_i to V_{i+1}.
struct Slot {
  int triangle = 0;
  int side = 0;

  friend auto operator<=>(const Slot&, const Slot&) = default;
};

/// Combinatorial ideal triangulation of a punctured surface.
///
/// Corner k of a triangle is the vertex V_{k+1} between side k and side k+1.
/// Gluings reverse orientation, so position p on a side matches position
/// w-1-p on its partner. Edge ids are explicit and survive flips.
class IdealTriangulation {
 public:
  /// `gluing[3t+i]` is the partner of slot (t,i); `edge_of_slot` may be empty
  /// (ids are then assigned in slot order). `class_order`, when given, maps
  /// the computed vertex classes (in order of first corner) to labels.
  IdealTriangulation(SurfaceType surface, std::vector<Slot> gluing,
                     std::vector<int> edge_of_slot = {}, std::vector<int> class_order = {});

  SurfaceType surface() const { return surface_; }
  int num_triangles() const { return static_cast<int>(gluing_.size()) / 3; }
  int num_edges() const { return static_cast<int>(edge_slots_.size()); }
  int num_vertex_classes() const { return num_classes_; }

  Slot glued(Slot s) const { return gluing_[index(s)]; }
  int edge_of(Slot s) const { return edge_of_slot_[index(s)]; }
  const std::array<Slot, 2>& edge_slots(int edge) const { return edge_slots_[edge]; }
  int vertex_class(int triangle, int corner) const { return corner_class_[3 * triangle + corner]; }

  /// Both sides of the edge lie in distinct triangles.
  bool flippable(int edge) const;

  /// The two ideal endpoints (vertex classes) of an edge.
  std::array<int, 2> edge_endpoints(int edge) const;

  friend bool operator==(const IdealTriangulation& a, const IdealTriangulation& b) {
    return a.surface_ == b.surface_ && a.gluing_ == b.gluing_ && a.edge_of_slot_ == b.edge_of_slot_ &&
           a.corner_class_ == b.corner_class_;
  }

 private:
  static int index(Slot s) { return 3 * s.triangle + s.side; }

  SurfaceType surface_;
  std::vector<Slot> gluing_;
  std::vector<int> edge_of_slot_;
  std::vector<std::array<Slot, 2>> edge_slots_;
  std::vector<int> corner_class_;
  int num_classes_ = 0;
};

using TriangulationPtr = std::shared_ptr<const IdealTriangulation>;

/// Free-group data attached to the standard triangulation: the dual graph
/// minus the petal edges is a spanning tree, and each petal, traversed by
/// exiting through `petal_exit[k]`, is the generator with letter k.
///
/// Generator order: a_1, c_1, ..., a_g, c_g, x_1, ..., x_{p-1}. The puncture
/// loops satisfy [a_1,c_1]...[a_g,c_g] x_1 ... x_{p-1} x_p = 1.
struct SpineData {
  int root = 0;
  std::vector<Slot> petal_exit;
};

struct StandardModel {
  TriangulationPtr triangulation;
  SpineData spine;
};

/// Deterministic triangulation: the dual of a rose ribbon graph with petals
/// a_k, b_k (interleaved) and x_i (consecutive), trivalentized along a
/// caterpillar tree. Vertex class i is puncture i+1.
StandardModel standard_model(SurfaceType s);

/// Cached shared instance of standard_model(s).
const StandardModel& cached_standard_model(SurfaceType s);

IdealTriangulation standard_triangulation(SurfaceType s);

/// Transport of edge weights across one flip. Edge ids are kept, so only the
/// flipped edge changes value.
struct CoordinateTransport {
  TriangulationPtr source;
  TriangulationPtr target;
  int edge = 0;
  std::array<int, 4> quad_edges{};  // a, b, c, d: sides of the quadrilateral, (a,c) and (b,d) opposite

  std::vector<long long> apply(const std::vector<long long>& weights) const;
};

/// Flips `edge`. Throws NotFlippable when both sides lie in one triangle.
std::pair<TriangulationPtr, CoordinateTransport> flip(const TriangulationPtr& t, int edge);

}  // namespace foliage
