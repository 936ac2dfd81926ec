#pragma once

#include <string>
#include <vector>

#include "foliage/triangulation.hpp"

namespace foliage {

/// Closed edge path in the dual graph: the sequence of slots through which
/// the path leaves each triangle. Read cyclically.
using CyclicPath = std::vector<Slot>;

/// Word in a free group; letter k+1 is generator k, -(k+1) its inverse.
using Word = std::vector<int>;

/// Freely reduces a word.
Word reduce(const Word& w);
/// Freely and cyclically reduces a word (result is a cyclic word).
Word cyclic_reduce(const Word& w);
Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);

/// Removes backtracking (leaving through the slot just entered), cyclically.
CyclicPath reduce_path(const IdealTriangulation& t, const CyclicPath& path);

/// Same closed path traversed backwards.
CyclicPath reverse_path(const IdealTriangulation& t, const CyclicPath& path);

/// True when the path leaves every triangle through the triangle it entered
/// by a different side.
bool is_reduced_closed_path(const IdealTriangulation& t, const CyclicPath& path);

/// Number of times the path crosses each edge.
std::vector<long long> path_weights(const IdealTriangulation& t, const CyclicPath& path);

/// Rotation-and-direction-insensitive canonical form of a cyclic path.
CyclicPath canonical_rotation(const CyclicPath& path);

/// The spanning-tree side of the standard spine: translates between closed
/// dual paths and free-group words in the petal generators.
class Spine {
 public:
  Spine(TriangulationPtr t, SpineData data);

  const IdealTriangulation& triangulation() const { return *tri_; }
  int rank() const { return static_cast<int>(data_.petal_exit.size()); }

  /// Petal crossings of a closed path, in order.
  Word path_to_word(const CyclicPath& path) const;

  /// Closed reduced path representing the conjugacy class of `w`; empty for
  /// the trivial class.
  CyclicPath word_to_path(const Word& w) const;

 private:
  TriangulationPtr tri_;
  SpineData data_;
  std::vector<int> petal_letter_of_edge_;     // -1 on tree edges
  std::vector<CyclicPath> root_to_;           // tree path from root to each triangle
};

/// Shared spine of the standard model of `s`.
const Spine& standard_spine(SurfaceType s);

}  // namespace foliage
