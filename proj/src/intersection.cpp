#include "foliage/intersection.hpp"

namespace foliage {

bool disjoint(const NormalVector& a, const NormalVector& b) { return haken_disjoint(a, b); }

namespace {

std::vector<std::vector<int>> slot_positions(const IdealTriangulation& t, const CyclicPath& path) {
  std::vector<std::vector<int>> at(3 * static_cast<std::size_t>(t.num_triangles()));
  for (std::size_t j = 0; j < path.size(); ++j) at[3 * path[j].triangle + path[j].side].push_back(static_cast<int>(j));
  return at;
}

// Counts crossings contributed by maximal common segments of A and B, both
// read in the given directions. A segment shared for a full period means the
// two paths coincide; it carries no crossing.
long long linked_segments(const IdealTriangulation& t, const CyclicPath& A, const CyclicPath& B,
                          const std::vector<std::vector<int>>& where) {
  const std::size_t m = A.size(), n = B.size();
  long long count = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const Slot a_prev = A[(i + m - 1) % m];
    for (int jj : where[3 * A[i].triangle + A[i].side]) {
      const std::size_t j = static_cast<std::size_t>(jj);
      if (a_prev == B[(j + n - 1) % n]) continue;  // not the start of a maximal segment
      std::size_t len = 1;
      const std::size_t cap = m + n;
      while (len <= cap && A[(i + len) % m] == B[(j + len) % n]) ++len;
      if (len > cap) continue;
      // Arriving: A comes in on the left of the shared stretch iff it enters
      // through the side after the exit side x.
      const int x = A[i].side;
      const bool left_at_start = t.glued(a_prev).side == (x + 1) % 3;
      // Leaving: the stretch enters its last triangle through y; turning
      // left means leaving through the side before y.
      const int y = t.glued(A[(i + len - 1) % m]).side;
      const bool left_at_end = A[(i + len) % m].side == (y + 2) % 3;
      if (left_at_start != left_at_end) ++count;
    }
  }
  return count;
}

}  // namespace

IndexedPath index_path(const IdealTriangulation& t, const CyclicPath& path) {
  IndexedPath ip;
  ip.forward = path;
  ip.reversed = reverse_path(t, path);
  ip.at_forward = slot_positions(t, ip.forward);
  ip.at_reversed = slot_positions(t, ip.reversed);
  return ip;
}

long long path_intersection(const IdealTriangulation& t, const IndexedPath& a, const IndexedPath& b) {
  return linked_segments(t, a.forward, b.forward, b.at_forward) +
         linked_segments(t, a.forward, b.reversed, b.at_reversed);
}

long long geometric_intersection(const NormalVector& a, const NormalVector& b) {
  if (a == b) return 0;
  const IdealTriangulation& t = a.triangulation();
  return path_intersection(t, index_path(t, curve_path(a)), index_path(t, curve_path(b)));
}

}  // namespace foliage
