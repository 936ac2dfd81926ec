// Bigon-reduction intersection oracle.
//
// Both curves are drawn as chords of each triangle, their points interleaved
// on each edge by relative height. Chords in a disk cross iff their endpoints
// interleave on the boundary, and the order and orientation of crossings
// follow from the cyclic positions of those endpoints. Faces of each triangle
// are traced from a rotation system and glued across edge segments into the
// regions of S - (a u b). A region that is a puncture-free disk bounded by
// one arc of each curve is a bigon; pushing a across it deletes two crossings
// and merges the neighbouring regions. We repeat until no bigon is left.

#include <algorithm>
#include <array>
#include <numeric>
#include <vector>

#include "foliage/intersection.hpp"

namespace foliage {
namespace {

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  std::vector<int> parent;
};

// Combined ordering of the points of both curves on every edge, read in the
// direction of the edge's first slot.
class EdgeLayout {
 public:
  EdgeLayout(const IdealTriangulation& t, const std::array<const std::vector<long long>*, 2>& w) : t_(t), w_(w) {
    rank_.resize(t.num_edges());
    for (int e = 0; e < t.num_edges(); ++e) {
      const long long wa = (*w[0])[e], wb = (*w[1])[e];
      auto& r = rank_[e];
      r[0].resize(wa);
      r[1].resize(wb);
      long long p = 0, q = 0, next = 0;
      while (p < wa || q < wb) {
        // a-point p sits at height (p+1)/(wa+1), b-point q at (q+1)/(wb+1); ties put a first.
        const bool take_a = q >= wb || (p < wa && (p + 1) * (wb + 1) <= (q + 1) * (wa + 1));
        if (take_a) r[0][p++] = static_cast<int>(next++);
        else r[1][q++] = static_cast<int>(next++);
      }
    }
  }

  int width(int e) const { return static_cast<int>((*w_[0])[e] + (*w_[1])[e]); }

  // Combined rank, in the slot's own direction, of curve X's point at position p.
  int rank(int curve, Slot s, long long p) const {
    const int e = t_.edge_of(s);
    if (t_.edge_slots(e)[0] == s) return rank_[e][curve][p];
    const long long w = (*w_[curve])[e];
    return width(e) - 1 - rank_[e][curve][w - 1 - p];
  }

 private:
  const IdealTriangulation& t_;
  std::array<const std::vector<long long>*, 2> w_;
  std::vector<std::array<std::vector<int>, 2>> rank_;
};

// A crossing as seen from one of its chords.
struct Passage {
  int node;     // crossing node
  int forward;  // half-edge leaving the crossing toward the chord's q end
  int backward; // half-edge leaving it toward the p end
};

// Faces of one triangle cut by the chords of both curves.
struct TriangleFaces {
  int num_faces = 0;                            // interior faces only
  int num_crossings = 0;
  int crossing_node0 = 0;                       // node id of local crossing 0
  std::array<std::vector<int>, 3> segment_face; // per side, segments 0..W
  std::array<std::array<int, 4>, 2> chord_base; // per curve: first chord of each corner, plus end
  std::vector<int> passage_begin;               // per chord, into `passages`; plus end
  std::vector<Passage> passages;                // ordered p -> q along each chord
  std::vector<int> face;                        // per half-edge
};

TriangleFaces build_faces(const IdealTriangulation& t, const EdgeLayout& layout,
                          const std::array<const std::vector<long long>*, 2>& w, int tri) {
  TriangleFaces out;
  std::array<int, 3> width{};
  for (int i = 0; i < 3; ++i) width[i] = layout.width(t.edge_of({tri, i}));
  std::array<int, 4> offset{};
  for (int i = 0; i < 3; ++i) offset[i + 1] = offset[i] + 1 + width[i];
  const int boundary_nodes = offset[3];
  // Boundary nodes are numbered counterclockwise: V_0, side 0, V_1, side 1, ...
  auto bnode = [&](int side, int r) { return offset[side] + 1 + r; };
  auto ccw = [&](int from, int to) { return (to - from + boundary_nodes) % boundary_nodes; };

  struct Chord {
    int p_node, q_node;
  };
  std::vector<Chord> chords;
  for (int X = 0; X < 2; ++X) {
    const auto& wx = *w[X];
    const auto c = corner_counts(t, wx, tri);
    out.chord_base[X][0] = static_cast<int>(chords.size());
    for (int k = 0; k < 3; ++k) {
      const Slot sk{tri, k}, sk1{tri, (k + 1) % 3};
      const long long wk = wx[t.edge_of(sk)];
      for (long long j = 0; j < c[k]; ++j) {
        const int rp = layout.rank(X, sk, wk - 1 - j);
        const int rq = layout.rank(X, sk1, j);
        chords.push_back({bnode(k, rp), bnode((k + 1) % 3, rq)});
      }
      out.chord_base[X][k + 1] = static_cast<int>(chords.size());
    }
  }
  const int num_chords = static_cast<int>(chords.size());

  // Crossings. The boundary arc running counterclockwise from p to q lies to
  // the right of the chord p -> q, and a chord crossing it has exactly one
  // endpoint there; the nearer that endpoint is to p, the earlier the crossing.
  struct Crossing {
    int a, b;
    int along_a, along_b;  // ranks of the crossing along each chord
    bool b_right_to_left;  // b crosses a from a's right to its left
  };
  std::vector<Crossing> crossings;
  for (int ia = out.chord_base[0][0]; ia < out.chord_base[0][3]; ++ia) {
    const Chord& A = chords[ia];
    const int span_a = ccw(A.p_node, A.q_node);
    for (int ib = out.chord_base[1][0]; ib < out.chord_base[1][3]; ++ib) {
      const Chord& B = chords[ib];
      const int bp = ccw(A.p_node, B.p_node), bq = ccw(A.p_node, B.q_node);
      const bool p_right = bp < span_a, q_right = bq < span_a;
      if (p_right == q_right) continue;
      const int span_b = ccw(B.p_node, B.q_node);
      const int ap = ccw(B.p_node, A.p_node);
      const int a_right = ap < span_b ? ap : ccw(B.p_node, A.q_node);
      crossings.push_back({ia, ib, p_right ? bp : bq, a_right, p_right});
    }
  }
  const int nc = static_cast<int>(crossings.size());
  out.num_crossings = nc;
  out.crossing_node0 = boundary_nodes;
  const int nodes = boundary_nodes + nc;

  // Order crossings along every chord.
  std::vector<int> count(num_chords + 1, 0);
  for (const auto& c : crossings) {
    ++count[c.a + 1];
    ++count[c.b + 1];
  }
  std::partial_sum(count.begin(), count.end(), count.begin());
  out.passage_begin = count;
  std::vector<std::pair<int, int>> along(2 * static_cast<std::size_t>(nc));
  {
    std::vector<int> fill(count.begin(), count.end() - 1);
    for (int k = 0; k < nc; ++k) {
      along[fill[crossings[k].a]++] = {crossings[k].along_a, k};
      along[fill[crossings[k].b]++] = {crossings[k].along_b, k};
    }
  }
  for (int ch = 0; ch < num_chords; ++ch)
    std::sort(along.begin() + count[ch], along.begin() + count[ch + 1]);

  // Half-edges come in twin pairs h, h ^ 1.
  std::vector<int> to;
  to.reserve(2 * static_cast<std::size_t>(boundary_nodes + num_chords + 2 * nc));
  auto add_edge = [&](int u, int v) {
    to.push_back(v);
    to.push_back(u);
    return static_cast<int>(to.size()) - 2;
  };
  std::vector<int> boundary_next(boundary_nodes);
  for (int side = 0; side < 3; ++side)
    for (int r = -1; r < width[side]; ++r) {
      const int u = r < 0 ? offset[side] : bnode(side, r);
      const int v = r + 1 < width[side] ? bnode(side, r + 1) : offset[(side + 1) % 3];
      boundary_next[u] = add_edge(u, v);
    }
  std::vector<int> chord_edge_at(boundary_nodes, -1);
  out.passages.resize(along.size());
  // Half-edges leaving each crossing along its a-chord and its b-chord.
  std::vector<std::array<int, 4>> around(nc);  // a forward, a backward, b forward, b backward
  for (int ch = 0; ch < num_chords; ++ch) {
    const bool is_a = ch < out.chord_base[0][3];
    int prev = chords[ch].p_node;
    for (int k = count[ch]; k <= count[ch + 1]; ++k) {
      const int next = k < count[ch + 1] ? boundary_nodes + along[k].second : chords[ch].q_node;
      const int h = add_edge(prev, next);
      if (k == count[ch]) chord_edge_at[chords[ch].p_node] = h;
      else {
        out.passages[k - 1].forward = h;
        around[along[k - 1].second][is_a ? 0 : 2] = h;
      }
      if (k == count[ch + 1]) chord_edge_at[chords[ch].q_node] = h ^ 1;
      else {
        out.passages[k] = {next, -1, h ^ 1};
        around[along[k].second][is_a ? 1 : 3] = h ^ 1;
      }
      prev = next;
    }
  }

  // Rotation system, counterclockwise at every node.
  const int half_edges = static_cast<int>(to.size());
  std::vector<std::array<int, 4>> rot(nodes);
  std::vector<int> degree(nodes, 0);
  std::vector<int> boundary_back(boundary_nodes);
  for (int u = 0; u < boundary_nodes; ++u) boundary_back[to[boundary_next[u]]] = boundary_next[u] ^ 1;
  for (int u = 0; u < boundary_nodes; ++u) {
    // Along the boundary, into the triangle, back along the boundary.
    rot[u][degree[u]++] = boundary_next[u];
    if (chord_edge_at[u] >= 0) rot[u][degree[u]++] = chord_edge_at[u];
    rot[u][degree[u]++] = boundary_back[u];
  }
  for (int k = 0; k < nc; ++k) {
    const auto [af, ab, bf, bb] = around[k];
    const int node = boundary_nodes + k;
    // Counterclockwise from a's forward direction, b's forward direction comes
    // next exactly when b heads to a's left.
    rot[node] = crossings[k].b_right_to_left ? std::array<int, 4>{af, bf, ab, bb}
                                             : std::array<int, 4>{af, bb, ab, bf};
    degree[node] = 4;
  }
  std::vector<int> prev_in_rot(half_edges);  // h -> the half-edge before h at its origin
  for (int u = 0; u < nodes; ++u)
    for (int i = 0; i < degree[u]; ++i) prev_in_rot[rot[u][i]] = rot[u][(i + degree[u] - 1) % degree[u]];

  // Face tracing: next(u -> v) is the edge before (v -> u) in v's rotation.
  out.face.assign(half_edges, -1);
  auto trace = [&](int start, int id) {
    int h = start;
    do {
      out.face[h] = id;
      h = prev_in_rot[h ^ 1];
    } while (h != start);
  };
  trace(boundary_next[0] ^ 1, -2);  // the outer face runs clockwise along the boundary
  int faces = 0;
  for (int h = 0; h < half_edges; ++h)
    if (out.face[h] == -1) trace(h, faces++);
  out.num_faces = faces;

  for (int side = 0; side < 3; ++side) {
    auto& seg = out.segment_face[side];
    seg.resize(width[side] + 1);
    for (int s = 0; s <= width[side]; ++s) seg[s] = out.face[boundary_next[s == 0 ? offset[side] : bnode(side, s - 1)]];
  }
  return out;
}

struct Superposition {
  long long num_crossings = 0;
  // Per curve: the regions left and right of the segment that starts at each
  // crossing, in traversal order.
  std::array<std::vector<std::array<int, 2>>, 2> sides;
  // Per region: Euler characteristic (punctures filled in) and puncture count.
  std::vector<int> euler, punctures;
};

Superposition superpose(const NormalVector& a, const NormalVector& b) {
  const IdealTriangulation& t = a.triangulation();
  const std::array<const std::vector<long long>*, 2> w{&a.weights(), &b.weights()};
  const EdgeLayout layout(t, w);
  const int T = t.num_triangles();

  std::vector<TriangleFaces> tris;
  tris.reserve(T);
  std::vector<int> face_base(T + 1, 0);
  Superposition sp;
  for (int tri = 0; tri < T; ++tri) {
    tris.push_back(build_faces(t, layout, w, tri));
    face_base[tri + 1] = face_base[tri] + tris.back().num_faces;
    sp.num_crossings += tris.back().num_crossings;
  }
  if (sp.num_crossings == 0) return sp;

  UnionFind uf(face_base.back());
  for (int e = 0; e < t.num_edges(); ++e) {
    const auto [s0, s1] = t.edge_slots(e);
    const int W = layout.width(e);
    const auto& f0 = tris[s0.triangle].segment_face[s0.side];
    const auto& f1 = tris[s1.triangle].segment_face[s1.side];
    for (int s = 0; s <= W; ++s)
      uf.parent[uf.find(face_base[s0.triangle] + f0[s])] = uf.find(face_base[s1.triangle] + f1[W - s]);
  }
  std::vector<int> region(face_base.back());
  int regions = 0;
  {
    std::vector<int> id(face_base.back(), -1);
    for (int f = 0; f < face_base.back(); ++f) {
      const int r = uf.find(f);
      if (id[r] < 0) id[r] = regions++;
      region[f] = id[r];
    }
  }
  std::vector<int> chi(regions, 0);
  for (int f = 0; f < face_base.back(); ++f) ++chi[region[f]];
  for (int e = 0; e < t.num_edges(); ++e) {
    const Slot s0 = t.edge_slots(e)[0];
    for (int f : tris[s0.triangle].segment_face[s0.side]) --chi[region[face_base[s0.triangle] + f]];
  }
  // Each puncture lies in exactly one region; count distinct (region, class) pairs.
  std::vector<std::pair<int, int>> incident;
  for (int tri = 0; tri < T; ++tri)
    for (int side = 0; side < 3; ++side)
      incident.emplace_back(region[face_base[tri] + tris[tri].segment_face[side][0]],
                            t.vertex_class(tri, (side + 2) % 3));  // V_side starts segment 0
  std::sort(incident.begin(), incident.end());
  incident.erase(std::unique(incident.begin(), incident.end()), incident.end());
  sp.punctures.assign(regions, 0);
  for (auto [r, v] : incident) ++sp.punctures[r];
  sp.euler.resize(regions);
  for (int r = 0; r < regions; ++r) sp.euler[r] = chi[r] + sp.punctures[r];

  // Walk each curve, recording the regions beside each segment.
  for (int X = 0; X < 2; ++X) {
    const auto& wx = *w[X];
    int e0 = 0;
    while (wx[e0] == 0) ++e0;
    const Slot start = t.edge_slots(e0)[0];
    Slot cur = start;
    long long pos = 0;
    sp.sides[X].reserve(sp.num_crossings);
    do {
      const Slot in = t.glued(cur);
      const long long q = wx[t.edge_of(in)] - 1 - pos;
      const int tri = in.triangle, i = in.side, prev = (i + 2) % 3;
      const auto c = corner_counts(t, wx, tri);
      const TriangleFaces& tf = tris[tri];
      int chord;
      bool forward;
      if (q < c[prev]) {
        chord = tf.chord_base[X][prev] + static_cast<int>(q);
        forward = false;
        cur = {tri, prev};
        pos = wx[t.edge_of(cur)] - 1 - q;
      } else {
        const long long j = wx[t.edge_of(in)] - 1 - q;
        chord = tf.chord_base[X][i] + static_cast<int>(j);
        forward = true;
        cur = {tri, (i + 1) % 3};
        pos = j;
      }
      const int lo = tf.passage_begin[chord], hi = tf.passage_begin[chord + 1];
      for (int k = 0; k < hi - lo; ++k) {
        const Passage& ps = tf.passages[forward ? lo + k : hi - 1 - k];
        const int h = forward ? ps.forward : ps.backward;
        sp.sides[X].push_back({region[face_base[tri] + tf.face[h]], region[face_base[tri] + tf.face[h ^ 1]]});
      }
    } while (!(cur == start && pos == 0));
  }
  return sp;
}

// Removes bigons one at a time; returns the crossings that remain.
//
// Segments of each curve form a cyclic linked list. Every region keeps, per
// curve, the number of segment sides it borders and the xor of those segment
// ids, so a region bordered once by each curve names its two segments.
long long reduce_bigons(Superposition& sp) {
  long long remaining = sp.num_crossings;
  if (remaining == 0) return 0;
  const int regions = static_cast<int>(sp.euler.size());
  const int n = static_cast<int>(remaining);
  UnionFind uf(regions);
  std::array<std::vector<int>, 2> next, prev, count, xor_ids;
  for (int X = 0; X < 2; ++X) {
    next[X].resize(n);
    prev[X].resize(n);
    for (int k = 0; k < n; ++k) {
      next[X][k] = (k + 1) % n;
      prev[X][k] = (k + n - 1) % n;
    }
    count[X].assign(regions, 0);
    xor_ids[X].assign(regions, 0);
  }
  std::vector<int> work;
  auto touch = [&](int X, int k, int delta) {
    for (int side : sp.sides[X][k]) {
      const int r = uf.find(side);
      count[X][r] += delta;
      xor_ids[X][r] ^= k;
      work.push_back(r);
    }
  };
  for (int X = 0; X < 2; ++X)
    for (int k = 0; k < n; ++k) touch(X, k, +1);
  work.resize(regions);
  std::iota(work.begin(), work.end(), 0);

  while (remaining > 0 && !work.empty()) {
    const int r = uf.find(work.back());
    work.pop_back();
    if (count[0][r] != 1 || count[1][r] != 1 || sp.euler[r] != 1 || sp.punctures[r] != 0) continue;
    if (remaining == 2) return 0;

    const int sigma = xor_ids[0][r], tau = xor_ids[1][r];
    const int side_a = uf.find(sp.sides[0][sigma][0]) == r ? 0 : 1;
    const int side_b = uf.find(sp.sides[1][tau][0]) == r ? 0 : 1;
    const int pa = prev[0][sigma], na = next[0][sigma];
    const int pb = prev[1][tau], nb = next[1][tau];

    std::array<int, 3> merge{r, uf.find(sp.sides[0][pa][1 - side_a]), uf.find(sp.sides[0][na][1 - side_a])};
    const std::array<int, 2> keep_a{uf.find(sp.sides[0][pa][side_a]), -1};
    const std::array<int, 2> keep_b{uf.find(sp.sides[1][pb][side_b]), -1};
    for (int k : {pa, sigma, na}) touch(0, k, -1);
    for (int k : {pb, tau, nb}) touch(1, k, -1);

    std::sort(merge.begin(), merge.end());
    const int distinct = static_cast<int>(std::unique(merge.begin(), merge.end()) - merge.begin());
    const int root = merge[0];
    int euler = -2, punctures = 0;
    for (int i = 0; i < distinct; ++i) {
      euler += sp.euler[merge[i]];
      punctures += sp.punctures[merge[i]];
      if (i > 0) {
        uf.parent[merge[i]] = root;
        for (int X = 0; X < 2; ++X) {
          count[X][root] += count[X][merge[i]];
          xor_ids[X][root] ^= xor_ids[X][merge[i]];
        }
      }
    }
    sp.euler[root] = euler;
    sp.punctures[root] = punctures;

    // The merged segments reuse the ids of the ones before the bigon.
    sp.sides[0][pa][side_a] = keep_a[0];
    sp.sides[0][pa][1 - side_a] = root;
    next[0][pa] = next[0][na];
    prev[0][next[0][na]] = pa;
    sp.sides[1][pb][side_b] = keep_b[0];
    sp.sides[1][pb][1 - side_b] = root;
    next[1][pb] = next[1][nb];
    prev[1][next[1][nb]] = pb;
    touch(0, pa, +1);
    touch(1, pb, +1);
    remaining -= 2;
  }
  return remaining;
}

}  // namespace

long long superposition_crossings(const NormalVector& a, const NormalVector& b) {
  return superpose(a, b).num_crossings;
}

long long oracle_intersection(const NormalVector& a, const NormalVector& b) {
  Superposition sp = superpose(a, b);
  return reduce_bigons(sp);
}

}  // namespace foliage
