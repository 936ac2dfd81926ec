#include "foliage/multicurve.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "foliage/error.hpp"

namespace foliage {

// ---------------------------------------------------------------------------
// NormalVector

namespace {

void check_matching(const IdealTriangulation& t, const std::vector<long long>& w) {
  if (static_cast<int>(w.size()) != t.num_edges())
    throw Error(ErrorKind::BadLength, "expected " + std::to_string(t.num_edges()) + " weights, got " +
                                          std::to_string(w.size()));
  for (long long x : w)
    if (x < 0) throw Error(ErrorKind::MatchingViolation, "negative weight");
  for (int tri = 0; tri < t.num_triangles(); ++tri) {
    long long sum = 0;
    for (int i = 0; i < 3; ++i) sum += w[t.edge_of({tri, i})];
    if (sum % 2 != 0) throw Error(ErrorKind::MatchingViolation, "triangle " + std::to_string(tri) + " has odd weight");
    for (long long c : corner_counts(t, w, tri))
      if (c < 0) throw Error(ErrorKind::MatchingViolation, "triangle " + std::to_string(tri) + " has a negative corner");
  }
  if (std::all_of(w.begin(), w.end(), [](long long x) { return x == 0; }))
    throw Error(ErrorKind::EmptyVector, "the zero vector carries no curve");
}

}  // namespace

std::array<long long, 3> corner_counts(const IdealTriangulation& t, const std::vector<long long>& w, int triangle) {
  std::array<long long, 3> side{};
  for (int i = 0; i < 3; ++i) side[i] = w[t.edge_of({triangle, i})];
  std::array<long long, 3> c{};
  for (int k = 0; k < 3; ++k) c[k] = (side[k] + side[(k + 1) % 3] - side[(k + 2) % 3]) / 2;
  return c;
}

NormalVector::NormalVector(TriangulationPtr t, std::vector<long long> weights)
    : tri_(std::move(t)), weights_(std::move(weights)) {
  check_matching(*tri_, weights_);
}

long long NormalVector::total_weight() const { return std::accumulate(weights_.begin(), weights_.end(), 0LL); }

NormalVector NormalVector::operator+(const NormalVector& other) const {
  std::vector<long long> w = weights_;
  for (std::size_t i = 0; i < w.size(); ++i) w[i] += other.weights_.at(i);
  return NormalVector(tri_, std::move(w));
}

NormalVector NormalVector::scaled(long long k) const {
  std::vector<long long> w = weights_;
  for (auto& x : w) x *= k;
  return NormalVector(tri_, std::move(w));
}

NormalVector validate_normal(const TriangulationPtr& t, std::vector<long long> weights) {
  return NormalVector(t, std::move(weights));
}

// ---------------------------------------------------------------------------
// Tracing

namespace {

struct Arc {
  int triangle;
  int corner;
  long long level;  // 0 = nearest the vertex
};

struct RawComponent {
  CyclicPath path;
  std::vector<long long> weights;
  std::vector<Arc> arcs;
};

class Tracer {
 public:
  Tracer(const IdealTriangulation& t, const std::vector<long long>& w) : t_(t), w_(w) {
    const int slots = 3 * t.num_triangles();
    offset_.resize(slots + 1, 0);
    for (int i = 0; i < slots; ++i) offset_[i + 1] = offset_[i] + width({i / 3, i % 3});
    corners_.resize(t.num_triangles());
    for (int tri = 0; tri < t.num_triangles(); ++tri) corners_[tri] = corner_counts(t, w, tri);
  }

  long long width(Slot s) const { return w_[t_.edge_of(s)]; }

  std::vector<RawComponent> run(bool keep_arcs) {
    const int slots = 3 * t_.num_triangles();
    std::vector<char> seen(static_cast<std::size_t>(offset_[slots]), 0);
    std::vector<RawComponent> out;
    for (int i = 0; i < slots; ++i) {
      const Slot s{i / 3, i % 3};
      for (long long p = 0; p < width(s); ++p) {
        if (seen[id(s, p)]) continue;
        RawComponent comp;
        comp.weights.assign(t_.num_edges(), 0);
        Slot cur = s;
        long long pos = p;
        do {
          comp.path.push_back(cur);
          ++comp.weights[t_.edge_of(cur)];
          seen[id(cur, pos)] = 1;
          const Slot in = t_.glued(cur);
          const long long q = width(in) - 1 - pos;
          seen[id(in, q)] = 1;
          const auto [next_side, next_pos, arc] = across(in, q);
          if (keep_arcs) comp.arcs.push_back(arc);
          cur = {in.triangle, next_side};
          pos = next_pos;
        } while (!(cur == s && pos == p));
        out.push_back(std::move(comp));
      }
    }
    return out;
  }

 private:
  std::size_t id(Slot s, long long p) const { return static_cast<std::size_t>(offset_[3 * s.triangle + s.side] + p); }

  struct Step {
    int side;
    long long pos;
    Arc arc;
  };

  // The other end of the normal arc through position p of side i.
  Step across(Slot s, long long p) const {
    const auto& c = corners_[s.triangle];
    const int i = s.side;
    const int prev = (i + 2) % 3;
    if (p < c[prev]) {
      // Corner at V_i joins side i-1 (position w-1-j) to side i (position j).
      return {prev, width({s.triangle, prev}) - 1 - p, Arc{s.triangle, prev, p}};
    }
    const long long j = width(s) - 1 - p;
    return {(i + 1) % 3, j, Arc{s.triangle, i, j}};
  }

  const IdealTriangulation& t_;
  const std::vector<long long>& w_;
  std::vector<long long> offset_;
  std::vector<std::array<long long, 3>> corners_;
};

// Weights of the loop around vertex class v: one crossing per edge end at v.
std::vector<long long> link_weights(const IdealTriangulation& t, int v) {
  std::vector<long long> w(t.num_edges(), 0);
  for (int e = 0; e < t.num_edges(); ++e) {
    const auto [x, y] = t.edge_endpoints(e);
    w[e] = (x == v) + (y == v);
  }
  return w;
}

int peripheral_class(const IdealTriangulation& t, const std::vector<long long>& w) {
  for (int v = 0; v < t.num_vertex_classes(); ++v)
    if (link_weights(t, v) == w) return v;
  return -1;
}

}  // namespace

std::vector<TracedComponent> trace_components(const NormalVector& v) {
  Tracer tracer(v.triangulation(), v.weights());
  struct Group {
    int count = 0;
    bool peripheral = false;
    int puncture = -1;
  };
  std::map<std::vector<long long>, Group> groups;
  for (auto& comp : tracer.run(false)) {
    auto& g = groups[comp.weights];
    if (g.count++ == 0) {
      g.puncture = peripheral_class(v.triangulation(), comp.weights);
      g.peripheral = g.puncture >= 0;
    }
  }
  std::vector<TracedComponent> out;
  for (auto& [w, g] : groups)
    out.push_back({NormalVector(v.triangulation_ptr(), w), g.count,
                   g.peripheral ? Classification::peripheral : Classification::essential, g.puncture});
  return out;
}

CyclicPath curve_path(const NormalVector& curve) {
  Tracer tracer(curve.triangulation(), curve.weights());
  auto comps = tracer.run(false);
  if (comps.size() != 1) throw Error(ErrorKind::NotRealizable, "vector is not a single connected curve");
  return std::move(comps.front().path);
}

NormalVector curve_from_path(const TriangulationPtr& t, const CyclicPath& path) {
  if (!is_reduced_closed_path(*t, path)) throw Error(ErrorKind::NotRealizable, "path is not a reduced closed path");
  return NormalVector(t, path_weights(*t, path));
}

CyclicPath retrace_path(const CoordinateTransport& ct, const CyclicPath& path) {
  const IdealTriangulation& t = *ct.source;
  const auto [s0, s1] = t.edge_slots(ct.edge);
  const int t0 = s0.triangle, t1 = s1.triangle;
  // Matches the slot layout produced by flip().
  auto moved = [&](Slot x) {
    if (x == Slot{t0, (s0.side + 1) % 3}) return Slot{t1, 1};
    if (x == Slot{t0, (s0.side + 2) % 3}) return Slot{t0, 0};
    if (x == Slot{t1, (s1.side + 1) % 3}) return Slot{t0, 1};
    return Slot{t1, 0};
  };
  const int n = static_cast<int>(path.size());
  auto at = [&](int k) { return path[((k % n) + n) % n]; };
  CyclicPath out;
  for (int k = 0; k < n; ++k) {
    const Slot exit = path[k];
    if (exit == s0 || exit == s1) continue;
    if (exit.triangle != t0 && exit.triangle != t1) {
      out.push_back(exit);
      continue;
    }
    Slot before = at(k - 1);
    if (before == s0 || before == s1) before = at(k - 2);
    const Slot in = moved(t.glued(before)), out_slot = moved(exit);
    if (in.triangle != out_slot.triangle) out.push_back(Slot{in.triangle, 2});
    out.push_back(out_slot);
  }
  return out;
}

bool is_essential_curve(const NormalVector& v) {
  const auto comps = trace_components(v);
  return comps.size() == 1 && comps.front().multiplicity == 1 &&
         comps.front().classification == Classification::essential;
}

bool haken_disjoint(const NormalVector& a, const NormalVector& b) {
  if (a == b) return true;
  const auto comps = trace_components(a + b);
  if (comps.size() != 2 || comps[0].multiplicity != 1 || comps[1].multiplicity != 1) return false;
  const auto& lo = std::min(a, b);
  const auto& hi = std::max(a, b);
  return comps[0].primitive == lo && comps[1].primitive == hi;
}

// ---------------------------------------------------------------------------
// Curve systems

CurveSystem CurveSystem::from_curves(const TriangulationPtr& t, std::vector<NormalVector> curves) {
  CurveSystem cs;
  cs.tri_ = t;
  std::sort(curves.begin(), curves.end());
  if (std::adjacent_find(curves.begin(), curves.end()) != curves.end())
    throw Error(ErrorKind::NotDisjoint, "curve system contains a repeated curve");
  for (const auto& c : curves)
    if (!is_essential_curve(c)) throw Error(ErrorKind::NoEssentialComponent, "system curve is not an essential curve");
  if (curves.size() >= 2) {
    NormalVector sum = curves.front();
    for (std::size_t i = 1; i < curves.size(); ++i) sum = sum + curves[i];
    const auto comps = trace_components(sum);
    bool ok = comps.size() == curves.size();
    for (std::size_t i = 0; ok && i < comps.size(); ++i)
      ok = comps[i].multiplicity == 1 && comps[i].primitive == curves[i];
    if (!ok) throw Error(ErrorKind::NotDisjoint, "system curves are not pairwise disjoint");
  }
  cs.curves_ = std::move(curves);
  return cs;
}

CurveSystem CurveSystem::empty(const TriangulationPtr& t) {
  CurveSystem cs;
  cs.tri_ = t;
  return cs;
}

bool CurveSystem::contains(const NormalVector& c) const { return index_of(c) >= 0; }

int CurveSystem::index_of(const NormalVector& c) const {
  auto it = std::lower_bound(curves_.begin(), curves_.end(), c);
  if (it == curves_.end() || !(*it == c)) return -1;
  return static_cast<int>(it - curves_.begin());
}

CurveSystem curve_system_from(const NormalVector& v) {
  std::vector<NormalVector> curves;
  for (const auto& comp : trace_components(v))
    if (comp.classification == Classification::essential) curves.push_back(comp.primitive);
  if (curves.empty()) throw Error(ErrorKind::NoEssentialComponent, "only peripheral components");
  return CurveSystem::from_curves(v.triangulation_ptr(), std::move(curves));
}

// ---------------------------------------------------------------------------
// Cutting

namespace {

struct UnionFind {
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
  std::vector<int> parent;
};

}  // namespace

CutDecomposition cut_along(const TriangulationPtr& tp, std::span<const NormalVector> curves) {
  const IdealTriangulation& t = *tp;
  CutDecomposition cut;
  cut.curves.assign(curves.begin(), curves.end());
  std::vector<long long> w(t.num_edges(), 0);
  for (const auto& c : curves)
    for (int e = 0; e < t.num_edges(); ++e) w[e] += c.weights()[e];

  // Pieces per triangle: 0 = central, then corner k levels 0..c_k-1.
  std::vector<std::array<long long, 3>> corners(t.num_triangles());
  std::vector<long long> base(t.num_triangles() + 1, 0);
  for (int tri = 0; tri < t.num_triangles(); ++tri) {
    corners[tri] = corner_counts(t, w, tri);
    base[tri + 1] = base[tri] + 1 + corners[tri][0] + corners[tri][1] + corners[tri][2];
  }
  auto piece = [&](int tri, int corner, long long level) -> int {
    const auto& c = corners[tri];
    if (level >= c[corner]) return static_cast<int>(base[tri]);
    long long off = 1;
    for (int k = 0; k < corner; ++k) off += c[k];
    return static_cast<int>(base[tri] + off + level);
  };
  auto segment_piece = [&](Slot s, long long seg) -> int {
    const auto& c = corners[s.triangle];
    const int prev = (s.side + 2) % 3;
    if (seg < c[prev]) return piece(s.triangle, prev, seg);
    return piece(s.triangle, s.side, w[t.edge_of(s)] - seg);
  };

  const int num_pieces = static_cast<int>(base.back());
  UnionFind uf(num_pieces);
  for (int e = 0; e < t.num_edges(); ++e) {
    const auto [s0, s1] = t.edge_slots(e);
    for (long long seg = 0; seg <= w[e]; ++seg) uf.unite(segment_piece(s0, seg), segment_piece(s1, w[e] - seg));
  }

  std::map<int, int> region_of_root;
  std::vector<int> region(num_pieces);
  for (int p = 0; p < num_pieces; ++p) {
    auto [it, inserted] = region_of_root.emplace(uf.find(p), static_cast<int>(region_of_root.size()));
    region[p] = it->second;
  }
  cut.num_regions = static_cast<int>(region_of_root.size());
  std::vector<long long> faces(cut.num_regions, 0), edges(cut.num_regions, 0);
  std::vector<std::set<int>> punct(cut.num_regions);
  for (int p = 0; p < num_pieces; ++p) ++faces[region[p]];
  for (int e = 0; e < t.num_edges(); ++e) {
    const Slot s0 = t.edge_slots(e)[0];
    for (long long seg = 0; seg <= w[e]; ++seg) ++edges[region[segment_piece(s0, seg)]];
  }
  for (int tri = 0; tri < t.num_triangles(); ++tri)
    for (int k = 0; k < 3; ++k) punct[region[piece(tri, k, 0)]].insert(t.vertex_class(tri, k));
  cut.punctures.resize(cut.num_regions);
  cut.euler.resize(cut.num_regions);
  for (int r = 0; r < cut.num_regions; ++r) {
    cut.punctures[r].assign(punct[r].begin(), punct[r].end());
    cut.euler[r] = static_cast<int>(static_cast<long long>(punct[r].size()) - edges[r] + faces[r]);
  }

  // Match traced components to the input curves and read off their sides.
  cut.sides.assign(curves.size(), {-1, -1});
  if (curves.empty()) return cut;
  Tracer tracer(t, w);
  auto comps = tracer.run(true);
  if (comps.size() != curves.size()) throw Error(ErrorKind::NotDisjoint, "curves are not simultaneously disjoint");
  std::vector<bool> matched(curves.size(), false);
  for (const auto& comp : comps) {
    std::size_t k = 0;
    while (k < curves.size() && (matched[k] || curves[k].weights() != comp.weights)) ++k;
    if (k == curves.size()) throw Error(ErrorKind::NotDisjoint, "curves are not simultaneously disjoint");
    matched[k] = true;
    const Arc& a = comp.arcs.front();
    cut.sides[k] = {region[piece(a.triangle, a.corner, a.level)], region[piece(a.triangle, a.corner, a.level + 1)]};
  }
  return cut;
}

std::vector<SubsurfacePiece> complement_pieces(const CurveSystem& cs) {
  const auto& curves = cs.curves();
  const CutDecomposition cut = cut_along(cs.triangulation_ptr(), curves);
  std::vector<SubsurfacePiece> pieces(cut.num_regions);
  for (int r = 0; r < cut.num_regions; ++r) pieces[r].punctures = cut.punctures[r];
  for (std::size_t k = 0; k < curves.size(); ++k)
    for (int r : cut.sides[k]) pieces[r].boundary.push_back(curves[k]);
  for (int r = 0; r < cut.num_regions; ++r) {
    auto& p = pieces[r];
    std::sort(p.boundary.begin(), p.boundary.end());
    const int twice_genus = 2 - p.boundary_circles() - cut.euler[r];
    if (twice_genus < 0 || twice_genus % 2 != 0)
      throw Error(ErrorKind::NotRealizable, "complementary region has inconsistent Euler characteristic");
    p.genus = twice_genus / 2;
  }
  std::sort(pieces.begin(), pieces.end());
  return pieces;
}

std::vector<bool> piece_membership(const CutDecomposition& cut, const SubsurfacePiece& target) {
  std::vector<bool> in_boundary(cut.curves.size(), false);
  for (std::size_t k = 0; k < cut.curves.size(); ++k)
    in_boundary[k] = std::binary_search(target.boundary.begin(), target.boundary.end(), cut.curves[k]);
  UnionFind uf(cut.num_regions);
  for (std::size_t k = 0; k < cut.curves.size(); ++k)
    if (!in_boundary[k]) uf.unite(cut.sides[k][0], cut.sides[k][1]);

  std::map<int, std::pair<std::set<int>, std::vector<NormalVector>>> groups;
  for (int r = 0; r < cut.num_regions; ++r) {
    auto& g = groups[uf.find(r)];
    g.first.insert(cut.punctures[r].begin(), cut.punctures[r].end());
  }
  for (std::size_t k = 0; k < cut.curves.size(); ++k)
    if (in_boundary[k])
      for (int r : cut.sides[k]) groups[uf.find(r)].second.push_back(cut.curves[k]);

  int found = -1;
  for (auto& [root, g] : groups) {
    std::sort(g.second.begin(), g.second.end());
    const std::vector<int> punct(g.first.begin(), g.first.end());
    if (punct == target.punctures && g.second == target.boundary) {
      if (found >= 0) throw Error(ErrorKind::NotRealizable, "piece is not uniquely identified");
      found = root;
    }
  }
  if (found < 0) throw Error(ErrorKind::NotRealizable, "piece does not occur in this decomposition");
  std::vector<bool> member(cut.num_regions);
  for (int r = 0; r < cut.num_regions; ++r) member[r] = uf.find(r) == found;
  return member;
}

namespace {

std::vector<NormalVector> distinct_boundary(const SubsurfacePiece& p) {
  std::vector<NormalVector> out = p.boundary;
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

bool contains_curve(const TriangulationPtr& t, const SubsurfacePiece& piece, const NormalVector& c) {
  auto curves = distinct_boundary(piece);
  for (const auto& b : curves) {
    if (!haken_disjoint(b, c)) throw Error(ErrorKind::NotDisjoint, "curve crosses the piece boundary");
    if (b == c) return false;
  }
  curves.push_back(c);
  const CutDecomposition cut = cut_along(t, curves);
  const auto member = piece_membership(cut, piece);
  return member[cut.sides.back()[0]];
}

bool pieces_overlap(const TriangulationPtr& t, const SubsurfacePiece& a, const SubsurfacePiece& b) {
  if (a == b) return true;
  std::vector<NormalVector> curves = distinct_boundary(a);
  for (const auto& c : distinct_boundary(b))
    if (!std::binary_search(curves.begin(), curves.end(), c)) curves.push_back(c);
  std::sort(curves.begin(), curves.end());
  for (std::size_t i = 0; i < curves.size(); ++i)
    for (std::size_t j = i + 1; j < curves.size(); ++j)
      if (!haken_disjoint(curves[i], curves[j])) return true;
  const CutDecomposition cut = cut_along(t, curves);
  const auto ma = piece_membership(cut, a);
  const auto mb = piece_membership(cut, b);
  for (int r = 0; r < cut.num_regions; ++r)
    if (ma[r] && mb[r]) return true;
  return false;
}

}  // namespace foliage
