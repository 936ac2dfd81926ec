#include "foliage/triangulation.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

#include "foliage/error.hpp"

namespace foliage {
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

IdealTriangulation::IdealTriangulation(SurfaceType surface, std::vector<Slot> gluing,
                                       std::vector<int> edge_of_slot, std::vector<int> class_order)
    : surface_(surface), gluing_(std::move(gluing)), edge_of_slot_(std::move(edge_of_slot)) {
  const int slots = static_cast<int>(gluing_.size());
  if (slots == 0 || slots % 3 != 0) throw Error(ErrorKind::NotRealizable, "triangulation needs 3T slots");
  for (int i = 0; i < slots; ++i) {
    const Slot s{i / 3, i % 3};
    const Slot g = gluing_[i];
    if (g.triangle < 0 || 3 * g.triangle + g.side >= slots || g.side < 0 || g.side > 2 || g == s ||
        glued(g) != s)
      throw Error(ErrorKind::NotRealizable, "gluing is not a fixed-point-free involution");
  }

  if (edge_of_slot_.empty()) {
    edge_of_slot_.assign(slots, -1);
    int next = 0;
    for (int i = 0; i < slots; ++i) {
      if (edge_of_slot_[i] >= 0) continue;
      edge_of_slot_[i] = next;
      edge_of_slot_[index(gluing_[i])] = next;
      ++next;
    }
  }
  const int edges = slots / 2;
  edge_slots_.assign(edges, {Slot{-1, -1}, Slot{-1, -1}});
  for (int i = 0; i < slots; ++i) {
    const int e = edge_of_slot_[i];
    if (e < 0 || e >= edges || edge_of_slot_[index(gluing_[i])] != e)
      throw Error(ErrorKind::NotRealizable, "edge ids inconsistent with gluing");
    auto& pair = edge_slots_[e];
    const Slot s{i / 3, i % 3};
    if (pair[0].triangle < 0) {
      pair[0] = s;
    } else if (pair[1].triangle < 0) {
      pair[1] = s;
    } else {
      throw Error(ErrorKind::NotRealizable, "edge id used by more than two slots");
    }
  }
  for (auto& pair : edge_slots_)
    if (pair[0] > pair[1]) std::swap(pair[0], pair[1]);

  // Corner k of t sits at V_{k+1}, the start of side k+1; across that side it
  // is the end of the partner side j, i.e. corner j of the partner triangle.
  UnionFind uf(slots);
  for (int t = 0; t < num_triangles(); ++t)
    for (int k = 0; k < 3; ++k) {
      const Slot partner = glued(Slot{t, (k + 1) % 3});
      uf.unite(3 * t + k, 3 * partner.triangle + partner.side);
    }
  std::map<int, int> root_id;
  corner_class_.assign(slots, 0);
  for (int i = 0; i < slots; ++i) {
    auto [it, inserted] = root_id.emplace(uf.find(i), static_cast<int>(root_id.size()));
    corner_class_[i] = it->second;
  }
  num_classes_ = static_cast<int>(root_id.size());
  if (!class_order.empty()) {
    if (static_cast<int>(class_order.size()) != num_classes_)
      throw Error(ErrorKind::NotRealizable, "class_order has wrong size");
    for (int& c : corner_class_) c = class_order[c];
  }

  if (surface_.punctures != num_classes_ ||
      num_triangles() - num_edges() != euler_characteristic(surface_))
    throw Error(ErrorKind::NotRealizable, "triangulation does not match " + to_string(surface_));
}

bool IdealTriangulation::flippable(int edge) const {
  const auto& s = edge_slots_.at(edge);
  return s[0].triangle != s[1].triangle;
}

std::array<int, 2> IdealTriangulation::edge_endpoints(int edge) const {
  const Slot s = edge_slots_.at(edge)[0];
  return {vertex_class(s.triangle, (s.side + 2) % 3), vertex_class(s.triangle, s.side)};
}

namespace {

// Half-edges of the rose in counterclockwise order, as (letter, +1/-1).
// Letters: a_k = 2k, b_k = 2k+1 (handles), then x_i.
std::vector<std::pair<int, int>> rose_order(int genus, int nx) {
  std::vector<std::pair<int, int>> order;
  for (int k = 0; k < genus; ++k) {
    order.emplace_back(2 * k, +1);
    order.emplace_back(2 * k + 1, +1);
    order.emplace_back(2 * k, -1);
    order.emplace_back(2 * k + 1, -1);
  }
  for (int i = 0; i < nx; ++i) {
    order.emplace_back(2 * genus + i, +1);
    order.emplace_back(2 * genus + i, -1);
  }
  return order;
}

}  // namespace

StandardModel standard_model(SurfaceType s) {
  if (!admissibility(s).enumerable)
    throw Error(ErrorKind::NotEnumerable, to_string(s) + " needs p >= 1 and 3g-3+p >= 1");
  const int nx = s.punctures - 1;
  const auto order = rose_order(s.genus, nx);
  const int d = static_cast<int>(order.size());
  const int tris = d - 2;

  // Caterpillar: triangle 0 = (h0, h1, tree), triangle k = (tree, h_{k+1}, tree),
  // last = (tree, h_{d-2}, h_{d-1}).
  std::vector<Slot> leaf(d);
  leaf[0] = {0, 0};
  leaf[1] = {0, 1};
  for (int k = 1; k + 1 < tris; ++k) leaf[k + 1] = {k, 1};
  leaf[d - 2] = {tris - 1, 1};
  leaf[d - 1] = {tris - 1, 2};

  std::vector<Slot> gluing(3 * tris);
  auto glue = [&](Slot a, Slot b) {
    gluing[3 * a.triangle + a.side] = b;
    gluing[3 * b.triangle + b.side] = a;
  };
  for (int k = 0; k + 1 < tris; ++k) glue({k, 2}, {k + 1, 0});

  const int letters = 2 * s.genus + nx;
  std::vector<Slot> plus(letters), minus(letters);
  for (int h = 0; h < d; ++h) (order[h].second > 0 ? plus : minus)[order[h].first] = leaf[h];
  for (int l = 0; l < letters; ++l) glue(plus[l], minus[l]);

  SpineData spine;
  spine.root = 0;
  for (int k = 0; k < s.genus; ++k) {
    spine.petal_exit.push_back(plus[2 * k]);       // a_k
    spine.petal_exit.push_back(minus[2 * k + 1]);  // c_k = b_k^{-1}
  }
  for (int i = 0; i < nx; ++i) spine.petal_exit.push_back(plus[2 * s.genus + i]);

  // Label classes: the class whose incident petals are exactly {x_i} is puncture i.
  IdealTriangulation raw(s, gluing);
  std::vector<int> label(raw.num_vertex_classes(), -1);
  std::vector<std::set<int>> petals_at(raw.num_vertex_classes());
  for (int l = 0; l < letters; ++l) {
    const int e = raw.edge_of(plus[l]);
    for (int c : raw.edge_endpoints(e)) petals_at[c].insert(l);
  }
  std::vector<bool> used(raw.num_vertex_classes(), false);
  for (int i = 0; i < nx; ++i) {
    const int letter = 2 * s.genus + i;
    for (int c = 0; c < raw.num_vertex_classes(); ++c)
      if (petals_at[c] == std::set<int>{letter}) {
        label[c] = i;
        used[c] = true;
      }
  }
  for (int c = 0; c < raw.num_vertex_classes(); ++c)
    if (!used[c]) label[c] = nx;

  StandardModel model;
  model.triangulation = std::make_shared<const IdealTriangulation>(s, gluing, std::vector<int>{}, label);
  model.spine = std::move(spine);
  return model;
}

const StandardModel& cached_standard_model(SurfaceType s) {
  static std::mutex mutex;
  static std::map<SurfaceType, StandardModel> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(s);
  if (it == cache.end()) it = cache.emplace(s, standard_model(s)).first;
  return it->second;
}

IdealTriangulation standard_triangulation(SurfaceType s) { return *standard_model(s).triangulation; }

std::vector<long long> CoordinateTransport::apply(const std::vector<long long>& weights) const {
  if (static_cast<int>(weights.size()) != source->num_edges())
    throw Error(ErrorKind::BadLength, "transport input has wrong length");
  std::vector<long long> out = weights;
  const auto w = [&](int k) { return weights[quad_edges[k]]; };
  out[edge] = std::max(w(0) + w(2), w(1) + w(3)) - weights[edge];
  if (out[edge] < 0) throw Error(ErrorKind::NotRealizable, "transport produced a negative weight");
  return out;
}

std::pair<TriangulationPtr, CoordinateTransport> flip(const TriangulationPtr& t, int edge) {
  if (edge < 0 || edge >= t->num_edges()) throw Error(ErrorKind::NotFlippable, "no such edge");
  if (!t->flippable(edge)) throw Error(ErrorKind::NotFlippable, "edge " + std::to_string(edge) + " is self-glued");
  const auto [s0, s1] = t->edge_slots(edge);
  const int t0 = s0.triangle, t1 = s1.triangle;
  const Slot a{t0, (s0.side + 1) % 3}, b{t0, (s0.side + 2) % 3};
  const Slot c{t1, (s1.side + 1) % 3}, d{t1, (s1.side + 2) % 3};
  // New t0 = (b, c, f), new t1 = (d, a, f).
  const std::array<std::pair<Slot, Slot>, 4> moved{
      {{a, Slot{t1, 1}}, {b, Slot{t0, 0}}, {c, Slot{t0, 1}}, {d, Slot{t1, 0}}}};
  auto remap = [&](Slot x) {
    for (const auto& [from, to] : moved)
      if (from == x) return to;
    return x;
  };

  const int slots = 3 * t->num_triangles();
  std::vector<Slot> gluing(slots);
  std::vector<int> edge_ids(slots);
  std::vector<int> corner_label(slots);
  for (int i = 0; i < slots; ++i) {
    const Slot s{i / 3, i % 3};
    gluing[i] = t->glued(s);
    edge_ids[i] = t->edge_of(s);
    corner_label[i] = t->vertex_class(s.triangle, s.side);
  }
  for (const auto& [from, to] : moved) {
    const Slot partner = remap(t->glued(from));
    gluing[3 * to.triangle + to.side] = partner;
    gluing[3 * partner.triangle + partner.side] = to;
    edge_ids[3 * to.triangle + to.side] = t->edge_of(from);
  }
  gluing[3 * t0 + 2] = Slot{t1, 2};
  gluing[3 * t1 + 2] = Slot{t0, 2};
  edge_ids[3 * t0 + 2] = edge;
  edge_ids[3 * t1 + 2] = edge;

  // Quad vertices: P = V_{i0}, Q = V_{i0+1}, X = apex of t0, Y = apex of t1.
  const int P = t->vertex_class(t0, (s0.side + 2) % 3);
  const int Q = t->vertex_class(t0, s0.side);
  const int X = t->vertex_class(t0, (s0.side + 1) % 3);
  const int Y = t->vertex_class(t1, (s1.side + 1) % 3);
  const std::array<int, 6> new_corners{P, Y, X, Q, X, Y};  // t0 = (X,P,Y), t1 = (Y,Q,X)
  for (int k = 0; k < 3; ++k) {
    corner_label[3 * t0 + k] = new_corners[k];
    corner_label[3 * t1 + k] = new_corners[3 + k];
  }

  // Classes are recomputed and relabelled through any corner.
  IdealTriangulation raw(t->surface(), gluing, edge_ids);
  std::vector<int> order(raw.num_vertex_classes(), -1);
  for (int i = 0; i < slots; ++i) {
    int& o = order[raw.vertex_class(i / 3, i % 3)];
    if (o >= 0 && o != corner_label[i]) throw Error(ErrorKind::NotRealizable, "inconsistent vertex classes after flip");
    o = corner_label[i];
  }
  auto target = std::make_shared<const IdealTriangulation>(t->surface(), gluing, edge_ids, order);

  CoordinateTransport transport;
  transport.source = t;
  transport.target = target;
  transport.edge = edge;
  transport.quad_edges = {t->edge_of(a), t->edge_of(b), t->edge_of(c), t->edge_of(d)};
  return {target, transport};
}

}  // namespace foliage
