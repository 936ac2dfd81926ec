#include "foliage/spine.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <queue>

#include "foliage/error.hpp"

namespace foliage {

Word reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (int l : w) {
    if (!out.empty() && out.back() == -l) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

Word cyclic_reduce(const Word& w) {
  Word r = reduce(w);
  std::size_t b = 0, e = r.size();
  while (e - b >= 2 && r[b] == -r[e - 1]) {
    ++b;
    --e;
  }
  return Word(r.begin() + static_cast<std::ptrdiff_t>(b), r.begin() + static_cast<std::ptrdiff_t>(e));
}

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (int& l : out) l = -l;
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return reduce(out);
}

CyclicPath reduce_path(const IdealTriangulation& t, const CyclicPath& path) {
  CyclicPath out;
  out.reserve(path.size());
  for (Slot s : path) {
    if (!out.empty() && t.glued(out.back()) == s) {
      out.pop_back();
    } else {
      out.push_back(s);
    }
  }
  std::size_t b = 0, e = out.size();
  while (e - b >= 2 && t.glued(out[e - 1]) == out[b]) {
    ++b;
    --e;
  }
  return CyclicPath(out.begin() + static_cast<std::ptrdiff_t>(b), out.begin() + static_cast<std::ptrdiff_t>(e));
}

CyclicPath reverse_path(const IdealTriangulation& t, const CyclicPath& path) {
  CyclicPath out;
  out.reserve(path.size());
  for (auto it = path.rbegin(); it != path.rend(); ++it) out.push_back(t.glued(*it));
  return out;
}

bool is_reduced_closed_path(const IdealTriangulation& t, const CyclicPath& path) {
  if (path.empty()) return false;
  for (std::size_t i = 0; i < path.size(); ++i) {
    const Slot entered = t.glued(path[i]);
    const Slot next = path[(i + 1) % path.size()];
    if (next.triangle != entered.triangle || next.side == entered.side) return false;
  }
  return true;
}

std::vector<long long> path_weights(const IdealTriangulation& t, const CyclicPath& path) {
  std::vector<long long> w(t.num_edges(), 0);
  for (Slot s : path) ++w[t.edge_of(s)];
  return w;
}

CyclicPath canonical_rotation(const CyclicPath& path) {
  CyclicPath best = path;
  const std::size_t n = path.size();
  for (std::size_t r = 1; r < n; ++r) {
    CyclicPath cand(n);
    for (std::size_t i = 0; i < n; ++i) cand[i] = path[(i + r) % n];
    best = std::min(best, cand);
  }
  return best;
}

Spine::Spine(TriangulationPtr t, SpineData data) : tri_(std::move(t)), data_(std::move(data)) {
  const auto& tri = *tri_;
  petal_letter_of_edge_.assign(tri.num_edges(), -1);
  for (int k = 0; k < rank(); ++k) petal_letter_of_edge_[tri.edge_of(data_.petal_exit[k])] = k;

  root_to_.assign(tri.num_triangles(), {});
  std::vector<bool> seen(tri.num_triangles(), false);
  std::queue<int> queue;
  queue.push(data_.root);
  seen[data_.root] = true;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop();
    for (int side = 0; side < 3; ++side) {
      const Slot out{u, side};
      if (petal_letter_of_edge_[tri.edge_of(out)] >= 0) continue;
      const int v = tri.glued(out).triangle;
      if (seen[v]) continue;
      seen[v] = true;
      root_to_[v] = root_to_[u];
      root_to_[v].push_back(out);
      queue.push(v);
    }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end())
    throw Error(ErrorKind::NotRealizable, "spine tree does not span the dual graph");
}

Word Spine::path_to_word(const CyclicPath& path) const {
  Word w;
  for (Slot s : path) {
    const int k = petal_letter_of_edge_[tri_->edge_of(s)];
    if (k < 0) continue;
    w.push_back(s == data_.petal_exit[k] ? k + 1 : -(k + 1));
  }
  return w;
}

CyclicPath Spine::word_to_path(const Word& w) const {
  CyclicPath path;
  for (int l : w) {
    const int k = std::abs(l) - 1;
    if (k < 0 || k >= rank()) throw Error(ErrorKind::UnknownGenerator, "letter out of range");
    const Slot exit = l > 0 ? data_.petal_exit[k] : tri_->glued(data_.petal_exit[k]);
    const auto& to = root_to_[exit.triangle];
    path.insert(path.end(), to.begin(), to.end());
    path.push_back(exit);
    const auto back = reverse_path(*tri_, root_to_[tri_->glued(exit).triangle]);
    path.insert(path.end(), back.begin(), back.end());
  }
  return reduce_path(*tri_, path);
}

const Spine& standard_spine(SurfaceType s) {
  static std::mutex mutex;
  static std::map<SurfaceType, Spine> cache;
  const StandardModel& model = cached_standard_model(s);
  std::lock_guard lock(mutex);
  auto it = cache.find(s);
  if (it == cache.end()) it = cache.emplace(s, Spine(model.triangulation, model.spine)).first;
  return it->second;
}

}  // namespace foliage
