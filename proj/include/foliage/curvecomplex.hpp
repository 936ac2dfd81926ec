#pragma once

#include <algorithm>
#include <span>
#include <string>
#include <vector>

#include "foliage/kernels.hpp"
#include "foliage/mcg.hpp"

namespace foliage {

/// Orbit ball of the seeds under words of length <= word_length in the full
/// alphabet. Curves are sorted by weight vector; depth[i] is the shortest word
/// reaching curve i, and curves with depth < word_length are interior (all
/// their neighbours were enumerated).
struct CurveUniverse {
  SurfaceType surface;
  std::vector<NormalVector> seeds;
  int word_length = 0;
  std::vector<NormalVector> curves;
  std::vector<int> depth;

  int size() const { return static_cast<int>(curves.size()); }
  bool interior(int i) const { return depth[i] < word_length; }
  int interior_count() const;
  /// Index of c, or -1.
  int index_of(const NormalVector& c) const;
};

/// Curve carried by a free-group word on the standard spine.
NormalVector curve_from_word(SurfaceType s, const Word& w);

/// Parses a word such as "x1 x2 x3^-1" or "a1 c1 a1^-1 c1^-1" in the spine
/// letters a_k, c_k, x_i (i < p). Throws Parse.
Word parse_spine_word(SurfaceType s, const std::string& text);

/// Round curves: cyclic puncture intervals for genus 0; handle curves,
/// commutator chains and puncture intervals otherwise. Sorted, deduplicated.
std::vector<NormalVector> standard_seeds(SurfaceType s);

/// Named curve: "aIJ" encloses the cyclic puncture interval I..J (1-based),
/// so on S(0,5) "a12" is alpha_12 and "a45" encloses punctures 4 and 5.
/// Also accepts "word:<spine word>". Throws Parse.
NormalVector named_curve(SurfaceType s, const std::string& name);

CurveUniverse enumerate_curves(SurfaceType s, std::vector<NormalVector> seeds, int word_length);

/// enumerate_curves with standard seeds, memoized.
const CurveUniverse& standard_universe(SurfaceType s, int word_length);

/// Disjointness graph of a universe.
struct CurveGraph {
  const CurveUniverse* universe = nullptr;
  int n = 0;
  std::vector<char> adjacency;  // n x n, no loops

  bool adjacent(int i, int j) const { return adjacency[static_cast<std::size_t>(i) * n + j] != 0; }
  std::vector<int> neighbours(int i) const;
  long long edge_count() const;
};

/// Edges are pairs with geometric intersection number 0.
CurveGraph build_graph(const CurveUniverse& u, Execution execution = Execution::parallel);

/// Image index of every curve under mc, or -1 when the image leaves the universe.
std::vector<int> vertex_map(const MappingClass& mc, const CurveUniverse& u);

/// Whether a partial vertex map is injective and preserves adjacency and
/// non-adjacency on pairs with an interior endpoint and known images.
bool check_vertex_map(const CurveGraph& g, const std::vector<int>& image);

bool check_simplicial(const MappingClass& mc, const CurveGraph& g);

/// Number of (k+1)-cliques.
long long k_simplex_count(const CurveGraph& g, int k);

int clique_number(const CurveGraph& g);

/// All cliques of size 1..max_size among `vertices` (sorted index lists),
/// in lexicographic order.
std::vector<std::vector<int>> curve_systems(const CurveGraph& g, const std::vector<int>& vertices, int max_size);

/// A maximum clique of the subgraph induced on `vertices`; `adjacent` is
/// queried on pairs of entries of `vertices`. Deterministic for fixed input.
template <class Adjacent>
std::vector<int> max_clique(const std::vector<int>& vertices, Adjacent&& adjacent);

template <class Adjacent>
int max_clique_size(const std::vector<int>& vertices, Adjacent&& adjacent) {
  return static_cast<int>(max_clique(vertices, adjacent).size());
}

std::string to_dot(const CurveGraph& g);

// ---------------------------------------------------------------------------

namespace detail {
template <class Adjacent>
void extend_clique(std::vector<int> candidates, std::vector<int>& current, std::vector<int>& best,
                   Adjacent& adjacent) {
  if (candidates.empty()) {
    if (current.size() > best.size()) best = current;
    return;
  }
  while (!candidates.empty()) {
    if (current.size() + candidates.size() <= best.size()) return;
    const int v = candidates.front();
    candidates.erase(candidates.begin());
    std::vector<int> next;
    for (int u : candidates)
      if (adjacent(v, u)) next.push_back(u);
    current.push_back(v);
    extend_clique(std::move(next), current, best, adjacent);
    current.pop_back();
  }
}
}  // namespace detail

template <class Adjacent>
std::vector<int> max_clique(const std::vector<int>& vertices, Adjacent&& adjacent) {
  std::vector<int> current, best;
  detail::extend_clique(vertices, current, best, adjacent);
  return best;
}

}  // namespace foliage
