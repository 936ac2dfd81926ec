#include "foliage/curvecomplex.hpp"

#include <map>
#include <mutex>
#include <set>
#include <numeric>
#include <sstream>

#include "foliage/error.hpp"
#include "foliage/intersection.hpp"

namespace foliage {

int CurveUniverse::interior_count() const {
  int n = 0;
  for (int i = 0; i < size(); ++i) n += interior(i);
  return n;
}

int CurveUniverse::index_of(const NormalVector& c) const {
  auto it = std::lower_bound(curves.begin(), curves.end(), c);
  if (it == curves.end() || !(*it == c)) return -1;
  return static_cast<int>(it - curves.begin());
}

NormalVector curve_from_word(SurfaceType s, const Word& w) {
  const CyclicPath path = standard_spine(s).word_to_path(w);
  if (path.empty()) throw Error(ErrorKind::NotRealizable, "trivial word carries no curve");
  return curve_from_path(cached_standard_model(s).triangulation, path);
}

Word parse_spine_word(SurfaceType s, const std::string& text) {
  Word w;
  std::string spaced;
  for (char ch : text) {
    if (std::isalpha(static_cast<unsigned char>(ch)) && !spaced.empty() && spaced.back() != '^') spaced += ' ';
    spaced += ch;
  }
  std::istringstream in(spaced);
  std::string token;
  while (in >> token) {
    int exponent = 1;
    std::string name = token;
    if (auto caret = token.find('^'); caret != std::string::npos) {
      name = token.substr(0, caret);
      try {
        exponent = std::stoi(token.substr(caret + 1));
      } catch (const std::exception&) {
        throw Error(ErrorKind::Parse, "bad exponent in '" + token + "'");
      }
    }
    if (name.size() < 2) throw Error(ErrorKind::Parse, "bad letter '" + token + "'");
    int index = 0;
    try {
      index = std::stoi(name.substr(1));
    } catch (const std::exception&) {
      throw Error(ErrorKind::Parse, "bad letter '" + token + "'");
    }
    int letter = 0;
    if ((name[0] == 'a' || name[0] == 'c') && index >= 1 && index <= s.genus)
      letter = 2 * (index - 1) + (name[0] == 'a' ? 1 : 2);
    else if (name[0] == 'x' && index >= 1 && index < s.punctures)
      letter = 2 * s.genus + index;
    else
      throw Error(ErrorKind::Parse, "letter '" + name + "' is not a spine generator of " + to_string(s));
    for (int k = 0; k < std::abs(exponent); ++k) w.push_back(exponent > 0 ? letter : -letter);
  }
  return reduce(w);
}

namespace {

Word interval_word(SurfaceType s, int i, int j) {
  Word w;
  for (int k = i; k <= j; ++k) w.push_back(2 * s.genus + k);
  return w;
}

void add_if_essential(SurfaceType s, const Word& w, std::set<NormalVector>& out) {
  if (cyclic_reduce(w).empty()) return;
  const NormalVector c = curve_from_word(s, w);
  if (is_essential_curve(c)) out.insert(c);
}

}  // namespace

std::vector<NormalVector> standard_seeds(SurfaceType s) {
  if (!admissibility(s).enumerable) throw Error(ErrorKind::NotEnumerable, to_string(s) + " is not enumerable");
  std::set<NormalVector> out;
  // Intervals of the punctures 1..p-1; intervals through p are their complements.
  for (int i = 1; i < s.punctures; ++i)
    for (int j = i; j < s.punctures; ++j) add_if_essential(s, interval_word(s, i, j), out);
  Word chain;
  for (int k = 0; k < s.genus; ++k) {
    const int a = 2 * k + 1, c = 2 * k + 2;
    add_if_essential(s, {a}, out);
    add_if_essential(s, {c}, out);
    chain.insert(chain.end(), {a, c, -a, -c});
    add_if_essential(s, chain, out);
  }
  for (int j = 1; s.genus > 0 && j < s.punctures; ++j) add_if_essential(s, concat(chain, interval_word(s, 1, j)), out);
  return {out.begin(), out.end()};
}

NormalVector named_curve(SurfaceType s, const std::string& name) {
  if (name.rfind("word:", 0) == 0) {
    const NormalVector c = curve_from_word(s, parse_spine_word(s, name.substr(5)));
    if (!is_essential_curve(c)) throw Error(ErrorKind::NoEssentialComponent, "'" + name + "' is not essential");
    return c;
  }
  int i = 0, j = 0;
  bool ok = name.size() >= 3 && name[0] == 'a';
  if (ok) {
    const std::string body = name.substr(1);
    const auto sep = body.find_first_of("_-,");
    try {
      if (sep != std::string::npos) {
        i = std::stoi(body.substr(0, sep));
        j = std::stoi(body.substr(sep + 1));
      } else if (body.size() == 2 && std::isdigit(static_cast<unsigned char>(body[0])) &&
                 std::isdigit(static_cast<unsigned char>(body[1]))) {
        i = body[0] - '0';
        j = body[1] - '0';
      } else {
        ok = false;
      }
    } catch (const std::exception&) {
      ok = false;
    }
  }
  const int p = s.punctures;
  if (!ok || i < 1 || j < 1 || i > p || j > p || i == j)
    throw Error(ErrorKind::Parse, "expected a curve name like a12 or word:x1x2, got '" + name + "'");
  // Interval i..j cyclically; use the complementary interval when it passes p.
  const int len = (j - i + p) % p + 1;
  int lo = i, hi = j;
  if (lo > hi || hi == p) {
    if (s.genus > 0) throw Error(ErrorKind::Parse, "interval through the last puncture needs genus 0");
    lo = j % p + 1;
    hi = (i + p - 2) % p + 1;
  }
  if (len < 2 || len > p - 2 + (s.genus > 0 ? 2 : 0))
    throw Error(ErrorKind::Parse, "'" + name + "' does not name an essential round curve on " + to_string(s));
  const NormalVector c = curve_from_word(s, interval_word(s, lo, hi));
  if (!is_essential_curve(c)) throw Error(ErrorKind::Parse, "'" + name + "' is not essential on " + to_string(s));
  return c;
}

CurveUniverse enumerate_curves(SurfaceType s, std::vector<NormalVector> seeds, int word_length) {
  const auto& gens = alphabet(s);
  std::vector<MappingClass> moves;
  for (int g = 0; g < static_cast<int>(gens.size()); ++g) {
    moves.emplace_back(s, std::vector<std::pair<int, int>>{{g, 1}});
    if (!gens[g].orientation_reversing) moves.emplace_back(s, std::vector<std::pair<int, int>>{{g, -1}});
  }
  std::map<NormalVector, int> depth;
  std::vector<NormalVector> frontier;
  for (const auto& c : seeds)
    if (depth.emplace(c, 0).second) frontier.push_back(c);
  for (int d = 1; d <= word_length; ++d) {
    std::vector<NormalVector> next;
    for (const auto& c : frontier)
      for (const auto& m : moves) {
        NormalVector img = apply(m, c);
        if (depth.emplace(img, d).second) next.push_back(std::move(img));
      }
    frontier = std::move(next);
  }
  CurveUniverse u{s, std::move(seeds), word_length, {}, {}};
  std::sort(u.seeds.begin(), u.seeds.end());
  for (auto& [c, d] : depth) {
    u.curves.push_back(c);
    u.depth.push_back(d);
  }
  return u;
}

const CurveUniverse& standard_universe(SurfaceType s, int word_length) {
  static std::mutex mu;
  static std::map<std::pair<SurfaceType, int>, std::unique_ptr<CurveUniverse>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{s, word_length}];
  if (!slot) slot = std::make_unique<CurveUniverse>(enumerate_curves(s, standard_seeds(s), word_length));
  return *slot;
}

std::vector<int> CurveGraph::neighbours(int i) const {
  std::vector<int> out;
  for (int j = 0; j < n; ++j)
    if (adjacent(i, j)) out.push_back(j);
  return out;
}

long long CurveGraph::edge_count() const {
  long long e = 0;
  for (char x : adjacency) e += x;
  return e / 2;
}

CurveGraph build_graph(const CurveUniverse& u, Execution execution) {
  CurveGraph g;
  g.universe = &u;
  g.n = u.size();
  const auto m = intersection_matrix(u.curves, IntersectionAlgorithm::geometric, execution);
  g.adjacency.assign(m.size(), 0);
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j)
      if (i != j) g.adjacency[static_cast<std::size_t>(i) * g.n + j] = m[static_cast<std::size_t>(i) * g.n + j] == 0;
  return g;
}

std::vector<int> vertex_map(const MappingClass& mc, const CurveUniverse& u) {
  std::vector<int> image(u.size());
  for (int i = 0; i < u.size(); ++i) image[i] = u.index_of(apply(mc, u.curves[i]));
  return image;
}

bool check_vertex_map(const CurveGraph& g, const std::vector<int>& image) {
  const CurveUniverse& u = *g.universe;
  for (int i = 0; i < g.n; ++i) {
    if (!u.interior(i) || image[i] < 0) continue;
    for (int j = 0; j < g.n; ++j) {
      if (j == i || image[j] < 0) continue;
      if (image[i] == image[j]) return false;
      if (g.adjacent(i, j) != g.adjacent(image[i], image[j])) return false;
    }
  }
  return true;
}

bool check_simplicial(const MappingClass& mc, const CurveGraph& g) { return check_vertex_map(g, vertex_map(mc, *g.universe)); }

namespace {

// Counts cliques of exactly `target` vertices extending `clique` by
// candidates (all adjacent to every clique vertex, larger than its last).
long long count_cliques(const CurveGraph& g, const std::vector<int>& candidates, int size, int target) {
  if (size == target) return 1;
  long long total = 0;
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    std::vector<int> next;
    for (std::size_t l = k + 1; l < candidates.size(); ++l)
      if (g.adjacent(candidates[k], candidates[l])) next.push_back(candidates[l]);
    total += count_cliques(g, next, size + 1, target);
  }
  return total;
}

}  // namespace

long long k_simplex_count(const CurveGraph& g, int k) {
  if (k < 0) throw Error(ErrorKind::Parse, "k must be nonnegative");
  std::vector<int> all(g.n);
  std::iota(all.begin(), all.end(), 0);
  return count_cliques(g, all, 0, k + 1);
}

int clique_number(const CurveGraph& g) {
  std::vector<int> all(g.n);
  std::iota(all.begin(), all.end(), 0);
  return max_clique_size(all, [&](int a, int b) { return g.adjacent(a, b); });
}

std::vector<std::vector<int>> curve_systems(const CurveGraph& g, const std::vector<int>& vertices, int max_size) {
  std::vector<int> sorted = vertices;
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  auto extend = [&](auto&& self, std::size_t from) -> void {
    for (std::size_t k = from; k < sorted.size(); ++k) {
      const int v = sorted[k];
      if (!std::all_of(current.begin(), current.end(), [&](int u) { return g.adjacent(u, v); })) continue;
      current.push_back(v);
      out.push_back(current);
      if (static_cast<int>(current.size()) < max_size) self(self, k + 1);
      current.pop_back();
    }
  };
  extend(extend, 0);
  return out;
}

std::string to_dot(const CurveGraph& g) {
  std::ostringstream out;
  out << "graph curves {\n";
  for (int i = 0; i < g.n; ++i) {
    out << "  c" << i << " [label=\"";
    const auto& w = g.universe->curves[i].weights();
    for (std::size_t e = 0; e < w.size(); ++e) out << (e ? "," : "") << w[e];
    out << "\"" << (g.universe->interior(i) ? "" : ", style=dashed") << "];\n";
  }
  for (int i = 0; i < g.n; ++i)
    for (int j = i + 1; j < g.n; ++j)
      if (g.adjacent(i, j)) out << "  c" << i << " -- c" << j << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace foliage
