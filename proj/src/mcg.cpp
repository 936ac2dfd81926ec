#include "foliage/mcg.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "foliage/error.hpp"

namespace foliage {
namespace {

struct Letters {
  int genus, punctures;
  int a(int k) const { return 2 * k + 1; }  // k is 0-based
  int c(int k) const { return 2 * k + 2; }
  int x(int i) const { return 2 * genus + i; }  // i is 1-based, i < punctures
  int rank() const { return 2 * genus + punctures - 1; }

  // x_p as a word: (H x_1 ... x_{p-1})^{-1}.
  Word last_puncture() const {
    Word prod;
    for (int k = 0; k < genus; ++k) prod.insert(prod.end(), {a(k), c(k), -a(k), -c(k)});
    for (int i = 1; i < punctures; ++i) prod.push_back(x(i));
    return inverse(prod);
  }
  Word xw(int i) const { return i < punctures ? Word{x(i)} : last_puncture(); }
};

Automorphism identity_images(int rank) {
  Automorphism im(rank);
  for (int j = 0; j < rank; ++j) im[j] = {j + 1};
  return im;
}

Word substitute(const Automorphism& phi, const Word& w) {
  Word out;
  for (int letter : w) {
    const Word& img = phi[std::abs(letter) - 1];
    if (letter > 0) out.insert(out.end(), img.begin(), img.end());
    else {
      const Word inv = inverse(img);
      out.insert(out.end(), inv.begin(), inv.end());
    }
  }
  return reduce(out);
}

std::vector<Generator> build_alphabet(SurfaceType s) {
  const Letters L{s.genus, s.punctures};
  const int n = L.rank();
  std::vector<Generator> gens;

  // Half-twist s_i: x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i.
  for (int i = 1; i < s.punctures; ++i) {
    Generator g;
    g.name = "s" + std::to_string(i);
    g.forward = identity_images(n);
    g.backward = identity_images(n);
    const Word xi = L.xw(i), xj = L.xw(i + 1);
    g.forward[L.x(i) - 1] = reduce(concat(concat(xi, xj), inverse(xi)));
    g.backward[L.x(i) - 1] = xj;
    if (i + 1 < s.punctures) {
      g.forward[L.x(i + 1) - 1] = xi;
      g.backward[L.x(i + 1) - 1] = reduce(concat(concat(inverse(xj), xi), xj));
    }
    gens.push_back(std::move(g));
  }
  // Handle twists of the same sign: ta_k: c_k -> c_k a_k, tc_k: a_k -> a_k c_k^-1.
  for (int k = 0; k < s.genus; ++k) {
    Generator ta, tc;
    ta.name = "ta" + std::to_string(k + 1);
    tc.name = "tc" + std::to_string(k + 1);
    ta.forward = ta.backward = tc.forward = tc.backward = identity_images(n);
    ta.forward[L.c(k) - 1] = {L.c(k), L.a(k)};
    ta.backward[L.c(k) - 1] = {L.c(k), -L.a(k)};
    tc.forward[L.a(k) - 1] = {L.a(k), -L.c(k)};
    tc.backward[L.a(k) - 1] = {L.a(k), L.c(k)};
    gens.push_back(std::move(ta));
    gens.push_back(std::move(tc));
  }
  // Reflection: a_k <-> c_{g+1-k}, x_i -> x_{p-i}^-1. An involution.
  Generator r;
  r.name = "r";
  r.orientation_reversing = true;
  r.forward = identity_images(n);
  for (int k = 0; k < s.genus; ++k) {
    r.forward[L.a(k) - 1] = {L.c(s.genus - 1 - k)};
    r.forward[L.c(k) - 1] = {L.a(s.genus - 1 - k)};
  }
  for (int i = 1; i < s.punctures; ++i) r.forward[L.x(i) - 1] = {-L.x(s.punctures - i)};
  r.backward = r.forward;
  gens.push_back(std::move(r));
  return gens;
}

}  // namespace

const std::vector<Generator>& alphabet(SurfaceType s) {
  if (!admissibility(s).enumerable)
    throw Error(ErrorKind::NotEnumerable, to_string(s) + " has no enumerable standard model");
  static std::mutex mu;
  static std::map<SurfaceType, std::vector<Generator>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(s);
  if (it == cache.end()) it = cache.emplace(s, build_alphabet(s)).first;
  return it->second;
}

MappingClass::MappingClass(SurfaceType s, std::vector<std::pair<int, int>> letters)
    : surface_(s), letters_(std::move(letters)) {
  const int size = static_cast<int>(alphabet(s).size());
  for (auto [g, e] : letters_)
    if (g < 0 || g >= size || (e != 1 && e != -1))
      throw Error(ErrorKind::UnknownGenerator, "letter out of range for " + foliage::to_string(s));
}

bool MappingClass::orientation_reversing() const {
  const auto& gens = alphabet(surface_);
  bool rev = false;
  for (auto [g, e] : letters_) rev ^= gens[g].orientation_reversing;
  return rev;
}

MappingClass MappingClass::inverse() const {
  std::vector<std::pair<int, int>> inv(letters_.rbegin(), letters_.rend());
  for (auto& [g, e] : inv) e = -e;
  return MappingClass(surface_, std::move(inv));
}

MappingClass MappingClass::compose(const MappingClass& first) const {
  auto letters = letters_;
  letters.insert(letters.end(), first.letters_.begin(), first.letters_.end());
  return MappingClass(surface_, std::move(letters));
}

std::string MappingClass::to_string() const {
  const auto& gens = alphabet(surface_);
  std::string out;
  for (auto [g, e] : letters_) {
    if (!out.empty()) out += ' ';
    out += gens[g].name;
    if (e < 0) out += "^-1";
  }
  return out.empty() ? "id" : out;
}

std::vector<MappingClass> generators(SurfaceType s) {
  const auto& gens = alphabet(s);
  std::vector<MappingClass> out;
  for (int g = 0; g < static_cast<int>(gens.size()); ++g)
    if (!gens[g].orientation_reversing) out.emplace_back(s, std::vector<std::pair<int, int>>{{g, 1}});
  return out;
}

MappingClass reflection(SurfaceType s) {
  return MappingClass(s, {{static_cast<int>(alphabet(s).size()) - 1, 1}});
}

MappingClass identity(SurfaceType s) {
  alphabet(s);
  return MappingClass(s, {});
}

MappingClass parse_word(SurfaceType s, const std::string& text) {
  const auto& gens = alphabet(s);
  std::vector<std::pair<int, int>> letters;
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    if (token == "id") continue;
    std::string name = token;
    int exponent = 1;
    if (auto caret = token.find('^'); caret != std::string::npos) {
      name = token.substr(0, caret);
      std::string exp = token.substr(caret + 1);
      if (exp.size() >= 2 && exp.front() == '{' && exp.back() == '}') exp = exp.substr(1, exp.size() - 2);
      try {
        std::size_t used = 0;
        exponent = std::stoi(exp, &used);
        if (used != exp.size()) throw std::invalid_argument(exp);
      } catch (const std::exception&) {
        throw Error(ErrorKind::Parse, "bad exponent in '" + token + "'");
      }
    }
    int index = -1;
    for (int g = 0; g < static_cast<int>(gens.size()); ++g)
      if (gens[g].name == name) index = g;
    if (index < 0) throw Error(ErrorKind::UnknownGenerator, "unknown generator '" + name + "' on " + to_string(s));
    for (int k = 0; k < std::abs(exponent); ++k) letters.emplace_back(index, exponent > 0 ? 1 : -1);
  }
  return MappingClass(s, std::move(letters));
}

Automorphism automorphism(const MappingClass& mc) {
  const auto& gens = alphabet(mc.surface());
  const Letters L{mc.surface().genus, mc.surface().punctures};
  Automorphism im = identity_images(L.rank());
  // The rightmost letter acts first, so it is the innermost substitution.
  for (auto it = mc.letters().rbegin(); it != mc.letters().rend(); ++it) {
    const auto& phi = it->second > 0 ? gens[it->first].forward : gens[it->first].backward;
    for (auto& w : im) w = substitute(phi, w);
  }
  return im;
}

Word apply_to_word(const MappingClass& mc, const Word& w) {
  const auto& gens = alphabet(mc.surface());
  Word cur = cyclic_reduce(w);
  for (auto it = mc.letters().rbegin(); it != mc.letters().rend(); ++it) {
    const auto& phi = it->second > 0 ? gens[it->first].forward : gens[it->first].backward;
    cur = cyclic_reduce(substitute(phi, cur));
  }
  return cur;
}

NormalVector apply(const MappingClass& mc, const NormalVector& v) {
  const Spine& spine = standard_spine(mc.surface());
  const TriangulationPtr& t = cached_standard_model(mc.surface()).triangulation;
  if (!(v.triangulation() == *t))
    throw Error(ErrorKind::MixedSurfaces, "apply expects a vector on the standard triangulation");
  std::vector<long long> total(t->num_edges(), 0);
  for (const auto& comp : trace_components(v)) {
    const Word w = spine.path_to_word(curve_path(comp.primitive));
    const CyclicPath image = spine.word_to_path(apply_to_word(mc, w));
    const auto weights = path_weights(*t, image);
    for (int e = 0; e < t->num_edges(); ++e) total[e] += comp.multiplicity * weights[e];
  }
  return NormalVector(t, std::move(total));
}

namespace {

bool same_cyclic_word(const Word& a, const Word& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  for (std::size_t r = 0; r < a.size(); ++r)
    if (std::equal(a.begin() + r, a.end(), b.begin()) && std::equal(a.begin(), a.begin() + r, b.end() - r)) return true;
  return false;
}

}  // namespace

std::vector<int> puncture_permutation(const MappingClass& mc) {
  const Letters L{mc.surface().genus, mc.surface().punctures};
  std::vector<Word> loops;
  for (int i = 1; i <= L.punctures; ++i) loops.push_back(cyclic_reduce(L.xw(i)));
  std::vector<int> perm(L.punctures, -1);
  for (int i = 0; i < L.punctures; ++i) {
    const Word image = apply_to_word(mc, loops[i]);
    for (int j = 0; j < L.punctures && perm[i] < 0; ++j)
      if (same_cyclic_word(image, loops[j]) || same_cyclic_word(image, cyclic_reduce(inverse(loops[j])))) perm[i] = j;
    if (perm[i] < 0) throw std::logic_error("puncture loop not sent to a puncture loop");
  }
  return perm;
}

std::optional<NormalVector> moves_some_vertex(const MappingClass& mc, std::span<const NormalVector> universe) {
  for (const auto& c : universe)
    if (!(apply(mc, c) == c)) return c;
  return std::nullopt;
}

bool is_trivial(const MappingClass& mc) {
  if (mc.orientation_reversing()) return false;
  const Automorphism im = automorphism(mc);
  const int n = static_cast<int>(im.size());
  // im[0] must read u x_1 u^-1 without cancellation.
  const Word& w0 = im[0];
  if (w0.size() % 2 == 0) return false;
  const std::size_t m = w0.size() / 2;
  if (w0[m] != 1) return false;
  const Word u(w0.begin(), w0.begin() + m);
  if (reduce(concat(concat(u, {1}), inverse(u))) != w0) return false;
  // The conjugator is u x_1^k for some k; the other images pin k down.
  const long long bound = 2;
  long long longest = 0;
  for (const auto& w : im) longest = std::max<long long>(longest, static_cast<long long>(w.size()));
  for (long long k = -(longest + bound); k <= longest + bound; ++k) {
    Word g = u;
    for (long long i = 0; i < std::abs(k); ++i) g.push_back(k > 0 ? 1 : -1);
    g = reduce(g);
    bool inner = true;
    for (int j = 0; j < n && inner; ++j) inner = reduce(concat(concat(g, {j + 1}), inverse(g))) == im[j];
    if (inner) return true;
  }
  return false;
}

std::vector<MappingClass> reduced_words(SurfaceType s, int max_length) {
  const auto& gens = alphabet(s);
  const int r = static_cast<int>(gens.size()) - 1;
  std::vector<std::pair<int, int>> letters;
  for (int g = 0; g < r; ++g) {
    letters.emplace_back(g, 1);
    letters.emplace_back(g, -1);
  }
  letters.emplace_back(r, 1);

  std::vector<MappingClass> out;
  std::vector<std::vector<std::pair<int, int>>> layer{{}};
  for (int len = 1; len <= max_length; ++len) {
    std::vector<std::vector<std::pair<int, int>>> next;
    for (const auto& w : layer)
      for (auto l : letters) {
        if (!w.empty()) {
          const auto last = w.back();
          if (last.first == l.first && (last.second == -l.second || l.first == r)) continue;
        }
        auto v = w;
        v.push_back(l);
        out.emplace_back(s, v);
        next.push_back(std::move(v));
      }
    layer = std::move(next);
  }
  return out;
}

}  // namespace foliage
