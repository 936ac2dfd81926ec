#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "foliage/multicurve.hpp"
#include "foliage/spine.hpp"

namespace foliage {

/// Images of the free basis of pi_1 under an automorphism.
using Automorphism = std::vector<Word>;

/// One letter of the generating alphabet, realized as a free-group
/// automorphism of the standard spine.
struct Generator {
  std::string name;               // "s1", "ta1", "tc1", "r"
  bool orientation_reversing = false;
  Automorphism forward;
  Automorphism backward;          // inverse automorphism
};

/// Alphabet of a surface: half-twists s1..s{p-1} swapping adjacent
/// punctures, twists ta_k, tc_k about the handle curves, and the reflection r
/// last. Throws NotEnumerable.
const std::vector<Generator>& alphabet(SurfaceType s);

/// Word in the alphabet. Letters are (generator index, +1 or -1); the word
/// "s1 s2" applies s2 first.
class MappingClass {
 public:
  MappingClass() = default;
  MappingClass(SurfaceType s, std::vector<std::pair<int, int>> letters);

  SurfaceType surface() const { return surface_; }
  const std::vector<std::pair<int, int>>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool orientation_reversing() const;

  MappingClass inverse() const;
  /// (*this) after `first`.
  MappingClass compose(const MappingClass& first) const;
  std::string to_string() const;

  friend bool operator==(const MappingClass&, const MappingClass&) = default;

 private:
  SurfaceType surface_{};
  std::vector<std::pair<int, int>> letters_;
};

/// The orientation-preserving generators, one class per letter; the
/// reflection is available through `reflection`.
std::vector<MappingClass> generators(SurfaceType s);
MappingClass reflection(SurfaceType s);
MappingClass identity(SurfaceType s);

/// Parses "s1 s2^-1 r". Throws UnknownGenerator or Parse.
MappingClass parse_word(SurfaceType s, const std::string& text);

/// Free-group automorphism realizing mc.
Automorphism automorphism(const MappingClass& mc);

/// Image of a conjugacy class (cyclic word).
Word apply_to_word(const MappingClass& mc, const Word& w);

/// Image of a normal multicurve on the standard triangulation.
NormalVector apply(const MappingClass& mc, const NormalVector& v);

/// Where mc sends each puncture: entry i is the vertex class receiving
/// vertex class i.
std::vector<int> puncture_permutation(const MappingClass& mc);

/// Some curve of `universe` that mc moves, if any.
std::optional<NormalVector> moves_some_vertex(const MappingClass& mc, std::span<const NormalVector> universe);

/// Whether mc is the trivial mapping class: orientation preserving and
/// inducing an inner automorphism of pi_1.
bool is_trivial(const MappingClass& mc);

/// All freely reduced words of length 1..max_length over the full alphabet
/// (generators, inverses and r, with r treated as an involution).
std::vector<MappingClass> reduced_words(SurfaceType s, int max_length);

}  // namespace foliage
