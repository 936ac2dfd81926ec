#pragma once

#include <optional>
#include <string>
#include <vector>

#include "foliage/curvecomplex.hpp"
#include "foliage/multicurve.hpp"

namespace foliage {

/// Whether a completion may add an annulus parallel to the boundary of one of
/// the class's minimal pieces. Under `forbidden`, classes carrying such an
/// annulus are excluded from generated universes as well.
enum class BoundaryParallel { allowed, forbidden };

std::string_view to_string(BoundaryParallel b);
BoundaryParallel parse_boundary_parallel(std::string_view text);

struct MinimalComponent {
  SubsurfacePiece piece;
  std::string fill_id;

  friend bool operator==(const MinimalComponent&, const MinimalComponent&) = default;
  friend auto operator<=>(const MinimalComponent& a, const MinimalComponent& b) {
    if (auto c = a.piece <=> b.piece; c != 0) return c;
    return a.fill_id <=> b.fill_id;
  }
};

/// A point of the symbolic UMF model: foliated annuli around some curves of a
/// system, and minimal foliations filling some of its complementary pieces.
class FoliationClass {
 public:
  const CurveSystem& system() const { return system_; }
  const std::vector<int>& annular() const { return annular_; }        // sorted indices into system
  const std::vector<MinimalComponent>& minimal() const { return minimal_; }  // sorted

  std::vector<NormalVector> annular_curves() const;
  int component_count() const { return static_cast<int>(annular_.size() + minimal_.size()); }
  bool is_annular() const { return minimal_.empty(); }
  SurfaceType surface() const { return system_.triangulation_ptr()->surface(); }
  const TriangulationPtr& triangulation_ptr() const { return system_.triangulation_ptr(); }

  friend bool operator==(const FoliationClass& a, const FoliationClass& b) {
    return a.system_ == b.system_ && a.annular_ == b.annular_ && a.minimal_ == b.minimal_;
  }
  friend auto operator<=>(const FoliationClass& a, const FoliationClass& b) {
    if (a.component_count() != b.component_count()) return a.component_count() <=> b.component_count();
    if (auto c = a.system_ <=> b.system_; c != 0) return c;
    if (auto c = a.annular_ <=> b.annular_; c != 0) return c;
    return a.minimal_ <=> b.minimal_;
  }

 private:
  friend FoliationClass make_foliation(const CurveSystem&, std::vector<int>,
                                       std::vector<std::pair<int, std::string>>);
  CurveSystem system_;
  std::vector<int> annular_;
  std::vector<MinimalComponent> minimal_;
};

/// Validates and builds a class. `minimal` lists (index into
/// complement_pieces(cs), fill id). Errors: EmptyClass, PieceTooSimple,
/// SpuriousCurve, NotDisjoint (two fills on one piece), BadLength (index out
/// of range).
FoliationClass make_foliation(const CurveSystem& cs, std::vector<int> annular,
                              std::vector<std::pair<int, std::string>> minimal);

/// j(cs): every curve carries an annulus.
FoliationClass annular_class(const CurveSystem& cs);

/// The class filling the whole surface with a minimal foliation.
FoliationClass filling_class(const TriangulationPtr& t, const std::string& fill_id);

/// Classes whose components are a nonempty subset of F's, including F.
std::vector<FoliationClass> sub_unions(const FoliationClass& F);

/// The class whose components are those of F and G together; throws
/// NotDisjoint when the union is not a valid class.
FoliationClass union_of(const FoliationClass& F, const FoliationClass& G);

/// Some minimal piece of F has an annular curve of F on its boundary.
bool has_boundary_parallel_annulus(const FoliationClass& F);

/// Every pair of components is equal or has disjoint supports.
bool adherent(const FoliationClass& F, const FoliationClass& G);

/// For annular classes: all core curves pairwise have
/// geometric intersection 0. Empty when either class has a minimal part.
std::optional<bool> intersection_zero(const FoliationClass& F, const FoliationClass& G);

/// G splits as components of F plus components supported off
/// supp(F). Decided on the common refinement cut along all curves of both
/// systems at once.
bool adheres_by_decomposition(const FoliationClass& F, const FoliationClass& G);

/// Multiset {3g + n} over the complementary pieces of supp(F), n counting
/// punctures and boundary circles. Sorted.
std::vector<int> complexity_signature(const FoliationClass& F);

/// Finite family of classes, sorted and deduplicated.
struct FoliationUniverse {
  std::vector<FoliationClass> elements;

  int size() const { return static_cast<int>(elements.size()); }
  int index_of(const FoliationClass& F) const;
};

/// Every valid class whose defining system is exactly `cs`, all minimal
/// pieces carrying `fill_id`. Under `forbidden`, classes with an annulus on a
/// minimal boundary are left out.
std::vector<FoliationClass> classes_on_system(const CurveSystem& cs, BoundaryParallel convention,
                                              const std::string& fill_id = "m");

/// All classes supported on systems of at most `max_system` curves drawn from
/// `vertices` of the graph, including the filling class. Closed under
/// sub-unions, and saturated: every maximal completion built from these
/// curves is present.
FoliationUniverse saturated_universe(const CurveGraph& g, const std::vector<int>& vertices, int max_system,
                                     BoundaryParallel convention);

/// Image of a class under a mapping class.
FoliationClass apply(const MappingClass& mc, const FoliationClass& F);

/// Sorts, deduplicates and closes under nonempty sub-unions.
FoliationUniverse close_under_subunions(std::vector<FoliationClass> classes);

/// Pairwise `adherent`, row-major; serial and parallel give identical results.
std::vector<char> adherence_matrix(const FoliationUniverse& u, Execution execution = Execution::parallel);

std::vector<FoliationClass> adherence_set(const FoliationClass& F, const FoliationUniverse& u);

bool is_complete_adherence(const std::vector<FoliationClass>& classes);

/// Largest complete adherence subset of u containing u.elements[index].
int adherence_number_bruteforce(int index, const FoliationUniverse& u, const std::vector<char>& matrix);
int adherence_number_bruteforce(const FoliationClass& F, const FoliationUniverse& u);

/// Curve universe with its disjointness matrix, shared by completion searches.
class CompletionContext {
 public:
  explicit CompletionContext(const CurveUniverse& u, Execution execution = Execution::parallel);

  const CurveUniverse& universe() const { return *universe_; }
  bool disjoint(int i, int j) const { return disjoint_[static_cast<std::size_t>(i) * universe_->size() + j] != 0; }

 private:
  const CurveUniverse* universe_;
  std::vector<char> disjoint_;
};

struct Completion {
  FoliationClass completion;
  int q = 0;             // components of the completion, found by search
  int closed_form_q = 0; // piece bookkeeping estimate, a cross-check
};

/// A class containing F with the most components obtainable by adding
/// annuli around universe curves off supp(F). Throws UniverseTooSmall when
/// the search falls short of the bookkeeping bound.
Completion max_completion(const FoliationClass& F, const CompletionContext& ctx, BoundaryParallel convention);

/// 2^q - 1 with q from max_completion.
long long adherence_number(const FoliationClass& F, const CompletionContext& ctx, BoundaryParallel convention);

/// Closed-form completion size, for cross-checking the search.
int closed_form_q(const FoliationClass& F, BoundaryParallel convention);

}  // namespace foliage
