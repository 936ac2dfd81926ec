#include "foliage/adherence.hpp"

#include <algorithm>
#include <map>

#include "foliage/error.hpp"
#include "foliage/intersection.hpp"

namespace foliage {

std::string_view to_string(BoundaryParallel b) { return b == BoundaryParallel::allowed ? "allowed" : "forbidden"; }

BoundaryParallel parse_boundary_parallel(std::string_view text) {
  if (text == "allowed") return BoundaryParallel::allowed;
  if (text == "forbidden") return BoundaryParallel::forbidden;
  throw Error(ErrorKind::Parse, "boundary-parallel must be allowed or forbidden, got '" + std::string(text) + "'");
}

std::vector<NormalVector> FoliationClass::annular_curves() const {
  std::vector<NormalVector> out;
  for (int i : annular_) out.push_back(system_.curves()[i]);
  return out;
}

namespace {

std::vector<NormalVector> distinct_boundary(const SubsurfacePiece& p) {
  std::vector<NormalVector> out = p.boundary;
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool on_boundary(const SubsurfacePiece& p, const NormalVector& c) {
  return std::binary_search(p.boundary.begin(), p.boundary.end(), c);
}

// Class with the given annuli and minimal components; the system is whatever
// those components need. Throws NotDisjoint when they do not fit together.
FoliationClass assemble(const TriangulationPtr& t, std::vector<NormalVector> annuli,
                        const std::vector<MinimalComponent>& minimal) {
  std::vector<NormalVector> curves = annuli;
  for (const auto& m : minimal)
    for (const auto& b : m.piece.boundary) curves.push_back(b);
  std::sort(curves.begin(), curves.end());
  curves.erase(std::unique(curves.begin(), curves.end()), curves.end());
  const CurveSystem cs = curves.empty() ? CurveSystem::empty(t) : CurveSystem::from_curves(t, curves);

  std::vector<int> annular;
  for (const auto& c : annuli) annular.push_back(cs.index_of(c));
  const auto pieces = complement_pieces(cs);
  std::vector<std::pair<int, std::string>> mins;
  for (const auto& m : minimal) {
    auto it = std::find(pieces.begin(), pieces.end(), m.piece);
    if (it == pieces.end()) throw Error(ErrorKind::NotDisjoint, "minimal piece is cut by another component");
    mins.emplace_back(static_cast<int>(it - pieces.begin()), m.fill_id);
  }
  return make_foliation(cs, std::move(annular), std::move(mins));
}

void check_same_surface(const FoliationClass& F, const FoliationClass& G) {
  if (!(F.triangulation_ptr()->surface() == G.triangulation_ptr()->surface()) ||
      !(*F.triangulation_ptr() == *G.triangulation_ptr()))
    throw Error(ErrorKind::MixedSurfaces, "classes live on different triangulated surfaces");
}

// An annulus around c misses the interior of R: c stays off R's boundary
// curves and is not a curve inside R (boundary-parallel is fine).
bool annulus_off_piece(const TriangulationPtr& t, const NormalVector& c, const SubsurfacePiece& R) {
  for (const auto& b : distinct_boundary(R))
    if (!haken_disjoint(b, c)) return false;
  return !contains_curve(t, R, c);
}

}  // namespace

FoliationClass make_foliation(const CurveSystem& cs, std::vector<int> annular,
                              std::vector<std::pair<int, std::string>> minimal) {
  if (annular.empty() && minimal.empty()) throw Error(ErrorKind::EmptyClass, "a class needs at least one component");
  std::sort(annular.begin(), annular.end());
  if (std::adjacent_find(annular.begin(), annular.end()) != annular.end())
    throw Error(ErrorKind::NotDisjoint, "annulus listed twice");
  for (int i : annular)
    if (i < 0 || i >= cs.size()) throw Error(ErrorKind::BadLength, "annular index out of range");

  const auto pieces = complement_pieces(cs);
  FoliationClass F;
  F.system_ = cs;
  F.annular_ = std::move(annular);
  std::vector<bool> used(pieces.size(), false);
  for (auto& [index, fill] : minimal) {
    if (index < 0 || index >= static_cast<int>(pieces.size()))
      throw Error(ErrorKind::BadLength, "piece index out of range");
    if (used[index]) throw Error(ErrorKind::NotDisjoint, "two minimal components on one piece");
    used[index] = true;
    if (pieces[index].complexity() < 1)
      throw Error(ErrorKind::PieceTooSimple, "piece of complexity " + std::to_string(pieces[index].complexity()) +
                                                 " carries no minimal foliation");
    F.minimal_.push_back({pieces[index], std::move(fill)});
  }
  std::sort(F.minimal_.begin(), F.minimal_.end());
  for (int i = 0; i < cs.size(); ++i) {
    if (std::binary_search(F.annular_.begin(), F.annular_.end(), i)) continue;
    const bool bounds = std::any_of(F.minimal_.begin(), F.minimal_.end(),
                                    [&](const MinimalComponent& m) { return on_boundary(m.piece, cs.curves()[i]); });
    if (!bounds) throw Error(ErrorKind::SpuriousCurve, "system curve " + std::to_string(i) + " belongs to no component");
  }
  return F;
}

FoliationClass annular_class(const CurveSystem& cs) {
  std::vector<int> all(cs.size());
  for (int i = 0; i < cs.size(); ++i) all[i] = i;
  return make_foliation(cs, std::move(all), {});
}

FoliationClass filling_class(const TriangulationPtr& t, const std::string& fill_id) {
  return make_foliation(CurveSystem::empty(t), {}, {{0, fill_id}});
}

std::vector<FoliationClass> sub_unions(const FoliationClass& F) {
  const auto annuli = F.annular_curves();
  const auto& minimal = F.minimal();
  const int a = static_cast<int>(annuli.size()), n = F.component_count();
  std::vector<FoliationClass> out;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<NormalVector> keep_a;
    std::vector<MinimalComponent> keep_m;
    for (int i = 0; i < n; ++i) {
      if (!(mask & (1u << i))) continue;
      if (i < a) keep_a.push_back(annuli[i]);
      else keep_m.push_back(minimal[i - a]);
    }
    out.push_back(assemble(F.triangulation_ptr(), std::move(keep_a), keep_m));
  }
  std::sort(out.begin(), out.end());
  return out;
}

FoliationClass union_of(const FoliationClass& F, const FoliationClass& G) {
  check_same_surface(F, G);
  auto annuli = F.annular_curves();
  for (const auto& c : G.annular_curves()) annuli.push_back(c);
  std::sort(annuli.begin(), annuli.end());
  annuli.erase(std::unique(annuli.begin(), annuli.end()), annuli.end());
  auto minimal = F.minimal();
  for (const auto& m : G.minimal()) minimal.push_back(m);
  std::sort(minimal.begin(), minimal.end());
  minimal.erase(std::unique(minimal.begin(), minimal.end()), minimal.end());
  return assemble(F.triangulation_ptr(), std::move(annuli), minimal);
}

bool has_boundary_parallel_annulus(const FoliationClass& F) {
  for (const auto& c : F.annular_curves())
    for (const auto& m : F.minimal())
      if (on_boundary(m.piece, c)) return true;
  return false;
}

bool adherent(const FoliationClass& F, const FoliationClass& G) {
  check_same_surface(F, G);
  const auto& t = F.triangulation_ptr();
  const auto fa = F.annular_curves(), ga = G.annular_curves();
  for (const auto& c : fa)
    for (const auto& d : ga)
      if (!(c == d) && !haken_disjoint(c, d)) return false;
  for (const auto& c : fa)
    for (const auto& m : G.minimal())
      if (!annulus_off_piece(t, c, m.piece)) return false;
  for (const auto& m : F.minimal())
    for (const auto& d : ga)
      if (!annulus_off_piece(t, d, m.piece)) return false;
  for (const auto& m : F.minimal())
    for (const auto& n : G.minimal()) {
      if (m.piece == n.piece) {
        if (m.fill_id != n.fill_id) return false;
      } else if (pieces_overlap(t, m.piece, n.piece)) {
        return false;
      }
    }
  return true;
}

std::optional<bool> intersection_zero(const FoliationClass& F, const FoliationClass& G) {
  check_same_surface(F, G);
  if (!F.is_annular() || !G.is_annular()) return std::nullopt;
  for (const auto& c : F.system().curves())
    for (const auto& d : G.system().curves())
      if (geometric_intersection(c, d) != 0) return false;
  return true;
}

bool adheres_by_decomposition(const FoliationClass& F, const FoliationClass& G) {
  check_same_surface(F, G);
  const auto& t = F.triangulation_ptr();

  // All curves of both systems must be simultaneously disjoint: otherwise some
  // curve of one class enters an annulus or a piece of the other.
  std::vector<NormalVector> U = F.system().curves();
  for (const auto& c : G.system().curves()) U.push_back(c);
  std::sort(U.begin(), U.end());
  U.erase(std::unique(U.begin(), U.end()), U.end());
  if (U.size() >= 2) {
    NormalVector sum = U.front();
    for (std::size_t i = 1; i < U.size(); ++i) sum = sum + U[i];
    const auto comps = trace_components(sum);
    if (comps.size() != U.size()) return false;
    for (std::size_t i = 0; i < U.size(); ++i)
      if (comps[i].multiplicity != 1 || !(comps[i].primitive == U[i])) return false;
  }
  if (F.is_annular() && G.is_annular()) return true;

  const CutDecomposition cut = cut_along(t, U);
  auto index_in_cut = [&](const NormalVector& c) {
    return static_cast<int>(std::lower_bound(U.begin(), U.end(), c) - U.begin());
  };
  std::vector<std::vector<bool>> f_member;
  for (const auto& m : F.minimal()) f_member.push_back(piece_membership(cut, m.piece));

  const auto fa = F.annular_curves();
  auto component_of_F = [&](const NormalVector* annulus, const MinimalComponent* piece) {
    if (annulus) return std::binary_search(fa.begin(), fa.end(), *annulus);
    return std::binary_search(F.minimal().begin(), F.minimal().end(), *piece);
  };

  // G1: components shared with F. G2: the rest, which must avoid supp(F).
  for (const auto& d : G.annular_curves()) {
    if (component_of_F(&d, nullptr)) continue;
    const int side = cut.sides[index_in_cut(d)][0];
    for (std::size_t k = 0; k < F.minimal().size(); ++k)
      if (!on_boundary(F.minimal()[k].piece, d) && f_member[k][side]) return false;
  }
  for (const auto& n : G.minimal()) {
    if (component_of_F(nullptr, &n)) continue;
    const auto member = piece_membership(cut, n.piece);
    for (const auto& c : fa)
      if (!on_boundary(n.piece, c) && member[cut.sides[index_in_cut(c)][0]]) return false;
    for (std::size_t k = 0; k < F.minimal().size(); ++k) {
      if (F.minimal()[k].piece == n.piece) return false;
      for (int r = 0; r < cut.num_regions; ++r)
        if (member[r] && f_member[k][r]) return false;
    }
  }
  return true;
}

std::vector<int> complexity_signature(const FoliationClass& F) {
  std::vector<int> sig;
  for (const auto& p : complement_pieces(F.system())) {
    const bool minimal = std::any_of(F.minimal().begin(), F.minimal().end(),
                                     [&](const MinimalComponent& m) { return m.piece == p; });
    if (!minimal) sig.push_back(3 * p.genus + p.ends());
  }
  std::sort(sig.begin(), sig.end());
  return sig;
}

std::vector<FoliationClass> classes_on_system(const CurveSystem& cs, BoundaryParallel convention,
                                              const std::string& fill_id) {
  const auto pieces = complement_pieces(cs);
  std::vector<int> eligible;
  for (int i = 0; i < static_cast<int>(pieces.size()); ++i)
    if (pieces[i].complexity() >= 1) eligible.push_back(i);
  const int n = cs.size(), m = static_cast<int>(eligible.size());
  std::vector<FoliationClass> out;
  for (unsigned pm = 0; pm < (1u << m); ++pm) {
    // Curves bounding a chosen minimal piece.
    unsigned bounded = 0;
    for (int k = 0; k < m; ++k)
      if (pm & (1u << k))
        for (int c = 0; c < n; ++c)
          if (on_boundary(pieces[eligible[k]], cs.curves()[c])) bounded |= 1u << c;
    for (unsigned am = 0; am < (1u << n); ++am) {
      if (pm == 0 && am == 0) continue;
      if (((am | bounded) + 1) != (1u << n)) continue;
      if (convention == BoundaryParallel::forbidden && (am & bounded)) continue;
      std::vector<int> annular;
      for (int c = 0; c < n; ++c)
        if (am & (1u << c)) annular.push_back(c);
      std::vector<std::pair<int, std::string>> minimal;
      for (int k = 0; k < m; ++k)
        if (pm & (1u << k)) minimal.emplace_back(eligible[k], fill_id);
      out.push_back(make_foliation(cs, std::move(annular), std::move(minimal)));
    }
  }
  return out;
}

FoliationUniverse saturated_universe(const CurveGraph& g, const std::vector<int>& vertices, int max_system,
                                     BoundaryParallel convention) {
  const auto& t = cached_standard_model(g.universe->surface).triangulation;
  std::vector<FoliationClass> classes = classes_on_system(CurveSystem::empty(t), convention);
  for (const auto& system : curve_systems(g, vertices, max_system)) {
    std::vector<NormalVector> curves;
    for (int i : system) curves.push_back(g.universe->curves[i]);
    for (auto& F : classes_on_system(CurveSystem::from_curves(t, std::move(curves)), convention))
      classes.push_back(std::move(F));
  }
  return close_under_subunions(std::move(classes));
}

FoliationClass apply(const MappingClass& mc, const FoliationClass& F) {
  std::vector<NormalVector> annuli;
  for (const auto& c : F.annular_curves()) annuli.push_back(apply(mc, c));
  const auto perm = puncture_permutation(mc);
  std::vector<MinimalComponent> minimal;
  for (const auto& m : F.minimal()) {
    SubsurfacePiece image;
    image.genus = m.piece.genus;
    for (int p : m.piece.punctures) image.punctures.push_back(perm[p]);
    std::sort(image.punctures.begin(), image.punctures.end());
    for (const auto& b : m.piece.boundary) image.boundary.push_back(apply(mc, b));
    std::sort(image.boundary.begin(), image.boundary.end());
    minimal.push_back({std::move(image), m.fill_id});
  }
  return assemble(F.triangulation_ptr(), std::move(annuli), minimal);
}

int FoliationUniverse::index_of(const FoliationClass& F) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), F);
  if (it == elements.end() || !(*it == F)) return -1;
  return static_cast<int>(it - elements.begin());
}

FoliationUniverse close_under_subunions(std::vector<FoliationClass> classes) {
  FoliationUniverse u;
  for (const auto& F : classes)
    for (auto& S : sub_unions(F)) u.elements.push_back(std::move(S));
  std::sort(u.elements.begin(), u.elements.end());
  u.elements.erase(std::unique(u.elements.begin(), u.elements.end()), u.elements.end());
  return u;
}

std::vector<char> adherence_matrix(const FoliationUniverse& u, Execution execution) {
  const std::size_t n = u.elements.size();
  std::vector<char> m(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) m[i * n + i] = 1;
  for_each_pair(n, execution, [&](std::size_t i, std::size_t j) {
    m[i * n + j] = m[j * n + i] = adherent(u.elements[i], u.elements[j]) ? 1 : 0;
  });
  return m;
}

std::vector<FoliationClass> adherence_set(const FoliationClass& F, const FoliationUniverse& u) {
  std::vector<FoliationClass> out;
  for (const auto& G : u.elements)
    if (adherent(F, G)) out.push_back(G);
  return out;
}

bool is_complete_adherence(const std::vector<FoliationClass>& classes) {
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (std::size_t j = i + 1; j < classes.size(); ++j)
      if (!adherent(classes[i], classes[j])) return false;
  return true;
}

int adherence_number_bruteforce(int index, const FoliationUniverse& u, const std::vector<char>& matrix) {
  const std::size_t n = u.elements.size();
  std::vector<int> neighbourhood;
  for (std::size_t j = 0; j < n; ++j)
    if (static_cast<int>(j) != index && matrix[index * n + j]) neighbourhood.push_back(static_cast<int>(j));
  return 1 + max_clique_size(neighbourhood, [&](int a, int b) { return matrix[a * n + b] != 0; });
}

int adherence_number_bruteforce(const FoliationClass& F, const FoliationUniverse& u) {
  const int index = u.index_of(F);
  if (index < 0) throw Error(ErrorKind::Parse, "class is not in the universe");
  return adherence_number_bruteforce(index, u, adherence_matrix(u, Execution::serial));
}

CompletionContext::CompletionContext(const CurveUniverse& u, Execution execution)
    : universe_(&u), disjoint_(disjointness_matrix(u.curves, execution)) {}

int closed_form_q(const FoliationClass& F, BoundaryParallel convention) {
  int q = F.component_count();
  for (const auto& p : complement_pieces(F.system())) {
    const bool minimal = std::any_of(F.minimal().begin(), F.minimal().end(),
                                     [&](const MinimalComponent& m) { return m.piece == p; });
    if (!minimal) q += std::max(p.complexity(), 0);
  }
  if (convention == BoundaryParallel::allowed) q += F.system().size() - static_cast<int>(F.annular().size());
  return q;
}

Completion max_completion(const FoliationClass& F, const CompletionContext& ctx, BoundaryParallel convention) {
  const CurveUniverse& u = ctx.universe();
  const auto& t = F.triangulation_ptr();
  const auto& system = F.system().curves();
  std::vector<int> system_index;
  for (const auto& s : system) system_index.push_back(u.index_of(s));

  std::vector<int> candidates;
  for (int c = 0; c < u.size(); ++c) {
    const NormalVector& curve = u.curves[c];
    const int in_system = F.system().index_of(curve);
    if (in_system >= 0) {
      // A system curve that is not an annulus bounds a minimal piece.
      const bool annulus = std::binary_search(F.annular().begin(), F.annular().end(), in_system);
      if (!annulus && convention == BoundaryParallel::allowed) candidates.push_back(c);
      continue;
    }
    bool ok = true;
    for (std::size_t k = 0; k < system.size() && ok; ++k)
      ok = system_index[k] >= 0 ? ctx.disjoint(c, system_index[k]) : haken_disjoint(curve, system[k]);
    for (std::size_t k = 0; k < F.minimal().size() && ok; ++k) ok = !contains_curve(t, F.minimal()[k].piece, curve);
    if (ok) candidates.push_back(c);
  }
  const auto clique = max_clique(candidates, [&](int a, int b) { return ctx.disjoint(a, b); });

  auto annuli = F.annular_curves();
  for (int c : clique) annuli.push_back(u.curves[c]);
  Completion result{assemble(t, std::move(annuli), F.minimal()), 0, closed_form_q(F, convention)};
  result.q = result.completion.component_count();
  if (result.q < result.closed_form_q)
    throw Error(ErrorKind::UniverseTooSmall, "search found " + std::to_string(result.q) + " components, bookkeeping allows " +
                                                 std::to_string(result.closed_form_q) + "; enlarge the curve universe");
  return result;
}

long long adherence_number(const FoliationClass& F, const CompletionContext& ctx, BoundaryParallel convention) {
  return (1LL << max_completion(F, ctx, convention).q) - 1;
}

}  // namespace foliage
