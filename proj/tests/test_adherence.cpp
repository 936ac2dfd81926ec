#include <doctest.h>

#include "support.hpp"

using namespace testing;

namespace {

// Minimal class on the piece of `names` containing the given puncture.
FoliationClass minimal_on(SurfaceType s, const std::vector<std::string>& names, int puncture,
                          std::vector<int> annular = {}, const std::string& fill = "m") {
  const auto cs = system_of(s, names);
  return make_foliation(cs, std::move(annular), {{piece_with_puncture(cs, puncture), fill}});
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::Parse;
}

const CompletionContext& context05() {
  static const CompletionContext ctx(standard_universe(S05, 3));
  return ctx;
}

}  // namespace

TEST_SUITE("adherence") {
  TEST_CASE("make_foliation examples and errors") {
    const auto cs = system_of(S05, {"a12"});
    const auto j = make_foliation(cs, {0}, {});
    CHECK(j.is_annular());
    CHECK(j.component_count() == 1);
    const auto R = minimal_on(S05, {"a12"}, 2);
    CHECK_FALSE(R.is_annular());
    CHECK(R.minimal()[0].piece.complexity() == 1);
    CHECK(kind_of([&] { make_foliation(cs, {}, {}); }) == ErrorKind::EmptyClass);
    CHECK(kind_of([&] { make_foliation(cs, {}, {{piece_with_puncture(cs, 0), "m"}}); }) == ErrorKind::PieceTooSimple);
    const auto two = system_of(S05, {"a12", "a34"});
    CHECK(kind_of([&] { make_foliation(two, {0}, {}); }) == ErrorKind::SpuriousCurve);
    CHECK(kind_of([&] { make_foliation(cs, {0, 0}, {}); }) == ErrorKind::NotDisjoint);
  }

  TEST_CASE("is_annular") {
    CHECK(annuli(S05, {"a12", "a34"}).is_annular());
    CHECK_FALSE(filling_class(tri(S05), "f").is_annular());
    CHECK_FALSE(minimal_on(S05, {"a12"}, 2, {0}).is_annular());
  }

  TEST_CASE("adherent examples") {
    const auto F = annuli(S05, {"a12"});
    CHECK(adherent(F, F));
    CHECK(adherent(F, annuli(S05, {"a34"})));
    CHECK_FALSE(adherent(F, annuli(S05, {"a23"})));
    CHECK_FALSE(adherent(minimal_on(S05, {"a12"}, 2, {}, "one"), minimal_on(S05, {"a12"}, 2, {}, "two")));
    CHECK(adherent(minimal_on(S05, {"a12"}, 2), F));
    CHECK_FALSE(adherent(minimal_on(S05, {"a12"}, 2), annuli(S05, {"a34"})));
    CHECK_FALSE(adherent(filling_class(tri(S05), "f"), F));
    CHECK_THROWS_AS(adherent(F, annuli({0, 6}, {"a12"})), Error);
  }

  TEST_CASE("decomposition examples") {
    const auto F = annuli(S05, {"a12"});
    CHECK(adheres_by_decomposition(F, F));
    CHECK(adheres_by_decomposition(F, annuli(S05, {"a12", "a34"})));
    CHECK_FALSE(adheres_by_decomposition(F, annuli(S05, {"a23"})));
    CHECK(intersection_zero(F, annuli(S05, {"a34"})).value());
    CHECK_FALSE(intersection_zero(F, annuli(S05, {"a23"})).value());
    CHECK_FALSE(intersection_zero(F, filling_class(tri(S05), "f")).has_value());
  }

  TEST_CASE("adherence sets and complete adherence") {
    const auto G = annuli(S05, {"a12", "a34"});
    const auto V = close_under_subunions({G});
    CHECK(V.size() == 3);
    for (const auto& F : V.elements) {
      CHECK(adherence_set(F, V).size() == 3);
      CHECK(adherence_number_bruteforce(F, V) == 3);
    }
    const auto single = close_under_subunions({annuli(S05, {"a12"})});
    CHECK(adherence_set(single.elements[0], single).size() == 1);
    CHECK(adherence_number_bruteforce(single.elements[0], single) == 1);
    const auto both = close_under_subunions({annuli(S05, {"a12"}), annuli(S05, {"a23"})});
    const auto set = adherence_set(annuli(S05, {"a12"}), both);
    CHECK(std::find(set.begin(), set.end(), annuli(S05, {"a23"})) == set.end());
    CHECK(is_complete_adherence({annuli(S05, {"a12"}), annuli(S05, {"a34"}), G}));
    CHECK_FALSE(is_complete_adherence({annuli(S05, {"a12"}), annuli(S05, {"a23"})}));
    CHECK(is_complete_adherence({G}));
  }

  TEST_CASE("sub-unions and unions") {
    const auto G = annuli(S05, {"a12", "a34"});
    CHECK(sub_unions(G).size() == 3);
    const auto mixed = minimal_on(S05, {"a12"}, 2, {0});
    CHECK(sub_unions(mixed).size() == 3);
    CHECK(union_of(annuli(S05, {"a12"}), annuli(S05, {"a34"})) == G);
    CHECK(union_of(minimal_on(S05, {"a12"}, 2), annuli(S05, {"a12"})) == mixed);
    CHECK_THROWS_AS(union_of(annuli(S05, {"a12"}), annuli(S05, {"a23"})), Error);
  }

  TEST_CASE("complexity signatures") {
    CHECK(complexity_signature(annuli(S05, {"a12"})) == std::vector<int>{3, 4});
    CHECK(complexity_signature(annuli(S05, {"a12", "a34"})) == std::vector<int>{3, 3, 3});
    CHECK(complexity_signature(filling_class(tri(S05), "f")).empty());
    CHECK(complexity_signature(minimal_on(S05, {"a12"}, 2)) == std::vector<int>{3});
  }

  TEST_CASE("adherence numbers by completion") {
    const auto& ctx = context05();
    CHECK(adherence_number(annuli(S05, {"a12"}), ctx, BoundaryParallel::forbidden) == 3);
    CHECK(adherence_number(annuli(S05, {"a12", "a34"}), ctx, BoundaryParallel::forbidden) == 3);
    const auto done = max_completion(annuli(S05, {"a12", "a34"}), ctx, BoundaryParallel::forbidden);
    CHECK(done.completion == annuli(S05, {"a12", "a34"}));
    const auto grown = max_completion(annuli(S05, {"a12"}), ctx, BoundaryParallel::forbidden);
    CHECK(grown.q == 2);
    CHECK(grown.completion.is_annular());
    CHECK(adherence_number(filling_class(tri(S05), "f"), ctx, BoundaryParallel::allowed) == 1);
    const auto R = minimal_on(S05, {"a12"}, 2);
    CHECK(max_completion(R, ctx, BoundaryParallel::allowed).q == 2);
    CHECK(max_completion(R, ctx, BoundaryParallel::forbidden).q == 1);
  }

  TEST_CASE("too small a universe is reported") {
    const auto only = enumerate_curves(S05, {curve(S05, "a12")}, 0);
    const CompletionContext tiny(only);
    CHECK(kind_of([&] { max_completion(annuli(S05, {"a12"}), tiny, BoundaryParallel::forbidden); }) ==
          ErrorKind::UniverseTooSmall);
  }

  TEST_CASE("property: adherence is reflexive and symmetric on a saturated universe") {
    const auto& u = standard_universe(S05, 2);
    const auto g = build_graph(u);
    std::vector<int> all(u.size());
    std::iota(all.begin(), all.end(), 0);
    const auto U = saturated_universe(g, all, 2, BoundaryParallel::allowed);
    const auto serial = adherence_matrix(U, Execution::serial);
    CHECK(serial == adherence_matrix(U, Execution::parallel));
    const std::size_t n = U.elements.size();
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(serial[i * n + i]);
      for (std::size_t j = 0; j < n; ++j) CHECK(serial[i * n + j] == serial[j * n + i]);
    }
  }

  TEST_CASE("property: brute force equals 2^q - 1 on a saturated universe") {
    const auto& u = standard_universe(S05, 2);
    const auto g = build_graph(u);
    std::vector<int> all(u.size());
    std::iota(all.begin(), all.end(), 0);
    const CompletionContext ctx(u);
    const auto U = saturated_universe(g, all, 2, BoundaryParallel::allowed);
    const auto m = adherence_matrix(U);
    for (int i = 0; i < U.size(); ++i)
      CHECK(adherence_number_bruteforce(i, U, m) == adherence_number(U.elements[i], ctx, BoundaryParallel::allowed));
  }

  TEST_CASE("property: forbidden universes hold no boundary-parallel annuli") {
    const auto& u = standard_universe(S05, 2);
    const auto g = build_graph(u);
    std::vector<int> all(u.size());
    std::iota(all.begin(), all.end(), 0);
    const auto forbidden = saturated_universe(g, all, 2, BoundaryParallel::forbidden);
    const auto allowed = saturated_universe(g, all, 2, BoundaryParallel::allowed);
    CHECK(forbidden.size() < allowed.size());
    for (const auto& F : forbidden.elements) {
      CHECK_FALSE(has_boundary_parallel_annulus(F));
      CHECK(allowed.index_of(F) >= 0);
    }
  }

  TEST_CASE("property: adherence numbers are constant on generator orbits") {
    const auto& ctx = context05();
    std::vector<FoliationClass> classes{annuli(S05, {"a12"}), minimal_on(S05, {"a12"}, 2),
                                        minimal_on(S05, {"a12"}, 2, {0}), annuli(S05, {"a12", "a34"})};
    auto moves = generators(S05);
    moves.push_back(reflection(S05));
    for (const auto& F : classes)
      for (const auto conv : {BoundaryParallel::allowed, BoundaryParallel::forbidden}) {
        if (conv == BoundaryParallel::forbidden && has_boundary_parallel_annulus(F)) continue;
        for (const auto& mc : moves) {
          const auto image = apply(mc, F);
          CHECK(image.component_count() == F.component_count());
          CHECK(complexity_signature(image) == complexity_signature(F));
          CHECK(adherence_number(image, ctx, conv) == adherence_number(F, ctx, conv));
        }
      }
  }
}
