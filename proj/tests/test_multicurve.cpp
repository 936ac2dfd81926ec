#include <doctest.h>

#include "support.hpp"

using namespace testing;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::Parse;
}

}  // namespace

TEST_SUITE("multicurve") {
  TEST_CASE("validation errors") {
    const auto& t = tri(S05);
    CHECK(kind_of([&] { validate_normal(t, std::vector<long long>(9, 0)); }) == ErrorKind::EmptyVector);
    CHECK(kind_of([&] { validate_normal(t, std::vector<long long>(8, 1)); }) == ErrorKind::BadLength);
    // An edge between two distinct triangles makes both triangle sums odd.
    int e = 0;
    while (t->edge_slots(e)[0].triangle == t->edge_slots(e)[1].triangle) ++e;
    std::vector<long long> odd(9, 0);
    odd[e] = 1;
    CHECK(kind_of([&] { validate_normal(t, odd); }) == ErrorKind::MatchingViolation);
    CHECK_NOTHROW(validate_normal(t, curve(S05, "a12").weights()));
  }

  TEST_CASE("tracing examples") {
    const auto a12 = curve(S05, "a12"), a34 = curve(S05, "a34");
    const auto two = trace_components(a12 + a34);
    REQUIRE(two.size() == 2);
    for (const auto& c : two) {
      CHECK(c.multiplicity == 1);
      CHECK(c.classification == Classification::essential);
    }
    const auto doubled = trace_components(a12.scaled(2));
    REQUIRE(doubled.size() == 1);
    CHECK(doubled[0].multiplicity == 2);
    CHECK(doubled[0].primitive == a12);
    const auto loop = trace_components(peripheral(S05, 0));
    REQUIRE(loop.size() == 1);
    CHECK(loop[0].classification == Classification::peripheral);
    CHECK(loop[0].puncture == 0);
  }

  TEST_CASE("curve systems forget multiplicity and peripheral loops") {
    const auto a12 = curve(S05, "a12"), a34 = curve(S05, "a34");
    const auto one = curve_system_from(a12.scaled(3));
    CHECK(one.size() == 1);
    CHECK(one.curves()[0] == a12);
    CHECK(curve_system_from(a12 + a34).size() == 2);
    CHECK(curve_system_from(a12 + peripheral(S05, 4)).size() == 1);
    CHECK(kind_of([&] { curve_system_from(peripheral(S05, 2) + peripheral(S05, 3)); }) ==
          ErrorKind::NoEssentialComponent);
    CHECK(kind_of([&] { CurveSystem::from_curves(tri(S05), {a12, curve(S05, "a23")}); }) == ErrorKind::NotDisjoint);
  }

  TEST_CASE("complement pieces") {
    const auto one = complement_pieces(system_of(S05, {"a12"}));
    REQUIRE(one.size() == 2);
    CHECK(one[0].punctures == std::vector<int>{0, 1});
    CHECK(one[0].boundary_circles() == 1);
    CHECK(one[1].punctures == std::vector<int>{2, 3, 4});
    CHECK(one[1].complexity() == 1);
    const auto three = complement_pieces(system_of(S05, {"a12", "a34"}));
    REQUIRE(three.size() == 3);
    for (const auto& p : three) {
      CHECK(p.genus == 0);
      CHECK(p.ends() == 3);
    }
    const auto whole = complement_pieces(CurveSystem::empty(tri(S05)));
    REQUIRE(whole.size() == 1);
    CHECK(whole[0].complexity() == 2);
  }

  TEST_CASE("a pants decomposition of S(1,3) cuts it into three pants") {
    const SurfaceType s{1, 3};
    const auto& u = standard_universe(s, 3);
    const auto g = build_graph(u);
    std::vector<int> all(u.size());
    std::iota(all.begin(), all.end(), 0);
    int tested = 0;
    for (const auto& sys : curve_systems(g, all, 3)) {
      if (sys.size() != 3) continue;
      std::vector<NormalVector> curves;
      for (int i : sys) curves.push_back(u.curves[i]);
      const auto pieces = complement_pieces(CurveSystem::from_curves(tri(s), curves));
      CHECK(pieces.size() == 3);
      for (const auto& p : pieces) CHECK(p.complexity() == 0);
      if (++tested == 20) break;
    }
    CHECK(tested > 0);
  }

  TEST_CASE("contains_curve examples") {
    const auto& t = tri(S05);
    const auto pieces = complement_pieces(system_of(S05, {"a12"}));
    CHECK(contains_curve(t, pieces[1], curve(S05, "a34")));
    for (const auto& p : pieces) CHECK_FALSE(contains_curve(t, p, curve(S05, "a12")));
    const auto other = system_of(S05, {"a34"});
    const auto q = complement_pieces(other)[piece_with_puncture(other, 0)];
    CHECK(contains_curve(t, q, curve(S05, "a12")));
    CHECK_THROWS_AS(contains_curve(t, pieces[1], curve(S05, "a23")), Error);
  }

  TEST_CASE("property: cutting along a system preserves Euler characteristic") {
    for (SurfaceType s : {SurfaceType{0, 5}, SurfaceType{0, 6}, SurfaceType{1, 3}}) {
      const auto& u = standard_universe(s, 2);
      const auto g = build_graph(u);
      std::vector<int> all(u.size());
      std::iota(all.begin(), all.end(), 0);
      for (const auto& sys : curve_systems(g, all, complexity(s))) {
        std::vector<NormalVector> curves;
        for (int i : sys) curves.push_back(u.curves[i]);
        const auto pieces = complement_pieces(CurveSystem::from_curves(tri(s), curves));
        int chi = 0, boundary = 0, punctures = 0;
        for (const auto& p : pieces) {
          chi += p.euler_characteristic();
          boundary += p.boundary_circles();
          punctures += p.puncture_count();
        }
        CHECK(chi == euler_characteristic(s));
        CHECK(boundary == 2 * static_cast<int>(sys.size()));
        CHECK(punctures == s.punctures);
        CHECK(pieces.size() <= sys.size() + 1);
      }
    }
  }

  TEST_CASE("property: every S(0,5) curve splits the punctures 2 | 3") {
    const auto& u = standard_universe(S05, 4);
    for (const auto& c : u.curves) {
      const auto pieces = complement_pieces(curve_system_from(c));
      REQUIRE(pieces.size() == 2);
      CHECK(pieces[0].ends() + pieces[1].ends() == 7);
      CHECK(std::min(pieces[0].puncture_count(), pieces[1].puncture_count()) == 2);
    }
  }

  TEST_CASE("property: paths and vectors round trip") {
    for (SurfaceType s : {SurfaceType{0, 5}, SurfaceType{1, 2}, SurfaceType{2, 1}}) {
      for (const auto& c : standard_universe(s, 3).curves) {
        const auto path = curve_path(c);
        CHECK(is_reduced_closed_path(*tri(s), path));
        CHECK(curve_from_path(tri(s), path) == c);
        CHECK(curve_from_path(tri(s), reverse_path(*tri(s), path)) == c);
        CHECK(is_essential_curve(c));
      }
    }
  }
}
