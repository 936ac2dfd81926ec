#include <doctest.h>

#include "foliage/json_io.hpp"
#include "support.hpp"

using namespace testing;

TEST_SUITE("json") {
  TEST_CASE("surface round trip") {
    for (const SurfaceType s : {S05, SurfaceType{1, 2}, SurfaceType{2, 1}}) CHECK(surface_from_json(to_json(s)) == s);
    CHECK_THROWS_AS(surface_from_json(Json::parse(R"({"genus": 0})")), Error);
  }

  TEST_CASE("curve round trip") {
    for (const auto& c : standard_universe(S05, 2).curves) CHECK(curve_from_json(S05, to_json(c)) == c);
    CHECK(curve_from_json(S05, Json("a12")) == curve(S05, "a12"));
    CHECK_THROWS_AS(curve_from_json(S05, Json::array({1, 2})), Error);
    CHECK_THROWS_AS(curve_from_json(S05, Json(3)), Error);
  }

  TEST_CASE("class round trip") {
    const auto cs = system_of(S05, {"a12", "a34"});
    const std::vector<FoliationClass> classes{
        annular_class(cs), make_foliation(system_of(S05, {"a12"}), {0}, {{piece_with_puncture(system_of(S05, {"a12"}), 2), "m"}}),
        filling_class(tri(S05), "f")};
    for (const auto& F : classes) {
      const auto j = to_json(F);
      CHECK(class_from_json(S05, j) == F);
      CHECK(class_from_json(S05, Json::parse(j.dump())) == F);
    }
  }

  TEST_CASE("structured exports") {
    const auto jt = to_json(*tri(S05));
    CHECK(jt.contains("triangles"));
    const auto& u = standard_universe(S05, 1);
    const auto jg = to_json(build_graph(u));
    CHECK(jg.contains("edges"));
    CHECK(static_cast<long long>(jg["edges"].size()) == build_graph(u).edge_count());
  }
}
