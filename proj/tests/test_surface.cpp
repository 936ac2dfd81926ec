#include <doctest.h>

#include "support.hpp"

using namespace testing;

TEST_SUITE("surface") {
  TEST_CASE("complexity matches 3g - 3 + p") {
    CHECK(complexity({0, 5}) == 2);
    CHECK(complexity({1, 3}) == 3);
    CHECK(complexity({2, 0}) == 3);
    CHECK_THROWS_AS(complexity({0, 2}), Error);
    try {
      complexity({0, 1});
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::ComplexityNegative);
    }
  }

  TEST_CASE("admissibility examples") {
    const auto a = admissibility({0, 5});
    CHECK(a.theorem_part1);
    CHECK(a.theorem_part2);
    CHECK(a.enumerable);
    CHECK_FALSE(admissibility({1, 2}).theorem_part1);
    const auto b = admissibility({2, 0});
    CHECK(b.theorem_part1);
    CHECK_FALSE(b.theorem_part2);
    CHECK_FALSE(b.enumerable);
  }

  TEST_CASE("property: a puncture adds one to complexity; part 2 implies part 1") {
    for (int g = 0; g <= 3; ++g)
      for (int p = 0; p <= 8; ++p) {
        const SurfaceType s{g, p}, t{g, p + 1};
        if (3 * g - 3 + p >= 0) CHECK(complexity(t) == complexity(s) + 1);
        const auto a = admissibility(s);
        if (a.theorem_part2) CHECK(a.theorem_part1);
        CHECK(a.theorem_part1 == !((g == 0 && p <= 4) || (g == 1 && p <= 2)));
        CHECK(a.enumerable == (p >= 1 && 3 * g - 3 + p >= 1));
      }
  }

  TEST_CASE("surface text round trip") {
    CHECK(parse_surface("1,3") == SurfaceType{1, 3});
    CHECK(to_string(SurfaceType{0, 5}) == "S(0,5)");
    CHECK_THROWS_AS(parse_surface("x"), Error);
    CHECK_THROWS_AS(parse_surface("1,-2"), Error);
  }
}
