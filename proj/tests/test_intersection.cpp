#include <doctest.h>

#include "support.hpp"

using namespace testing;

TEST_SUITE("intersection") {
  TEST_CASE("spot values by both algorithms") {
    const auto a12 = curve(S05, "a12"), a23 = curve(S05, "a23"), a34 = curve(S05, "a34");
    const auto twisted = apply(parse_word(S05, "s2 s2"), a12);
    CHECK(geometric_intersection(a12, a23) == 2);
    CHECK(oracle_intersection(a12, a23) == 2);
    CHECK(geometric_intersection(a12, a34) == 0);
    CHECK(oracle_intersection(a12, a34) == 0);
    CHECK(geometric_intersection(twisted, a12) == 4);
    CHECK(oracle_intersection(twisted, a12) == 4);
  }

  TEST_CASE("disjointness examples") {
    const auto a12 = curve(S05, "a12");
    CHECK(disjoint(a12, curve(S05, "a34")));
    CHECK_FALSE(disjoint(a12, curve(S05, "a23")));
    CHECK(disjoint(a12, a12));
  }

  TEST_CASE("property: the two algorithms agree on sampled pairs") {
    for (SurfaceType s : {SurfaceType{0, 5}, SurfaceType{0, 6}, SurfaceType{1, 2}, SurfaceType{1, 3}, SurfaceType{2, 1}}) {
      const auto& u = standard_universe(s, 3);
      for (auto [i, j] : sample_pairs(u.size(), 150, 11)) {
        const auto &a = u.curves[i], &b = u.curves[j];
        const long long g = geometric_intersection(a, b);
        CAPTURE(to_string(s));
        CHECK(g == oracle_intersection(a, b));
        CHECK(g == geometric_intersection(b, a));
        CHECK(oracle_intersection(b, a) == g);
        CHECK((g == 0) == disjoint(a, b));
        CHECK(superposition_crossings(a, b) >= g);
        CHECK((superposition_crossings(a, b) - g) % 2 == 0);
      }
    }
  }

  TEST_CASE("property: self-intersection vanishes") {
    for (const auto& c : standard_universe(S05, 3).curves) {
      CHECK(geometric_intersection(c, c) == 0);
      CHECK(oracle_intersection(c, c) == 0);
    }
  }

  TEST_CASE("property: mapping classes preserve intersection numbers") {
    const auto a12 = curve(S05, "a12"), a23 = curve(S05, "a23");
    for (const auto& mc : reduced_words(S05, 2)) {
      CHECK(geometric_intersection(apply(mc, a12), apply(mc, a23)) == 2);
      CHECK(oracle_intersection(apply(mc, a12), apply(mc, a23)) == 2);
    }
    const auto& u = standard_universe(S05, 2);
    const auto mc = parse_word(S05, "s1 s3^-1 s4 s2");
    for (auto [i, j] : sample_pairs(u.size(), 100, 5))
      CHECK(geometric_intersection(apply(mc, u.curves[i]), apply(mc, u.curves[j])) ==
            geometric_intersection(u.curves[i], u.curves[j]));
  }

  TEST_CASE("property: twisting grows intersection quadratically") {
    // i(T^n_b(a), a) = |n| i(a, b)^2 for a full twist T_b.
    const auto a12 = curve(S05, "a12");
    for (int n = 1; n <= 4; ++n) {
      std::string word;
      for (int k = 0; k < 2 * n; ++k) word += "s2 ";
      CHECK(geometric_intersection(apply(parse_word(S05, word), a12), a12) == 4 * n);
    }
  }
}
